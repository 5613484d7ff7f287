#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/dp.hpp"
#include "bcast/graph.hpp"
#include "bcast/independence.hpp"
#include "bcast/packing.hpp"
#include "bcast/io.hpp"
#include "bcast/nice.hpp"
#include "bcast/treedecomp.hpp"

namespace testing {

using bcast::Dist;
using bcast::Edge;
using bcast::Graph;
using bcast::Vertex;
using bcast::WeightedGraph;

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, 1});
  return Graph(n, std::move(edges));
}

inline Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v, 1});
  return Graph(leaves + 1, std::move(edges));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  }
  return Graph(n, std::move(edges));
}

inline bcast::NiceTreeDecomposition nice_of(const Graph& g) {
  return bcast::make_nice(bcast::heuristic_decompose(g));
}

/// Maximum independent set size by bitmask recursion on the lowest vertex:
/// either drop it or take it and drop its neighbours.
inline int max_independent_set(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> closed(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    closed[static_cast<std::size_t>(v)] = std::uint64_t{1} << v;
    for (const auto& a : g.neighbors(v)) closed[static_cast<std::size_t>(v)] |= std::uint64_t{1} << a.to;
  }
  auto best = [&](auto&& self, std::uint64_t left) -> int {
    if (left == 0) return 0;
    const int v = __builtin_ctzll(left);
    const int skip = self(self, left & ~(std::uint64_t{1} << v));
    const int take = 1 + self(self, left & ~closed[static_cast<std::size_t>(v)]);
    return skip > take ? skip : take;
  };
  return best(best, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

/// Table of node x built from scratch: every f on V_x with values in 0..p whose
/// broadcasters are pairwise compatible, grouped by signature key, keeping the
/// best value per key.
inline std::map<std::uint64_t, Dist> brute_table(const WeightedGraph& g, const bcast::NiceNode& x, Dist p,
                                                 bcast::Problem problem) {
  std::map<std::uint64_t, Dist> best;
  bcast::Broadcast f(g.order());
  const auto& vx = x.forgotten;
  auto compatible = [&](Vertex u, Dist value) {
    for (const Vertex w : vx) {
      if (w == u || f[w] == 0) continue;
      const Dist need = problem == bcast::Problem::Independence ? std::max(value, f[w]) : value + f[w];
      if (g.dist(u, w) <= need) return false;
    }
    return true;
  };
  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (i == vx.size()) {
      const std::uint64_t key = problem == bcast::Problem::Independence
                                    ? bcast::encode(bcast::signature_of(g, x, f, p), p)
                                    : bcast::encode(bcast::pack_signature_of(g, x, f, p), p);
      auto [it, inserted] = best.emplace(key, f.value());
      if (!inserted && it->second < f.value()) it->second = f.value();
      return;
    }
    for (Dist value = 0; value <= p; ++value) {
      if (value > 0 && !compatible(vx[i], value)) continue;
      f.set(vx[i], value);
      self(self, i + 1);
    }
    f.set(vx[i], 0);
  };
  visit(visit, 0);
  return best;
}

/// Empty when every DP table equals its brute-force counterpart, otherwise a
/// description of the first mismatch.
inline std::string compare_tables(const WeightedGraph& g, const bcast::NiceTreeDecomposition& ntd,
                                  const std::vector<bcast::Table>& tables, Dist p, bcast::Problem problem) {
  for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
    const auto expected = brute_table(g, ntd.nodes[i], p, problem);
    const auto& got = tables.at(i);
    if (got.size() != expected.size()) {
      return "node " + std::to_string(i) + ": " + std::to_string(got.size()) + " entries, expected " +
             std::to_string(expected.size());
    }
    for (const auto& entry : got) {
      const auto it = expected.find(entry.key);
      if (it == expected.end() || it->second != entry.value) {
        return "node " + std::to_string(i) + ": key " + std::to_string(entry.key) + " value " +
               std::to_string(entry.value);
      }
    }
  }
  return {};
}

}  // namespace testing
