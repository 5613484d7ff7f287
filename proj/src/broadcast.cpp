#include "bcast/broadcast.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <tuple>

#include "bcast/error.hpp"

namespace bcast {

std::string_view to_string(Problem problem) {
  return problem == Problem::Independence ? "bi" : "bp";
}

Broadcast::Broadcast(std::vector<Dist> values) : values_(std::move(values)) {
  for (std::size_t v = 0; v < values_.size(); ++v) {
    if (values_[v] < 0) {
      throw Error(ErrorCode::InvalidBroadcast,
                  "negative broadcast value at vertex " + std::to_string(v + 1));
    }
  }
}

void Broadcast::set(Vertex v, Dist value) {
  if (value < 0) {
    throw Error(ErrorCode::InvalidBroadcast,
                "negative broadcast value at vertex " + std::to_string(v + 1));
  }
  values_.at(static_cast<std::size_t>(v)) = value;
}

Dist Broadcast::value() const { return std::accumulate(values_.begin(), values_.end(), Dist{0}); }

Dist Broadcast::max_value() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

std::vector<Vertex> Broadcast::broadcasters() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < values_.size(); ++v) {
    if (values_[v] > 0) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::string Violation::describe() const {
  const auto u1 = std::to_string(u + 1);
  if (kind == Kind::ValueCeiling) {
    return "vertex " + u1 + ": " + std::to_string(value_u) + " > " + std::to_string(limit);
  }
  const auto lhs = std::to_string(distance);
  const auto a = std::to_string(value_u);
  const auto b = std::to_string(value_v);
  const auto rhs = problem == Problem::Packing ? a + "+" + b : "max(" + a + "," + b + ")";
  return "pair " + u1 + " " + std::to_string(v + 1) + ": " + lhs + " <= " + rhs;
}

namespace {

void require_same_order(int graph_order, const Broadcast& f) {
  if (f.order() != graph_order) {
    throw Error(ErrorCode::InvalidBroadcast,
                "broadcast covers " + std::to_string(f.order()) + " vertices, graph has " +
                    std::to_string(graph_order));
  }
}

bool pair_ok(Problem problem, Dist d, Dist a, Dist b) {
  return problem == Problem::Packing ? d > a + b : d > std::max(a, b);
}

Violation pair_violation(Problem problem, Vertex u, Vertex v, Dist d, Dist fu, Dist fv) {
  if (u > v) {
    std::swap(u, v);
    std::swap(fu, fv);
  }
  Violation out;
  out.kind = Violation::Kind::Pair;
  out.problem = problem;
  out.u = u;
  out.v = v;
  out.distance = d;
  out.value_u = fu;
  out.value_v = fv;
  return out;
}

Violation ceiling_violation(Problem problem, Vertex u, Dist value, Dist limit) {
  Violation out;
  out.kind = Violation::Kind::ValueCeiling;
  out.problem = problem;
  out.u = u;
  out.value_u = value;
  out.limit = limit;
  return out;
}

}  // namespace

std::optional<Violation> find_violation(const WeightedGraph& g, const Broadcast& f,
                                        Problem problem, Ceiling ceiling) {
  require_same_order(g.order(), f);
  const auto active = f.broadcasters();
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      const Vertex u = active[i];
      const Vertex v = active[j];
      const Dist d = g.dist(u, v);
      if (!pair_ok(problem, d, f[u], f[v])) return pair_violation(problem, u, v, d, f[u], f[v]);
    }
  }
  for (const Vertex v : active) {
    const Dist limit = ceiling == Ceiling::Strict ? g.ecc(v) : g.diameter();
    if (f[v] > limit) return ceiling_violation(problem, v, f[v], limit);
  }
  return std::nullopt;
}

bool is_independent_broadcast(const WeightedGraph& g, const Broadcast& f, bool relaxed) {
  return !find_violation(g, f, Problem::Independence,
                         relaxed ? Ceiling::Relaxed : Ceiling::Strict);
}

bool is_broadcast_packing(const WeightedGraph& g, const Broadcast& f, bool relaxed) {
  return !find_violation(g, f, Problem::Packing, relaxed ? Ceiling::Relaxed : Ceiling::Strict);
}

std::vector<Vertex> broadcast_neighborhood(const WeightedGraph& g, const Broadcast& f, Vertex v) {
  require_same_order(g.order(), f);
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v + 1) + " not in graph");
  }
  if (f[v] <= 0) {
    throw Error(ErrorCode::InvalidBroadcast,
                "vertex " + std::to_string(v + 1) + " is not broadcasting");
  }
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.dist(u, v) <= f[v]) out.push_back(u);
  }
  return out;
}

std::optional<Violation> find_violation_sparse(const Graph& g, const Broadcast& f,
                                               Problem problem, Ceiling ceiling) {
  require_same_order(g.order(), f);
  const auto active = f.broadcasters();
  if (active.empty()) return std::nullopt;

  struct Label {
    Dist key;
    Vertex source;
  };
  // At most two labels per vertex, from distinct sources.
  std::vector<std::array<Label, 2>> labels(static_cast<std::size_t>(g.order()));
  std::vector<unsigned char> count(static_cast<std::size_t>(g.order()), 0);
  const auto offset = [&](Vertex src) { return problem == Problem::Packing ? -f[src] : Dist{0}; };
  const auto has_source = [&](Vertex v, Vertex src) {
    const auto& l = labels[static_cast<std::size_t>(v)];
    const auto c = count[static_cast<std::size_t>(v)];
    return (c > 0 && l[0].source == src) || (c > 1 && l[1].source == src);
  };

  using Item = std::tuple<Dist, Vertex, Vertex>;  // key, vertex, source
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (const Vertex u : active) heap.emplace(offset(u), u, u);
  while (!heap.empty()) {
    const auto [key, v, src] = heap.top();
    heap.pop();
    auto& c = count[static_cast<std::size_t>(v)];
    if (c == 2 || has_source(v, src)) continue;
    labels[static_cast<std::size_t>(v)][c++] = {key, src};
    for (const Arc& a : g.neighbors(v)) {
      if (count[static_cast<std::size_t>(a.to)] < 2 && !has_source(a.to, src)) {
        heap.emplace(key + a.weight, a.to, src);
      }
    }
  }

  for (const Vertex v : active) {
    const auto& l = labels[static_cast<std::size_t>(v)];
    const auto c = count[static_cast<std::size_t>(v)];
    for (unsigned char i = 0; i < c; ++i) {
      if (l[i].source == v) continue;
      const Vertex u = l[i].source;
      const Dist d = l[i].key - offset(u);
      if (!pair_ok(problem, d, f[u], f[v])) return pair_violation(problem, u, v, d, f[u], f[v]);
      break;  // labels are in key order; the first foreign one is the tightest
    }
  }
  if (active.size() >= 2) return std::nullopt;  // pair conditions imply the ceilings

  const Vertex v = active.front();
  const Dist ecc = eccentricity(g, v);
  if (f[v] <= ecc) return std::nullopt;
  if (ceiling == Ceiling::Strict) return ceiling_violation(problem, v, f[v], ecc);
  const Dist diam = exact_diameter(g);
  if (f[v] > diam) return ceiling_violation(problem, v, f[v], diam);
  return std::nullopt;
}

}  // namespace bcast
