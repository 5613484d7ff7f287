#include "bcast/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <utility>

#include "bcast/error.hpp"

namespace bcast {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "malformed-line";
    case ErrorCode::MissingHeader: return "missing-header";
    case ErrorCode::DuplicateHeader: return "duplicate-header";
    case ErrorCode::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorCode::EdgeCountMismatch: return "edge-count-mismatch";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::DuplicateEdge: return "duplicate-edge";
    case ErrorCode::BadWeight: return "bad-weight";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::EmptyGraph: return "empty-graph";
    case ErrorCode::InvalidBroadcast: return "invalid-broadcast";
    case ErrorCode::InvalidDecomposition: return "invalid-decomposition";
    case ErrorCode::InvalidNiceDecomposition: return "invalid-nice-decomposition";
    case ErrorCode::ParameterOutOfRange: return "parameter-out-of-range";
    case ErrorCode::SignatureOverflow: return "signature-overflow";
    case ErrorCode::InstanceTooLarge: return "instance-too-large";
    case ErrorCode::InvalidInstance: return "invalid-instance";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

Graph::Graph(int order, std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (order < 1) throw Error(ErrorCode::EmptyGraph, "graph must have at least one vertex");
  adjacency_.resize(static_cast<std::size_t>(order));
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                      "} references a vertex outside 1.." + std::to_string(order));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u + 1));
    }
    if (e.weight < 1) {
      throw Error(ErrorCode::BadWeight, "edge {" + std::to_string(e.u + 1) + "," +
                                            std::to_string(e.v + 1) + "} has weight " +
                                            std::to_string(e.weight) + " < 1");
    }
    if (e.weight != 1) unit_weight_ = false;
    adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, e.weight});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, e.weight});
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    auto& arcs = adjacency_[v];
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
    for (std::size_t i = 1; i < arcs.size(); ++i) {
      if (arcs[i].to == arcs[i - 1].to) {
        throw Error(ErrorCode::DuplicateEdge, "duplicate edge {" + std::to_string(v + 1) +
                                                  "," + std::to_string(arcs[i].to + 1) + "}");
      }
    }
  }
  // connectivity
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Arc& a : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(a.to)]) {
        seen[static_cast<std::size_t>(a.to)] = 1;
        ++reached;
        stack.push_back(a.to);
      }
    }
  }
  if (reached != adjacency_.size()) {
    const auto missing = std::find(seen.begin(), seen.end(), 0) - seen.begin();
    throw Error(ErrorCode::Disconnected,
                "graph is disconnected: vertex " + std::to_string(missing + 1) +
                    " is unreachable from vertex 1");
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto arcs = neighbors(u);
  const auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                                   [](const Arc& a, Vertex x) { return a.to < x; });
  return it != arcs.end() && it->to == v;
}

std::vector<Dist> shortest_paths_from(const Graph& g, Vertex source) {
  std::vector<Dist> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  dist[static_cast<std::size_t>(source)] = 0;
  if (g.unit_weight()) {
    std::vector<Vertex> queue{source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (const Arc& a : g.neighbors(v)) {
        auto& d = dist[static_cast<std::size_t>(a.to)];
        if (d == kUnreachable) {
          d = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return dist;
  }
  using Item = std::pair<Dist, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(v)]) continue;
    for (const Arc& a : g.neighbors(v)) {
      auto& target = dist[static_cast<std::size_t>(a.to)];
      if (target == kUnreachable || d + a.weight < target) {
        target = d + a.weight;
        heap.emplace(target, a.to);
      }
    }
  }
  return dist;
}

std::vector<Dist> shortest_paths_bellman_ford(const Graph& g, Vertex source) {
  std::vector<Dist> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  dist[static_cast<std::size_t>(source)] = 0;
  for (int round = 0; round < g.order(); ++round) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      for (const auto& [from, to] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        const Dist df = dist[static_cast<std::size_t>(from)];
        if (df == kUnreachable) continue;
        Dist& dt = dist[static_cast<std::size_t>(to)];
        if (dt == kUnreachable || df + e.weight < dt) {
          dt = df + e.weight;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return dist;
}

Dist eccentricity(const Graph& g, Vertex v) {
  const auto d = shortest_paths_from(g, v);
  return *std::max_element(d.begin(), d.end());
}

Dist exact_diameter(const Graph& g) {
  // Twin classes keyed by the full (neighbour, weight) list.
  std::map<std::vector<std::pair<Vertex, Dist>>, Vertex> representative;
  Dist best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<std::pair<Vertex, Dist>> key;
    key.reserve(static_cast<std::size_t>(g.degree(v)));
    for (const Arc& a : g.neighbors(v)) key.emplace_back(a.to, a.weight);
    if (!representative.emplace(std::move(key), v).second) continue;
    best = std::max(best, eccentricity(g, v));
  }
  return best;
}

WeightedGraph::WeightedGraph(Graph g) : graph_(std::move(g)) {
  const auto n = static_cast<std::size_t>(graph_.order());
  dist_.resize(n * n);
  ecc_.resize(n);
  for (Vertex v = 0; v < graph_.order(); ++v) {
    const auto row = shortest_paths_from(graph_, v);
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(v * n));
    ecc_[static_cast<std::size_t>(v)] = *std::max_element(row.begin(), row.end());
  }
  diameter_ = *std::max_element(ecc_.begin(), ecc_.end());
}

}  // namespace bcast
