#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bcast {

using Vertex = int;          // internal, 0-based
using Dist = std::int64_t;   // distances, weights, broadcast values

inline constexpr Dist kUnreachable = -1;

struct Edge {
  Vertex u;
  Vertex v;
  Dist weight;
};

struct Arc {
  Vertex to;
  Dist weight;
};

/// Simple, connected, undirected graph with positive integer edge weights.
/// Holds adjacency only; all-pairs distances live in WeightedGraph.
class Graph {
 public:
  /// Validates the edge list: ids in range, no self-loops, no parallel edges,
  /// weights >= 1, at least one vertex, connected. Throws bcast::Error.
  Graph(int order, std::vector<Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Arc> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool unit_weight() const noexcept { return unit_weight_; }
  bool adjacent(Vertex u, Vertex v) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> adjacency_;
  bool unit_weight_ = true;
};

/// Single-source shortest paths (BFS on unit-weight graphs, Dijkstra otherwise).
std::vector<Dist> shortest_paths_from(const Graph& g, Vertex source);

/// Reference single-source distances via Bellman-Ford style relaxation. Slow;
/// kept as an independent route for cross-checking the fast one.
std::vector<Dist> shortest_paths_bellman_ford(const Graph& g, Vertex source);

Dist eccentricity(const Graph& g, Vertex v);

/// Exact diameter without materialising all-pairs distances. Vertices with
/// identical weighted neighbourhoods (false twins, e.g. pendant gadgets
/// hanging off the same hub) share their eccentricity, so one search per twin
/// class suffices.
Dist exact_diameter(const Graph& g);

/// Graph plus its all-pairs distance matrix, eccentricities and diameter.
/// Immutable after construction.
class WeightedGraph {
 public:
  explicit WeightedGraph(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  bool unit_weight() const noexcept { return graph_.unit_weight(); }

  Dist dist(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(order()) +
                 static_cast<std::size_t>(v)];
  }
  std::span<const Dist> row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(order()),
            static_cast<std::size_t>(order())};
  }
  Dist ecc(Vertex v) const { return ecc_[static_cast<std::size_t>(v)]; }
  const std::vector<Dist>& eccentricities() const noexcept { return ecc_; }
  Dist diameter() const noexcept { return diameter_; }

 private:
  Graph graph_;
  std::vector<Dist> dist_;
  std::vector<Dist> ecc_;
  Dist diameter_ = 0;
};

}  // namespace bcast
