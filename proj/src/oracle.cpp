#include "bcast/oracle.hpp"

#include <algorithm>
#include <future>

#include "bcast/error.hpp"

namespace bcast {

namespace {

bool compatible(Problem problem, Dist d, Dist a, Dist b) {
  return problem == Problem::Packing ? d > a + b : d > std::max(a, b);
}

class Search {
 public:
  Search(const WeightedGraph& g, Problem problem, Dist p)
      : g_(g), problem_(problem), p_(p), values_(static_cast<std::size_t>(g.order()), 0) {}

  /// Best completion with vertex 0 fixed to `first`, or -1 if infeasible.
  void run_from(Dist first) {
    values_[0] = first;
    extend(1, first);
  }

  Dist best() const { return best_; }
  const std::vector<Dist>& best_values() const { return best_values_; }

 private:
  void extend(int v, Dist total) {
    const int n = g_.order();
    if (total + p_ * (n - v) <= best_) return;  // cannot strictly improve
    if (v == n) {
      best_ = total;
      best_values_ = values_;
      return;
    }
    for (Dist value = 0; value <= p_; ++value) {
      if (value > 0 && !fits(v, value)) continue;
      values_[static_cast<std::size_t>(v)] = value;
      extend(v + 1, total + value);
    }
    values_[static_cast<std::size_t>(v)] = 0;
  }

  bool fits(Vertex v, Dist value) const {
    for (Vertex u = 0; u < v; ++u) {
      const Dist fu = values_[static_cast<std::size_t>(u)];
      if (fu > 0 && !compatible(problem_, g_.dist(u, v), fu, value)) return false;
    }
    return true;
  }

  const WeightedGraph& g_;
  Problem problem_;
  Dist p_;
  std::vector<Dist> values_;
  Dist best_ = -1;
  std::vector<Dist> best_values_;
};

void check_oracle_input(const WeightedGraph& g, Dist p, const OracleOptions& options) {
  const int cap = g.unit_weight() ? options.unweighted_cap : options.weighted_cap;
  if (g.order() > cap) {
    throw Error(ErrorCode::InstanceTooLarge, "oracle handles at most " + std::to_string(cap) + " vertices (" +
                                                 (g.unit_weight() ? "unweighted" : "weighted") + "), got " +
                                                 std::to_string(g.order()));
  }
  if (p < 0 || p > g.diameter()) {
    throw Error(ErrorCode::ParameterOutOfRange, "p must lie in 0.." + std::to_string(g.diameter()));
  }
}

}  // namespace

Solution brute_force_optimum(const WeightedGraph& g, Problem problem, Dist p, const OracleOptions& options) {
  check_oracle_input(g, p, options);
  // One independent search per value of vertex 0; merging in increasing order
  // of that value with strict improvement keeps the lexicographic tie-break.
  std::vector<Search> searches;
  for (Dist first = 0; first <= p; ++first) searches.emplace_back(g, problem, p);
  if (options.threads > 1) {
    std::vector<std::future<void>> jobs;
    for (Dist first = 0; first <= p; ++first) {
      jobs.push_back(std::async(std::launch::async, [&searches, first] {
        searches[static_cast<std::size_t>(first)].run_from(first);
      }));
    }
    for (auto& j : jobs) j.get();
  } else {
    for (Dist first = 0; first <= p; ++first) searches[static_cast<std::size_t>(first)].run_from(first);
  }
  Solution out;
  out.value = -1;
  for (const auto& s : searches) {
    if (s.best() > out.value) {
      out.value = s.best();
      out.witness = Broadcast(s.best_values());
    }
  }
  return out;
}

Solution brute_force_unpruned(const WeightedGraph& g, Problem problem, Dist p) {
  check_oracle_input(g, p, OracleOptions{});
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Dist> values(n, 0);
  Solution out;
  out.value = -1;
  while (true) {
    Broadcast f(values);
    if (!find_violation(g, f, problem, Ceiling::Relaxed) && f.value() > out.value) {
      out.value = f.value();
      out.witness = f;
    }
    // Odometer with the last vertex fastest, so assignments come in
    // lexicographic order.
    std::size_t i = n;
    while (i > 0 && values[i - 1] == p) values[--i] = 0;
    if (i == 0) break;
    ++values[i - 1];
  }
  return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 6) throw Error(ErrorCode::ParameterOutOfRange, "enumeration supports 1 <= n <= 6");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Graph> out;
  const std::uint32_t limit = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    // Union-find connectivity check before building the graph.
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    const auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    int components = n;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (!(mask >> b & 1u)) continue;
      edges.push_back({pairs[b].first, pairs[b].second, 1});
      const int ra = find(pairs[b].first);
      const int rb = find(pairs[b].second);
      if (ra != rb) {
        parent[static_cast<std::size_t>(ra)] = rb;
        --components;
      }
    }
    if (components == 1) out.emplace_back(n, std::move(edges));
  }
  return out;
}

Graph random_connected_graph(int n, double density, Dist max_weight, std::mt19937_64& rng) {
  std::uniform_int_distribution<Dist> weight(1, std::max<Dist>(1, max_weight));
  std::bernoulli_distribution extra(density);
  std::vector<Edge> edges;
  std::vector<std::vector<char>> present(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (Vertex v = 1; v < n; ++v) {
    const Vertex u = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    edges.push_back({u, v, weight(rng)});
    present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] && extra(rng)) {
        edges.push_back({u, v, weight(rng)});
      }
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace bcast
