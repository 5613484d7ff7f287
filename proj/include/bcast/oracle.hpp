#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/dp.hpp"
#include "bcast/graph.hpp"

namespace bcast {

struct OracleOptions {
  int unweighted_cap = 8;
  int weighted_cap = 7;
  int threads = 1;
};

/// Exhaustive search over f: V -> {0..p}, vertices in id order, values in
/// increasing order, rejecting a value as soon as it conflicts with an earlier
/// broadcaster. The witness is the lexicographically smallest optimum.
Solution brute_force_optimum(const WeightedGraph& g, Problem problem, Dist p, const OracleOptions& options = {});

/// Same optimum by checking every one of the (p+1)^n assignments in full.
Solution brute_force_unpruned(const WeightedGraph& g, Problem problem, Dist p);

/// Every connected labeled graph on n vertices (1 <= n <= 6), in increasing
/// order of the edge bitmask.
std::vector<Graph> enumerate_connected_graphs(int n);

/// Random spanning tree plus each remaining pair with probability `density`.
/// Weights are uniform in [1, max_weight].
Graph random_connected_graph(int n, double density, Dist max_weight, std::mt19937_64& rng);

}  // namespace bcast
