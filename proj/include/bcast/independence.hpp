#pragma once

#include <cstdint>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/dp.hpp"
#include "bcast/graph.hpp"
#include "bcast/nice.hpp"

namespace bcast {

/// Per bag vertex (bag order), s1 and s2, both clamped to [0, p].
struct IndepSignature {
  std::vector<Dist> s1;
  std::vector<Dist> s2;

  friend bool operator==(const IndepSignature&, const IndepSignature&) = default;
};

/// Signature of f (supported on V_x) with respect to node x.
IndepSignature signature_of(const WeightedGraph& g, const NiceNode& x, const Broadcast& f, Dist p);

/// Key layout: for each bag vertex s1 then s2, base p+1, first vertex most
/// significant.
std::uint64_t encode(const IndepSignature& s, Dist p);
IndepSignature decode_indep(std::uint64_t key, std::size_t bag_size, Dist p);

Table leaf_table(Dist p);
Table introduce_table(const WeightedGraph& g, const Table& child, const std::vector<Vertex>& child_bag,
                      Vertex v, Dist p);
Table forget_table(const WeightedGraph& g, const Table& child, const std::vector<Vertex>& child_bag,
                   Vertex v, Dist p);
Table join_table(const Table& left, const Table& right, std::size_t bag_size, Dist p);

/// Best independent p-broadcast (values capped by p <= diam). Validates the
/// decomposition and the range of p first.
DpResult solve_p_bi_full(const WeightedGraph& g, const NiceTreeDecomposition& ntd, Dist p,
                         const DpOptions& options = {});
Solution solve_p_bi(const WeightedGraph& g, const NiceTreeDecomposition& ntd, Dist p,
                    const DpOptions& options = {});

}  // namespace bcast
