#pragma once

#include <cstdint>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/dp.hpp"
#include "bcast/graph.hpp"
#include "bcast/nice.hpp"

namespace bcast {

/// Per bag vertex (bag order), s in [-p-1, p]; -p-1 means nothing nearby.
struct PackSignature {
  std::vector<Dist> s;

  friend bool operator==(const PackSignature&, const PackSignature&) = default;
};

PackSignature pack_signature_of(const WeightedGraph& g, const NiceNode& x, const Broadcast& f, Dist p);

/// Digit s + p + 1 per bag vertex, base 2p+2, first vertex most significant.
std::uint64_t encode(const PackSignature& s, Dist p);
PackSignature decode_pack(std::uint64_t key, std::size_t bag_size, Dist p);

Table pack_leaf(Dist p);
Table pack_introduce(const WeightedGraph& g, const Table& child, const std::vector<Vertex>& child_bag,
                     Vertex v, Dist p);
Table pack_forget(const WeightedGraph& g, const Table& child, const std::vector<Vertex>& child_bag,
                  Vertex v, Dist p);
Table pack_join(const Table& left, const Table& right, std::size_t bag_size, Dist p);

DpResult solve_p_bp_full(const WeightedGraph& g, const NiceTreeDecomposition& ntd, Dist p,
                         const DpOptions& options = {});
Solution solve_p_bp(const WeightedGraph& g, const NiceTreeDecomposition& ntd, Dist p,
                    const DpOptions& options = {});

}  // namespace bcast
