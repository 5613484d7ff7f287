#include "bcast/packing.hpp"

#include <algorithm>

#include "bcast/error.hpp"
#include "dp_engine.hpp"

namespace bcast {

namespace {

// Digits hold s + p + 1 so they are nonnegative; the helpers below work on
// the shifted values directly (sums and comparisons adjust by the offset).
struct PackPolicy {
  static constexpr std::size_t kDigits = 1;

  const WeightedGraph* g;
  Dist p;

  Dist radix() const { return 2 * p + 2; }
  Dist floor_digit() const { return 0; }

  void introduce(const std::vector<Vertex>& bag, const Dist* child, Vertex v, Dist* out) const {
    Dist s = floor_digit();
    for (std::size_t i = 0; i < bag.size(); ++i) s = std::max(s, child[i] - g->dist(bag[i], v));
    out[0] = s;
  }

  template <class Emit>
  void broadcast_branches(const std::vector<Vertex>& bag, const Dist* child, std::size_t pos, Dist* scratch,
                          Emit&& emit) const {
    const Dist sv = child[pos] - p - 1;
    const Vertex v = bag[pos];
    for (Dist l = 1; l <= p && sv + l < 0; ++l) {
      std::size_t o = 0;
      for (std::size_t i = 0; i < bag.size(); ++i) {
        if (i == pos) continue;
        scratch[o++] = std::max(child[i], l - g->dist(v, bag[i]) + p + 1);
      }
      emit(l, scratch);
    }
  }

  bool join(const Dist* a, const Dist* b, std::size_t k, Dist* out) const {
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i] + b[i] - 2 * (p + 1) >= 0) return false;
      out[i] = std::max(a[i], b[i]);
    }
    return true;
  }
};

void check_p(const WeightedGraph& g, Dist p) {
  if (p < 0 || p > g.diameter()) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "p must lie in 0.." + std::to_string(g.diameter()) + ", got " + std::to_string(p));
  }
}

}  // namespace

PackSignature pack_signature_of(const WeightedGraph& g, const NiceNode& x, const Broadcast& f, Dist p) {
  for (const Vertex u : f.broadcasters()) {
    if (!std::binary_search(x.forgotten.begin(), x.forgotten.end(), u)) {
      throw Error(ErrorCode::InvalidBroadcast, "broadcaster " + std::to_string(u + 1) + " lies outside V_x");
    }
  }
  PackSignature s;
  for (const Vertex v : x.bag) {
    Dist value = -p - 1;
    for (const Vertex u : f.broadcasters()) value = std::max(value, f[u] - g.dist(v, u));
    s.s.push_back(value);
  }
  return s;
}

std::uint64_t encode(const PackSignature& s, Dist p) {
  std::vector<Dist> digits;
  for (const Dist value : s.s) digits.push_back(value + p + 1);
  detail::check_key_capacity(2 * p + 2, digits.size());
  return detail::encode_digits(digits.data(), digits.size(), 2 * p + 2);
}

PackSignature decode_pack(std::uint64_t key, std::size_t bag_size, Dist p) {
  std::vector<Dist> digits(bag_size);
  detail::decode_digits(key, bag_size, 2 * p + 2, digits.data());
  PackSignature s;
  for (const Dist d : digits) s.s.push_back(d - p - 1);
  return s;
}

Table pack_leaf(Dist p) { return detail::leaf(PackPolicy{nullptr, p}); }

Table pack_introduce(const WeightedGraph& g, const Table& child, const std::vector<Vertex>& child_bag,
                     Vertex v, Dist p) {
  return detail::introduce(PackPolicy{&g, p}, child, child_bag, v);
}

Table pack_forget(const WeightedGraph& g, const Table& child, const std::vector<Vertex>& child_bag,
                  Vertex v, Dist p) {
  return detail::forget(PackPolicy{&g, p}, child, child_bag, v);
}

Table pack_join(const Table& left, const Table& right, std::size_t bag_size, Dist p) {
  return detail::join(PackPolicy{nullptr, p}, left, right, bag_size);
}

DpResult solve_p_bp_full(const WeightedGraph& g, const NiceTreeDecomposition& ntd, Dist p,
                         const DpOptions& options) {
  check_p(g, p);
  validate_nice(g.graph(), ntd);
  detail::check_key_capacity(2 * p + 2, static_cast<std::size_t>(ntd.width() + 1));
  return detail::solve(PackPolicy{&g, p}, ntd, options);
}

Solution solve_p_bp(const WeightedGraph& g, const NiceTreeDecomposition& ntd, Dist p, const DpOptions& options) {
  return solve_p_bp_full(g, ntd, p, options).solution;
}

}  // namespace bcast
