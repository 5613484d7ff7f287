#include "bcast/independence.hpp"

#include <algorithm>

#include "bcast/error.hpp"
#include "dp_engine.hpp"

namespace bcast {

namespace {

struct IndepPolicy {
  static constexpr std::size_t kDigits = 2;

  const WeightedGraph* g;
  Dist p;

  Dist radix() const { return p + 1; }

  void introduce(const std::vector<Vertex>& bag, const Dist* child, Vertex v, Dist* out) const {
    Dist s1 = 0;
    Dist s2 = p;
    for (std::size_t i = 0; i < bag.size(); ++i) {
      const Dist d = g->dist(bag[i], v);
      s1 = std::max(s1, child[2 * i] - d);
      s2 = std::min(s2, child[2 * i + 1] + d);
    }
    out[0] = s1;
    out[1] = s2;
  }

  template <class Emit>
  void broadcast_branches(const std::vector<Vertex>& bag, const Dist* child, std::size_t pos, Dist* scratch,
                          Emit&& emit) const {
    if (child[2 * pos] != 0) return;
    const Vertex v = bag[pos];
    for (Dist l = 1; l <= child[2 * pos + 1]; ++l) {
      std::size_t o = 0;
      for (std::size_t i = 0; i < bag.size(); ++i) {
        if (i == pos) continue;
        const Dist d = g->dist(bag[i], v);
        scratch[2 * o] = std::max(child[2 * i], l - d + 1);
        scratch[2 * o + 1] = std::min(child[2 * i + 1], d - 1);
        ++o;
      }
      emit(l, scratch);
    }
  }

  bool join(const Dist* a, const Dist* b, std::size_t k, Dist* out) const {
    for (std::size_t i = 0; i < k; ++i) {
      if (a[2 * i] > b[2 * i + 1] + 1 || b[2 * i] > a[2 * i + 1] + 1) return false;
      out[2 * i] = std::max(a[2 * i], b[2 * i]);
      out[2 * i + 1] = std::min(a[2 * i + 1], b[2 * i + 1]);
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

IndepSignature signature_of(const WeightedGraph& g, const NiceNode& x, const Broadcast& f, Dist p) {
  for (const Vertex u : f.broadcasters()) {
    if (!std::binary_search(x.forgotten.begin(), x.forgotten.end(), u)) {
      throw Error(ErrorCode::InvalidBroadcast, "broadcaster " + std::to_string(u + 1) + " lies outside V_x");
    }
  }
  IndepSignature s;
  for (const Vertex v : x.bag) {
    Dist s1 = 0;
    Dist s2 = p;
    for (const Vertex u : f.broadcasters()) {
      s1 = std::max(s1, f[u] - g.dist(u, v) + 1);
      s2 = std::min(s2, g.dist(u, v) - 1);
    }
    s.s1.push_back(s1);
    s.s2.push_back(s2);
  }
  return s;
}

std::uint64_t encode(const IndepSignature& s, Dist p) {
  std::vector<Dist> digits;
  for (std::size_t i = 0; i < s.s1.size(); ++i) {
    digits.push_back(s.s1[i]);
    digits.push_back(s.s2[i]);
  }
  detail::check_key_capacity(p + 1, digits.size());
  return detail::encode_digits(digits.data(), digits.size(), p + 1);
}

IndepSignature decode_indep(std::uint64_t key, std::size_t bag_size, Dist p) {
  std::vector<Dist> digits(2 * bag_size);
  detail::decode_digits(key, digits.size(), p + 1, digits.data());
  IndepSignature s;
  for (std::size_t i = 0; i < bag_size; ++i) {
    s.s1.push_back(digits[2 * i]);
    s.s2.push_back(digits[2 * i + 1]);
  }
  return s;
}

Table leaf_table(Dist p) { return detail::leaf(IndepPolicy{nullptr, p}); }

Table introduce_table(const WeightedGraph& g, const Table& child, const std::vector<Vertex>& child_bag,
                      Vertex v, Dist p) {
  return detail::introduce(IndepPolicy{&g, p}, child, child_bag, v);
}

Table forget_table(const WeightedGraph& g, const Table& child, const std::vector<Vertex>& child_bag,
                   Vertex v, Dist p) {
  return detail::forget(IndepPolicy{&g, p}, child, child_bag, v);
}

Table join_table(const Table& left, const Table& right, std::size_t bag_size, Dist p) {
  return detail::join(IndepPolicy{nullptr, p}, left, right, bag_size);
}

DpResult solve_p_bi_full(const WeightedGraph& g, const NiceTreeDecomposition& ntd, Dist p,
                         const DpOptions& options) {
  check_p(g, p);
  validate_nice(g.graph(), ntd);
  detail::check_key_capacity(p + 1, 2 * static_cast<std::size_t>(ntd.width() + 1));
  return detail::solve(IndepPolicy{&g, p}, ntd, options);
}

Solution solve_p_bi(const WeightedGraph& g, const NiceTreeDecomposition& ntd, Dist p, const DpOptions& options) {
  return solve_p_bi_full(g, ntd, p, options).solution;
}

}  // namespace bcast
