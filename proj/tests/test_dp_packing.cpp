#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcast/error.hpp"
#include "bcast/independence.hpp"
#include "bcast/oracle.hpp"
#include "bcast/packing.hpp"
#include "helpers.hpp"

using namespace bcast;

namespace {

NiceNode node_with(std::vector<Vertex> bag, std::vector<Vertex> forgotten) {
  NiceNode x;
  x.kind = NodeKind::Forget;
  x.bag = std::move(bag);
  x.forgotten = std::move(forgotten);
  return x;
}

std::uint64_t key(Dist s, Dist p) { return encode(PackSignature{{s}}, p); }

}  // namespace

TEST_CASE("packing signature on a path") {
  const WeightedGraph p3(testing::path_graph(3));
  Broadcast f(3);
  f.set(0, 1);
  CHECK(pack_signature_of(p3, node_with({1}, {0}), f, 1).s == std::vector<Dist>{0});
  CHECK(pack_signature_of(p3, node_with({2}, {0, 1}), f, 1).s == std::vector<Dist>{-1});
  CHECK(pack_signature_of(p3, node_with({1, 2}, {0}), Broadcast(3), 1).s == std::vector<Dist>{-2, -2});
  // Far broadcasters clamp at -p-1.
  const WeightedGraph p6(testing::path_graph(6));
  Broadcast g(6);
  g.set(0, 1);
  CHECK(pack_signature_of(p6, node_with({5}, {0, 1, 2, 3, 4}), g, 1).s == std::vector<Dist>{-2});
}

TEST_CASE("packing keys decode back") {
  const PackSignature s{{-3, 0, 2, -1}};
  CHECK(decode_pack(encode(s, 2), 4, 2) == s);
}

TEST_CASE("forget respects the packing bound") {
  const WeightedGraph p3(testing::path_graph(3));
  const Dist p = 2;
  Table t = pack_introduce(p3, pack_leaf(p), {}, 0, p);
  t = pack_introduce(p3, t, {0}, 1, p);
  REQUIRE(t.size() == 1);
  CHECK(t[0].key == encode(PackSignature{{-3, -3}}, p));
  t = pack_forget(p3, t, {0, 1}, 0, p);
  // a silent, a = 1 (s(b) = 0), a = 2 (s(b) = 1).
  REQUIRE(t.size() == 3);
  CHECK(find_entry(t, key(-3, p))->value == 0);
  CHECK(find_entry(t, key(0, p))->value == 1);
  CHECK(find_entry(t, key(1, p))->value == 2);

  // b may broadcast l only while s(b) + l < 0.
  Table with_c = pack_introduce(p3, t, {1}, 2, p);
  const Table only_c = pack_forget(p3, with_c, {1, 2}, 1, p);
  for (const auto& e : only_c) {
    const Dist s = decode_pack(e.key, 1, p).s[0];
    CHECK(e.value <= 2);
    if (e.value == 2) CHECK((s == 1 || s == 0 || s == -1));
  }
  // From s(b) = -3 the only options are b = 1 or b = 2.
  CHECK(find_entry(only_c, key(1, p))->value == 2);
}

TEST_CASE("join rejects overlapping reach") {
  const Dist p = 2;
  const Table left{{key(-1, p), 1, 0, 0, 0}, {key(0, p), 2, 0, 0, 0}};
  const Table right{{key(0, p), 1, 0, 0, 0}, {key(1, p), 2, 0, 0, 0}};
  const Table joined = pack_join(left, right, 1, p);
  // -1+0 <0 ok; -1+1 = 0 rejected; 0+0 rejected; 0+1 rejected.
  REQUIRE(joined.size() == 1);
  CHECK(joined[0].key == key(0, p));
  CHECK(joined[0].value == 2);
}

TEST_CASE("packing optimum on small graphs") {
  const WeightedGraph p4(testing::path_graph(4));
  CHECK(solve_p_bp(p4, testing::nice_of(p4.graph()), 3).value == 3);
  CHECK(solve_p_bp(p4, testing::nice_of(p4.graph()), 1).value == 2);
  const WeightedGraph star(testing::star_graph(3));
  CHECK(solve_p_bp(star, testing::nice_of(star.graph()), 2).value == 2);
  const WeightedGraph c4(testing::cycle_graph(4));
  const auto sol = solve_p_bp(c4, testing::nice_of(c4.graph()), 2);
  CHECK(sol.value == 2);
  CHECK(is_broadcast_packing(c4, sol.witness, true));
}

TEST_CASE("packing tables match a brute-force construction") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 12; ++round) {
    const Graph g = random_connected_graph(3 + round % 4, 0.3, round % 3 == 0 ? 3 : 1, rng);
    const WeightedGraph wg(g);
    const auto ntd = testing::nice_of(g);
    for (Dist p = 1; p <= std::min<Dist>(wg.diameter(), 3); ++p) {
      const auto result = solve_p_bp_full(wg, ntd, p, {1, true});
      CHECK(testing::compare_tables(wg, ntd, result.tables, p, Problem::Packing) == "");
    }
  }
}

TEST_CASE("packing matches the oracle and never beats independence") {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 30; ++round) {
    const Graph g = random_connected_graph(2 + round % 6, 0.3, round % 2 ? 3 : 1, rng);
    const WeightedGraph wg(g);
    const auto ntd = testing::nice_of(g);
    for (Dist p = 1; p <= wg.diameter(); ++p) {
      const auto bp = solve_p_bp(wg, ntd, p);
      CHECK(is_broadcast_packing(wg, bp.witness, true));
      CHECK(bp.witness.max_value() <= p);
      CHECK(bp.value == bp.witness.value());
      CHECK(bp.value == brute_force_optimum(wg, Problem::Packing, p).value);
      CHECK(bp.value <= solve_p_bi(wg, ntd, p).value);
    }
  }
}

TEST_CASE("packing is deterministic across thread counts") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 10; ++round) {
    const Graph g = random_connected_graph(11, 0.2, 3, rng);
    const WeightedGraph wg(g);
    const auto ntd = testing::nice_of(g);
    const auto one = solve_p_bp(wg, ntd, wg.diameter(), {1, false});
    const auto three = solve_p_bp(wg, ntd, wg.diameter(), {3, false});
    CHECK(one.value == three.value);
    CHECK(one.witness == three.witness);
  }
}

TEST_CASE("packing parameter checks") {
  const WeightedGraph p4(testing::path_graph(4));
  CHECK_THROWS_AS(solve_p_bp(p4, testing::nice_of(p4.graph()), 5), Error);
}
