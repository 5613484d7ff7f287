#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcast/error.hpp"
#include "bcast/independence.hpp"
#include "bcast/oracle.hpp"
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

std::uint64_t key(Dist s1, Dist s2, Dist p) { return encode(IndepSignature{{s1}, {s2}}, p); }

Dist value_at(const Table& t, std::uint64_t k) {
  const auto* e = find_entry(t, k);
  REQUIRE(e != nullptr);
  return e->value;
}

}  // namespace

TEST_CASE("signature on a path") {
  const WeightedGraph p3(testing::path_graph(3));
  Broadcast f(3);
  f.set(0, 1);
  const auto at_b = signature_of(p3, node_with({1}, {0}), f, 2);
  CHECK(at_b.s1 == std::vector<Dist>{1});
  CHECK(at_b.s2 == std::vector<Dist>{0});
  const auto at_c = signature_of(p3, node_with({2}, {0, 1}), f, 2);
  CHECK(at_c.s1 == std::vector<Dist>{0});
  CHECK(at_c.s2 == std::vector<Dist>{1});

  const auto empty = signature_of(p3, node_with({2}, {0, 1}), Broadcast(3), 2);
  CHECK(empty.s1 == std::vector<Dist>{0});
  CHECK(empty.s2 == std::vector<Dist>{2});

  CHECK_THROWS_AS(signature_of(p3, node_with({0}, {1}), f, 2), Error);
}

TEST_CASE("keys decode back") {
  const IndepSignature s{{0, 2, 1}, {3, 0, 1}};
  CHECK(decode_indep(encode(s, 3), 3, 3) == s);
  CHECK(encode(IndepSignature{}, 3) == 0);
}

TEST_CASE("introduce and forget on a path") {
  const WeightedGraph p3(testing::path_graph(3));
  const Dist p = 2;
  const Table leaf = leaf_table(p);
  REQUIRE(leaf.size() == 1);
  CHECK(leaf[0].value == 0);

  const Table with_a = introduce_table(p3, leaf, {}, 0, p);
  REQUIRE(with_a.size() == 1);
  CHECK(with_a[0].key == key(0, p, p));

  const Table with_ab = introduce_table(p3, with_a, {0}, 1, p);
  REQUIRE(with_ab.size() == 1);
  CHECK(with_ab[0].key == encode(IndepSignature{{0, 0}, {p, p}}, p));

  // Forgetting a: silent, or a broadcasts l = 1..p.
  const Table only_b = forget_table(p3, with_ab, {0, 1}, 0, p);
  CHECK(only_b.size() == 3);
  CHECK(value_at(only_b, key(0, 2, p)) == 0);
  CHECK(value_at(only_b, key(1, 0, p)) == 1);
  CHECK(value_at(only_b, key(2, 0, p)) == 2);
  CHECK(find_entry(only_b, key(2, 0, p))->decision == 2);

  // Introducing c next to b propagates the distances.
  const Table bc = introduce_table(p3, only_b, {1}, 2, p);
  CHECK(value_at(bc, encode(IndepSignature{{1, 0}, {0, 1}}, p)) == 1);
  CHECK(value_at(bc, encode(IndepSignature{{2, 1}, {0, 1}}, p)) == 2);

  // a and b never broadcast together; each alone reaches c differently.
  const Table only_c = forget_table(p3, bc, {1, 2}, 1, p);
  CHECK(only_c.size() == 5);
  CHECK(value_at(only_c, key(0, 2, p)) == 0);
  CHECK(value_at(only_c, key(0, 1, p)) == 1);  // a = 1
  CHECK(value_at(only_c, key(1, 1, p)) == 2);  // a = 2
  CHECK(value_at(only_c, key(1, 0, p)) == 1);  // b = 1
  CHECK(value_at(only_c, key(2, 0, p)) == 2);  // b = 2
}

TEST_CASE("join keeps compatible pairs only") {
  const Dist p = 2;
  const Table left{{key(1, 0, p), 1, 0, 0, 0}, {key(2, 0, p), 2, 0, 0, 0}};
  const Table right{{key(0, 1, p), 1, 0, 0, 0}, {key(2, 0, p), 2, 0, 0, 0}};
  const Table joined = join_table(left, right, 1, p);
  // (1,0)+(0,1) -> (1,0); (1,0)+(2,0) -> (2,0); (2,0)+(0,1) -> (2,0); (2,0)+(2,0) rejected.
  CHECK(joined.size() == 2);
  CHECK(value_at(joined, key(1, 0, p)) == 2);
  CHECK(value_at(joined, key(2, 0, p)) == 3);
}

TEST_CASE("optimum on small graphs") {
  const WeightedGraph p2(testing::path_graph(2));
  CHECK(solve_p_bi(p2, testing::nice_of(p2.graph()), 1).value == 1);
  const WeightedGraph p4(testing::path_graph(4));
  const auto sol = solve_p_bi(p4, testing::nice_of(p4.graph()), 3);
  CHECK(sol.value == 4);
  CHECK(is_independent_broadcast(p4, sol.witness, true));
  const WeightedGraph star(testing::star_graph(3));
  CHECK(solve_p_bi(star, testing::nice_of(star.graph()), 1).value == 3);
  const WeightedGraph k1(Graph(1, {}));
  CHECK(solve_p_bi(k1, testing::nice_of(k1.graph()), 0).value == 0);
}

TEST_CASE("root table has a single entry") {
  const WeightedGraph c6(testing::cycle_graph(6));
  const auto result = solve_p_bi_full(c6, testing::nice_of(c6.graph()), 3, {1, true});
  REQUIRE(result.tables.size() == testing::nice_of(c6.graph()).nodes.size());
  CHECK(result.tables.back().size() == 1);
  CHECK(result.tables.back()[0].value == result.solution.value);
}

TEST_CASE("tables match a brute-force construction") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 12; ++round) {
    const Graph g = random_connected_graph(3 + round % 4, 0.3, round % 3 == 0 ? 3 : 1, rng);
    const WeightedGraph wg(g);
    const auto ntd = testing::nice_of(g);
    for (Dist p = 1; p <= std::min<Dist>(wg.diameter(), 3); ++p) {
      const auto result = solve_p_bi_full(wg, ntd, p, {1, true});
      CHECK(testing::compare_tables(wg, ntd, result.tables, p, Problem::Independence) == "");
    }
  }
}

TEST_CASE("value grows with p and matches the oracle") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 30; ++round) {
    const Graph g = random_connected_graph(2 + round % 6, 0.3, round % 2 ? 3 : 1, rng);
    const WeightedGraph wg(g);
    const auto ntd = testing::nice_of(g);
    Dist previous = 0;
    for (Dist p = 1; p <= wg.diameter(); ++p) {
      const auto sol = solve_p_bi(wg, ntd, p);
      CHECK(sol.value >= previous);
      CHECK(sol.witness.max_value() <= p);
      CHECK(is_independent_broadcast(wg, sol.witness, true));
      CHECK(sol.witness.value() == sol.value);
      CHECK(sol.value == brute_force_optimum(wg, Problem::Independence, p).value);
      previous = sol.value;
    }
  }
}

TEST_CASE("thread count does not change the result") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 10; ++round) {
    const Graph g = random_connected_graph(10, 0.25, 2, rng);
    const WeightedGraph wg(g);
    const auto ntd = testing::nice_of(g);
    const Dist p = wg.diameter();
    const auto one = solve_p_bi_full(wg, ntd, p, {1, true});
    const auto four = solve_p_bi_full(wg, ntd, p, {4, true});
    CHECK(one.solution.value == four.solution.value);
    CHECK(one.solution.witness == four.solution.witness);
    REQUIRE(one.tables.size() == four.tables.size());
    for (std::size_t i = 0; i < one.tables.size(); ++i) {
      REQUIRE(one.tables[i].size() == four.tables[i].size());
      for (std::size_t j = 0; j < one.tables[i].size(); ++j) {
        CHECK(one.tables[i][j].key == four.tables[i][j].key);
        CHECK(one.tables[i][j].value == four.tables[i][j].value);
      }
    }
  }
}

TEST_CASE("parameter checks") {
  const WeightedGraph p4(testing::path_graph(4));
  const auto ntd = testing::nice_of(p4.graph());
  auto code_of = [](auto&& call) {
    try {
      call();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  CHECK(code_of([&] { solve_p_bi(p4, ntd, 4); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([&] { solve_p_bi(p4, ntd, -1); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([&] { solve_p_bi(p4, testing::nice_of(testing::path_graph(5)), 2); }) ==
        ErrorCode::InvalidNiceDecomposition);

  // Twelve mutually adjacent vertices at distance 100: (101)^24 keys do not fit.
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 12; ++u) {
    for (Vertex v = u + 1; v < 12; ++v) edges.push_back({u, v, 100});
  }
  const WeightedGraph heavy(Graph(12, std::move(edges)));
  CHECK(code_of([&] { solve_p_bi(heavy, testing::nice_of(heavy.graph()), 100); }) ==
        ErrorCode::SignatureOverflow);
}
