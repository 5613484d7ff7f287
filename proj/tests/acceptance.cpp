// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "bcast/cli.hpp"
#include "bcast/error.hpp"
#include "bcast/independence.hpp"
#include "bcast/io.hpp"
#include "bcast/oracle.hpp"
#include "bcast/packing.hpp"
#include "bcast/reductions.hpp"
#include "bcast/transforms.hpp"
#include "helpers.hpp"

using namespace bcast;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  /// Keeps the first few problems; the rest are only counted.
  void fail(const std::string& what) {
    if (ok) detail.clear();
    ok = false;
    if (++failures <= 3) detail += (detail.empty() ? "" : "; ") + what;
  }

  int failures = 0;
};

/// Criterion 1 graphs: all connected graphs up to 5 vertices, then 100
/// random ones on 6 or 7 vertices.
std::vector<Graph> small_unweighted() {
  std::vector<Graph> out;
  for (int n = 1; n <= 5; ++n) {
    for (auto& g : enumerate_connected_graphs(n)) out.push_back(std::move(g));
  }
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 100; ++i) out.push_back(random_connected_graph(6 + i % 2, 0.15 + 0.05 * (i % 8), 1, rng));
  return out;
}

std::string describe(const Graph& g) { return "graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()); }

Outcome oracle_equivalence(const std::vector<Graph>& graphs, Problem problem) {
  Outcome o;
  std::size_t runs = 0;
  for (const Graph& g : graphs) {
    const WeightedGraph wg(g);
    const auto ntd = testing::nice_of(g);
    for (Dist p = 1; p <= wg.diameter(); ++p) {
      const Solution dp = problem == Problem::Independence ? solve_p_bi(wg, ntd, p) : solve_p_bp(wg, ntd, p);
      const Solution bf = brute_force_optimum(wg, problem, p);
      ++runs;
      if (dp.value != bf.value) {
        o.fail(describe(g) + " p=" + std::to_string(p) + ": dp " + std::to_string(dp.value) + " oracle " +
               std::to_string(bf.value));
      }
      if (find_violation(wg, dp.witness, problem, Ceiling::Relaxed) || dp.witness.value() != dp.value ||
          dp.witness.max_value() > p) {
        o.fail(describe(g) + " p=" + std::to_string(p) + ": witness does not certify the value");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(runs) + " (graph, p) runs";
  return o;
}

Outcome weighted_equivalence() {
  Outcome o;
  std::mt19937_64 rng(2002);
  std::size_t runs = 0;
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_connected_graph(2 + i % 5, 0.3, 5, rng);
    const WeightedGraph wg(g);
    const auto ntd = testing::nice_of(g);
    for (Dist p = 1; p <= wg.diameter(); ++p) {
      for (const Problem problem : {Problem::Independence, Problem::Packing}) {
        const Dist dp = (problem == Problem::Independence ? solve_p_bi(wg, ntd, p) : solve_p_bp(wg, ntd, p)).value;
        const Dist bf = brute_force_optimum(wg, problem, p).value;
        ++runs;
        if (dp != bf) o.fail(describe(g) + " " + std::string(to_string(problem)) + " p=" + std::to_string(p));
      }
    }
  }
  if (o.ok) o.detail = "100 weighted graphs, " + std::to_string(runs) + " runs";
  return o;
}

Outcome independence_number(const std::vector<Graph>& graphs) {
  Outcome o;
  std::size_t checked = 0;
  for (const Graph& g : graphs) {
    const WeightedGraph wg(g);
    if (wg.diameter() < 1) continue;
    const Dist dp = solve_p_bi(wg, testing::nice_of(g), 1).value;
    ++checked;
    if (dp != testing::max_independent_set(g)) o.fail(describe(g));
  }
  if (o.ok) o.detail = std::to_string(checked) + " graphs";
  return o;
}

Outcome approximation(const std::vector<Graph>& graphs) {
  Outcome o;
  std::size_t runs = 0;
  for (const Graph& g : graphs) {
    const WeightedGraph wg(g);
    const auto ntd = testing::nice_of(g);
    const Dist optimum = brute_force_optimum(wg, Problem::Independence, wg.diameter()).value;
    for (const char* eps : {"1/4", "1/6", "1/10"}) {
      const auto config = ApproxConfig::from_epsilon(parse_rational(eps));
      const auto r = approx_bi(wg, ntd, config);
      ++runs;
      if ((2 * config.p + 2) * r.solution.value < config.p * optimum || r.solution.value > optimum) {
        o.fail(describe(g) + " eps=" + eps);
      }
    }
  }
  if (o.ok) o.detail = std::to_string(runs) + " (graph, epsilon) runs";
  return o;
}

Broadcast random_valid_broadcast(const WeightedGraph& g, Problem problem, std::mt19937_64& rng) {
  Broadcast f(g.order());
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) order[static_cast<std::size_t>(v)] = v;
  std::shuffle(order.begin(), order.end(), rng);
  for (const Vertex v : order) {
    for (Dist value = std::uniform_int_distribution<Dist>(0, g.diameter())(rng); value >= 1; --value) {
      f.set(v, value);
      if (!find_violation(g, f, problem, Ceiling::Relaxed)) break;
      f.set(v, 0);
    }
  }
  return f;
}

Outcome transforms() {
  Outcome o;
  std::mt19937_64 rng(3003);
  for (const Problem problem : {Problem::Independence, Problem::Packing}) {
    for (int i = 0; i < 200; ++i) {
      const WeightedGraph g(random_connected_graph(2 + i % 7, 0.05 + 0.05 * (i % 5), 1, rng));
      const Broadcast f = random_valid_broadcast(g, problem, rng);
      for (Dist p = 1; p <= 3; ++p) {
        const bool bi = problem == Problem::Independence;
        const Broadcast out = bi ? truncate_independent(g, f, p) : truncate_packing(g, f, p);
        const Dist factor = bi ? 2 * p + 2 : 2 * p + 1;
        if (find_violation(g, out, problem, Ceiling::Relaxed) || out.max_value() > p ||
            factor * out.value() < p * f.value()) {
          o.fail(std::string(to_string(problem)) + " sample " + std::to_string(i) + " p=" + std::to_string(p));
        }
      }
    }
  }
  const WeightedGraph path(testing::path_graph(20));
  Broadcast f(20);
  f.set(0, 15);
  const Dist bi = truncate_independent(path, f, 2).value();
  const Dist bp = truncate_packing(path, f, 2).value();
  if (bi != 6) o.fail("truncated P20 value for bi is " + std::to_string(bi));
  if (bp != 7) o.fail("truncated P20 value for bp is " + std::to_string(bp));
  if (o.ok) o.detail = "400 samples x 3 caps; truncated P20 examples";
  return o;
}

void check_reduction(const ReductionInstance& inst, Outcome& o) {
  const std::string name = inst.reduction;
  if (inst.scaled) o.fail(name + ": scaled constants");
  if (!inst.witness) {
    o.fail(name + ": no witness");
    return;
  }
  if (inst.witness->value() != inst.target) o.fail(name + ": witness value differs from target");
  if (const auto bad = find_violation_sparse(inst.graph, *inst.witness, inst.problem, Ceiling::Relaxed)) {
    o.fail(name + ": witness invalid, " + bad->describe());
  }
  const Dist diam = exact_diameter(inst.graph);
  if (diam > *inst.diameter_bound) {
    o.fail(name + ": diameter " + std::to_string(diam) + " above " + std::to_string(*inst.diameter_bound));
  }
  const bool certificate = inst.cover_kind == "cover" ? is_vertex_cover(inst.graph, inst.cover)
                                                      : is_forest_after_removal(inst.graph, inst.cover);
  if (!certificate) o.fail(name + ": " + inst.cover_kind + " certificate fails");
}

Outcome reductions() {
  Outcome o;
  const auto mcc = parse_mcc("p mcc 2 2\ne 1 1 2 2\ne 1 2 2 1\nw 1 2\n");
  const auto wbi = gen_wbi_from_clique(mcc);
  check_reduction(wbi, o);
  const auto wbp = gen_wbp_from_clique(mcc);
  check_reduction(wbp, o);
  // Weighted input for the third reduction: even weights, diameter 8.
  const WeightedGraph g1(Graph(4, {{0, 1, 6}, {1, 2, 2}, {0, 3, 4}, {1, 3, 4}}));
  Broadcast w1(4);
  w1.set(0, 7);
  w1.set(2, 7);
  const auto bi = gen_bi_from_wbi(g1, 14, w1);
  check_reduction(bi, o);
  if (o.ok) {
    o.detail = "wbi-clique " + std::to_string(wbi.graph.order()) + " vertices, wbp-clique " +
               std::to_string(wbp.graph.order()) + ", bi-wbi " + std::to_string(bi.graph.order());
  }
  return o;
}

Outcome table_consistency() {
  Outcome o;
  std::mt19937_64 rng(4004);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_connected_graph(2 + i % 5, 0.35, 1 + i % 3, rng);
    const WeightedGraph wg(g);
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::shuffle(order.begin(), order.end(), rng);
    const auto ntd = make_nice(decomposition_from_order(g, order));
    for (Dist p = 1; p <= std::min<Dist>(wg.diameter(), 4); ++p) {
      const auto bi = solve_p_bi_full(wg, ntd, p, {1, true});
      if (const auto why = testing::compare_tables(wg, ntd, bi.tables, p, Problem::Independence); !why.empty()) {
        o.fail("bi " + describe(g) + " p=" + std::to_string(p) + ": " + why);
      }
      const auto bp = solve_p_bp_full(wg, ntd, p, {1, true});
      if (const auto why = testing::compare_tables(wg, ntd, bp.tables, p, Problem::Packing); !why.empty()) {
        o.fail("bp " + describe(g) + " p=" + std::to_string(p) + ": " + why);
      }
    }
  }
  if (o.ok) o.detail = "20 graphs, every node, both problems";
  return o;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

/// stdout, stderr, exit status and any files listed, concatenated.
std::string capture(const std::vector<std::string>& args, const std::vector<fs::path>& files = {}) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  std::string all = std::to_string(status) + "\n" + out.str() + "\n" + err.str();
  for (const auto& f : files) all += "\n" + slurp(f);
  return all;
}

Outcome determinism() {
  Outcome o;
  std::random_device rd;
  const fs::path dir = fs::temp_directory_path() / ("bcast-acceptance-" + std::to_string(rd()));
  fs::create_directories(dir);
  const auto put = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name, std::ios::binary) << text;
    return (dir / name).string();
  };
  std::mt19937_64 rng(5005);
  const auto gr = put("g.gr", write_graph(random_connected_graph(16, 0.15, 3, rng)));
  const auto small = put("s.gr", write_graph(random_connected_graph(7, 0.3, 2, rng)));
  const auto mcc = put("x.mcc", "p mcc 2 2\ne 1 1 2 2\ne 1 2 2 1\nw 1 2\n");
  const auto g1 = put("g1.gr", "p bcast 4 4\ne 1 2 6\ne 2 3 2\ne 1 4 4\ne 2 4 4\n");
  const auto w1 = put("g1.w", "v 1 7\nv 3 7\nvalue 14\n");
  const auto w = (dir / "out.w").string();
  const auto td = (dir / "g.td").string();

  struct Case {
    std::vector<std::string> args;
    std::vector<fs::path> files;
    bool threaded;
  };
  std::vector<Case> cases;
  for (const std::string problem : {"bi", "bp"}) {
    cases.push_back({{"solve", "--problem", problem, "--graph", gr}, {}, true});
    cases.push_back({{"solve", "--problem", problem, "--graph", gr, "--witness", w}, {w}, true});
    cases.push_back({{"decide", "--problem", problem, "--graph", gr, "--k", "9"}, {}, true});
    cases.push_back({{"oracle", "--problem", problem, "--graph", small}, {}, true});
  }
  cases.push_back({{"approx", "--graph", gr, "--epsilon", "1/6", "--witness", w}, {w}, true});
  cases.push_back({{"decompose", "--graph", gr, "--out", td}, {td}, false});
  cases.push_back({{"decompose", "--graph", gr}, {}, false});
  for (const std::string red : {"wbi-clique", "wbp-clique"}) {
    const auto prefix = (dir / red).string();
    cases.push_back({{"gen", "--reduction", red, "--in", mcc, "--out-prefix", prefix, "--scale", "0.01"},
                     {prefix + ".gr", prefix + ".w", prefix + ".meta"},
                     false});
  }
  const auto bi_prefix = (dir / "bi").string();
  cases.push_back({{"gen", "--reduction", "bi-wbi", "--in", g1, "--in-witness", w1, "--out-prefix", bi_prefix},
                   {bi_prefix + ".gr", bi_prefix + ".w", bi_prefix + ".meta"},
                   false});
  cases.push_back({{"validate", "--problem", "bi", "--graph", bi_prefix + ".gr", "--witness", bi_prefix + ".w"}, {}, false});

  for (const auto& c : cases) {
    const std::string first = capture(c.args, c.files);
    if (first.rfind("0\n", 0) != 0) o.fail(c.args[0] + " failed: " + first);
    if (capture(c.args, c.files) != first) o.fail(c.args[0] + " output differs between runs");
    if (c.threaded) {
      auto args = c.args;
      args.insert(args.begin(), {"--threads", "4"});
      if (capture(args, c.files) != first) o.fail(c.args[0] + " output differs with --threads 4");
    }
  }
  fs::remove_all(dir);
  if (o.ok) o.detail = std::to_string(cases.size()) + " command lines, twice each";
  return o;
}

}  // namespace

int main() {
  const auto graphs = small_unweighted();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle-equivalence-bi", [&] { return oracle_equivalence(graphs, Problem::Independence); }},
      {"oracle-equivalence-bp", [&] { return oracle_equivalence(graphs, Problem::Packing); }},
      {"weighted-oracle-equivalence", weighted_equivalence},
      {"independence-number", [&] { return independence_number(graphs); }},
      {"approximation-guarantee", [&] { return approximation(graphs); }},
      {"structural-transforms", transforms},
      {"reduction-self-checks", reductions},
      {"dp-table-consistency", table_consistency},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << o.detail << ", "
         << seconds << "s)";
    std::cout << line.str() << std::endl;
    failures += !o.ok;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
