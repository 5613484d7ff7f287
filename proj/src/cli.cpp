#include "bcast/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>

#include "bcast/broadcast.hpp"
#include "bcast/error.hpp"
#include "bcast/independence.hpp"
#include "bcast/io.hpp"
#include "bcast/nice.hpp"
#include "bcast/oracle.hpp"
#include "bcast/packing.hpp"
#include "bcast/reductions.hpp"
#include "bcast/transforms.hpp"
#include "bcast/treedecomp.hpp"

namespace bcast {

namespace {

using Json = nlohmann::ordered_json;

// Above this many vertices `validate` skips the all-pairs matrix.
constexpr int kDenseValidationLimit = 2000;

/// Collects the result of a subcommand once, then prints it either as
/// "key value" lines or as one JSON object with the same keys.
class Report {
 public:
  template <class T>
  void put(const std::string& key, const T& value) {
    json_[key] = value;
    std::ostringstream line;
    line << key << " " << value;
    lines_.push_back(line.str());
  }

  /// JSON field without a text line.
  template <class T>
  void hidden(const std::string& key, const T& value) {
    json_[key] = value;
  }

  void word(const std::string& key, bool value, const std::string& text) {
    json_[key] = value;
    lines_.push_back(text);
  }

  /// Witness inline: broadcast-file lines in text mode, pairs in JSON.
  void witness(const Broadcast& f) {
    Json pairs = Json::array();
    for (const Vertex v : f.broadcasters()) pairs.push_back({v + 1, f[v]});
    json_["witness"] = pairs;
    std::istringstream text(write_broadcast(f));
    for (std::string line; std::getline(text, line);) {
      if (line.rfind("value", 0) != 0) lines_.push_back(line);
    }
  }

  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << json_.dump(2) << "\n";
      return;
    }
    for (const auto& line : lines_) out << line << "\n";
  }

 private:
  Json json_ = Json::object();
  std::vector<std::string> lines_;
};

Problem parse_problem(const std::string& name) {
  if (name == "bi") return Problem::Independence;
  if (name == "bp") return Problem::Packing;
  throw Error(ErrorCode::ParameterOutOfRange, "problem must be 'bi' or 'bp'");
}

NiceTreeDecomposition nice_for(const WeightedGraph& g, const std::string& td_path) {
  const TreeDecomposition td = td_path.empty() ? heuristic_decompose(g.graph()) : load_td(read_file(td_path), g.graph());
  return make_nice(td);
}

struct Common {
  bool json = false;
  int threads = 1;
};

struct SolveArgs {
  std::string problem, graph, td, witness;
  std::optional<Dist> p;
};

struct ApproxArgs {
  std::string graph, td, epsilon, witness;
};

struct DecideArgs {
  std::string problem, graph, td, witness;
  Dist k = 0;
};

struct ValidateArgs {
  std::string problem, graph, witness;
  bool strict = false;
};

struct OracleArgs {
  std::string problem, graph;
  std::optional<Dist> p;
};

struct DecomposeArgs {
  std::string graph, out;
};

struct GenArgs {
  std::string reduction, in, prefix, in_witness;
  std::optional<Dist> target;
  double scale = 1.0;
  bool normalize = false;
};

int do_solve(const SolveArgs& a, const Common& c, std::ostream& out) {
  const Problem problem = parse_problem(a.problem);
  const WeightedGraph g = parse_graph(read_file(a.graph));
  const auto ntd = nice_for(g, a.td);
  const Dist p = a.p.value_or(g.diameter());
  const DpOptions options{c.threads, false};
  const Solution s = problem == Problem::Independence ? solve_p_bi(g, ntd, p, options) : solve_p_bp(g, ntd, p, options);
  Report r;
  r.put("value", s.value);
  r.put("p", p);
  r.put("width", ntd.width());
  if (a.witness.empty()) {
    r.witness(s.witness);
  } else {
    write_file(a.witness, write_broadcast(s.witness));
  }
  r.print(out, c.json);
  return kExitOk;
}

int do_approx(const ApproxArgs& a, const Common& c, std::ostream& out) {
  const auto config = ApproxConfig::from_epsilon(parse_rational(a.epsilon));
  const WeightedGraph g = parse_graph(read_file(a.graph));
  const auto ntd = nice_for(g, a.td);
  const auto result = approx_bi(g, ntd, config, DpOptions{c.threads, false});
  write_file(a.witness, write_broadcast(result.solution.witness));
  Report r;
  r.put("value", result.solution.value);
  r.put("epsilon", std::to_string(config.epsilon.num) + "/" + std::to_string(config.epsilon.den));
  r.put("p", result.p_used);
  if (result.p_used != result.p_formula) r.put("p-formula", result.p_formula);
  r.print(out, c.json);
  return kExitOk;
}

int do_decide(const DecideArgs& a, const Common& c, std::ostream& out) {
  const Problem problem = parse_problem(a.problem);
  const WeightedGraph g = parse_graph(read_file(a.graph));
  // The decomposition is only needed when the diameter does not settle it.
  const auto ntd = g.diameter() > a.k ? NiceTreeDecomposition{} : nice_for(g, a.td);
  const Decision d = decide_value_k(g, ntd, a.k, problem, DpOptions{c.threads, false});
  Report r;
  r.word("yes", d.yes, d.yes ? "yes" : "no");
  r.put("via", std::string(d.via_diameter ? "diameter" : "dp"));
  if (d.optimum) r.put("optimum", *d.optimum);
  if (d.witness) {
    r.put("value", d.witness->value());
    if (a.witness.empty()) {
      r.witness(*d.witness);
    } else {
      write_file(a.witness, write_broadcast(*d.witness));
    }
  }
  r.print(out, c.json);
  return d.yes ? kExitOk : kExitNo;
}

int do_validate(const ValidateArgs& a, const Common& c, std::ostream& out) {
  const Problem problem = parse_problem(a.problem);
  const Ceiling ceiling = a.strict ? Ceiling::Strict : Ceiling::Relaxed;
  const Graph graph = parse_graph_structure(read_file(a.graph));
  const Broadcast f = parse_broadcast(read_file(a.witness), graph.order());
  std::optional<Violation> bad;
  if (graph.order() > kDenseValidationLimit) {
    bad = find_violation_sparse(graph, f, problem, ceiling);
  } else {
    bad = find_violation(WeightedGraph(graph), f, problem, ceiling);
  }
  Report r;
  if (bad) {
    r.word("valid", false, "invalid " + bad->describe());
    r.hidden("violation", bad->describe());
  } else {
    r.word("valid", true, "valid " + std::to_string(f.value()));
    r.hidden("value", f.value());
  }
  r.print(out, c.json);
  return bad ? kExitNo : kExitOk;
}

int do_oracle(const OracleArgs& a, const Common& c, std::ostream& out) {
  const Problem problem = parse_problem(a.problem);
  const WeightedGraph g = parse_graph(read_file(a.graph));
  OracleOptions options;
  options.threads = c.threads;
  const Dist p = a.p.value_or(g.diameter());
  const Solution s = brute_force_optimum(g, problem, p, options);
  Report r;
  r.put("value", s.value);
  r.put("p", p);
  r.witness(s.witness);
  r.print(out, c.json);
  return kExitOk;
}

int do_decompose(const DecomposeArgs& a, const Common& c, std::ostream& out) {
  const Graph g = parse_graph_structure(read_file(a.graph));
  const TreeDecomposition td = heuristic_decompose(g);
  const std::string text = write_td(td);
  if (a.out.empty() && !c.json) {
    out << text;
    return kExitOk;
  }
  if (!a.out.empty()) write_file(a.out, text);
  Report r;
  r.put("width", td.width());
  r.put("bags", td.bags.size());
  if (a.out.empty()) r.put("td", text);
  r.print(out, c.json);
  return kExitOk;
}

int do_gen(const GenArgs& a, const Common& c, std::ostream& out) {
  GenOptions options;
  options.scale = a.scale;
  ReductionInstance inst;
  if (a.reduction == "wbi-clique" || a.reduction == "wbp-clique") {
    const auto mcc = parse_mcc(read_file(a.in));
    inst = a.reduction == "wbi-clique" ? gen_wbi_from_clique(mcc, options) : gen_wbp_from_clique(mcc, options);
  } else if (a.reduction == "bi-wbi") {
    const WeightedGraph g1 = parse_graph(read_file(a.in));
    std::optional<Broadcast> witness;
    if (!a.in_witness.empty()) witness = parse_broadcast(read_file(a.in_witness), g1.order());
    if (!a.target && !witness) {
      throw Error(ErrorCode::ParameterOutOfRange, "bi-wbi needs --target or --in-witness");
    }
    const Dist m1 = a.target ? *a.target : witness->value();
    inst = gen_bi_from_wbi(g1, m1, witness, a.normalize, options);
  } else {
    throw Error(ErrorCode::ParameterOutOfRange, "unknown reduction '" + a.reduction + "'");
  }
  const std::string comment = inst.reduction + (inst.scaled ? " (scaled)" : "");
  write_file(a.prefix + ".gr", write_graph(inst.graph, comment));
  write_file(a.prefix + ".meta", write_meta(inst));
  if (inst.witness) write_file(a.prefix + ".w", write_broadcast(*inst.witness));
  Report r;
  r.put("reduction", inst.reduction);
  r.put("vertices", inst.graph.order());
  r.put("edges", inst.graph.size());
  r.put("target", inst.target);
  r.word("scaled", inst.scaled, std::string("scaled ") + (inst.scaled ? "1" : "0"));
  if (inst.witness) r.put("witness-value", inst.witness->value());
  r.print(out, c.json);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Broadcast independence and packing toolkit", "bcast"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Print results as JSON");
  app.add_option("--threads", common.threads, "Worker threads for the DP")->check(CLI::Range(1, 256));

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact optimum via tree-decomposition DP");
  solve_cmd->add_option("--problem", solve.problem, "bi or bp")->required();
  solve_cmd->add_option("--graph", solve.graph, "Graph file")->required();
  solve_cmd->add_option("--td", solve.td, "Tree decomposition (.td); min-fill when omitted");
  solve_cmd->add_option("--p", solve.p, "Value cap p, default diam");
  solve_cmd->add_option("--witness", solve.witness, "Write the optimal broadcast here");

  ApproxArgs approx;
  auto* approx_cmd = app.add_subcommand("approx", "(1/2 - epsilon)-approximation for BI");
  approx_cmd->add_option("--graph", approx.graph, "Graph file")->required();
  approx_cmd->add_option("--td", approx.td, "Tree decomposition (.td)");
  approx_cmd->add_option("--epsilon", approx.epsilon, "Rational in (0, 1/2), e.g. 1/4")->required();
  approx_cmd->add_option("--witness", approx.witness, "Write the broadcast here")->required();

  DecideArgs decide;
  auto* decide_cmd = app.add_subcommand("decide", "Is there a broadcast of value >= k?");
  decide_cmd->add_option("--problem", decide.problem, "bi or bp")->required();
  decide_cmd->add_option("--graph", decide.graph, "Graph file")->required();
  decide_cmd->add_option("--td", decide.td, "Tree decomposition (.td)");
  decide_cmd->add_option("--k", decide.k, "Target value")->required();
  decide_cmd->add_option("--witness", decide.witness, "Write the witness here on yes");

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check a broadcast file");
  validate_cmd->add_option("--problem", validate.problem, "bi or bp")->required();
  validate_cmd->add_option("--graph", validate.graph, "Graph file")->required();
  validate_cmd->add_option("--witness", validate.witness, "Broadcast file")->required();
  validate_cmd->add_flag("--strict", validate.strict, "Cap values by eccentricity instead of diameter");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum on small graphs");
  oracle_cmd->add_option("--problem", oracle.problem, "bi or bp")->required();
  oracle_cmd->add_option("--graph", oracle.graph, "Graph file")->required();
  oracle_cmd->add_option("--p", oracle.p, "Value cap p, default diam");

  DecomposeArgs decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "Min-fill tree decomposition");
  decompose_cmd->add_option("--graph", decompose.graph, "Graph file")->required();
  decompose_cmd->add_option("--out", decompose.out, "Write the .td here instead of stdout");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a reduction instance");
  gen_cmd->add_option("--reduction", gen.reduction, "wbi-clique, bi-wbi or wbp-clique")->required();
  gen_cmd->add_option("--in", gen.in, "Clique instance, or weighted graph for bi-wbi")->required();
  gen_cmd->add_option("--out-prefix", gen.prefix, "Writes PREFIX.gr, PREFIX.w, PREFIX.meta")->required();
  gen_cmd->add_option("--scale", gen.scale, "Shrink gadget constants, in (0, 1]");
  gen_cmd->add_option("--in-witness", gen.in_witness, "bi-wbi: independent broadcast of the input");
  gen_cmd->add_option("--target", gen.target, "bi-wbi: target M1 (default: witness value)");
  gen_cmd->add_flag("--normalize", gen.normalize, "bi-wbi: drop edges heavier than the diameter");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error usage " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (solve_cmd->parsed()) return do_solve(solve, common, out);
    if (approx_cmd->parsed()) return do_approx(approx, common, out);
    if (decide_cmd->parsed()) return do_decide(decide, common, out);
    if (validate_cmd->parsed()) return do_validate(validate, common, out);
    if (oracle_cmd->parsed()) return do_oracle(oracle, common, out);
    if (decompose_cmd->parsed()) return do_decompose(decompose, common, out);
    if (gen_cmd->parsed()) return do_gen(gen, common, out);
  } catch (const Error& e) {
    err << "error " << to_string(e.code()) << " " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error internal " << e.what() << "\n";
    return kExitInternal;
  }
  err << "error internal no subcommand ran\n";
  return kExitInternal;
}

}  // namespace bcast
