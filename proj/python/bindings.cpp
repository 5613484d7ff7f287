#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bcast/broadcast.hpp"
#include "bcast/cli.hpp"
#include "bcast/error.hpp"
#include "bcast/independence.hpp"
#include "bcast/io.hpp"
#include "bcast/nice.hpp"
#include "bcast/oracle.hpp"
#include "bcast/packing.hpp"
#include "bcast/transforms.hpp"
#include "bcast/treedecomp.hpp"

namespace py = pybind11;
using namespace bcast;

namespace {

Problem problem_of(const std::string& name) {
  if (name == "bi") return Problem::Independence;
  if (name == "bp") return Problem::Packing;
  throw py::value_error("problem must be 'bi' or 'bp'");
}

// Python sees 1-based vertex ids, as in the file formats.
WeightedGraph graph_of(int n, const std::vector<std::tuple<int, int, Dist>>& edges) {
  std::vector<Edge> list;
  for (const auto& [u, v, w] : edges) list.push_back({u - 1, v - 1, w});
  return WeightedGraph(Graph(n, std::move(list)));
}

py::dict solution_dict(Dist value, const Broadcast& f) {
  py::dict witness;
  for (const Vertex v : f.broadcasters()) witness[py::int_(v + 1)] = f[v];
  py::dict out;
  out["value"] = value;
  out["witness"] = witness;
  return out;
}

Broadcast broadcast_of(int n, const std::map<int, Dist>& values) {
  Broadcast f(n);
  for (const auto& [v, value] : values) {
    if (v < 1 || v > n) throw py::index_error("vertex out of range");
    f.set(v - 1, value);
  }
  return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Broadcast independence and packing solvers";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error((std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<WeightedGraph>(m, "Graph")
      .def(py::init(&graph_of), py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_property_readonly("order", &WeightedGraph::order)
      .def_property_readonly("diameter", &WeightedGraph::diameter)
      .def("dist", [](const WeightedGraph& g, int u, int v) { return g.dist(u - 1, v - 1); })
      .def("ecc", [](const WeightedGraph& g, int v) { return g.ecc(v - 1); });

  m.def("treewidth_upper_bound", [](const WeightedGraph& g) { return heuristic_decompose(g.graph()).width(); });

  m.def(
      "solve",
      [](const WeightedGraph& g, const std::string& problem, std::optional<Dist> p, int threads) {
        const auto ntd = make_nice(heuristic_decompose(g.graph()));
        const Dist cap = p.value_or(g.diameter());
        const DpOptions options{threads, false};
        const auto s = problem_of(problem) == Problem::Independence ? solve_p_bi(g, ntd, cap, options)
                                                                    : solve_p_bp(g, ntd, cap, options);
        return solution_dict(s.value, s.witness);
      },
      py::arg("graph"), py::arg("problem"), py::arg("p") = py::none(), py::arg("threads") = 1);

  m.def(
      "oracle",
      [](const WeightedGraph& g, const std::string& problem, std::optional<Dist> p) {
        const auto s = brute_force_optimum(g, problem_of(problem), p.value_or(g.diameter()));
        return solution_dict(s.value, s.witness);
      },
      py::arg("graph"), py::arg("problem"), py::arg("p") = py::none());

  m.def(
      "approx_bi",
      [](const WeightedGraph& g, const std::string& epsilon) {
        const auto ntd = make_nice(heuristic_decompose(g.graph()));
        const auto r = approx_bi(g, ntd, ApproxConfig::from_epsilon(parse_rational(epsilon)));
        auto out = solution_dict(r.solution.value, r.solution.witness);
        out["p"] = r.p_used;
        return out;
      },
      py::arg("graph"), py::arg("epsilon"));

  m.def(
      "is_valid",
      [](const WeightedGraph& g, const std::string& problem, const std::map<int, Dist>& values, bool relaxed) {
        const auto f = broadcast_of(g.order(), values);
        return !find_violation(g, f, problem_of(problem), relaxed ? Ceiling::Relaxed : Ceiling::Strict);
      },
      py::arg("graph"), py::arg("problem"), py::arg("values"), py::arg("relaxed") = true);

  m.def(
      "truncate",
      [](const WeightedGraph& g, const std::string& problem, const std::map<int, Dist>& values, Dist p) {
        const auto f = broadcast_of(g.order(), values);
        const auto out = problem_of(problem) == Problem::Independence ? truncate_independent(g, f, p)
                                                                      : truncate_packing(g, f, p);
        return solution_dict(out.value(), out);
      },
      py::arg("graph"), py::arg("problem"), py::arg("values"), py::arg("p"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int status = run(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"));
}
