#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/graph.hpp"

namespace bcast {

/// k colour classes of n vertices each; vertex (i, a) is v_i^a, both 1-based.
struct CliqueEdge {
  int i, a, j, b;
};

struct MulticoloredCliqueInstance {
  int k = 0;
  int n = 0;
  std::vector<CliqueEdge> edges;     // normalised to i < j, sorted, unique
  std::optional<std::vector<int>> planted;  // m_1..m_k
};

/// "p mcc <k> <n>", "e <i> <a> <j> <b>", optional "w <m_1> ... <m_k>".
/// Rejects odd n, edges inside a class, and a planted set that is not a clique.
MulticoloredCliqueInstance parse_mcc(std::string_view text);

struct ReductionInstance {
  std::string reduction;   // wbi-clique, bi-wbi or wbp-clique
  Problem problem = Problem::Independence;
  Graph graph{1, {}};
  Dist target = 0;
  std::optional<Broadcast> witness;
  std::vector<std::pair<std::string, Dist>> constants;  // in output order
  std::vector<std::string> roles;  // per vertex, e.g. "l 1", "v 1 2", "f 17", "s"
  std::vector<Vertex> cover;       // certificate set, meaning given by cover_kind
  std::string cover_kind = "cover";  // "cover": a vertex cover of graph;
                                     // "forest-cut": deleting it leaves a forest
  bool scaled = false;
  std::optional<Dist> diameter_bound;

  Dist constant(std::string_view name) const;
  Vertex vertex_with_role(std::string_view role) const;
};

/// Shrinks the gadget constants (a and b) by `scale` for smoke tests. Any
/// scale other than 1 flags the instance: the equivalence only holds at the
/// full constants, the planted witness stays valid regardless.
struct GenOptions {
  double scale = 1.0;
  std::size_t max_vertices = 5'000'000;
};

ReductionInstance gen_wbi_from_clique(const MulticoloredCliqueInstance& inst, const GenOptions& options = {});
ReductionInstance gen_wbp_from_clique(const MulticoloredCliqueInstance& inst, const GenOptions& options = {});

/// Weighted BI instance (g1, M1) to unweighted BI. Requires even weights and
/// M1 > diam(g1). Edges heavier than diam(g1) are an error unless
/// `drop_long_edges` is set. A witness of g1 with value >= M1 is carried over.
ReductionInstance gen_bi_from_wbi(const WeightedGraph& g1, Dist m1, const std::optional<Broadcast>& witness,
                                  bool drop_long_edges = false, const GenOptions& options = {});

/// Line-oriented sidecar: reduction, scaled flag, constants, target, cover,
/// one "role <vertex> <label>" line per vertex (1-based).
std::string write_meta(const ReductionInstance& inst);

/// True when deleting `removed` leaves an acyclic graph.
bool is_forest_after_removal(const Graph& g, const std::vector<Vertex>& removed);

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& cover);

}  // namespace bcast
