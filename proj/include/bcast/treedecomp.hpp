#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcast/graph.hpp"

namespace bcast {

/// Unrooted tree decomposition. Bags hold sorted, 0-based vertex ids; tree
/// edges index into `bags`.
struct TreeDecomposition {
  int vertex_count = 0;
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;

  int width() const;
};

/// Which defining property a decomposition breaks.
enum class TdDefect {
  NotATree,
  VertexCountMismatch,
  VertexUncovered,
  EdgeUncovered,
  TraceDisconnected,
};

struct TdDiagnosis {
  TdDefect defect;
  std::string message;
};

/// PACE .td text: "s td <bags> <width+1> <n>", "b <id> <v...>", "<id> <id>".
/// Checks syntax, declared counts and that the bag graph is a tree. Graph
/// coverage is checked separately by diagnose_td / load_td.
TreeDecomposition parse_td(std::string_view text);

std::string write_td(const TreeDecomposition& td);

std::optional<TdDiagnosis> diagnose_td(const Graph& g, const TreeDecomposition& td);

/// parse_td followed by diagnose_td; throws InvalidDecomposition on any defect.
TreeDecomposition load_td(std::string_view text, const Graph& g);

/// Decomposition induced by eliminating vertices in the given order.
TreeDecomposition decomposition_from_order(const Graph& g, std::span<const Vertex> order);

/// Min-fill elimination order; ties by smaller current degree, then smaller id.
std::vector<Vertex> min_fill_order(const Graph& g);

TreeDecomposition heuristic_decompose(const Graph& g);

}  // namespace bcast
