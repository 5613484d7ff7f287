#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcast/graph.hpp"
#include "bcast/treedecomp.hpp"

namespace bcast {

enum class NodeKind { Leaf, Introduce, Forget, Join };

std::string_view to_string(NodeKind kind);

struct NiceNode {
  NodeKind kind = NodeKind::Leaf;
  std::vector<Vertex> bag;        // sorted
  Vertex vertex = -1;             // introduced / forgotten vertex
  std::vector<int> children;      // 0, 1 or 2 node indices, all smaller than this node's
  std::vector<Vertex> forgotten;  // V_x: vertices below x that are not in B_x, sorted
};

/// Nodes are stored children-first, so increasing index is a valid
/// bottom-up evaluation order and the root is the last node.
struct NiceTreeDecomposition {
  int vertex_count = 0;
  std::vector<NiceNode> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  int width() const;
};

/// Converts a valid decomposition. Bags contained in a neighbouring bag are
/// contracted first, which keeps the node count at O(width * n).
NiceTreeDecomposition make_nice(const TreeDecomposition& td);

/// Typed-node constraints, cached V_x sets and the underlying decomposition
/// properties. Returns a description of the first problem found.
std::optional<std::string> check_nice(const Graph& g, const NiceTreeDecomposition& ntd);

/// check_nice, throwing InvalidNiceDecomposition.
void validate_nice(const Graph& g, const NiceTreeDecomposition& ntd);

/// For every node x, B_x separates V_x from the rest of the graph. BFS per
/// node, so meant for small instances.
bool separator_property_holds(const Graph& g, const NiceTreeDecomposition& ntd);

/// Bags and tree edges of the nice decomposition as a plain decomposition.
TreeDecomposition flatten(const NiceTreeDecomposition& ntd);

}  // namespace bcast
