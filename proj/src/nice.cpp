#include "bcast/nice.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "bcast/error.hpp"

namespace bcast {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Introduce: return "introduce";
    case NodeKind::Forget: return "forget";
    case NodeKind::Join: return "join";
  }
  return "unknown";
}

int NiceTreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& node : nodes) largest = std::max(largest, node.bag.size());
  return static_cast<int>(largest) - 1;
}

namespace {

std::vector<Vertex> minus(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset_of(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

class Builder {
 public:
  explicit Builder(int vertex_count) { ntd_.vertex_count = vertex_count; }

  int leaf() {
    NiceNode node;
    node.kind = NodeKind::Leaf;
    return push(std::move(node));
  }

  int introduce(int child, Vertex v) {
    NiceNode node;
    node.kind = NodeKind::Introduce;
    node.vertex = v;
    node.bag = at(child).bag;
    node.bag.insert(std::lower_bound(node.bag.begin(), node.bag.end(), v), v);
    node.forgotten = at(child).forgotten;
    node.children = {child};
    return push(std::move(node));
  }

  int forget(int child, Vertex v) {
    NiceNode node;
    node.kind = NodeKind::Forget;
    node.vertex = v;
    node.bag = at(child).bag;
    node.bag.erase(std::lower_bound(node.bag.begin(), node.bag.end(), v));
    node.forgotten = at(child).forgotten;
    node.forgotten.insert(std::lower_bound(node.forgotten.begin(), node.forgotten.end(), v), v);
    node.children = {child};
    return push(std::move(node));
  }

  int join(int left, int right) {
    NiceNode node;
    node.kind = NodeKind::Join;
    node.bag = at(left).bag;
    std::set_union(at(left).forgotten.begin(), at(left).forgotten.end(), at(right).forgotten.begin(),
                   at(right).forgotten.end(), std::back_inserter(node.forgotten));
    node.children = {left, right};
    return push(std::move(node));
  }

  /// Forget then introduce vertices until the top bag equals `target`.
  int morph(int node, const std::vector<Vertex>& target) {
    const auto current = at(node).bag;
    for (const Vertex v : minus(current, target)) node = forget(node, v);
    for (const Vertex v : minus(target, current)) node = introduce(node, v);
    return node;
  }

  const NiceNode& at(int i) const { return ntd_.nodes[static_cast<std::size_t>(i)]; }
  NiceTreeDecomposition take() { return std::move(ntd_); }

 private:
  int push(NiceNode node) {
    ntd_.nodes.push_back(std::move(node));
    return static_cast<int>(ntd_.nodes.size()) - 1;
  }

  NiceTreeDecomposition ntd_;
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
  const auto count = td.bags.size();
  if (count == 0) throw Error(ErrorCode::InvalidDecomposition, "decomposition has no bags");
  std::vector<std::set<int>> adj(count);
  for (const auto& [a, b] : td.tree_edges) {
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  }
  // Contract every bag into a neighbour that contains it.
  std::vector<char> alive(count, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < count; ++i) {
      if (!alive[i]) continue;
      int host = -1;
      for (const int j : adj[i]) {
        if (subset_of(td.bags[i], td.bags[static_cast<std::size_t>(j)])) {
          host = j;
          break;
        }
      }
      if (host == -1) continue;
      for (const int j : adj[i]) {
        adj[static_cast<std::size_t>(j)].erase(static_cast<int>(i));
        if (j != host) {
          adj[static_cast<std::size_t>(j)].insert(host);
          adj[static_cast<std::size_t>(host)].insert(j);
        }
      }
      adj[i].clear();
      alive[i] = 0;
      changed = true;
    }
  }
  const int root = static_cast<int>(std::find(alive.begin(), alive.end(), 1) - alive.begin());

  // Iterative post-order over the contracted tree.
  std::vector<int> parent(count, -1);
  std::vector<int> order;
  std::vector<int> stack{root};
  parent[static_cast<std::size_t>(root)] = root;
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    order.push_back(t);
    for (const int c : adj[static_cast<std::size_t>(t)]) {
      if (parent[static_cast<std::size_t>(c)] == -1) {
        parent[static_cast<std::size_t>(c)] = t;
        stack.push_back(c);
      }
    }
  }
  Builder builder(td.vertex_count);
  std::vector<int> top(count, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int t = *it;
    const auto& bag = td.bags[static_cast<std::size_t>(t)];
    int node = -1;
    for (const int c : adj[static_cast<std::size_t>(t)]) {
      if (c == parent[static_cast<std::size_t>(t)]) continue;
      const int branch = builder.morph(top[static_cast<std::size_t>(c)], bag);
      node = node == -1 ? branch : builder.join(node, branch);
    }
    if (node == -1) node = builder.morph(builder.leaf(), bag);
    top[static_cast<std::size_t>(t)] = node;
  }
  builder.morph(top[static_cast<std::size_t>(root)], {});
  return builder.take();
}

std::optional<std::string> check_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
  if (ntd.nodes.empty()) return "no nodes";
  if (ntd.vertex_count != g.order()) return "vertex count differs from the graph";
  std::vector<int> parents(ntd.nodes.size(), 0);
  for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
    const auto& x = ntd.nodes[i];
    const auto where = "node " + std::to_string(i) + " (" + std::string(to_string(x.kind)) + "): ";
    if (!std::is_sorted(x.bag.begin(), x.bag.end()) ||
        std::adjacent_find(x.bag.begin(), x.bag.end()) != x.bag.end()) {
      return where + "bag not sorted and duplicate-free";
    }
    for (const int c : x.children) {
      if (c < 0 || static_cast<std::size_t>(c) >= i) return where + "child index out of order";
      ++parents[static_cast<std::size_t>(c)];
    }
    std::vector<Vertex> expected_forgotten;
    switch (x.kind) {
      case NodeKind::Leaf:
        if (!x.children.empty() || !x.bag.empty()) return where + "leaf must be childless with an empty bag";
        break;
      case NodeKind::Introduce:
      case NodeKind::Forget: {
        if (x.children.size() != 1) return where + "needs exactly one child";
        const auto& y = ntd.nodes[static_cast<std::size_t>(x.children[0])];
        const auto& big = x.kind == NodeKind::Introduce ? x.bag : y.bag;
        const auto& small = x.kind == NodeKind::Introduce ? y.bag : x.bag;
        if (big.size() != small.size() + 1 || !subset_of(small, big) || minus(big, small) != std::vector{x.vertex}) {
          return where + "bag must differ from the child's by exactly vertex " + std::to_string(x.vertex + 1);
        }
        expected_forgotten = y.forgotten;
        if (x.kind == NodeKind::Forget) {
          expected_forgotten.insert(
              std::lower_bound(expected_forgotten.begin(), expected_forgotten.end(), x.vertex), x.vertex);
        }
        break;
      }
      case NodeKind::Join: {
        if (x.children.size() != 2) return where + "needs exactly two children";
        const auto& y = ntd.nodes[static_cast<std::size_t>(x.children[0])];
        const auto& z = ntd.nodes[static_cast<std::size_t>(x.children[1])];
        if (y.bag != x.bag || z.bag != x.bag) return where + "children bags must equal the join bag";
        std::set_union(y.forgotten.begin(), y.forgotten.end(), z.forgotten.begin(), z.forgotten.end(),
                       std::back_inserter(expected_forgotten));
        break;
      }
    }
    if (x.forgotten != expected_forgotten) return where + "cached V_x is wrong";
  }
  for (std::size_t i = 0; i + 1 < parents.size(); ++i) {
    if (parents[i] != 1) return "node " + std::to_string(i) + " has " + std::to_string(parents[i]) + " parents";
  }
  const auto& root = ntd.nodes.back();
  if (!root.bag.empty()) return "root bag is not empty";
  if (static_cast<int>(root.forgotten.size()) != g.order()) return "root does not cover every vertex";
  if (const auto d = diagnose_td(g, flatten(ntd))) return d->message;
  return std::nullopt;
}

void validate_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
  if (const auto problem = check_nice(g, ntd)) {
    throw Error(ErrorCode::InvalidNiceDecomposition, *problem);
  }
}

bool separator_property_holds(const Graph& g, const NiceTreeDecomposition& ntd) {
  const auto n = static_cast<std::size_t>(g.order());
  for (const auto& x : ntd.nodes) {
    std::vector<char> state(n, 0);  // 1 = in V_x, 2 = in B_x
    for (const Vertex v : x.forgotten) state[static_cast<std::size_t>(v)] = 1;
    for (const Vertex v : x.bag) state[static_cast<std::size_t>(v)] = 2;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> queue(x.forgotten.begin(), x.forgotten.end());
    for (const Vertex v : queue) seen[static_cast<std::size_t>(v)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Arc& a : g.neighbors(queue[head])) {
        const auto u = static_cast<std::size_t>(a.to);
        if (state[u] == 2 || seen[u]) continue;
        if (state[u] == 0) return false;
        seen[u] = 1;
        queue.push_back(a.to);
      }
    }
  }
  return true;
}

TreeDecomposition flatten(const NiceTreeDecomposition& ntd) {
  TreeDecomposition td;
  td.vertex_count = ntd.vertex_count;
  for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
    td.bags.push_back(ntd.nodes[i].bag);
    for (const int c : ntd.nodes[i].children) td.tree_edges.emplace_back(c, static_cast<int>(i));
  }
  return td;
}

}  // namespace bcast
