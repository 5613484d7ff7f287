#include "bcast/treedecomp.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <tuple>
#include <unordered_set>

#include "bcast/error.hpp"

namespace bcast {

int TreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, bag.size());
  return static_cast<int>(largest) - 1;
}

namespace {

[[noreturn]] void malformed(int line_no, const std::string& what) {
  throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": " + what);
}

long long parse_number(std::string_view token, int line_no) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) malformed(line_no, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool is_tree(int nodes, const std::vector<std::pair<int, int>>& edges) {
  if (nodes == 0) return edges.empty();
  if (static_cast<int>(edges.size()) != nodes - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  for (int i = 0; i < nodes; ++i) parent[static_cast<std::size_t>(i)] = i;
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [a, b] : edges) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  return true;
}

}  // namespace

TreeDecomposition parse_td(std::string_view text) {
  TreeDecomposition td;
  bool have_header = false;
  long long declared_bags = 0;
  long long declared_size = 0;
  std::vector<char> bag_seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto t = tokens_of(line);
    if (t.empty() || t[0] == "c") continue;
    if (t[0] == "s") {
      if (have_header) throw Error(ErrorCode::DuplicateHeader, "line " + std::to_string(line_no) + ": second header");
      if (t.size() != 5 || t[1] != "td") malformed(line_no, "expected 's td <bags> <width+1> <n>'");
      declared_bags = parse_number(t[2], line_no);
      declared_size = parse_number(t[3], line_no);
      const long long n = parse_number(t[4], line_no);
      if (declared_bags < 0 || declared_size < 0 || n < 0) malformed(line_no, "negative count in header");
      td.vertex_count = static_cast<int>(n);
      td.bags.assign(static_cast<std::size_t>(declared_bags), {});
      bag_seen.assign(static_cast<std::size_t>(declared_bags), 0);
      have_header = true;
      continue;
    }
    if (!have_header) throw Error(ErrorCode::MissingHeader, "line " + std::to_string(line_no) + ": content before 's td' header");
    if (t[0] == "b") {
      if (t.size() < 2) malformed(line_no, "expected 'b <id> <vertices...>'");
      const long long id = parse_number(t[1], line_no);
      if (id < 1 || id > declared_bags) malformed(line_no, "bag id outside 1.." + std::to_string(declared_bags));
      if (bag_seen[static_cast<std::size_t>(id - 1)]++) malformed(line_no, "bag " + std::to_string(id) + " listed twice");
      auto& bag = td.bags[static_cast<std::size_t>(id - 1)];
      for (std::size_t i = 2; i < t.size(); ++i) {
        const long long v = parse_number(t[i], line_no);
        if (v < 1 || v > td.vertex_count) {
          throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) +
                                                       ": vertex outside 1.." + std::to_string(td.vertex_count));
        }
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) malformed(line_no, "repeated vertex in bag");
      continue;
    }
    if (t.size() != 2) malformed(line_no, "expected '<bag> <bag>' tree edge");
    const long long a = parse_number(t[0], line_no);
    const long long b = parse_number(t[1], line_no);
    if (a < 1 || a > declared_bags || b < 1 || b > declared_bags) malformed(line_no, "tree edge references an unknown bag");
    td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (!have_header) throw Error(ErrorCode::MissingHeader, "no 's td' header");
  for (std::size_t i = 0; i < bag_seen.size(); ++i) {
    if (!bag_seen[i]) throw Error(ErrorCode::MalformedLine, "bag " + std::to_string(i + 1) + " never listed");
  }
  if (td.width() + 1 != declared_size && !td.bags.empty()) {
    throw Error(ErrorCode::MalformedLine, "header declares max bag size " + std::to_string(declared_size) +
                                              ", actual " + std::to_string(td.width() + 1));
  }
  if (!is_tree(static_cast<int>(td.bags.size()), td.tree_edges)) {
    throw Error(ErrorCode::InvalidDecomposition, "not-a-tree: tree edges do not form a tree over the bags");
  }
  return td;
}

std::string write_td(const TreeDecomposition& td) {
  std::string out = "s td " + std::to_string(td.bags.size()) + " " + std::to_string(td.width() + 1) + " " +
                    std::to_string(td.vertex_count) + "\n";
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out += "b " + std::to_string(i + 1);
    for (const Vertex v : td.bags[i]) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  for (const auto& [a, b] : td.tree_edges) out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  return out;
}

std::optional<TdDiagnosis> diagnose_td(const Graph& g, const TreeDecomposition& td) {
  if (!is_tree(static_cast<int>(td.bags.size()), td.tree_edges)) {
    return TdDiagnosis{TdDefect::NotATree, "not-a-tree: tree edges do not form a tree over the bags"};
  }
  if (td.vertex_count != g.order()) {
    return TdDiagnosis{TdDefect::VertexCountMismatch,
                       "vertex-count: decomposition is for " + std::to_string(td.vertex_count) +
                           " vertices, graph has " + std::to_string(g.order())};
  }
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<int>> bags_of(n);
  for (std::size_t b = 0; b < td.bags.size(); ++b) {
    for (const Vertex v : td.bags[b]) {
      if (v < 0 || v >= g.order()) {
        return TdDiagnosis{TdDefect::VertexCountMismatch, "vertex-count: bag vertex outside the graph"};
      }
      bags_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (bags_of[v].empty()) {
      return TdDiagnosis{TdDefect::VertexUncovered,
                         "vertex-coverage: vertex " + std::to_string(v + 1) + " is in no bag"};
    }
  }
  for (const Edge& e : g.edges()) {
    const auto& a = bags_of[static_cast<std::size_t>(e.u)];
    const auto& b = bags_of[static_cast<std::size_t>(e.v)];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) {
      return TdDiagnosis{TdDefect::EdgeUncovered, "edge-coverage: edge {" + std::to_string(e.u + 1) + "," +
                                                      std::to_string(e.v + 1) + "} is in no bag"};
    }
  }
  // In a tree, the bags holding v induce a connected subtree iff they span
  // exactly (count - 1) tree edges.
  std::vector<int> inner_edges(n, 0);
  for (const auto& [x, y] : td.tree_edges) {
    const auto& bx = td.bags[static_cast<std::size_t>(x)];
    const auto& by = td.bags[static_cast<std::size_t>(y)];
    std::vector<Vertex> common;
    std::set_intersection(bx.begin(), bx.end(), by.begin(), by.end(), std::back_inserter(common));
    for (const Vertex v : common) ++inner_edges[static_cast<std::size_t>(v)];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (inner_edges[v] != static_cast<int>(bags_of[v].size()) - 1) {
      return TdDiagnosis{TdDefect::TraceDisconnected, "connectivity: bags containing vertex " +
                                                          std::to_string(v + 1) + " are not connected"};
    }
  }
  return std::nullopt;
}

TreeDecomposition load_td(std::string_view text, const Graph& g) {
  auto td = parse_td(text);
  if (const auto d = diagnose_td(g, td)) throw Error(ErrorCode::InvalidDecomposition, d->message);
  return td;
}

TreeDecomposition decomposition_from_order(const Graph& g, std::span<const Vertex> order) {
  const auto n = static_cast<std::size_t>(g.order());
  if (order.size() != n) {
    throw Error(ErrorCode::InvalidDecomposition, "elimination order must list every vertex once");
  }
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || position[static_cast<std::size_t>(v)] != -1) {
      throw Error(ErrorCode::InvalidDecomposition, "elimination order must list every vertex once");
    }
    position[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::unordered_set<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  TreeDecomposition td;
  td.vertex_count = g.order();
  td.bags.resize(n);
  std::vector<int> parent(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    auto& bag = td.bags[i];
    std::vector<Vertex> later(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
    std::sort(later.begin(), later.end());
    bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    int first = -1;
    for (const Vertex u : later) {
      const int p = position[static_cast<std::size_t>(u)];
      if (first == -1 || p < first) first = p;
      adj[static_cast<std::size_t>(u)].erase(v);
      for (const Vertex w : later) {
        if (w != u) adj[static_cast<std::size_t>(u)].insert(w);
      }
    }
    adj[static_cast<std::size_t>(v)].clear();
    parent[i] = first;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // A connected graph only leaves the last bag without a parent; anything
    // else gets attached to it.
    const int p = parent[i] == -1 ? static_cast<int>(n - 1) : parent[i];
    td.tree_edges.emplace_back(static_cast<int>(i), p);
  }
  return td;
}

std::vector<Vertex> min_fill_order(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::unordered_set<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  const auto fill_of = [&](Vertex v) {
    const auto& nv = adj[static_cast<std::size_t>(v)];
    long long present = 0;
    for (const Vertex x : nv) {
      const auto& nx = adj[static_cast<std::size_t>(x)];
      if (nx.size() < nv.size()) {
        for (const Vertex y : nx) present += nv.count(y);
      } else {
        for (const Vertex y : nv) present += nx.count(y);
      }
    }
    const auto d = static_cast<long long>(nv.size());
    return d * (d - 1) / 2 - present / 2;
  };
  using Key = std::tuple<long long, std::size_t, Vertex>;  // fill, degree, id
  std::set<Key> queue;
  std::vector<Key> key_of(n);
  for (std::size_t v = 0; v < n; ++v) {
    key_of[v] = {fill_of(static_cast<Vertex>(v)), adj[v].size(), static_cast<Vertex>(v)};
    queue.insert(key_of[v]);
  }
  std::vector<char> eliminated(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  while (!queue.empty()) {
    const Vertex v = std::get<2>(*queue.begin());
    queue.erase(queue.begin());
    eliminated[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);
    const std::vector<Vertex> nbrs(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
    for (const Vertex u : nbrs) {
      adj[static_cast<std::size_t>(u)].erase(v);
      for (const Vertex w : nbrs) {
        if (w != u) adj[static_cast<std::size_t>(u)].insert(w);
      }
    }
    adj[static_cast<std::size_t>(v)].clear();
    std::unordered_set<Vertex> touched(nbrs.begin(), nbrs.end());
    for (const Vertex u : nbrs) {
      for (const Vertex w : adj[static_cast<std::size_t>(u)]) touched.insert(w);
    }
    for (const Vertex u : touched) {
      if (eliminated[static_cast<std::size_t>(u)]) continue;
      queue.erase(key_of[static_cast<std::size_t>(u)]);
      key_of[static_cast<std::size_t>(u)] = {fill_of(u), adj[static_cast<std::size_t>(u)].size(), u};
      queue.insert(key_of[static_cast<std::size_t>(u)]);
    }
  }
  return order;
}

TreeDecomposition heuristic_decompose(const Graph& g) {
  const auto order = min_fill_order(g);
  return decomposition_from_order(g, order);
}

}  // namespace bcast
