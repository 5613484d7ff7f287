#include "bcast/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <tuple>

#include "bcast/error.hpp"

namespace bcast {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
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

long long to_int(std::string_view token, int line_no) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::MalformedLine,
                "line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

class Builder {
 public:
  Vertex add(std::string role) {
    roles_.push_back(std::move(role));
    return static_cast<Vertex>(roles_.size()) - 1;
  }
  /// Repeated pairs are dropped; they only arise when two subdivided edges
  /// both route through s.
  void edge(Vertex u, Vertex v, Dist w) {
    if (seen_.insert({std::min(u, v), std::max(u, v)}).second) edges_.push_back({u, v, w});
  }

  int order() const { return static_cast<int>(roles_.size()); }
  std::vector<std::string> take_roles() { return std::move(roles_); }
  std::vector<Edge> take_edges() { return std::move(edges_); }

 private:
  std::vector<std::string> roles_;
  std::vector<Edge> edges_;
  std::set<std::pair<Vertex, Vertex>> seen_;
};

Dist scaled(Dist value, double scale) {
  return std::max<Dist>(1, static_cast<Dist>(std::llround(static_cast<double>(value) * scale)));
}

void check_scale(const GenOptions& options) {
  if (!(options.scale > 0.0) || options.scale > 1.0) {
    throw Error(ErrorCode::ParameterOutOfRange, "scale must lie in (0, 1]");
  }
}

void check_size(long double vertices, const GenOptions& options) {
  if (vertices > static_cast<long double>(options.max_vertices)) {
    throw Error(ErrorCode::InstanceTooLarge,
                "instance would have about " + std::to_string(static_cast<long long>(vertices)) +
                    " vertices (limit " + std::to_string(options.max_vertices) + "); try --scale");
  }
}

std::string pair_role(std::string_view tag, int i, int j) {
  return std::string(tag) + " " + std::to_string(i) + " " + std::to_string(j);
}

/// Layout shared by both clique reductions: per class l_i, v_i^1..v_i^n, r_i;
/// then per pair c_ij followed by one v_e per edge of E_ij; then s and the
/// pendant gadget vertices f_1..f_a.
struct CliqueLayout {
  std::vector<Vertex> l, r;
  std::vector<std::vector<Vertex>> v;  // v[i][j], 0-based indices
  std::vector<std::vector<Vertex>> c;  // c[i][j] for i < j
  std::vector<Vertex> edge_vertex;     // parallel to inst.edges
  Vertex s = -1;
  Vertex first_f = -1;
};

CliqueLayout lay_out(Builder& builder, const MulticoloredCliqueInstance& inst, Dist a) {
  CliqueLayout out;
  const auto k = static_cast<std::size_t>(inst.k);
  out.l.resize(k);
  out.r.resize(k);
  out.v.assign(k, std::vector<Vertex>(static_cast<std::size_t>(inst.n)));
  out.c.assign(k, std::vector<Vertex>(k, -1));
  for (int i = 1; i <= inst.k; ++i) {
    const auto ii = static_cast<std::size_t>(i - 1);
    out.l[ii] = builder.add("l " + std::to_string(i));
    for (int j = 1; j <= inst.n; ++j) out.v[ii][static_cast<std::size_t>(j - 1)] = builder.add(pair_role("v", i, j));
    out.r[ii] = builder.add("r " + std::to_string(i));
  }
  out.edge_vertex.resize(inst.edges.size());
  for (int i = 1; i <= inst.k; ++i) {
    for (int j = i + 1; j <= inst.k; ++j) {
      out.c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = builder.add(pair_role("c", i, j));
      for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        const auto& ed = inst.edges[e];
        if (ed.i != i || ed.j != j) continue;
        out.edge_vertex[e] = builder.add("e " + std::to_string(ed.i) + " " + std::to_string(ed.a) + " " +
                                         std::to_string(ed.j) + " " + std::to_string(ed.b));
      }
    }
  }
  out.s = builder.add("s");
  for (Dist x = 1; x <= a; ++x) {
    const Vertex f = builder.add("f " + std::to_string(x));
    if (x == 1) out.first_f = f;
  }
  return out;
}

long double clique_vertex_count(const MulticoloredCliqueInstance& inst, Dist a) {
  return static_cast<long double>(inst.k) * (inst.n + 2) + inst.k * (inst.k - 1) / 2 +
         static_cast<long double>(inst.edges.size()) + 1 + static_cast<long double>(a);
}

std::vector<Vertex> clique_cover(const CliqueLayout& lay, int k) {
  std::vector<Vertex> cover{lay.s};
  for (int i = 0; i < k; ++i) {
    cover.push_back(lay.l[static_cast<std::size_t>(i)]);
    cover.push_back(lay.r[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < k; ++j) cover.push_back(lay.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

/// Edge-gadget vertices of the planted clique, one per pair i < j.
std::vector<Vertex> clique_edge_vertices(const MulticoloredCliqueInstance& inst, const CliqueLayout& lay) {
  std::vector<Vertex> out;
  const auto& m = *inst.planted;
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    const auto& ed = inst.edges[e];
    if (m[static_cast<std::size_t>(ed.i - 1)] == ed.a && m[static_cast<std::size_t>(ed.j - 1)] == ed.b) {
      out.push_back(lay.edge_vertex[e]);
    }
  }
  return out;
}

}  // namespace

Dist ReductionInstance::constant(std::string_view name) const {
  for (const auto& [key, value] : constants) {
    if (key == name) return value;
  }
  throw Error(ErrorCode::InvalidInstance, "no constant named '" + std::string(name) + "'");
}

Vertex ReductionInstance::vertex_with_role(std::string_view role) const {
  for (std::size_t v = 0; v < roles.size(); ++v) {
    if (roles[v] == role) return static_cast<Vertex>(v);
  }
  throw Error(ErrorCode::InvalidInstance, "no vertex with role '" + std::string(role) + "'");
}

MulticoloredCliqueInstance parse_mcc(std::string_view text) {
  MulticoloredCliqueInstance inst;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto t = split_ws(line);
    if (t.empty() || t[0] == "c") continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (t[0] == "p") {
      if (have_header) throw Error(ErrorCode::DuplicateHeader, where + "second header");
      if (t.size() != 4 || t[1] != "mcc") throw Error(ErrorCode::MalformedLine, where + "expected 'p mcc <k> <n>'");
      inst.k = static_cast<int>(to_int(t[2], line_no));
      inst.n = static_cast<int>(to_int(t[3], line_no));
      if (inst.k < 2 || inst.n < 1) throw Error(ErrorCode::InvalidInstance, where + "need k >= 2 and n >= 1");
      if (inst.n % 2 != 0) {
        throw Error(ErrorCode::InvalidInstance, where + "class size n must be even (pad with a dummy vertex)");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw Error(ErrorCode::MissingHeader, where + "content before 'p mcc' header");
    if (t[0] == "e") {
      if (t.size() != 5) throw Error(ErrorCode::MalformedLine, where + "expected 'e <i> <a> <j> <b>'");
      CliqueEdge e{static_cast<int>(to_int(t[1], line_no)), static_cast<int>(to_int(t[2], line_no)),
                   static_cast<int>(to_int(t[3], line_no)), static_cast<int>(to_int(t[4], line_no))};
      if (e.i < 1 || e.i > inst.k || e.j < 1 || e.j > inst.k || e.a < 1 || e.a > inst.n || e.b < 1 || e.b > inst.n) {
        throw Error(ErrorCode::VertexOutOfRange, where + "class or index out of range");
      }
      if (e.i == e.j) {
        throw Error(ErrorCode::InvalidInstance, where + "edge inside class " + std::to_string(e.i) +
                                                    ": classes must be independent");
      }
      if (e.i > e.j) e = {e.j, e.b, e.i, e.a};
      inst.edges.push_back(e);
      continue;
    }
    if (t[0] == "w") {
      if (inst.planted) throw Error(ErrorCode::MalformedLine, where + "second 'w' line");
      if (static_cast<int>(t.size()) != inst.k + 1) {
        throw Error(ErrorCode::MalformedLine, where + "'w' needs one index per class");
      }
      std::vector<int> m;
      for (std::size_t i = 1; i < t.size(); ++i) {
        const auto value = to_int(t[i], line_no);
        if (value < 1 || value > inst.n) throw Error(ErrorCode::VertexOutOfRange, where + "planted index out of range");
        m.push_back(static_cast<int>(value));
      }
      inst.planted = std::move(m);
      continue;
    }
    throw Error(ErrorCode::MalformedLine, where + "unknown line type '" + std::string(t[0]) + "'");
  }
  if (!have_header) throw Error(ErrorCode::MissingHeader, "no 'p mcc <k> <n>' header");
  const auto key = [](const CliqueEdge& e) { return std::tie(e.i, e.j, e.a, e.b); };
  std::sort(inst.edges.begin(), inst.edges.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
  for (std::size_t e = 1; e < inst.edges.size(); ++e) {
    if (key(inst.edges[e]) == key(inst.edges[e - 1])) throw Error(ErrorCode::DuplicateEdge, "duplicate clique edge");
  }
  if (inst.planted) {
    const auto& m = *inst.planted;
    for (int i = 1; i <= inst.k; ++i) {
      for (int j = i + 1; j <= inst.k; ++j) {
        const CliqueEdge want{i, m[static_cast<std::size_t>(i - 1)], j, m[static_cast<std::size_t>(j - 1)]};
        const bool found = std::binary_search(inst.edges.begin(), inst.edges.end(), want,
                                              [&](const auto& x, const auto& y) { return key(x) < key(y); });
        if (!found) {
          throw Error(ErrorCode::InvalidInstance, "planted set is not a clique: v_" + std::to_string(i) + "^" +
                                                      std::to_string(want.a) + " and v_" + std::to_string(j) + "^" +
                                                      std::to_string(want.b) + " are not adjacent");
        }
      }
    }
  }
  return inst;
}

ReductionInstance gen_wbi_from_clique(const MulticoloredCliqueInstance& inst, const GenOptions& options) {
  check_scale(options);
  if (inst.n % 2 != 0) throw Error(ErrorCode::InvalidInstance, "class size n must be even");
  const Dist k = inst.k;
  const Dist n = inst.n;
  const Dist full_b = 6 * n * n * n * k * k;
  const Dist full_a = 13 * k * k * n * n * n * full_b;
  const Dist b = options.scale == 1.0 ? full_b : scaled(full_b, options.scale);
  const Dist a = options.scale == 1.0 ? full_a : scaled(full_a, options.scale);
  const Dist alpha = b + n + 2;
  check_size(clique_vertex_count(inst, a), options);

  Builder builder;
  const auto lay = lay_out(builder, inst, a);
  for (int i = 0; i < inst.k; ++i) {
    for (Dist j = 1; j <= n; ++j) {
      const Vertex v = lay.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      builder.edge(lay.l[static_cast<std::size_t>(i)], v, 2 * j);
      builder.edge(v, lay.r[static_cast<std::size_t>(i)], 2 * n + 2 - 2 * j);
    }
    builder.edge(lay.s, lay.l[static_cast<std::size_t>(i)], alpha - 2);
    builder.edge(lay.s, lay.r[static_cast<std::size_t>(i)], alpha - 2);
    for (int j = i + 1; j < inst.k; ++j) {
      builder.edge(lay.s, lay.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], alpha - 2);
    }
  }
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    const auto& ed = inst.edges[e];
    const Vertex ve = lay.edge_vertex[e];
    const auto i = static_cast<std::size_t>(ed.i - 1);
    const auto j = static_cast<std::size_t>(ed.j - 1);
    builder.edge(ve, lay.c[i][j], n);
    builder.edge(ve, lay.l[i], 2 * b + 2 * n + 2 - 2 * ed.a);
    builder.edge(ve, lay.r[i], 2 * b + 2 * ed.a);
    builder.edge(ve, lay.l[j], 2 * b + 2 * n + 2 - 2 * ed.b);
    builder.edge(ve, lay.r[j], 2 * b + 2 * ed.b);
  }
  for (Dist x = 0; x < a; ++x) builder.edge(lay.first_f + static_cast<Vertex>(x), lay.s, alpha);

  ReductionInstance out;
  out.reduction = "wbi-clique";
  out.problem = Problem::Independence;
  const int order = builder.order();
  out.roles = builder.take_roles();
  out.graph = Graph(order, builder.take_edges());
  out.target = a * (2 * alpha - 1) + (k + k * (k - 1) / 2) * (2 * b + 2 * n + 1);
  out.constants = {{"k", k}, {"n", n}, {"b", b}, {"a", a}, {"alpha", alpha}};
  out.cover = clique_cover(lay, inst.k);
  out.scaled = options.scale != 1.0;
  out.diameter_bound = 2 * b + 4 * n + 2;
  if (inst.planted) {
    Broadcast f(order);
    for (Dist x = 0; x < a; ++x) f.set(lay.first_f + static_cast<Vertex>(x), 2 * alpha - 1);
    for (int i = 0; i < inst.k; ++i) {
      const int m = (*inst.planted)[static_cast<std::size_t>(i)];
      f.set(lay.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(m - 1)], 2 * b + 2 * n + 1);
    }
    for (const Vertex ve : clique_edge_vertices(inst, lay)) f.set(ve, 2 * b + 2 * n + 1);
    out.witness = std::move(f);
  }
  return out;
}

ReductionInstance gen_wbp_from_clique(const MulticoloredCliqueInstance& inst, const GenOptions& options) {
  check_scale(options);
  if (inst.n % 2 != 0) throw Error(ErrorCode::InvalidInstance, "class size n must be even");
  const Dist k = inst.k;
  const Dist n = inst.n;
  const Dist full_b = 5 * k * k * n * n * n;
  const Dist full_a = 11 * k * k * n * n * n * full_b;
  const Dist b = options.scale == 1.0 ? full_b : scaled(full_b, options.scale);
  const Dist a = options.scale == 1.0 ? full_a : scaled(full_a, options.scale);
  check_size(clique_vertex_count(inst, a), options);

  Builder builder;
  const auto lay = lay_out(builder, inst, a);
  for (int i = 0; i < inst.k; ++i) {
    for (Dist j = 1; j <= n; ++j) {
      const Vertex v = lay.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      builder.edge(lay.l[static_cast<std::size_t>(i)], v, j + 1);
      builder.edge(v, lay.r[static_cast<std::size_t>(i)], n + 2 - j);
      builder.edge(lay.s, v, b + n + 1);
    }
    builder.edge(lay.s, lay.l[static_cast<std::size_t>(i)], b + n);
    builder.edge(lay.s, lay.r[static_cast<std::size_t>(i)], b + n);
    for (int j = i + 1; j < inst.k; ++j) {
      builder.edge(lay.s, lay.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], b + n - 1);
    }
  }
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    const auto& ed = inst.edges[e];
    const Vertex ve = lay.edge_vertex[e];
    const auto i = static_cast<std::size_t>(ed.i - 1);
    const auto j = static_cast<std::size_t>(ed.j - 1);
    builder.edge(ve, lay.c[i][j], n / 2);
    builder.edge(ve, lay.l[i], 2 * b + 2 * n - ed.a);
    builder.edge(ve, lay.r[i], 2 * b + n + ed.a - 1);
    builder.edge(ve, lay.l[j], 2 * b + 2 * n - ed.b);
    builder.edge(ve, lay.r[j], 2 * b + n + ed.b - 1);
    builder.edge(lay.s, ve, b + n + 1);
  }
  for (Dist x = 0; x < a; ++x) builder.edge(lay.first_f + static_cast<Vertex>(x), lay.s, 2);

  ReductionInstance out;
  out.reduction = "wbp-clique";
  out.problem = Problem::Packing;
  const int order = builder.order();
  out.roles = builder.take_roles();
  out.graph = Graph(order, builder.take_edges());
  out.target = a + 1 + (k + k * (k - 1) / 2) * (b + n);
  out.constants = {{"k", k}, {"n", n}, {"b", b}, {"a", a}};
  out.cover = clique_cover(lay, inst.k);
  out.scaled = options.scale != 1.0;
  out.diameter_bound = 2 * b + 2 * n + 2;
  if (inst.planted) {
    Broadcast f(order);
    for (Dist x = 0; x < a; ++x) f.set(lay.first_f + static_cast<Vertex>(x), x == 0 ? 2 : 1);
    for (int i = 0; i < inst.k; ++i) {
      const int m = (*inst.planted)[static_cast<std::size_t>(i)];
      f.set(lay.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(m - 1)], b + n);
    }
    for (const Vertex ve : clique_edge_vertices(inst, lay)) f.set(ve, b + n);
    out.witness = std::move(f);
  }
  return out;
}

ReductionInstance gen_bi_from_wbi(const WeightedGraph& g1, Dist m1, const std::optional<Broadcast>& witness,
                                  bool drop_long_edges, const GenOptions& options) {
  check_scale(options);
  const Dist diam = g1.diameter();
  const Graph& src = g1.graph();
  if (src.order() < 2) throw Error(ErrorCode::InvalidInstance, "input graph needs at least two vertices");
  std::vector<Edge> kept;
  for (const Edge& e : src.edges()) {
    if (e.weight % 2 != 0) {
      throw Error(ErrorCode::BadWeight, "edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                                            "} has odd weight " + std::to_string(e.weight));
    }
    if (e.weight > diam) {
      if (!drop_long_edges) {
        throw Error(ErrorCode::BadWeight, "edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                                              "} is heavier than the diameter " + std::to_string(diam) +
                                              " (use the normalize option to drop it)");
      }
      continue;  // never on a shortest path, distances are unchanged
    }
    kept.push_back(e);
  }
  if (m1 <= diam) {
    throw Error(ErrorCode::InvalidInstance, "target M1 = " + std::to_string(m1) + " must exceed the diameter " +
                                                std::to_string(diam));
  }
  if (witness) {
    if (witness->order() != src.order()) throw Error(ErrorCode::InvalidBroadcast, "witness size differs from graph");
    if (const auto bad = find_violation(g1, *witness, Problem::Independence, Ceiling::Relaxed)) {
      throw Error(ErrorCode::InvalidBroadcast, "input witness is not independent: " + bad->describe());
    }
    if (witness->value() < m1) {
      throw Error(ErrorCode::InvalidBroadcast, "input witness has value " + std::to_string(witness->value()) +
                                                   " < M1 = " + std::to_string(m1));
    }
  }
  const Dist n = src.order();
  const Dist full_a = 3 * n * n * diam * diam;
  const Dist a = options.scale == 1.0 ? full_a : scaled(full_a, options.scale);
  const Dist half = diam / 2;
  long double count = static_cast<long double>(n) + 1 + static_cast<long double>(a) * static_cast<long double>(half);
  for (const Edge& e : kept) count += static_cast<long double>(e.weight - 1 + std::max<Dist>(0, (diam - e.weight) / 2 - 1));
  check_size(count, options);

  Builder builder;
  for (Vertex v = 0; v < src.order(); ++v) builder.add("o " + std::to_string(v + 1));
  const Vertex s = builder.add("s");
  std::vector<Vertex> path;
  for (std::size_t idx = 0; idx < kept.size(); ++idx) {
    const Edge& e = kept[idx];
    const auto tag = std::to_string(idx + 1);
    const Dist mid = e.weight / 2;
    const Dist spoke = (diam - e.weight) / 2;
    path.assign(1, e.u);
    for (Dist i = 1; i < e.weight; ++i) {
      path.push_back(i == mid && spoke == 0 ? s : builder.add("p " + tag + " " + std::to_string(i)));
    }
    path.push_back(e.v);
    for (std::size_t i = 1; i < path.size(); ++i) builder.edge(path[i - 1], path[i], 1);
    if (spoke > 0) {
      Vertex prev = s;
      for (Dist i = 1; i < spoke; ++i) {
        const Vertex q = builder.add("q " + tag + " " + std::to_string(i));
        builder.edge(prev, q, 1);
        prev = q;
      }
      builder.edge(prev, path[static_cast<std::size_t>(mid)], 1);
    }
  }
  std::vector<Vertex> f_vertices;
  for (Dist x = 1; x <= a; ++x) {
    const auto tag = std::to_string(x);
    Vertex prev = builder.add("f " + tag);
    f_vertices.push_back(prev);
    for (Dist i = 1; i < half; ++i) {
      const Vertex next = builder.add("fp " + tag + " " + std::to_string(i));
      builder.edge(prev, next, 1);
      prev = next;
    }
    builder.edge(prev, s, 1);
  }

  ReductionInstance out;
  out.reduction = "bi-wbi";
  out.problem = Problem::Independence;
  const int order = builder.order();
  out.roles = builder.take_roles();
  out.graph = Graph(order, builder.take_edges());
  out.target = a * (diam - 1) + m1;
  out.constants = {{"n", n}, {"diam", diam}, {"a", a}, {"m1", m1}};
  out.scaled = options.scale != 1.0;
  out.diameter_bound = diam;
  // Complement of a greedy maximal independent set covers every edge of g1;
  // with s added, deleting it cuts the output into trees.
  std::vector<char> independent(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < src.order(); ++v) {
    bool free = true;
    for (const Arc& arc : src.neighbors(v)) free = free && !independent[static_cast<std::size_t>(arc.to)];
    independent[static_cast<std::size_t>(v)] = free;
  }
  for (Vertex v = 0; v < src.order(); ++v) {
    if (!independent[static_cast<std::size_t>(v)]) out.cover.push_back(v);
  }
  out.cover.push_back(s);
  out.cover_kind = "forest-cut";
  if (witness) {
    Broadcast f(order);
    for (Vertex v = 0; v < src.order(); ++v) f.set(v, (*witness)[v]);
    for (const Vertex fx : f_vertices) f.set(fx, diam - 1);
    out.witness = std::move(f);
  }
  return out;
}

std::string write_meta(const ReductionInstance& inst) {
  std::string out = "reduction " + inst.reduction + "\n";
  out += "problem " + std::string(to_string(inst.problem)) + "\n";
  out += "scaled " + std::string(inst.scaled ? "1" : "0") + "\n";
  for (const auto& [name, value] : inst.constants) out += "const " + name + " " + std::to_string(value) + "\n";
  out += "target " + std::to_string(inst.target) + "\n";
  if (inst.diameter_bound) out += "diameter-bound " + std::to_string(*inst.diameter_bound) + "\n";
  out += inst.cover_kind;
  for (const Vertex v : inst.cover) out += " " + std::to_string(v + 1);
  out += "\n";
  for (std::size_t v = 0; v < inst.roles.size(); ++v) {
    out += "role " + std::to_string(v + 1) + " " + inst.roles[v] + "\n";
  }
  return out;
}

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& cover) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (const Vertex v : cover) in[static_cast<std::size_t>(v)] = 1;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return in[static_cast<std::size_t>(e.u)] || in[static_cast<std::size_t>(e.v)];
  });
}

bool is_forest_after_removal(const Graph& g, const std::vector<Vertex>& removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (const Vertex v : removed) gone[static_cast<std::size_t>(v)] = 1;
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) parent[static_cast<std::size_t>(i)] = i;
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (gone[static_cast<std::size_t>(e.u)] || gone[static_cast<std::size_t>(e.v)]) continue;
    const int ru = find(e.u);
    const int rv = find(e.v);
    if (ru == rv) return false;
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  return true;
}

}  // namespace bcast
