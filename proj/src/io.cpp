#include "bcast/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

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

std::string where(int line_no) { return "line " + std::to_string(line_no) + ": "; }

Dist to_int(std::string_view token, int line_no) {
  Dist value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::MalformedLine,
                where(line_no) + "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    auto tokens = split_ws(line);
    if (!tokens.empty() && tokens[0] != "c") fn(tokens, line_no);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace

Graph parse_graph_structure(std::string_view text) {
  bool have_header = false;
  Dist n = 0;
  Dist m = 0;
  std::vector<Edge> edges;
  for_each_line(text, [&](const std::vector<std::string_view>& t, int line_no) {
    if (t[0] == "p") {
      if (have_header) throw Error(ErrorCode::DuplicateHeader, where(line_no) + "second header");
      if (t.size() != 4 || t[1] != "bcast") {
        throw Error(ErrorCode::MalformedLine, where(line_no) + "expected 'p bcast <n> <m>'");
      }
      n = to_int(t[2], line_no);
      m = to_int(t[3], line_no);
      if (n < 1) throw Error(ErrorCode::EmptyGraph, where(line_no) + "vertex count must be >= 1");
      if (m < 0) throw Error(ErrorCode::MalformedLine, where(line_no) + "negative edge count");
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
      return;
    }
    if (t[0] != "e") {
      throw Error(ErrorCode::MalformedLine,
                  where(line_no) + "unknown line type '" + std::string(t[0]) + "'");
    }
    if (!have_header) throw Error(ErrorCode::MissingHeader, where(line_no) + "edge before header");
    if (t.size() != 3 && t.size() != 4) {
      throw Error(ErrorCode::MalformedLine, where(line_no) + "expected 'e <u> <v> [<w>]'");
    }
    const Dist u = to_int(t[1], line_no);
    const Dist v = to_int(t[2], line_no);
    const Dist w = t.size() == 4 ? to_int(t[3], line_no) : 1;
    if (u < 1 || u > n || v < 1 || v > n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  where(line_no) + "vertex outside 1.." + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, where(line_no) + "self-loop at " + std::to_string(u));
    if (w < 1) throw Error(ErrorCode::BadWeight, where(line_no) + "weight must be >= 1");
    edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), w});
  });
  if (!have_header) throw Error(ErrorCode::MissingHeader, "no 'p bcast <n> <m>' header");
  if (static_cast<Dist>(edges.size()) != m) {
    throw Error(ErrorCode::EdgeCountMismatch, "header announces " + std::to_string(m) +
                                                  " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

WeightedGraph parse_graph(std::string_view text) {
  return WeightedGraph(parse_graph_structure(text));
}

std::string write_graph(const Graph& g, std::string_view comment) {
  std::string out;
  out.reserve(static_cast<std::size_t>(g.size()) * 16 + 32);
  if (!comment.empty()) out.append("c ").append(comment).append("\n");
  out.append("p bcast ")
      .append(std::to_string(g.order()))
      .append(" ")
      .append(std::to_string(g.size()))
      .append("\n");
  const bool weighted = !g.unit_weight();
  for (const Edge& e : g.edges()) {
    out.append("e ").append(std::to_string(e.u + 1)).append(" ").append(std::to_string(e.v + 1));
    if (weighted) out.append(" ").append(std::to_string(e.weight));
    out.push_back('\n');
  }
  return out;
}

Broadcast parse_broadcast(std::string_view text, int order) {
  Broadcast f(order);
  std::vector<char> seen(static_cast<std::size_t>(order), 0);
  bool have_total = false;
  Dist total = 0;
  for_each_line(text, [&](const std::vector<std::string_view>& t, int line_no) {
    if (have_total) {
      throw Error(ErrorCode::MalformedLine, where(line_no) + "content after the 'value' line");
    }
    if (t[0] == "value" && t.size() == 2) {
      total = to_int(t[1], line_no);
      have_total = true;
      return;
    }
    if (t[0] != "v" || t.size() != 3) {
      throw Error(ErrorCode::MalformedLine, where(line_no) + "expected 'v <vertex> <value>'");
    }
    const Dist v = to_int(t[1], line_no);
    const Dist value = to_int(t[2], line_no);
    if (v < 1 || v > order) {
      throw Error(ErrorCode::VertexOutOfRange,
                  where(line_no) + "vertex outside 1.." + std::to_string(order));
    }
    if (value < 0) throw Error(ErrorCode::InvalidBroadcast, where(line_no) + "negative value");
    if (seen[static_cast<std::size_t>(v - 1)]++) {
      throw Error(ErrorCode::InvalidBroadcast,
                  where(line_no) + "vertex " + std::to_string(v) + " listed twice");
    }
    f.set(static_cast<Vertex>(v - 1), value);
  });
  if (!have_total) throw Error(ErrorCode::MalformedLine, "missing final 'value <total>' line");
  if (total != f.value()) {
    throw Error(ErrorCode::InvalidBroadcast, "declared value " + std::to_string(total) +
                                                 " but entries sum to " +
                                                 std::to_string(f.value()));
  }
  return f;
}

std::string write_broadcast(const Broadcast& f) {
  std::string out;
  for (const Vertex v : f.broadcasters()) {
    out.append("v ").append(std::to_string(v + 1)).append(" ").append(std::to_string(f[v]));
    out.push_back('\n');
  }
  out.append("value ").append(std::to_string(f.value())).append("\n");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace bcast
