#pragma once

#include <string>
#include <string_view>

#include "bcast/broadcast.hpp"
#include "bcast/graph.hpp"

namespace bcast {

// Graph files:
//   c <comment>
//   p bcast <n> <m>
//   e <u> <v> [<w>]        (1-based ids, w defaults to 1)
// Vertex i in a file is vertex i-1 internally.

/// Parses and validates the structure only (no all-pairs distances).
Graph parse_graph_structure(std::string_view text);

/// Parses, validates and precomputes distances, eccentricities and diameter.
WeightedGraph parse_graph(std::string_view text);

/// Weights are omitted for unit-weight graphs.
std::string write_graph(const Graph& g, std::string_view comment = {});

// Witness files: one "v <vertex> <value>" line per broadcaster, then
// "value <total>".

Broadcast parse_broadcast(std::string_view text, int order);
std::string write_broadcast(const Broadcast& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace bcast
