#pragma once

#include <cstdint>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/graph.hpp"
#include "bcast/nice.hpp"

namespace bcast {

/// One reachable signature of a node. `left`/`right` are the child keys the
/// best value came from (right only at joins); `decision` is the value given
/// to the forgotten vertex at a forget node, 0 for "silent".
struct TableEntry {
  std::uint64_t key = 0;
  Dist value = 0;
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  Dist decision = 0;
};

/// Sparse table sorted by key. Absent keys stand for minus infinity.
using Table = std::vector<TableEntry>;

const TableEntry* find_entry(const Table& table, std::uint64_t key);

struct DpOptions {
  int threads = 1;
  bool keep_tables = false;
};

struct Solution {
  Dist value = 0;
  Broadcast witness;
};

struct DpResult {
  Solution solution;
  std::vector<Table> tables;  // per nice node, only filled with keep_tables
};

}  // namespace bcast
