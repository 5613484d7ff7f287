#include "bcast/dp.hpp"

#include <algorithm>

namespace bcast {

const TableEntry* find_entry(const Table& table, std::uint64_t key) {
  const auto it = std::lower_bound(table.begin(), table.end(), key,
                                   [](const TableEntry& e, std::uint64_t k) { return e.key < k; });
  return it != table.end() && it->key == key ? &*it : nullptr;
}

}  // namespace bcast
