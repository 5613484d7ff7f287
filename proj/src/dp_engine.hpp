#pragma once

// Table engine shared by the independence and packing DPs. A policy supplies
// the signature semantics over flat digit arrays (kDigits digits per bag
// vertex, bag sorted by id, first vertex most significant); the engine owns
// encoding, tie-breaking, scheduling and witness reconstruction.

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "bcast/dp.hpp"
#include "bcast/error.hpp"

namespace bcast::detail {

inline void check_key_capacity(Dist radix, std::size_t digits) {
  unsigned __int128 span = 1;
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 64;
  for (std::size_t i = 0; i < digits; ++i) {
    span *= static_cast<unsigned __int128>(radix);
    if (span > limit) {
      throw Error(ErrorCode::SignatureOverflow,
                  "signature of " + std::to_string(digits) + " digits in base " + std::to_string(radix) +
                      " does not fit a 64-bit key; lower p or use a narrower decomposition");
    }
  }
}

inline std::uint64_t encode_digits(const Dist* digits, std::size_t count, Dist radix) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < count; ++i) {
    key = key * static_cast<std::uint64_t>(radix) + static_cast<std::uint64_t>(digits[i]);
  }
  return key;
}

inline void decode_digits(std::uint64_t key, std::size_t count, Dist radix, Dist* out) {
  for (std::size_t i = count; i-- > 0;) {
    out[i] = static_cast<Dist>(key % static_cast<std::uint64_t>(radix));
    key /= static_cast<std::uint64_t>(radix);
  }
}

inline bool better(const TableEntry& a, const TableEntry& b) {
  if (a.value != b.value) return a.value > b.value;
  return std::tie(a.left, a.right, a.decision) < std::tie(b.left, b.right, b.decision);
}

class Collector {
 public:
  void offer(const TableEntry& e) {
    const auto [it, inserted] = best_.try_emplace(e.key, e);
    if (!inserted && better(e, it->second)) it->second = e;
  }

  Table finish() {
    Table out;
    out.reserve(best_.size());
    for (const auto& [key, e] : best_) out.push_back(e);
    std::sort(out.begin(), out.end(), [](const TableEntry& a, const TableEntry& b) { return a.key < b.key; });
    return out;
  }

 private:
  std::unordered_map<std::uint64_t, TableEntry> best_;
};

inline std::vector<Dist> decode_table(const Table& table, std::size_t digits, Dist radix) {
  std::vector<Dist> flat(table.size() * digits);
  for (std::size_t i = 0; i < table.size(); ++i) decode_digits(table[i].key, digits, radix, flat.data() + i * digits);
  return flat;
}

template <class Policy>
Table leaf(const Policy&) {
  return Table{TableEntry{}};
}

template <class Policy>
Table introduce(const Policy& pol, const Table& child, const std::vector<Vertex>& child_bag, Vertex v) {
  constexpr std::size_t D = Policy::kDigits;
  const Dist radix = pol.radix();
  check_key_capacity(radix, (child_bag.size() + 1) * D);
  const auto pos = static_cast<std::size_t>(std::lower_bound(child_bag.begin(), child_bag.end(), v) - child_bag.begin());
  const std::size_t k = child_bag.size();
  std::vector<Dist> in(k * D);
  std::vector<Dist> out((k + 1) * D);
  Table result;
  result.reserve(child.size());
  for (const TableEntry& e : child) {
    decode_digits(e.key, k * D, radix, in.data());
    std::copy(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(pos * D), out.begin());
    pol.introduce(child_bag, in.data(), v, out.data() + pos * D);
    std::copy(in.begin() + static_cast<std::ptrdiff_t>(pos * D), in.end(),
              out.begin() + static_cast<std::ptrdiff_t>((pos + 1) * D));
    result.push_back(TableEntry{encode_digits(out.data(), out.size(), radix), e.value, e.key, 0, 0});
  }
  std::sort(result.begin(), result.end(), [](const TableEntry& a, const TableEntry& b) { return a.key < b.key; });
  return result;
}

template <class Policy>
Table forget(const Policy& pol, const Table& child, const std::vector<Vertex>& child_bag, Vertex v) {
  constexpr std::size_t D = Policy::kDigits;
  const Dist radix = pol.radix();
  const auto pos = static_cast<std::size_t>(std::lower_bound(child_bag.begin(), child_bag.end(), v) - child_bag.begin());
  if (pos == child_bag.size() || child_bag[pos] != v) {
    throw Error(ErrorCode::InvalidNiceDecomposition, "forgotten vertex missing from the child bag");
  }
  const std::size_t k = child_bag.size();
  std::vector<Dist> in(k * D);
  std::vector<Dist> out((k - 1) * D);
  Collector collector;
  for (const TableEntry& e : child) {
    decode_digits(e.key, k * D, radix, in.data());
    std::copy(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(pos * D), out.begin());
    std::copy(in.begin() + static_cast<std::ptrdiff_t>((pos + 1) * D), in.end(),
              out.begin() + static_cast<std::ptrdiff_t>(pos * D));
    collector.offer(TableEntry{encode_digits(out.data(), out.size(), radix), e.value, e.key, 0, 0});
    pol.broadcast_branches(child_bag, in.data(), pos, out.data(), [&](Dist l, const Dist* digits) {
      collector.offer(TableEntry{encode_digits(digits, out.size(), radix), e.value + l, e.key, 0, l});
    });
  }
  return collector.finish();
}

template <class Policy>
Table join(const Policy& pol, const Table& left, const Table& right, std::size_t bag_size) {
  constexpr std::size_t D = Policy::kDigits;
  const Dist radix = pol.radix();
  const std::size_t width = bag_size * D;
  const auto a = decode_table(left, width, radix);
  const auto b = decode_table(right, width, radix);
  std::vector<Dist> merged(width);
  Collector collector;
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (!pol.join(a.data() + i * width, b.data() + j * width, bag_size, merged.data())) continue;
      collector.offer(TableEntry{encode_digits(merged.data(), width, radix), left[i].value + right[j].value,
                                 left[i].key, right[j].key, 0});
    }
  }
  return collector.finish();
}

template <class Policy>
Table node_table(const Policy& pol, const NiceTreeDecomposition& ntd, int index, const std::vector<Table>& tables) {
  const NiceNode& x = ntd.nodes[static_cast<std::size_t>(index)];
  const auto child = [&](std::size_t i) -> const Table& { return tables[static_cast<std::size_t>(x.children[i])]; };
  const auto child_bag = [&](std::size_t i) -> const std::vector<Vertex>& {
    return ntd.nodes[static_cast<std::size_t>(x.children[i])].bag;
  };
  switch (x.kind) {
    case NodeKind::Leaf: return leaf(pol);
    case NodeKind::Introduce: return introduce(pol, child(0), child_bag(0), x.vertex);
    case NodeKind::Forget: return forget(pol, child(0), child_bag(0), x.vertex);
    case NodeKind::Join: return join(pol, child(0), child(1), x.bag.size());
  }
  return {};
}

/// Children-first node order makes index order a valid sequential schedule.
/// With more threads, a node becomes ready once all of its children are done;
/// each table is a pure function of its children, so results do not depend
/// on the schedule.
template <class Policy>
std::vector<Table> all_tables(const Policy& pol, const NiceTreeDecomposition& ntd, int threads) {
  const std::size_t count = ntd.nodes.size();
  std::vector<Table> tables(count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) tables[i] = node_table(pol, ntd, static_cast<int>(i), tables);
    return tables;
  }
  std::vector<int> parent(count, -1);
  std::vector<int> pending(count, 0);
  std::deque<int> ready;
  for (std::size_t i = 0; i < count; ++i) {
    pending[i] = static_cast<int>(ntd.nodes[i].children.size());
    for (const int c : ntd.nodes[i].children) parent[static_cast<std::size_t>(c)] = static_cast<int>(i);
    if (pending[i] == 0) ready.push_back(static_cast<int>(i));
  }
  std::mutex mutex;
  std::condition_variable cv;
  std::size_t done = 0;
  std::exception_ptr failure;
  const auto worker = [&] {
    std::unique_lock lock(mutex);
    while (true) {
      cv.wait(lock, [&] { return !ready.empty() || done == count || failure; });
      if (done == count || failure) return;
      const int node = ready.front();
      ready.pop_front();
      lock.unlock();
      Table table;
      std::exception_ptr error;
      try {
        table = node_table(pol, ntd, node, tables);
      } catch (...) {
        error = std::current_exception();
      }
      lock.lock();
      if (error) {
        failure = error;
        cv.notify_all();
        return;
      }
      tables[static_cast<std::size_t>(node)] = std::move(table);
      ++done;
      const int up = parent[static_cast<std::size_t>(node)];
      if (up != -1 && --pending[static_cast<std::size_t>(up)] == 0) ready.push_back(up);
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return tables;
}

inline Broadcast reconstruct(const NiceTreeDecomposition& ntd, const std::vector<Table>& tables) {
  Broadcast f(ntd.vertex_count);
  std::vector<std::pair<int, std::uint64_t>> stack{{ntd.root(), tables.back().front().key}};
  while (!stack.empty()) {
    const auto [index, key] = stack.back();
    stack.pop_back();
    const NiceNode& x = ntd.nodes[static_cast<std::size_t>(index)];
    const TableEntry* e = find_entry(tables[static_cast<std::size_t>(index)], key);
    if (e == nullptr) throw Error(ErrorCode::InvalidNiceDecomposition, "broken back-pointer");
    if (x.kind == NodeKind::Forget && e->decision > 0) f.set(x.vertex, e->decision);
    if (!x.children.empty()) stack.emplace_back(x.children[0], e->left);
    if (x.children.size() == 2) stack.emplace_back(x.children[1], e->right);
  }
  return f;
}

template <class Policy>
DpResult solve(const Policy& pol, const NiceTreeDecomposition& ntd, const DpOptions& options) {
  auto tables = all_tables(pol, ntd, options.threads);
  const Table& root = tables.back();
  if (root.size() != 1) throw Error(ErrorCode::InvalidNiceDecomposition, "root table must hold one signature");
  DpResult result;
  result.solution.value = root.front().value;
  result.solution.witness = reconstruct(ntd, tables);
  if (options.keep_tables) result.tables = std::move(tables);
  return result;
}

}  // namespace bcast::detail
