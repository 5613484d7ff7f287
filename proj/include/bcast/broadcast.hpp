#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcast/graph.hpp"

namespace bcast {

enum class Problem { Independence, Packing };

std::string_view to_string(Problem problem);

/// Vertex -> nonnegative integer assignment. Total value and the broadcaster
/// set are derived from the values, never stored separately.
class Broadcast {
 public:
  Broadcast() = default;
  explicit Broadcast(int order) : values_(static_cast<std::size_t>(order), 0) {}
  explicit Broadcast(std::vector<Dist> values);

  int order() const noexcept { return static_cast<int>(values_.size()); }
  Dist operator[](Vertex v) const { return values_.at(static_cast<std::size_t>(v)); }
  void set(Vertex v, Dist value);
  const std::vector<Dist>& values() const noexcept { return values_; }

  Dist value() const;
  Dist max_value() const;
  std::vector<Vertex> broadcasters() const;

  friend bool operator==(const Broadcast&, const Broadcast&) = default;

 private:
  std::vector<Dist> values_;
};

/// How large an individual value may be. Relaxed caps every value at the
/// diameter; strict caps each vertex at its own eccentricity.
enum class Ceiling { Relaxed, Strict };

struct Violation {
  enum class Kind { ValueCeiling, Pair };
  Kind kind = Kind::Pair;
  Problem problem = Problem::Independence;
  Vertex u = -1;
  Vertex v = -1;
  Dist distance = 0;   // dist(u, v) for pair violations
  Dist value_u = 0;
  Dist value_v = 0;
  Dist limit = 0;      // ecc(u) or diam for ceiling violations

  /// e.g. "pair 1 4: 3 <= 2+2" (vertices reported 1-based).
  std::string describe() const;
};

/// Quadratic reference check over all broadcaster pairs.
std::optional<Violation> find_violation(const WeightedGraph& g, const Broadcast& f,
                                        Problem problem, Ceiling ceiling);

bool is_independent_broadcast(const WeightedGraph& g, const Broadcast& f, bool relaxed);
bool is_broadcast_packing(const WeightedGraph& g, const Broadcast& f, bool relaxed);

/// {u : dist(u, v) <= f(v)}, sorted. Requires f(v) > 0.
std::vector<Vertex> broadcast_neighborhood(const WeightedGraph& g, const Broadcast& f, Vertex v);

/// Same verdict as find_violation, but works on graphs far too large for an
/// all-pairs matrix. A multi-source search keeps the two best sources per
/// vertex (keyed by dist - f(source) for packing), which yields for every
/// broadcaster its tightest partner in O(m log n). The diameter is only
/// computed when a lone broadcaster exceeds its own eccentricity.
std::optional<Violation> find_violation_sparse(const Graph& g, const Broadcast& f,
                                               Problem problem, Ceiling ceiling);

}  // namespace bcast
