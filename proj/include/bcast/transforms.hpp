#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "bcast/broadcast.hpp"
#include "bcast/dp.hpp"
#include "bcast/graph.hpp"
#include "bcast/nice.hpp"

namespace bcast {

/// f(v) = diam at the smallest-id vertex of maximum eccentricity.
Broadcast canonical_single_broadcast(const WeightedGraph& g);

struct Decision {
  bool yes = false;
  bool via_diameter = false;  // answered by the large-diameter shortcut
  std::optional<Dist> optimum;  // set when the DP ran
  std::optional<Broadcast> witness;
};

/// Is there a valid broadcast of value >= k? Large diameter answers directly;
/// otherwise the DP runs with p = diam.
Decision decide_value_k(const WeightedGraph& g, const NiceTreeDecomposition& ntd, Dist k, Problem problem,
                        const DpOptions& options = {});

/// Independent p-broadcast of value at least p/(2p+2) of value(f). Unit
/// weights only: the path placement needs a vertex at every distance.
Broadcast truncate_independent(const WeightedGraph& g, const Broadcast& f, Dist p);

/// p-broadcast packing of value at least p/(2p+1) of value(f). Unit weights
/// only, for the same reason.
Broadcast truncate_packing(const WeightedGraph& g, const Broadcast& f, Dist p);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// "1/4", "0.25" or "3". Exact; no floating point.
Rational parse_rational(std::string_view text);

struct ApproxConfig {
  Rational epsilon;
  Dist p = 0;  // floor(1 / (2 epsilon))

  /// Requires 0 < epsilon < 1/2.
  static ApproxConfig from_epsilon(Rational epsilon);
};

struct ApproxResult {
  Dist p_formula = 0;  // from epsilon
  Dist p_used = 0;     // capped at diam: larger p cannot change the optimum
  Solution solution;
};

ApproxResult approx_bi(const WeightedGraph& g, const NiceTreeDecomposition& ntd, const ApproxConfig& config,
                       const DpOptions& options = {});

}  // namespace bcast
