#include "bcast/transforms.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bcast/error.hpp"
#include "bcast/independence.hpp"
#include "bcast/packing.hpp"

namespace bcast {

Broadcast canonical_single_broadcast(const WeightedGraph& g) {
  Broadcast f(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.ecc(v) == g.diameter()) {
      f.set(v, g.diameter());
      break;
    }
  }
  return f;
}

Decision decide_value_k(const WeightedGraph& g, const NiceTreeDecomposition& ntd, Dist k, Problem problem,
                        const DpOptions& options) {
  if (k < 1) throw Error(ErrorCode::ParameterOutOfRange, "k must be at least 1");
  Decision out;
  if (g.diameter() > k) {
    Broadcast f = canonical_single_broadcast(g);
    f.set(f.broadcasters().front(), k);
    out.yes = true;
    out.via_diameter = true;
    out.witness = std::move(f);
    return out;
  }
  const Solution best = problem == Problem::Independence ? solve_p_bi(g, ntd, g.diameter(), options)
                                                         : solve_p_bp(g, ntd, g.diameter(), options);
  out.optimum = best.value;
  out.yes = best.value >= k;
  if (out.yes) out.witness = best.witness;
  return out;
}

namespace {

void require_truncatable(const WeightedGraph& g, const Broadcast& f, Dist p, Problem problem) {
  if (p < 1) throw Error(ErrorCode::ParameterOutOfRange, "p must be at least 1");
  if (!g.unit_weight()) {
    throw Error(ErrorCode::InvalidInstance, "truncation transforms need a unit-weight graph");
  }
  if (f.order() != g.order()) throw Error(ErrorCode::InvalidBroadcast, "broadcast and graph differ in size");
  if (const auto bad = find_violation(g, f, problem, Ceiling::Relaxed)) {
    throw Error(ErrorCode::InvalidBroadcast, "input is not a valid broadcast: " + bad->describe());
  }
}

/// u_0 = v, ..., u_length: a shortest path to the smallest-id vertex at that
/// distance, stepping back through smallest-id predecessors.
std::vector<Vertex> path_from(const WeightedGraph& g, Vertex v, Dist length) {
  const auto row = g.row(v);
  Vertex target = -1;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (row[static_cast<std::size_t>(u)] == length) {
      target = u;
      break;
    }
  }
  if (target == -1) {
    throw std::logic_error("no vertex at distance " + std::to_string(length) + " from " + std::to_string(v + 1));
  }
  std::vector<Vertex> path(static_cast<std::size_t>(length) + 1);
  path.back() = target;
  for (Dist i = length; i > 0; --i) {
    const Vertex cur = path[static_cast<std::size_t>(i)];
    for (const Arc& a : g.graph().neighbors(cur)) {
      if (row[static_cast<std::size_t>(a.to)] == i - 1) {
        path[static_cast<std::size_t>(i - 1)] = a.to;
        break;
      }
    }
  }
  return path;
}

void assert_valid(const WeightedGraph& g, const Broadcast& out, Problem problem, Dist p) {
  if (const auto bad = find_violation(g, out, problem, Ceiling::Relaxed)) {
    throw std::logic_error("truncation produced an invalid broadcast: " + bad->describe());
  }
  if (out.max_value() > p) throw std::logic_error("truncation exceeded the cap p");
}

}  // namespace

Broadcast truncate_independent(const WeightedGraph& g, const Broadcast& f, Dist p) {
  require_truncatable(g, f, p, Problem::Independence);
  Broadcast out(g.order());
  for (const Vertex v : f.broadcasters()) {
    const Dist value = f[v];
    if (value <= 2 * p + 2) {
      out.set(v, std::min(value, p));
      continue;
    }
    const Dist beta = (value + 1) / 2;
    const Dist a = beta / (p + 1);
    const Dist b = beta % (p + 1);
    const auto path = path_from(g, v, beta);
    for (Dist k = 0; k < a; ++k) out.set(path[static_cast<std::size_t>(k * (p + 1))], p);
    if (b >= 1) out.set(path[static_cast<std::size_t>(a * (p + 1))], b);
  }
  assert_valid(g, out, Problem::Independence, p);
  return out;
}

Broadcast truncate_packing(const WeightedGraph& g, const Broadcast& f, Dist p) {
  require_truncatable(g, f, p, Problem::Packing);
  Broadcast in = f;
  const auto senders = in.broadcasters();
  if (senders.size() == 1 && in[senders[0]] > g.ecc(senders[0])) {
    // A lone value above its own eccentricity is only allowed by the diameter
    // cap; it is equally valid at a vertex of maximum eccentricity.
    const Dist value = in[senders[0]];
    in = canonical_single_broadcast(g);
    in.set(in.broadcasters().front(), value);
  }
  Broadcast out(g.order());
  for (const Vertex v : in.broadcasters()) {
    const Dist rho = in[v];
    if (rho <= p) {
      out.set(v, rho);
      continue;
    }
    const Dist a = (rho - p) / (2 * p + 1);
    const Dist b = (rho - p) % (2 * p + 1);
    const auto path = path_from(g, v, rho);
    for (Dist k = 0; k <= a; ++k) out.set(path[static_cast<std::size_t>(k * (2 * p + 1))], p);
    if (b >= 3) {
      const Dist half = (b + 1) / 2;
      const Dist index = p + a * (2 * p + 1) + half;
      if (index > rho) {
        throw std::logic_error("extra broadcaster index " + std::to_string(index) + " beyond path length " +
                               std::to_string(rho));
      }
      out.set(path[static_cast<std::size_t>(index)], half - 1);
    }
  }
  assert_valid(g, out, Problem::Packing, p);
  return out;
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] { return Error(ErrorCode::ParameterOutOfRange, "not a rational: '" + std::string(text) + "'"); };
  const auto integer = [&](std::string_view s) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw bad();
    return value;
  };
  Rational r;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = integer(text.substr(0, slash));
    r.den = integer(text.substr(slash + 1));
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string_view::npos) throw bad();
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    const std::int64_t w = whole.empty() ? 0 : integer(whole);
    if (w < 0 || (!whole.empty() && whole[0] == '-')) throw bad();
    r.num = w * r.den + integer(frac);
  } else {
    r.num = integer(text);
  }
  if (r.den <= 0) throw bad();
  const auto g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

ApproxConfig ApproxConfig::from_epsilon(Rational epsilon) {
  // 0 < num/den < 1/2
  if (epsilon.den <= 0 || epsilon.num <= 0 || 2 * epsilon.num >= epsilon.den) {
    throw Error(ErrorCode::ParameterOutOfRange, "epsilon must satisfy 0 < epsilon < 1/2");
  }
  ApproxConfig config;
  config.epsilon = epsilon;
  config.p = epsilon.den / (2 * epsilon.num);
  return config;
}

ApproxResult approx_bi(const WeightedGraph& g, const NiceTreeDecomposition& ntd, const ApproxConfig& config,
                       const DpOptions& options) {
  ApproxResult out;
  out.p_formula = config.p;
  out.p_used = std::min(config.p, g.diameter());
  out.solution = solve_p_bi(g, ntd, out.p_used, options);
  return out;
}

}  // namespace bcast
