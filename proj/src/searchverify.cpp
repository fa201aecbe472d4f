#include "obtuse/searchverify.hpp"

#include <algorithm>

#include "obtuse/errors.hpp"
#include "obtuse/modular.hpp"

namespace obtuse::search {

BetaResult beta_check(std::uint64_t beta) {
  if (beta < 4) throw DomainError("beta_check: beta must be at least 4");
  BetaResult res{beta, false, false, false, Rational(0), Rational(0)};
  std::uint64_t smallest = 0, largest_third = 0;
  for (std::uint64_t u = 1; u < beta; ++u) {
    if (gcd(u, beta) != 1) continue;
    if (smallest == 0) smallest = u;
    if (9 * u >= beta && 9 * u <= 2 * beta) res.has_unit_in_window = true;
    if (12 * u >= beta && 4 * u <= beta) res.single_window_ok = true;
    if (3 * u <= beta) largest_third = u;
  }
  const auto b = static_cast<std::int64_t>(beta);
  res.upward_allowance = Rational(1, 3) - Rational(static_cast<std::int64_t>(smallest), b);
  res.downward_allowance = Rational(static_cast<std::int64_t>(largest_third), b);
  res.fallback_ok = std::min(res.upward_allowance, res.downward_allowance) >= Rational(1, 12);
  return res;
}

const std::vector<std::uint64_t>& published_beta_exceptions() {
  static const std::vector<std::uint64_t> list{4, 10, 18, 30};
  return list;
}

std::string_view to_string(Regime r) { return r == Regime::A ? "A" : "B"; }
std::string_view to_string(Boundary b) { return b == Boundary::open ? "open" : "closed"; }
std::string_view to_string(WitnessCounting w) {
  return w == WitnessCounting::distinct_bases ? "distinct-bases" : "all-prime-powers";
}

std::optional<Regime> parse_regime(std::string_view s) {
  if (s == "A" || s == "a") return Regime::A;
  if (s == "B" || s == "b") return Regime::B;
  return std::nullopt;
}

std::optional<Boundary> parse_boundary(std::string_view s) {
  if (s == "open") return Boundary::open;
  if (s == "closed") return Boundary::closed;
  return std::nullopt;
}

std::optional<WitnessCounting> parse_counting(std::string_view s) {
  if (s == "distinct-bases") return WitnessCounting::distinct_bases;
  if (s == "all-prime-powers") return WitnessCounting::all_prime_powers;
  return std::nullopt;
}

RegimeParameters regime_parameters(Regime r) {
  if (r == Regime::A) return {10'000, 80, Rational(3, 5), Boundary::open};
  return {12'000, 1'000, Rational(1, 3), Boundary::closed};
}

CoverageConfig default_config(Regime r) {
  return {r, regime_parameters(r).default_boundary, WitnessCounting::distinct_bases};
}

const std::vector<IndexRange>& published_bad_ranges(Regime r) {
  static const std::vector<IndexRange> a{{9914, 10000}};
  static const std::vector<IndexRange> b{{4000, 4005}, {5997, 6007}, {8000, 8005}, {11991, 12000}};
  return r == Regime::A ? a : b;
}

std::vector<std::uint64_t> outside_ranges(const std::vector<std::uint64_t>& bad, const std::vector<IndexRange>& ranges) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t j : bad) {
    const bool inside = std::any_of(ranges.begin(), ranges.end(), [&](const IndexRange& r) { return r.lo <= j && j < r.hi; });
    if (!inside) out.push_back(j);
  }
  return out;
}

std::vector<std::uint64_t> point_witnesses(const Rational& x, Regime regime, std::optional<Boundary> boundary) {
  if (x < Rational(0) || x >= Rational(1)) throw DomainError("point_witnesses: x must lie in [0, 1)");
  const RegimeParameters params = regime_parameters(regime);
  const Boundary closure = boundary.value_or(params.default_boundary);
  const auto num = static_cast<i128>(x.numerator()), den = static_cast<i128>(x.denominator());
  const i128 tn = params.target_upper.numerator(), td = params.target_upper.denominator();

  std::vector<std::uint64_t> out;
  std::vector<bool> seen(params.prime_power_limit + 1, false);
  for (const auto& pp : prime_powers_up_to(params.prime_power_limit)) {
    if (seen[pp.base]) continue;
    // frac(c x) = (c num mod den) / den compared with tn / td
    const i128 lhs = ((static_cast<i128>(pp.value) * num) % den) * td;
    const i128 rhs = tn * den;
    const bool inside = closure == Boundary::open ? lhs < rhs : lhs <= rhs;
    if (inside) {
      seen[pp.base] = true;
      out.push_back(pp.value);
    }
  }
  return out;
}

namespace detail {

std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_power_list(std::uint64_t limit) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& pp : prime_powers_up_to(limit)) out.emplace_back(pp.value, pp.base);
  return out;
}

std::uint32_t subinterval_witnesses(std::uint64_t j, const RegimeParameters& params, const CoverageConfig& config,
                                    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& prime_powers) {
  const std::uint64_t M = params.subinterval_count;
  const auto tn = static_cast<std::uint64_t>(params.target_upper.numerator());
  const auto td = static_cast<std::uint64_t>(params.target_upper.denominator());
  // For x in [j/M, (j+1)/M), c x mod 1 sweeps [lo/M, (lo + c)/M) with lo = c j mod M,
  // unless an integer falls strictly inside. The image is half-open, so it sits
  // in [0, t) and in [0, t] under the same condition (lo + c)/M <= t, which also
  // rules out a wrap because t < 1. The boundary choice only changes point tests.
  std::uint32_t count = 0;
  std::uint64_t last_base = 0;
  std::vector<std::uint64_t> bases;
  for (const auto& [c, base] : prime_powers) {
    const std::uint64_t lo = (c * j) % M;
    if ((lo + c) * td > tn * M) continue;
    if (config.counting == WitnessCounting::distinct_bases) {
      if (base == last_base || std::find(bases.begin(), bases.end(), base) != bases.end()) continue;
      bases.push_back(base);
      last_base = base;
    }
    ++count;
  }
  return count;
}

CoverageReport empty_report(const CoverageConfig& config) {
  const RegimeParameters params = regime_parameters(config.regime);
  CoverageReport report{config, params.subinterval_count, params.prime_power_limit, Rational(0), params.target_upper, {}, {}};
  report.witness_counts.assign(params.subinterval_count, 0);
  return report;
}

void finish_report(CoverageReport& report) {
  report.bad_indices.clear();
  for (std::uint64_t j = 0; j < report.witness_counts.size(); ++j) {
    if (report.witness_counts[j] < kRequiredWitnesses) report.bad_indices.push_back(j);
  }
}

}  // namespace detail

namespace reference {

std::vector<BetaResult> beta_search(std::uint64_t beta_min, std::uint64_t beta_max) {
  if (beta_min < 4) throw DomainError("beta_search: beta_min must be at least 4");
  std::vector<BetaResult> out;
  for (std::uint64_t b = beta_min; b <= beta_max; ++b) {
    BetaResult r = beta_check(b);
    if (!r.has_unit_in_window) out.push_back(r);
  }
  return out;
}

CoverageReport coverage_check(const CoverageConfig& config) {
  CoverageReport report = detail::empty_report(config);
  const RegimeParameters params = regime_parameters(config.regime);
  const auto pps = detail::prime_power_list(params.prime_power_limit);
  for (std::uint64_t j = 0; j < params.subinterval_count; ++j) {
    report.witness_counts[j] = detail::subinterval_witnesses(j, params, config, pps);
  }
  detail::finish_report(report);
  return report;
}

}  // namespace reference

}  // namespace obtuse::search
