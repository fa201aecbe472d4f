#pragma once

// The two finite searches behind the classification's reduction to n <= 10000.
//
// beta_search: for which beta does (Z/beta)^x meet [beta/9, 2beta/9]? The
// exceptions need a separate aiming rule whose tolerated drift must still
// exceed 1/12.
//
// coverage_check: split [0, 1) into M half-open subintervals; a subinterval
// is covered when at least 10 prime powers with distinct bases map all of it,
// mod 1, into the target interval. All arithmetic is exact.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace obtuse::search {

using Rational = boost::rational<std::int64_t>;

struct BetaResult {
  std::uint64_t beta;
  bool has_unit_in_window;  // some unit u with beta/9 <= u <= 2beta/9
  bool fallback_ok;         // min(upward, downward allowance) >= 1/12
  bool single_window_ok;    // some unit u with 1/12 <= u/beta <= 1/4
  Rational upward_allowance;    // 1/3 - u/beta for the smallest unit u
  Rational downward_allowance;  // largest u/beta <= 1/3 over units u
};

BetaResult beta_check(std::uint64_t beta);

/// Every beta in [beta_min, beta_max] without a unit in the window, ascending.
std::vector<BetaResult> beta_search(std::uint64_t beta_min, std::uint64_t beta_max, int workers = 1);

/// The exception list as printed alongside the search.
const std::vector<std::uint64_t>& published_beta_exceptions();

enum class Regime { A, B };
enum class Boundary { open, closed };
enum class WitnessCounting { distinct_bases, all_prime_powers };

std::string_view to_string(Regime r);
std::string_view to_string(Boundary b);
std::string_view to_string(WitnessCounting w);
std::optional<Regime> parse_regime(std::string_view s);
std::optional<Boundary> parse_boundary(std::string_view s);
std::optional<WitnessCounting> parse_counting(std::string_view s);

struct RegimeParameters {
  std::uint64_t subinterval_count;
  std::uint64_t prime_power_limit;
  Rational target_upper;      // target is [0, target_upper) or [0, target_upper]
  Boundary default_boundary;
};

/// A: M = 10000, prime powers <= 80, target [0, 3/5).  B: M = 12000, <= 1000, [0, 1/3].
RegimeParameters regime_parameters(Regime r);

struct CoverageConfig {
  Regime regime = Regime::A;
  Boundary boundary = Boundary::open;
  WitnessCounting counting = WitnessCounting::distinct_bases;
};

CoverageConfig default_config(Regime r);

inline constexpr unsigned kRequiredWitnesses = 10;

struct CoverageReport {
  CoverageConfig config;
  std::uint64_t subinterval_count;
  std::uint64_t prime_power_limit;
  Rational target_lower;
  Rational target_upper;
  std::vector<std::uint64_t> bad_indices;
  std::vector<std::uint32_t> witness_counts;  // one per subinterval
};

CoverageReport coverage_check(const CoverageConfig& config, int workers = 1);

/// Half-open index ranges [lo, hi) in subinterval units.
struct IndexRange {
  std::uint64_t lo;
  std::uint64_t hi;
};

/// The ranges outside of which coverage is claimed to succeed.
const std::vector<IndexRange>& published_bad_ranges(Regime r);

/// Indices of `bad` lying outside every range.
std::vector<std::uint64_t> outside_ranges(const std::vector<std::uint64_t>& bad, const std::vector<IndexRange>& ranges);

/// Prime powers c <= limit with frac(c x) in the target, smallest per base.
std::vector<std::uint64_t> point_witnesses(const Rational& x, Regime regime,
                                           std::optional<Boundary> boundary = std::nullopt);

namespace reference {
std::vector<BetaResult> beta_search(std::uint64_t beta_min, std::uint64_t beta_max);
CoverageReport coverage_check(const CoverageConfig& config);
}  // namespace reference

namespace detail {
/// Witness count for subinterval j; shared by the serial and OpenMP kernels.
std::uint32_t subinterval_witnesses(std::uint64_t j, const RegimeParameters& params, const CoverageConfig& config,
                                    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& prime_powers);
std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_power_list(std::uint64_t limit);
CoverageReport empty_report(const CoverageConfig& config);
void finish_report(CoverageReport& report);
}  // namespace detail

}  // namespace obtuse::search
