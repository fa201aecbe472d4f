#include <omp.h>

#include "obtuse/errors.hpp"
#include "obtuse/modular.hpp"
#include "obtuse/searchverify.hpp"

namespace obtuse::search {

std::vector<BetaResult> beta_search(std::uint64_t beta_min, std::uint64_t beta_max, int workers) {
  if (beta_min < 4) throw DomainError("beta_search: beta_min must be at least 4");
  if (workers < 1) throw DomainError("beta_search: workers must be at least 1");
  if (beta_max < beta_min) return {};
  const auto count = static_cast<std::int64_t>(beta_max - beta_min + 1);
  std::vector<unsigned char> exception(static_cast<std::size_t>(count), 0);
#pragma omp parallel for schedule(dynamic, 256) num_threads(workers)
  for (std::int64_t i = 0; i < count; ++i) {
    const std::uint64_t beta = beta_min + static_cast<std::uint64_t>(i);
    // A unit in the window is usually found at once; only exceptions pay the full scan.
    bool found = false;
    for (std::uint64_t u = (beta + 8) / 9; 9 * u <= 2 * beta && !found; ++u) found = gcd(u, beta) == 1;
    exception[static_cast<std::size_t>(i)] = !found;
  }
  std::vector<BetaResult> out;
  for (std::int64_t i = 0; i < count; ++i) {
    if (exception[static_cast<std::size_t>(i)]) out.push_back(beta_check(beta_min + static_cast<std::uint64_t>(i)));
  }
  return out;
}

CoverageReport coverage_check(const CoverageConfig& config, int workers) {
  if (workers < 1) throw DomainError("coverage_check: workers must be at least 1");
  CoverageReport report = detail::empty_report(config);
  const RegimeParameters params = regime_parameters(config.regime);
  const auto pps = detail::prime_power_list(params.prime_power_limit);
  const auto count = static_cast<std::int64_t>(params.subinterval_count);
#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::int64_t j = 0; j < count; ++j) {
    report.witness_counts[static_cast<std::size_t>(j)] =
        detail::subinterval_witnesses(static_cast<std::uint64_t>(j), params, config, pps);
  }
  detail::finish_report(report);
  return report;
}

}  // namespace obtuse::search
