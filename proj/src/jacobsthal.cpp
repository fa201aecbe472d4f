#include "obtuse/jacobsthal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "obtuse/errors.hpp"
#include "obtuse/modular.hpp"

namespace obtuse {

namespace {

std::string u128_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

std::uint64_t h_bound_for(unsigned cap) {
  for (const auto& [threshold, h] : h_table()) {
    if (threshold >= cap) return h;
  }
  throw DomainError("no tabulated Jacobsthal maximum for omega = " + std::to_string(cap));
}

}  // namespace

std::uint64_t jacobsthal_of_primes(const std::vector<std::uint64_t>& primes, std::uint64_t period,
                                   std::vector<unsigned char>& marks) {
  // Two concatenated periods, so a run straddling the period boundary is seen whole.
  const std::uint64_t span = 2 * period;
  marks.assign(span, 0);
  for (std::uint64_t p : primes) {
    for (std::uint64_t k = 0; k < span; k += p) marks[k] = 1;
  }
  if (period > 1 && marks[1]) throw std::logic_error("1 marked as sharing a factor");
  std::uint64_t longest = 0, run = 0;
  for (std::uint64_t i = 0; i < span; ++i) {
    run = marks[i] ? run + 1 : 0;
    longest = std::max(longest, run);
  }
  // position 1 and period + 1 are coprime, so no run spans a full period
  if (period > 1 && longest >= period) throw std::logic_error("non-coprime run covers a whole period");
  return longest + 1;
}

std::uint64_t jacobsthal(std::uint64_t n) {
  if (n == 0) throw DomainError("jacobsthal: n must be positive");
  const Factorization f(n);
  const std::uint64_t rad = f.radical();
  if (rad > kJacobsthalRadicalGuard) throw TooLarge("jacobsthal: radical exceeds scan guard");
  std::vector<unsigned char> marks;
  return jacobsthal_of_primes(f.primes(), rad, marks);
}

JacobsthalRecord jacobsthal_record(std::uint64_t n) {
  const unsigned w = omega(n);
  return {n, jacobsthal(n), w, std::uint64_t{1} << w};
}

bool check_kanold(std::uint64_t n) {
  const auto rec = jacobsthal_record(n);
  return rec.j <= rec.kanold_bound;
}

bool robin_check(std::uint64_t n) {
  if (n < 3) throw DomainError("robin_check: n must be at least 3");
  const double ln = std::log(static_cast<double>(n));
  return static_cast<double>(omega(n)) <= 1.3841 * ln / std::log(ln);
}

const std::map<unsigned, std::uint64_t>& h_table() {
  static const std::map<unsigned, std::uint64_t> table{
      {5, 14}, {6, 22}, {9, 40}, {10, 46}, {11, 58}, {24, 236},
  };
  return table;
}

std::uint64_t bound_j(std::uint64_t n) {
  const unsigned w = omega(n);
  std::uint64_t best = std::uint64_t{1} << w;
  for (const auto& [threshold, h] : h_table()) {
    if (threshold >= w) best = std::min(best, h);
  }
  return best;
}

u128 primorial(unsigned count) {
  u128 product = 1;
  unsigned taken = 0;
  for (std::uint64_t k = 2; taken < count; ++k) {
    if (!is_prime(k)) continue;
    product *= k;
    ++taken;
  }
  return product;
}

unsigned omega_cap(u128 limit) {
  unsigned k = 0;
  while (primorial(k + 1) <= limit) ++k;
  return k;
}

ReductionReport verify_reduction_chain() {
  ReductionReport report{{}, 0, 0, true};
  auto step = [&](std::string description, u128 value, bool ok) {
    report.steps.push_back({std::move(description), value, ok});
    report.all_ok = report.all_ok && ok;
  };

  // Beyond p_25#, the Kanold and Robin bounds already give 24 j(n)^2 < sqrt(n).
  const u128 p25 = primorial(25);
  const double ln_p25 = std::log(static_cast<double>(p25));
  step("p_25# > 2.3e36", p25, static_cast<double>(p25) > 2.3e36);
  step("ln ln p_25# > 4.4", p25, std::log(ln_p25) > 4.4);
  step("1.4 ln 4 < 2, so j(n)^2 < n^(2/4.4) past p_25#", p25, 1.4 * std::log(4.0) < 2.0);
  step("n^(2/4.4) < sqrt(n)/24 for n >= p_25#", p25, ln_p25 * (0.5 - 2.0 / 4.4) > std::log(24.0));
  step("omega(n) <= 24 below p_25#", p25, omega_cap(p25 - 1) == 24);

  // 24 j^2 < sqrt(n)  <=>  n > 24^2 j^4; iterate until the cap on omega stops shrinking.
  const std::vector<std::pair<std::uint64_t, unsigned>> published_first{{58, 11}, {46, 10}, {40, 9}, {40, 9}};
  std::uint64_t j = h_bound_for(24);
  step("H(24) = 236", j, j == 236);
  u128 threshold = 0;
  for (std::size_t i = 0;; ++i) {
    threshold = u128{576} * j * j * j * j;
    const unsigned cap = omega_cap(threshold);
    const std::uint64_t next = h_bound_for(cap);
    const bool matches = i < published_first.size() && published_first[i] == std::pair{next, cap};
    std::ostringstream d;
    d << "24^2 * " << j << "^4 = " << u128_string(threshold) << "; omega <= " << cap << " below it, j <= " << next;
    step(d.str(), threshold, matches);
    if (next == j || !matches) break;
    j = next;
  }
  report.enumeration_threshold = static_cast<std::uint64_t>(threshold);
  step("enumeration threshold = 1.47456e9", threshold, threshold == 1'474'560'000);

  // j < sqrt(n)/6  <=>  n > 36 j^2, starting from n <= 2e9 where omega <= 9.
  step("2e9 exceeds the enumeration threshold", 2'000'000'000, u128{2'000'000'000} > threshold);
  const unsigned cap_2e9 = omega_cap(2'000'000'000);
  j = h_bound_for(cap_2e9);
  step("omega <= 9 and j <= 40 for n <= 2e9", j, cap_2e9 == 9 && j == 40);
  const std::vector<std::pair<std::uint64_t, unsigned>> published_second{{22, 6}, {14, 5}, {14, 5}};
  for (std::size_t i = 0;; ++i) {
    threshold = u128{36} * j * j;
    const unsigned cap = omega_cap(threshold);
    const std::uint64_t next = h_bound_for(cap);
    const bool matches = i < published_second.size() && published_second[i] == std::pair{next, cap};
    std::ostringstream d;
    d << "36 * " << j << "^2 = " << u128_string(threshold) << "; omega <= " << cap << " below it, j <= " << next;
    step(d.str(), threshold, matches);
    if (next == j || !matches) break;
    j = next;
  }
  report.sqrt_threshold = static_cast<std::uint64_t>(threshold);
  step("sqrt threshold = 7056", threshold, threshold == 7056);
  step("7056 lies inside the exhaustively checked range n <= 10000", threshold, threshold <= 10'000);
  return report;
}

namespace reference {

std::vector<std::uint64_t> jacobsthal_table(std::uint64_t limit) {
  std::vector<std::uint64_t> table(limit + 1, 0);
  for (std::uint64_t n = 1; n <= limit; ++n) table[n] = jacobsthal(n);
  return table;
}

}  // namespace reference

}  // namespace obtuse
