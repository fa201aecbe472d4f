#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace obtuse {

/// Largest radical jacobsthal() will scan.
inline constexpr std::uint64_t kJacobsthalRadicalGuard = 10'000'000;

struct JacobsthalRecord {
  std::uint64_t n;
  std::uint64_t j;
  unsigned omega;
  std::uint64_t kanold_bound;  // 2^omega
};

/// Smallest m such that every m consecutive integers contain one coprime to n.
/// Scans the coprimality pattern of rad(n); throws TooLarge past the guard.
std::uint64_t jacobsthal(std::uint64_t n);

JacobsthalRecord jacobsthal_record(std::uint64_t n);

/// j(n) <= 2^omega(n).
bool check_kanold(std::uint64_t n);

/// omega(n) <= 1.3841 ln n / ln ln n, for n >= 3.
bool robin_check(std::uint64_t n);

/// Published maxima of j over integers with at most `omega` prime factors,
/// keyed by omega. Only the entries the bound reduction uses.
const std::map<unsigned, std::uint64_t>& h_table();

/// min(2^omega(n), H(t) for every tabulated t >= omega(n)); never scans.
std::uint64_t bound_j(std::uint64_t n);

/// Product of the first `count` primes.
unsigned __int128 primorial(unsigned count);

/// Largest k with p_k# <= limit, so every n <= limit has omega(n) <= k.
unsigned omega_cap(unsigned __int128 limit);

struct ReductionStep {
  std::string description;
  unsigned __int128 value;
  bool ok;
};

struct ReductionReport {
  std::vector<ReductionStep> steps;
  std::uint64_t enumeration_threshold;  // n beyond which 24 j(n)^2 < sqrt(n) is established
  std::uint64_t sqrt_threshold;         // n beyond which j(n) < sqrt(n)/6 is established
  bool all_ok;
};

/// Recomputes both threshold reductions and checks every step against the
/// published constants (1474560000 and 7056).
ReductionReport verify_reduction_chain();

/// j(n) for n in [0, limit]; entry 0 is unused. OpenMP over radicals.
std::vector<std::uint64_t> jacobsthal_table(std::uint64_t limit, int workers);

namespace reference {
std::vector<std::uint64_t> jacobsthal_table(std::uint64_t limit);
}  // namespace reference

/// Longest run of integers sharing a factor with the product of `primes`, plus one.
/// `period` must be that product. `marks` is scratch space.
std::uint64_t jacobsthal_of_primes(const std::vector<std::uint64_t>& primes, std::uint64_t period,
                                   std::vector<unsigned char>& marks);

}  // namespace obtuse
