#include <omp.h>

#include <vector>

#include "obtuse/errors.hpp"
#include "obtuse/jacobsthal.hpp"

namespace obtuse {

std::vector<std::uint64_t> jacobsthal_table(std::uint64_t limit, int workers) {
  if (workers < 1) throw DomainError("jacobsthal_table: workers must be at least 1");
  if (limit > kJacobsthalRadicalGuard) throw TooLarge("jacobsthal_table: limit exceeds scan guard");

  // Smallest-prime-factor sieve gives radicals and prime lists without trial division.
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t k = i; k <= limit; k += i) {
      if (spf[k] == 0) spf[k] = static_cast<std::uint32_t>(i);
    }
  }
  auto primes_of = [&](std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    while (n > 1) {
      const std::uint64_t p = spf[n];
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
    return ps;
  };

  std::vector<std::uint64_t> rad(limit + 1, 1);
  std::vector<std::uint64_t> squarefree;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    for (std::uint64_t p : primes_of(n)) rad[n] *= p;
    if (rad[n] == n) squarefree.push_back(n);
  }

  std::vector<std::uint64_t> by_radical(limit + 1, 0);
  const auto count = static_cast<std::int64_t>(squarefree.size());
#pragma omp parallel num_threads(workers)
  {
    std::vector<unsigned char> marks;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = count - 1; i >= 0; --i) {
      const std::uint64_t m = squarefree[static_cast<std::size_t>(i)];
      by_radical[m] = jacobsthal_of_primes(primes_of(m), m, marks);
    }
  }

  std::vector<std::uint64_t> table(limit + 1, 0);
  for (std::uint64_t n = 1; n <= limit; ++n) table[n] = by_radical[rad[n]];
  return table;
}

}  // namespace obtuse
