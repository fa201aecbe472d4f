#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace obtuse {

using i128 = __int128;
using u128 = unsigned __int128;

/// A representative in [0, modulus) of a residue class.
class Residue {
 public:
  Residue(std::uint64_t value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
};

/// [x]_n: the representative of x mod n that lies in [0, n).
Residue rep_mod(i128 x, std::uint64_t n);

/// Raw form of rep_mod for hot loops.
inline std::uint64_t reduce(i128 x, std::uint64_t n) {
  i128 r = x % static_cast<i128>(n);
  if (r < 0) r += n;
  return static_cast<std::uint64_t>(r);
}

/// a*b mod n without overflow for any 64-bit modulus.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  if ((a | b) < (std::uint64_t{1} << 32)) return (a * b) % n;
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % n);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// Inverse of b modulo c; throws NotInvertible when gcd(b, c) != 1.
Residue mod_inverse(i128 b, std::uint64_t c);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
class Factorization {
 public:
  explicit Factorization(std::uint64_t n);

  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t radical() const noexcept;
  std::vector<std::uint64_t> primes() const;

 private:
  std::uint64_t value_;
  std::vector<PrimePower> factors_;
};

bool is_prime(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
unsigned omega(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);

struct TaggedPrimePower {
  std::uint64_t value;
  std::uint64_t base;

  friend bool operator==(const TaggedPrimePower&, const TaggedPrimePower&) = default;
};

/// Every p^k <= limit (k >= 1), ascending, tagged with p.
std::vector<TaggedPrimePower> prime_powers_up_to(std::uint64_t limit);

/// Primes below `limit` by the Eratosthenes sieve.
std::vector<std::uint32_t> primes_below(std::uint32_t limit);

}  // namespace obtuse
