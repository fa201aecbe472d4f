#include "obtuse/modular.hpp"

#include <algorithm>

#include "obtuse/errors.hpp"

namespace obtuse {

namespace {

constexpr std::uint32_t kSieveLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = primes_below(kSieveLimit);
  return primes;
}

}  // namespace

Residue::Residue(std::uint64_t value, std::uint64_t modulus)
    : value_(value), modulus_(modulus) {
  if (modulus == 0) throw DomainError("residue modulus must be positive");
  if (value >= modulus) throw DomainError("residue value out of range");
}

Residue rep_mod(i128 x, std::uint64_t n) {
  if (n == 0) throw DomainError("rep_mod: modulus must be positive");
  return Residue(reduce(x, n), n);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Residue mod_inverse(i128 b, std::uint64_t c) {
  if (c == 0) throw DomainError("mod_inverse: modulus must be positive");
  if (c == 1) return Residue(0, 1);
  i128 old_r = reduce(b, c), r = c;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 quot = old_r / r;
    i128 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw NotInvertible("mod_inverse: argument shares a factor with the modulus");
  return rep_mod(old_s, c);
}

std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 3) return out;
  std::vector<bool> composite(limit, false);
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
  }
  return out;
}

Factorization::Factorization(std::uint64_t n) : value_(n) {
  if (n == 0) throw DomainError("cannot factor zero");
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors_.push_back({p, e});
  };
  for (std::uint32_t p : small_primes()) {
    if (std::uint64_t{p} * p > n) break;
    take(p);
  }
  // Beyond the sieve: trial division by 6k +/- 1.
  for (std::uint64_t k = kSieveLimit - kSieveLimit % 6; static_cast<u128>(k - 1) * (k - 1) <= n; k += 6) {
    if (k >= kSieveLimit) take(k - 1);
    take(k + 1);
  }
  if (n > 1) factors_.push_back({n, 1});
}

std::uint64_t Factorization::radical() const noexcept {
  std::uint64_t rad = 1;
  for (const auto& f : factors_) rad *= f.prime;
  return rad;
}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const Factorization fact(n);
  const auto& f = fact.factors();
  return f.size() == 1 && f.front().exponent == 1;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  const Factorization fact(n);
  for (const auto& f : fact.factors()) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

unsigned omega(std::uint64_t n) {
  return static_cast<unsigned>(Factorization(n).factors().size());
}

std::uint64_t radical(std::uint64_t n) { return Factorization(n).radical(); }

std::vector<TaggedPrimePower> prime_powers_up_to(std::uint64_t limit) {
  std::vector<TaggedPrimePower> out;
  if (limit < 2) return out;
  for (std::uint32_t p : primes_below(static_cast<std::uint32_t>(limit + 1))) {
    for (std::uint64_t v = p; v <= limit; v *= p) {
      out.push_back({v, p});
      if (v > limit / p) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

}  // namespace obtuse
