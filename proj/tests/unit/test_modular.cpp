#include <numeric>

#include "doctest.h"
#include "obtuse/errors.hpp"
#include "obtuse/modular.hpp"

using namespace obtuse;

namespace {

std::uint64_t naive_phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rep_mod lands in [0, n)") {
  CHECK(rep_mod(-1, 7).value() == 6);
  CHECK(rep_mod(14, 7).value() == 0);
  CHECK(rep_mod(-15, 7).value() == 6);
  CHECK(rep_mod(static_cast<i128>(1) << 100, 97).value() < 97);
  CHECK_THROWS_AS(rep_mod(3, 0), DomainError);
  CHECK_THROWS_AS(Residue(5, 5), DomainError);
}

TEST_CASE("mul_mod matches 128-bit arithmetic near the 64-bit limit") {
  const std::uint64_t n = 0xffffffffffffffc5ull;  // largest 64-bit prime
  const std::uint64_t a = n - 2, b = n - 3;
  CHECK(mul_mod(a, b, n) == 6);
  CHECK(mul_mod(12, 13, 7) == 156 % 7);
}

TEST_CASE("gcd and modular inverse") {
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(12, 18) == 6);
  CHECK(mod_inverse(3, 25).value() == 17);
  CHECK(mod_inverse(-1, 10).value() == 9);
  CHECK_THROWS_AS(mod_inverse(3, 18), NotInvertible);
  for (std::uint64_t n = 2; n <= 200; ++n) {
    for (std::uint64_t b = 1; b < n; ++b) {
      if (std::gcd(b, n) != 1) continue;
      CHECK((b * mod_inverse(static_cast<i128>(b), n).value()) % n == 1 % n);
    }
  }
}

TEST_CASE("factorization, phi, omega and radical agree with naive versions") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    const Factorization f(n);
    std::uint64_t product = 1;
    for (const auto& pp : f.factors()) {
      CHECK(naive_prime(pp.prime));
      for (unsigned e = 0; e < pp.exponent; ++e) product *= pp.prime;
    }
    CHECK(product == n);
    CHECK(is_prime(n) == naive_prime(n));
    CHECK(euler_phi(n) == naive_phi(n));
    CHECK(omega(n) == f.factors().size());
    CHECK(radical(n) == f.radical());
  }
  CHECK(Factorization(1).factors().empty());
  CHECK_THROWS_AS(Factorization(0), DomainError);
}

TEST_CASE("factorization beyond the sieve") {
  const std::uint64_t p1 = 1000003, p2 = 1000033;
  const Factorization f(p1 * p2);
  REQUIRE(f.factors().size() == 2);
  CHECK(f.factors()[0].prime == p1);
  CHECK(f.factors()[1].prime == p2);
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(std::uint64_t{1000003} * 999983));
}

TEST_CASE("prime powers are tagged and sorted") {
  const auto pp = prime_powers_up_to(30);
  std::vector<std::uint64_t> values;
  for (const auto& t : pp) values.push_back(t.value);
  CHECK(values == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29});
  for (const auto& t : pp) CHECK(radical(t.value) == t.base);
  CHECK(primes_below(20) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19});
}
