#include <numeric>

#include "doctest.h"
#include "obtuse/errors.hpp"
#include "obtuse/jacobsthal.hpp"
#include "obtuse/modular.hpp"

using namespace obtuse;

namespace {

// Longest gap between integers coprime to n over one full period of n itself.
std::uint64_t window_oracle(std::uint64_t n) {
  std::uint64_t best = 0, run = 0;
  for (std::uint64_t k = 1; k <= 2 * n; ++k) {
    run = std::gcd(k, n) == 1 ? 0 : run + 1;
    best = std::max(best, run);
  }
  return best + 1;
}

}  // namespace

TEST_CASE("jacobsthal examples") {
  CHECK(jacobsthal(1) == 1);
  CHECK(jacobsthal(6) == 4);
  CHECK(jacobsthal(30) == 6);
  CHECK(jacobsthal(2) == 2);
  CHECK(jacobsthal(210) == 10);
  CHECK_THROWS_AS(jacobsthal(0), DomainError);
  CHECK_THROWS_AS(jacobsthal(10000019ull * 10000079ull), TooLarge);
  const auto rec = jacobsthal_record(30);
  CHECK(rec.j == 6);
  CHECK(rec.omega == 3);
  CHECK(rec.kanold_bound == 8);
}

TEST_CASE("jacobsthal matches the full-period window oracle, n <= 3000") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    if (jacobsthal(n) != window_oracle(n)) FAIL("n = " << n);
  }
}

TEST_CASE("j(n) = j(rad n) and j(p) = 2") {
  const auto table = jacobsthal_table(10'000, 1);
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    if (table[n] != jacobsthal(radical(n))) FAIL("n = " << n);
    if (n <= 1000 && is_prime(n) && table[n] != 2) FAIL("prime " << n);
  }
  CHECK(table[1] == 1);
}

TEST_CASE("jacobsthal table: parallel equals reference") {
  const auto ref = reference::jacobsthal_table(20'000);
  for (int workers : {1, 3, 8}) CHECK(jacobsthal_table(20'000, workers) == ref);
}

TEST_CASE("Kanold, Robin and the tabulated bound hold up to 1e5") {
  const auto table = jacobsthal_table(100'000, 2);
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    const unsigned w = omega(n);
    if (table[n] > (std::uint64_t{1} << w)) FAIL("Kanold at " << n);
    if (bound_j(n) < table[n]) FAIL("bound_j at " << n);
    if (n >= 3 && !robin_check(n)) FAIL("Robin at " << n);
  }
  CHECK(check_kanold(30));
  CHECK(check_kanold(2));
  CHECK(check_kanold(1));
  CHECK(robin_check(30));
  CHECK(robin_check(3));
  CHECK(robin_check(210));
  CHECK_THROWS_AS(robin_check(2), DomainError);
}

TEST_CASE("H table and bound_j") {
  const auto& h = h_table();
  CHECK(h.size() == 6);
  CHECK(h.at(24) == 236);
  CHECK(h.at(5) == 14);
  std::uint64_t prev = 0;
  for (const auto& [w, value] : h) {
    CHECK(value > prev);
    prev = value;
  }
  CHECK(bound_j(2) == 2);
  CHECK(bound_j(2ull * 3 * 5 * 7 * 11) == 14);                       // omega 5: 2^5 = 32 > 14
  CHECK(bound_j(2ull * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23) == 40);   // omega 9
  CHECK(bound_j(1) == 1);
}

TEST_CASE("primorials and omega caps") {
  CHECK(primorial(0) == 1);
  CHECK(primorial(5) == 2310);
  CHECK(omega_cap(2309) == 4);
  CHECK(omega_cap(2310) == 5);
  CHECK(omega_cap(7056) == 5);
}

TEST_CASE("reduction chain") {
  const auto rep = verify_reduction_chain();
  CHECK(rep.all_ok);
  CHECK(rep.enumeration_threshold == 1'474'560'000ull);
  CHECK(rep.sqrt_threshold == 7056);
  bool saw_product = false, saw_7056 = false;
  for (const auto& s : rep.steps) {
    CHECK(s.ok);
    saw_product = saw_product || s.value == 1'474'560'000ull;
    saw_7056 = saw_7056 || s.value == 7056;
  }
  CHECK(saw_product);
  CHECK(saw_7056);
  CHECK(static_cast<unsigned __int128>(24 * 24) * 40 * 40 * 40 * 40 == 1'474'560'000ull);
  CHECK(36 * 14 * 14 == 7056);
}
