#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "obtuse/errors.hpp"
#include "obtuse/modular.hpp"
#include "obtuse/searchverify.hpp"

using namespace obtuse;
using namespace obtuse::search;

namespace {

std::int64_t floor_of(const Rational& x) {
  std::int64_t f = x.numerator() / x.denominator();
  if (x.numerator() < 0 && x.numerator() % x.denominator() != 0) --f;
  return f;
}

// Interval-in-rationals restatement of coverage: c maps [a, b) into the target
// when no integer lies strictly between a and b and b - floor(a) <= t.
std::vector<std::uint64_t> coverage_oracle(std::uint64_t M, std::uint64_t limit, const Rational& t) {
  std::vector<std::uint64_t> bad;
  for (std::uint64_t j = 0; j < M; ++j) {
    std::set<std::uint64_t> bases;
    for (std::uint64_t c = 2; c <= limit; ++c) {
      const Factorization f(c);
      if (f.factors().size() != 1 || bases.count(f.factors()[0].prime)) continue;
      const Rational a(static_cast<std::int64_t>(c * j), static_cast<std::int64_t>(M));
      const Rational b(static_cast<std::int64_t>(c * (j + 1)), static_cast<std::int64_t>(M));
      const std::int64_t fa = floor_of(a);
      const bool wraps = Rational(fa + 1) < b;
      if (!wraps && b - Rational(fa) <= t) bases.insert(f.factors()[0].prime);
    }
    if (bases.size() < 10) bad.push_back(j);
  }
  return bad;
}

bool brute_exception(std::uint64_t beta) {
  for (std::uint64_t u = 1; u < beta; ++u) {
    if (std::gcd(u, beta) == 1 && 9 * u >= beta && 9 * u <= 2 * beta) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("beta window examples") {
  CHECK(beta_check(6).has_unit_in_window);
  CHECK(beta_check(24).has_unit_in_window);
  CHECK_FALSE(beta_check(12).has_unit_in_window);
  CHECK_THROWS_AS(beta_search(3, 10), DomainError);
  std::vector<std::uint64_t> small;
  for (const auto& r : beta_search(4, 40)) small.push_back(r.beta);
  for (std::uint64_t b : {4, 10, 18, 30}) CHECK(std::find(small.begin(), small.end(), b) != small.end());
}

TEST_CASE("beta search over [4, 10000]") {
  const auto found = beta_search(4, 10'000, 4);
  std::vector<std::uint64_t> betas;
  for (const auto& r : found) betas.push_back(r.beta);
  std::vector<std::uint64_t> brute;
  for (std::uint64_t b = 4; b <= 10'000; ++b) {
    if (brute_exception(b)) brute.push_back(b);
  }
  CHECK(betas == brute);
  CHECK(betas == std::vector<std::uint64_t>{4, 10, 12, 18, 30});
  for (const auto& r : found) {
    CHECK(r.fallback_ok);
    CHECK_FALSE(r.has_unit_in_window);
  }
  const auto& ref = reference::beta_search(4, 2000);
  CHECK(ref.size() == 5);
}

TEST_CASE("beta fallback allowances") {
  auto br = [](std::uint64_t b) { return beta_check(b); };
  CHECK(br(4).upward_allowance == Rational(1, 12));
  CHECK(br(4).downward_allowance == Rational(1, 4));
  CHECK(br(10).upward_allowance == Rational(7, 30));
  CHECK(br(10).downward_allowance == Rational(3, 10));
  CHECK(br(12).upward_allowance == Rational(1, 4));
  CHECK(br(12).downward_allowance == Rational(1, 12));
  CHECK(br(18).upward_allowance == Rational(5, 18));
  CHECK(br(30).downward_allowance == Rational(7, 30));
  CHECK(br(12).single_window_ok);
  CHECK_FALSE(br(18).single_window_ok);
  CHECK(published_beta_exceptions() == std::vector<std::uint64_t>{4, 10, 18, 30});
}

TEST_CASE("coverage kernels agree with the rational oracle") {
  for (Regime regime : {Regime::A, Regime::B}) {
    const auto params = regime_parameters(regime);
    const auto oracle = coverage_oracle(params.subinterval_count, params.prime_power_limit, params.target_upper);
    for (Boundary boundary : {Boundary::open, Boundary::closed}) {
      CoverageConfig cfg{regime, boundary, WitnessCounting::distinct_bases};
      const auto ref = reference::coverage_check(cfg);
      CHECK(ref.bad_indices == oracle);
      for (int workers : {1, 4}) {
        const auto par = coverage_check(cfg, workers);
        CHECK(par.bad_indices == ref.bad_indices);
        CHECK(par.witness_counts == ref.witness_counts);
      }
    }
  }
}

TEST_CASE("coverage regime B lies inside the published ranges") {
  const auto rep = coverage_check(default_config(Regime::B), 2);
  CHECK(rep.subinterval_count == 12'000);
  CHECK(rep.prime_power_limit == 1'000);
  CHECK(rep.target_upper == Rational(1, 3));
  CHECK(outside_ranges(rep.bad_indices, published_bad_ranges(Regime::B)).empty());
  CHECK(rep.bad_indices.size() == 29);
  for (std::uint64_t j = 0; j < rep.subinterval_count; ++j) {
    CHECK((rep.witness_counts[j] < kRequiredWitnesses) ==
          std::binary_search(rep.bad_indices.begin(), rep.bad_indices.end(), j));
  }
}

TEST_CASE("coverage regime A with distinct bases leaves bad indices below 9914") {
  const auto rep = coverage_check(default_config(Regime::A), 1);
  CHECK(rep.witness_counts[0] >= kRequiredWitnesses);
  const auto outside = outside_ranges(rep.bad_indices, published_bad_ranges(Regime::A));
  CHECK(outside.size() == 59);
  CHECK(outside.front() == 1627);
  CHECK(outside.back() == 5081);
  // Counting every prime power rather than one per base recovers the published range exactly.
  const auto all = coverage_check({Regime::A, Boundary::open, WitnessCounting::all_prime_powers}, 1);
  CHECK(all.bad_indices.size() == 86);
  CHECK(all.bad_indices.front() == 9914);
  CHECK(outside_ranges(all.bad_indices, published_bad_ranges(Regime::A)).empty());
}

TEST_CASE("point witnesses") {
  const auto w = point_witnesses(Rational(1, 5), Regime::A);
  CHECK(std::find(w.begin(), w.end(), 2) != w.end());
  CHECK(std::find(w.begin(), w.end(), 3) == w.end());
  CHECK(std::find(w.begin(), w.end(), 5) != w.end());
  const auto closed = point_witnesses(Rational(1, 5), Regime::A, Boundary::closed);
  CHECK(std::find(closed.begin(), closed.end(), 3) != closed.end());
  const auto zero = point_witnesses(Rational(0), Regime::B);
  std::vector<std::uint64_t> primes;
  for (auto p : primes_below(1001)) primes.push_back(p);
  CHECK(zero == primes);
  const Rational near_one(999, 1000);
  std::vector<std::uint64_t> expected;
  std::set<std::uint64_t> bases;
  for (std::uint64_t c = 2; c <= 1000; ++c) {
    const Factorization f(c);
    if (f.factors().size() != 1 || bases.count(f.factors()[0].prime)) continue;
    const Rational cx = near_one * static_cast<std::int64_t>(c);
    if (cx - Rational(floor_of(cx)) <= Rational(1, 3)) {
      bases.insert(f.factors()[0].prime);
      expected.push_back(c);
    }
  }
  CHECK(point_witnesses(near_one, Regime::B) == expected);
  CHECK_THROWS_AS(point_witnesses(Rational(1), Regime::A), DomainError);
}

TEST_CASE("covered subintervals are covered pointwise") {
  std::mt19937_64 rng(20240917);
  for (Regime regime : {Regime::A, Regime::B}) {
    const auto rep = coverage_check(default_config(regime), 1);
    const auto M = static_cast<std::int64_t>(rep.subinterval_count);
    int sampled = 0;
    while (sampled < 1000) {
      const auto j = static_cast<std::int64_t>(rng() % rep.subinterval_count);
      if (rep.witness_counts[static_cast<std::size_t>(j)] < kRequiredWitnesses) continue;
      const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 997);
      const std::int64_t k = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d));
      const Rational x(j * d + k, M * d);  // inside [j/M, (j+1)/M)
      for (Boundary b : {Boundary::open, Boundary::closed}) {
        if (point_witnesses(x, regime, b).size() < kRequiredWitnesses) FAIL("x = " << x << " j = " << j);
      }
      ++sampled;
    }
  }
}

TEST_CASE("enum names round-trip") {
  CHECK(parse_regime("A") == Regime::A);
  CHECK(parse_boundary("closed") == Boundary::closed);
  CHECK(parse_counting("all-prime-powers") == WitnessCounting::all_prime_powers);
  CHECK_FALSE(parse_regime("C").has_value());
  CHECK(to_string(Boundary::open) == "open");
}
