#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "doctest.h"
#include "obtuse/classifier.hpp"
#include "obtuse/enumerate.hpp"
#include "obtuse/errors.hpp"
#include "obtuse/record.hpp"

using namespace obtuse;

namespace {

using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

// The taxonomy written out from the statement, independent of classify_family.
bool expected_failure(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  static const std::set<Key> exceptional = {{1, 4, 11}, {1, 3, 16}, {2, 3, 17}, {1, 4, 21},
                                            {1, 8, 19}, {3, 8, 29}, {2, 11, 29}};
  const std::uint64_t n = p + q + r;
  return (p == 1 && q == 1) || (p == 1 && q == 2 && n % 2 == 0) || (p == 1 && q == 4 && r % 8 == 7) ||
         (p == 1 && r == 3 * q + 1) || (p == 2 && r == 3 * q + 2) || (p == 4 && r == 3 * q + 4) ||
         exceptional.count({p, q, r}) > 0;
}

std::set<Key> keys(const std::vector<EnumeratedTriple>& v) {
  std::set<Key> out;
  for (const auto& e : v) out.insert({e.triple.p(), e.triple.q(), e.triple.r()});
  return out;
}

}  // namespace

TEST_CASE("classify_family examples") {
  CHECK(classify_family(Triple::make(1, 2, 9)).labels() == std::vector{Family::family2});
  CHECK(classify_family(Triple::make(1, 4, 15)).labels() == std::vector{Family::family3});
  CHECK(classify_family(Triple::make(3, 8, 29)).labels() == std::vector{Family::exceptional});
  CHECK(classify_family(Triple::make(1, 3, 14)).empty());
  CHECK(classify_family(Triple::make(1, 1, 4)).labels() == std::vector{Family::family1, Family::family4});
  CHECK(classify_family(Triple::make(1, 2, 7)).labels() == std::vector{Family::family2, Family::family4});
  CHECK(classify_family(Triple::make(1, 4, 7)).contains(Family::family3));
  CHECK(exceptional_triples().size() == 7);
  for (const auto& t : exceptional_triples()) CHECK(t.n() <= 42);
  CHECK(to_string(Family::exceptional) == "Exceptional");
}

TEST_CASE("predicted_mw") {
  CHECK_FALSE(predicted_mw(Triple::make(1, 2, 7)));
  CHECK(predicted_mw(Triple::make(1, 3, 14)));
  CHECK_FALSE(predicted_mw(Triple::make(2, 11, 29)));
  CHECK_THROWS_AS(predicted_mw(Triple::make(1, 4, 7)), DomainError);
  CHECK_THROWS_AS(predicted_mw(Triple::make(1, 1, 4)), DomainError);
}

TEST_CASE("family taxonomy matches the witness scan for every strongly obtuse triple, n <= 300") {
  EnumerateOptions opts;
  opts.n_max = 300;
  std::uint64_t count = 0;
  enumerate(opts, [&](const EnumeratedTriple& e) {
    ++count;
    const auto& t = e.triple;
    if (predicted_mw(t) != e.verdict.satisfied) FAIL("prediction mismatch at n=" << t.n());
    if (expected_failure(t.p(), t.q(), t.r()) == e.verdict.satisfied) FAIL("taxonomy mismatch at n=" << t.n());
  });
  CHECK(count > 50000);
}

TEST_CASE("r = 3q + p with p in {1, 2, 4} never meets the criterion, n <= 500") {
  std::uint64_t count = 0;
  for (std::uint64_t p : {1, 2, 4}) {
    for (std::uint64_t q = p; p + q + 3 * q + p <= 500; ++q) {
      const std::uint64_t r = 3 * q + p;
      if (std::gcd(std::gcd(p, q), r) != 1) continue;
      ++count;
      if (mw_witness(Triple::make(p, q, r)).satisfied) FAIL("(" << p << "," << q << "," << r << ") satisfied");
    }
  }
  CHECK(count > 200);
}

TEST_CASE("enumeration examples") {
  EnumerateOptions opts;
  opts.n_max = 16;
  const auto upto16 = keys(enumerate(opts));
  CHECK(upto16.count({1, 4, 11}) == 1);
  opts.n_max = 10;
  const auto upto10 = enumerate(opts);
  const auto it = std::find_if(upto10.begin(), upto10.end(), [](const auto& e) { return e.triple == Triple::make(1, 2, 7); });
  REQUIRE(it != upto10.end());
  CHECK_FALSE(it->verdict.satisfied);
  opts.n_max = 6;
  CHECK(enumerate(opts).empty());
}

TEST_CASE("exceptional completeness up to n = 50") {
  EnumerateOptions opts;
  opts.n_max = 50;
  opts.unsatisfied_only = true;
  std::set<Key> exceptional;
  for (const auto& e : enumerate(opts)) {
    const auto labels = e.families.labels();
    REQUIRE_FALSE(labels.empty());
    bool in_family = false;
    for (Family f : labels) in_family = in_family || f != Family::exceptional;
    if (!in_family) exceptional.insert({e.triple.p(), e.triple.q(), e.triple.r()});
  }
  CHECK(exceptional == std::set<Key>{{1, 4, 11}, {1, 3, 16}, {2, 3, 17}, {1, 4, 21}, {1, 8, 19}, {3, 8, 29}, {2, 11, 29}});
}

TEST_CASE("enumeration is ordered and identical across worker counts and the reference") {
  EnumerateOptions opts;
  opts.n_max = 200;
  opts.min_region = Region::obtuse;
  opts.validate_oracle = true;
  std::vector<EnumeratedTriple> ref;
  reference::enumerate(opts, [&](const EnumeratedTriple& e) { ref.push_back(e); });
  REQUIRE(std::is_sorted(ref.begin(), ref.end(), [](const auto& a, const auto& b) { return a.triple < b.triple; }));
  for (const auto& e : ref) CHECK(e.oracle_agrees == true);
  for (int workers : {2, 4, 8}) {
    opts.workers = workers;
    const auto par = enumerate(opts);
    REQUIRE(par.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      if (!(par[i].triple == ref[i].triple && par[i].verdict == ref[i].verdict)) FAIL("mismatch at " << i);
    }
  }
}

TEST_CASE("hint modes agree with the full scan") {
  EnumerateOptions opts;
  opts.n_max = 250;
  opts.hints = HintMode::validate;
  std::uint64_t hinted = 0;
  enumerate(opts, [&](const EnumeratedTriple& e) {
    REQUIRE(e.hints_agree.has_value());
    if (!*e.hints_agree) FAIL("hint path disagrees at n=" << e.triple.n());
    ++hinted;
  });
  opts.hints = HintMode::on;
  std::uint64_t unsat_on = 0, unsat_off = 0;
  enumerate(opts, [&](const EnumeratedTriple& e) { unsat_on += !e.verdict.satisfied; });
  opts.hints = HintMode::off;
  enumerate(opts, [&](const EnumeratedTriple& e) { unsat_off += !e.verdict.satisfied; });
  CHECK(unsat_on == unsat_off);
  CHECK(hinted > 0);
}

TEST_CASE("lattice status") {
  auto status = [](std::uint64_t p, std::uint64_t q, std::uint64_t r) { return lattice_status(Triple::make(p, q, r)); };
  CHECK(status(1, 1, 10).status == Lattice::lattice);
  CHECK(status(1, 1, 10).provenance == provenance::veech_family);
  CHECK(status(1, 2, 9).provenance == provenance::vorobets_ward_family);
  CHECK(status(1, 4, 23).status == Lattice::not_lattice);
  CHECK(status(1, 4, 23).provenance.starts_with(provenance::cylinder_moduli));
  CHECK(status(2, 3, 17).status == Lattice::not_lattice);
  CHECK(status(2, 3, 17).provenance == provenance::rde_check);
  CHECK(status(1, 2, 4).status == Lattice::out_of_theorem_scope);
  CHECK(status(1, 4, 7).status == Lattice::lattice);
  CHECK(status(1, 4, 7).provenance == provenance::hooper);
  CHECK(status(1, 4, 11).status == Lattice::out_of_theorem_scope);
  CHECK(status(1, 3, 14).status == Lattice::not_lattice);
  CHECK(status(1, 5, 13).status == Lattice::out_of_theorem_scope);
  const auto generic = status(1, 2, 13);  // n = 16, r >= 12, n even: family 2
  CHECK(generic.status == Lattice::lattice);
  CHECK(status(1, 3, 20).status == Lattice::not_lattice);
  CHECK(status(1, 3, 20).provenance == provenance::mw_criterion);
}

TEST_CASE("lattice verdicts only in the very obtuse range or family 3") {
  EnumerateOptions opts;
  opts.n_max = 120;
  opts.min_region = Region::obtuse;
  for (const auto& e : enumerate(opts)) {
    const auto s = lattice_status(e.triple, e.verdict);
    const bool in_scope = region(e.triple) == Region::very_obtuse || e.families.contains(Family::family3);
    if (!in_scope) CHECK(s.status == Lattice::out_of_theorem_scope);
    if (s.status == Lattice::lattice) {
      CHECK((e.families.contains(Family::family1) || e.families.contains(Family::family2) || e.triple.n() == 12));
    }
  }
}

TEST_CASE("counterexample generator") {
  const auto c31 = counterexample(3, 1);
  CHECK(c31.m == 40);
  CHECK(c31.c == 1);
  CHECK(c31.triple == Triple::make(3, 29, 48));
  CHECK(counterexample_triple(3, 2) == Triple::make(3, 77, 120));
  const auto c51 = counterexample(5, 1);
  CHECK(c51.m == 72576);
  CHECK(c51.c == 1);
  CHECK(c51.triple.n() == 290304);
  CHECK(c51.triple.q() == 129019);
  CHECK(c51.triple.r() == 161280);
  for (std::uint64_t p : {3, 5}) {
    for (std::uint64_t x : {1, 2}) {
      const auto t = counterexample_triple(p, x);
      CHECK(2 * t.r() > t.n());
      CHECK(t.r() * (2 * p - 1) == p * t.n());
      CHECK_FALSE(mw_witness(t).satisfied);
    }
  }
  CHECK_THROWS_AS(counterexample(4, 1), DomainError);
  CHECK_THROWS_AS(counterexample(2, 1), DomainError);
  CHECK_THROWS_AS(counterexample(3, 0), DomainError);
  CHECK_THROWS_AS(counterexample(23, 1), TooLarge);
}

TEST_CASE("record layout") {
  const auto t = Triple::make(1, 4, 11);
  const auto rec = triple_record(t, mw_witness(t), classify_family(t), lattice_status(t));
  CHECK(rec.dump() ==
        R"({"p":1,"q":4,"r":11,"n":16,"region":"strongly-obtuse","mw_satisfied":false,"witness":null,)"
        R"("families":["Exceptional"],"lattice_status":"out-of-theorem-scope","provenance":"none"})");
  CHECK(csv_header() == "p,q,r,n,region,mw_satisfied,witness,families,lattice_status,provenance");
  CHECK(csv_row(rec) == "1,4,11,16,strongly-obtuse,false,,Exceptional,out-of-theorem-scope,none");
}
