#include "obtuse/classifier.hpp"

#include <algorithm>

#include "obtuse/errors.hpp"
#include "obtuse/geometry.hpp"

namespace obtuse {

std::string_view to_string(Lattice l) {
  switch (l) {
    case Lattice::lattice: return "lattice";
    case Lattice::not_lattice: return "not-lattice";
    case Lattice::out_of_theorem_scope: return "out-of-theorem-scope";
  }
  return "?";
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::family1: return "Family1";
    case Family::family2: return "Family2";
    case Family::family3: return "Family3";
    case Family::family4: return "Family4";
    case Family::family5: return "Family5";
    case Family::family6: return "Family6";
    case Family::exceptional: return "Exceptional";
  }
  return "?";
}

std::vector<Family> FamilyLabel::labels() const {
  std::vector<Family> out;
  for (unsigned i = 0; i < kFamilyCount; ++i) {
    if ((bits_ >> i) & 1u) out.push_back(static_cast<Family>(i));
  }
  return out;
}

const std::vector<Triple>& exceptional_triples() {
  static const std::vector<Triple> list{
      Triple::make(1, 4, 11), Triple::make(1, 3, 16), Triple::make(2, 3, 17), Triple::make(1, 4, 21),
      Triple::make(1, 8, 19), Triple::make(3, 8, 29), Triple::make(2, 11, 29),
  };
  return list;
}

FamilyLabel classify_family(const Triple& t) {
  const std::uint64_t p = t.p(), q = t.q(), r = t.r(), n = t.n();
  FamilyLabel label;
  if (p == 1 && q == 1) label.insert(Family::family1);
  if (p == 1 && q == 2 && n % 2 == 0) label.insert(Family::family2);
  if (p == 1 && q == 4 && r % 8 == 7) label.insert(Family::family3);
  if (p == 1 && r == 3 * q + 1) label.insert(Family::family4);
  if (p == 2 && r == 3 * q + 2) label.insert(Family::family5);
  if (p == 4 && r == 3 * q + 4) label.insert(Family::family6);
  const auto& ex = exceptional_triples();
  if (std::find(ex.begin(), ex.end(), t) != ex.end()) label.insert(Family::exceptional);
  return label;
}

bool predicted_mw(const Triple& t) {
  if (!region_at_least(region(t), Region::strongly_obtuse)) {
    throw DomainError("predicted_mw: classification covers only r > 2n/3");
  }
  return classify_family(t).empty();
}

LatticeStatus lattice_status(const Triple& t, const std::optional<Verdict>& verdict) {
  const FamilyLabel fam = classify_family(t);
  if (t == Triple::make(1, 4, 7)) return {Lattice::lattice, std::string(provenance::hooper)};
  if (fam.contains(Family::family3) && t.n() > 12) return geometry::family3_verdict(t.n());
  if (region(t) != Region::very_obtuse) return {Lattice::out_of_theorem_scope, std::string(provenance::none)};

  if (fam.contains(Family::family1)) return {Lattice::lattice, std::string(provenance::veech_family)};
  if (fam.contains(Family::family2)) return {Lattice::lattice, std::string(provenance::vorobets_ward_family)};
  if (fam.contains(Family::exceptional)) return {Lattice::not_lattice, std::string(provenance::rde_check)};

  const Verdict v = verdict ? *verdict : mw_witness(t);
  if (!v.satisfied) {
    // Families 4-6 never reach r >= 3n/4, so this contradicts the classification.
    throw std::logic_error("very obtuse generic triple without an MW witness");
  }
  return {Lattice::not_lattice, std::string(provenance::mw_criterion)};
}

Counterexample counterexample(std::uint64_t p, std::uint64_t x) {
  if (p < 3 || !is_prime(p)) throw DomainError("counterexample_triple: p must be an odd prime");
  if (x == 0) throw DomainError("counterexample_triple: x must be positive");
  const u128 limit = ~std::uint64_t{0};
  u128 m = 1;
  for (std::uint64_t k = 2; k < 2 * p; ++k) {
    if (k == p) continue;
    m *= k;
    if (m > limit) throw TooLarge("counterexample_triple: product exceeds 64 bits");
  }
  const std::uint64_t c = mod_inverse(static_cast<i128>(m % p), p).value();
  const u128 base = static_cast<u128>(x) * p - c;
  const u128 n = base * m;
  if (base != 0 && n / base != m) throw TooLarge("counterexample_triple: n exceeds 128 bits");
  if (n > limit / p) throw TooLarge("counterexample_triple: n exceeds 64 bits");
  const u128 denom = 2 * p - 1;
  if ((p * n) % denom != 0 || ((p - 1) * n) % denom != 0) {
    throw std::logic_error("counterexample_triple: 2p - 1 does not divide the construction");
  }
  const u128 r = p * n / denom;
  const u128 q = (p - 1) * n / denom - p;
  if (p + q + r != n) throw std::logic_error("counterexample_triple: angles do not sum to n");
  return {static_cast<std::uint64_t>(m), c, Triple::make(p, static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(r))};
}

Triple counterexample_triple(std::uint64_t p, std::uint64_t x) { return counterexample(p, x).triple; }

}  // namespace obtuse
