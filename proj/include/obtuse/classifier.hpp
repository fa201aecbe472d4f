#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "obtuse/criterion.hpp"
#include "obtuse/lattice.hpp"

namespace obtuse {

enum class Family : unsigned {
  family1 = 0,  // p = q = 1
  family2,      // p = 1, q = 2, n even
  family3,      // p = 1, q = 4, r = 7 (mod 8)
  family4,      // p = 1, r = 3q + 1
  family5,      // p = 2, r = 3q + 2
  family6,      // p = 4, r = 3q + 4
  exceptional,  // seven sporadic triples
};

inline constexpr unsigned kFamilyCount = 7;

std::string_view to_string(Family f);

/// Set of matching families; empty means generic.
class FamilyLabel {
 public:
  void insert(Family f) noexcept { bits_ |= 1u << static_cast<unsigned>(f); }
  bool contains(Family f) const noexcept { return (bits_ >> static_cast<unsigned>(f)) & 1u; }
  bool empty() const noexcept { return bits_ == 0; }
  std::vector<Family> labels() const;

  friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;

 private:
  unsigned bits_ = 0;
};

/// The seven sporadic strongly obtuse triples without an MW witness.
const std::vector<Triple>& exceptional_triples();

FamilyLabel classify_family(const Triple& t);

/// MW criterion predicted satisfied iff no family matches; requires r > 2n/3.
bool predicted_mw(const Triple& t);

/// Lattice verdict where the classification decides it. A verdict already
/// computed for `t` can be passed to skip the witness scan.
LatticeStatus lattice_status(const Triple& t, const std::optional<Verdict>& verdict = std::nullopt);

struct Counterexample {
  std::uint64_t m;  // product of 1 .. 2p-1 without p
  std::uint64_t c;  // m^{-1} mod p
  Triple triple;
};

/// Obtuse triples failing the criterion for arbitrarily large p:
/// n = (x p - c) m, r = p n / (2p - 1), q = (p - 1) n / (2p - 1) - p.
Counterexample counterexample(std::uint64_t p, std::uint64_t x);
Triple counterexample_triple(std::uint64_t p, std::uint64_t x);

}  // namespace obtuse
