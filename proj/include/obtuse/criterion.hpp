#pragma once

// Mirzakhani-Wright rank criterion for rational obtuse triangles.
//
// A triangle with angles (p, q, r) * pi / n, p + q + r = n, fails to be a
// lattice triangle whenever some unit a mod n with 2a != 2 satisfies two of
//
//     [a p]_n < [2p]_n,   [a q]_n < [2q]_n,   [a r]_n < [2r]_n.
//
// The same condition is expressed independently through the dimensions of
// the e^{2 pi i a / n} eigenspaces of holomorphic 1-forms on the unfolding;
// mw_eigen_oracle evaluates that form and must agree with mw_witness.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "obtuse/modular.hpp"

namespace obtuse {

/// Angles (p, q, r) * pi / n in normal form: p <= q <= r, gcd(p, q, r) = 1.
class Triple {
 public:
  /// Throws DomainError unless the normal-form invariants hold.
  static Triple make(std::uint64_t p, std::uint64_t q, std::uint64_t r);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t r() const noexcept { return r_; }
  std::uint64_t n() const noexcept { return n_; }

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple& a, const Triple& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    if (a.p_ != b.p_) return a.p_ <=> b.p_;
    return a.q_ <=> b.q_;
  }

 private:
  Triple(std::uint64_t p, std::uint64_t q, std::uint64_t r) : p_(p), q_(q), r_(r), n_(p + q + r) {}
  std::uint64_t p_, q_, r_, n_;
};

enum class Member { p, q, r };

std::string_view to_string(Member m);
std::uint64_t member_value(const Triple& t, Member m);

enum class Region { acute_or_right, obtuse, strongly_obtuse, very_obtuse };

std::string_view to_string(Region r);
std::optional<Region> parse_region(std::string_view s);

/// Strongest applicable label: obtuse (r > n/2), strongly (r > 2n/3), very (r >= 3n/4).
Region region(const Triple& t);

/// True when `r` is at least as strong as `floor`.
bool region_at_least(Region r, Region floor);

struct Verdict {
  bool satisfied = false;
  std::optional<Residue> witness;
  std::optional<std::pair<Member, Member>> pair;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// gcd(a, n) = 1 and 2a != 2 (mod n).
bool is_usable_unit(i128 a, std::uint64_t n);

/// [a x]_n < [2x]_n for an arbitrary x; the raw test behind S_x.
bool in_solution_set(std::uint64_t x, std::uint64_t a, std::uint64_t n);

/// a in S_x for one member of an obtuse triple.
bool in_S(Member x, const Residue& a, const Triple& t);

/// S_x via the jump formula {ceil(nm/x), ceil(nm/x)+1 : 0 <= m < x}; requires 0 < x < n/2.
std::vector<std::uint64_t> s_set(std::uint64_t x, std::uint64_t n);
std::vector<std::uint64_t> s_set(std::uint64_t x, const Triple& t);

/// ([-ap]_n + [-aq]_n + [-ar]_n) / n - 1 for a unit a.
int eigenspace_dim(const Residue& a, const Triple& t);

/// Smallest usable unit meeting two of the three inequalities; requires r > n/2.
Verdict mw_witness(const Triple& t);

/// Same verdict derived from eigenspace dimensions of a and 2 - a.
Verdict mw_eigen_oracle(const Triple& t);

/// Candidate witnesses from the gcd-based constructions, each verified.
std::vector<Residue> witness_hints(const Triple& t);

/// Checks a candidate: usable unit meeting two inequalities. Returns the pair.
std::optional<std::pair<Member, Member>> check_witness(std::uint64_t a, const Triple& t);

/// Witness scan reusing a unit table for a fixed n (enumeration hot path).
class WitnessScanner {
 public:
  explicit WitnessScanner(std::uint64_t n);

  std::uint64_t n() const noexcept { return n_; }
  Verdict scan(const Triple& t) const;
  Verdict oracle(const Triple& t) const;

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> usable_;  // ascending usable units in [2, n)
};

}  // namespace obtuse
