#include "obtuse/criterion.hpp"

#include <algorithm>
#include <array>

#include "obtuse/errors.hpp"

namespace obtuse {

namespace {

constexpr std::array<Member, 3> kMembers{Member::p, Member::q, Member::r};

void require_obtuse(const Triple& t, const char* op) {
  if (2 * t.r() <= t.n()) throw DomainError(std::string(op) + ": triple is not obtuse (needs r > n/2)");
}

// ([-bp]_n + [-bq]_n + [-br]_n) / n - 1; the sum is always a multiple of n.
int dimension_formula(std::uint64_t b, const Triple& t) {
  const std::uint64_t n = t.n();
  const std::uint64_t neg_b = (n - b % n) % n;
  u128 sum = 0;
  for (Member m : kMembers) sum += mul_mod(neg_b, member_value(t, m), n);
  return static_cast<int>(sum / n) - 1;
}

std::optional<std::pair<Member, Member>> two_inequalities(std::uint64_t a, const Triple& t) {
  std::array<Member, 3> hit{};
  int count = 0;
  for (Member m : kMembers) {
    if (in_solution_set(member_value(t, m), a, t.n())) hit[count++] = m;
  }
  if (count < 2) return std::nullopt;
  return std::pair{hit[0], hit[1]};
}

// Members x whose [(a-2)x]_n = [-2x]_n + [ax]_n without wrapping past n.
std::optional<std::pair<Member, Member>> eigen_pair(std::uint64_t a, const Triple& t) {
  const std::uint64_t n = t.n();
  std::array<Member, 3> hit{};
  int count = 0;
  for (Member m : kMembers) {
    const std::uint64_t x = member_value(t, m);
    const std::uint64_t shifted = reduce(static_cast<i128>(a) * x - 2 * static_cast<i128>(x), n);
    const std::uint64_t neg_two = reduce(-2 * static_cast<i128>(x), n);
    if (static_cast<u128>(neg_two) + mul_mod(a, x, n) == shifted) hit[count++] = m;
  }
  if (count != 2) return std::nullopt;
  return std::pair{hit[0], hit[1]};
}

bool eigen_condition(std::uint64_t a, const Triple& t) {
  const std::uint64_t n = t.n();
  return dimension_formula(a, t) == 1 && dimension_formula((n + 2 - a % n) % n, t) == 1;
}

Verdict satisfied_at(std::uint64_t a, std::uint64_t n, std::pair<Member, Member> pair) {
  return Verdict{true, Residue(a, n), pair};
}

}  // namespace

Triple Triple::make(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  if (p == 0 || q == 0 || r == 0) throw DomainError("triple entries must be positive");
  if (!(p <= q && q <= r)) throw DomainError("triple must satisfy p <= q <= r");
  if (gcd(gcd(p, q), r) != 1) throw DomainError("triple must satisfy gcd(p, q, r) = 1");
  if (r > ~std::uint64_t{0} - p - q) throw DomainError("triple sum overflows");
  return Triple(p, q, r);
}

std::string_view to_string(Member m) {
  switch (m) {
    case Member::p: return "p";
    case Member::q: return "q";
    case Member::r: return "r";
  }
  return "?";
}

std::uint64_t member_value(const Triple& t, Member m) {
  switch (m) {
    case Member::p: return t.p();
    case Member::q: return t.q();
    case Member::r: return t.r();
  }
  return 0;
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::acute_or_right: return "acute-or-right";
    case Region::obtuse: return "obtuse";
    case Region::strongly_obtuse: return "strongly-obtuse";
    case Region::very_obtuse: return "very-obtuse";
  }
  return "?";
}

std::optional<Region> parse_region(std::string_view s) {
  for (Region r : {Region::acute_or_right, Region::obtuse, Region::strongly_obtuse, Region::very_obtuse}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

Region region(const Triple& t) {
  const u128 n = t.n(), r = t.r();
  if (4 * r >= 3 * n) return Region::very_obtuse;
  if (3 * r > 2 * n) return Region::strongly_obtuse;
  if (2 * r > n) return Region::obtuse;
  return Region::acute_or_right;
}

bool region_at_least(Region r, Region floor) {
  return static_cast<int>(r) >= static_cast<int>(floor);
}

bool is_usable_unit(i128 a, std::uint64_t n) {
  if (n < 3) throw DomainError("is_usable_unit: modulus must be at least 3");
  const std::uint64_t ar = reduce(a, n);
  return gcd(ar, n) == 1 && ar != 1 && reduce(2 * static_cast<i128>(ar) - 2, n) != 0;
}

bool in_solution_set(std::uint64_t x, std::uint64_t a, std::uint64_t n) {
  return mul_mod(a % n, x % n, n) < mul_mod(2, x % n, n);
}

bool in_S(Member x, const Residue& a, const Triple& t) {
  require_obtuse(t, "in_S");
  if (a.modulus() != t.n()) throw DomainError("in_S: residue modulus differs from n");
  return in_solution_set(member_value(t, x), a.value(), t.n());
}

std::vector<std::uint64_t> s_set(std::uint64_t x, std::uint64_t n) {
  if (x == 0 || 2 * static_cast<u128>(x) >= n) throw DomainError("s_set: requires 0 < x < n/2");
  std::vector<std::uint64_t> out;
  out.reserve(2 * x);
  for (std::uint64_t m = 0; m < x; ++m) {
    const auto jump = static_cast<std::uint64_t>((static_cast<u128>(n) * m + x - 1) / x);
    out.push_back(jump);
    out.push_back(jump + 1);
  }
  return out;
}

std::vector<std::uint64_t> s_set(std::uint64_t x, const Triple& t) { return s_set(x, t.n()); }

int eigenspace_dim(const Residue& a, const Triple& t) {
  if (a.modulus() != t.n()) throw DomainError("eigenspace_dim: residue modulus differs from n");
  if (gcd(a.value(), t.n()) != 1) throw DomainError("eigenspace_dim: a must be a unit mod n");
  return dimension_formula(a.value(), t);
}

std::optional<std::pair<Member, Member>> check_witness(std::uint64_t a, const Triple& t) {
  if (t.n() < 3 || !is_usable_unit(a, t.n())) return std::nullopt;
  return two_inequalities(a % t.n(), t);
}

Verdict mw_witness(const Triple& t) {
  require_obtuse(t, "mw_witness");
  const std::uint64_t n = t.n();
  for (std::uint64_t a = 2; a < n; ++a) {
    if (gcd(a, n) != 1 || 2 * a - 2 == n) continue;
    if (auto pair = two_inequalities(a, t)) return satisfied_at(a, n, *pair);
  }
  return Verdict{};
}

Verdict mw_eigen_oracle(const Triple& t) {
  require_obtuse(t, "mw_eigen_oracle");
  const std::uint64_t n = t.n();
  for (std::uint64_t a = 2; a < n; ++a) {
    if (gcd(a, n) != 1 || reduce(2 * static_cast<i128>(a) - 2, n) == 0) continue;
    if (!eigen_condition(a, t)) continue;
    auto pair = eigen_pair(a, t);
    if (!pair) throw std::logic_error("eigen condition holds without exactly two non-wrapping members");
    return satisfied_at(a, n, *pair);
  }
  return Verdict{};
}

WitnessScanner::WitnessScanner(std::uint64_t n) : n_(n) {
  for (std::uint64_t a = 2; a < n; ++a) {
    if (gcd(a, n) == 1 && 2 * a - 2 != n) usable_.push_back(a);
  }
}

Verdict WitnessScanner::scan(const Triple& t) const {
  if (t.n() != n_) throw DomainError("WitnessScanner: triple has a different n");
  require_obtuse(t, "mw_witness");
  const std::uint64_t n = n_, p = t.p(), q = t.q(), r = t.r();
  const std::uint64_t two_p = 2 * p, two_q = 2 * q, two_r = 2 * r - n;
  for (std::uint64_t a : usable_) {
    const int hits = int(mul_mod(a, p, n) < two_p) + int(mul_mod(a, q, n) < two_q) + int(mul_mod(a, r, n) < two_r);
    if (hits >= 2) return satisfied_at(a, n, *two_inequalities(a, t));
  }
  return Verdict{};
}

Verdict WitnessScanner::oracle(const Triple& t) const {
  if (t.n() != n_) throw DomainError("WitnessScanner: triple has a different n");
  require_obtuse(t, "mw_eigen_oracle");
  for (std::uint64_t a : usable_) {
    if (!eigen_condition(a, t)) continue;
    auto pair = eigen_pair(a, t);
    if (!pair) throw std::logic_error("eigen condition holds without exactly two non-wrapping members");
    return satisfied_at(a, n_, *pair);
  }
  return Verdict{};
}

}  // namespace obtuse
