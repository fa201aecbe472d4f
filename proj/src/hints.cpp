// Witness candidates from the gcd-based constructions. Every candidate is
// re-verified with check_witness before it is returned, so a wrong
// construction can only cost a hint, never produce a false witness.

#include <algorithm>

#include "obtuse/criterion.hpp"
#include "obtuse/errors.hpp"

namespace obtuse {

namespace {

class Candidates {
 public:
  explicit Candidates(std::uint64_t n) : n_(n) {}

  void add(i128 a) { values_.push_back(reduce(a, n_)); }

  std::vector<std::uint64_t> take() && { return std::move(values_); }

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> values_;
};

// Units k n / l + 1 landing in S_l intersect S_r, for an odd prime l dividing n
// and x. The residue j = k r (mod l) has to sit in [l/3, 2l/3].
void prime_factor_hints(std::uint64_t l, const Triple& t, Candidates& out) {
  const std::uint64_t n = t.n();
  const std::uint64_t step = n / l;
  if (l <= 7) {
    for (std::uint64_t k = 1; k < l; ++k) out.add(static_cast<i128>(k) * step + 1);
    return;
  }
  const std::uint64_t r_inv = mod_inverse(t.r(), l).value();
  const std::uint64_t j0 = (l + 2) / 3;
  for (std::uint64_t j = j0; j < j0 + 3 && 3 * j <= 2 * l; ++j) {
    out.add(static_cast<i128>(mul_mod(j, r_inv, l)) * step + 1);
  }
}

// gcd(q, n) = 2^m: the d / e / y / z unit families from the power-of-two cases.
void power_of_two_hints(unsigned m, const Triple& t, Candidates& out) {
  const std::uint64_t n = t.n();
  const std::uint64_t two_m = std::uint64_t{1} << m;
  const std::uint64_t b = t.q() / two_m, c = n / two_m;
  if (c < 2) return;
  const std::uint64_t d = mod_inverse(b, c).value();
  const bool quarter = n % 4 == 0;
  const i128 half = n / 2;

  const i128 e = (d % 2 == 1) ? d : d + c;
  out.add(d);
  out.add(e);
  out.add(e + half);
  out.add(d + c);
  if (quarter) {
    const i128 q4 = n / 4;
    for (int k = 1; k < 4; ++k) {
      out.add(e + k * q4);
      out.add(d + k * q4);
    }
    const i128 y = (d % 2 == 1) ? d : d + q4;
    for (i128 v : {y, y + half, 2 * y + q4, 2 * y + 3 * q4, 4 * y + q4, 4 * y + 3 * q4}) out.add(v);
  }
  if (m == 1) {
    const i128 y = (d % 2 == 1) ? d : d + half;
    out.add(y);
    for (i128 pow = 2; pow < static_cast<i128>(t.q()); pow *= 2) out.add(pow * y + half);
  }
}

}  // namespace

std::vector<Residue> witness_hints(const Triple& t) {
  if (2 * t.r() <= t.n()) throw DomainError("witness_hints: triple is not obtuse");
  const std::uint64_t n = t.n(), p = t.p(), q = t.q();
  Candidates cand(n);

  if (std::uint64_t g = gcd(p, q); g > 1) cand.add(mod_inverse(g, n).value());
  for (std::uint64_t x : {p, q}) {
    if (x > 1 && gcd(x, n) == 1) cand.add(mod_inverse(x, n).value());
  }
  for (std::uint64_t x : {p, q}) {
    const std::uint64_t g = gcd(x, n);
    if (g == 1) continue;
    const Factorization fg(g);
    for (std::uint64_t l : fg.primes()) {
      if (l > 2) prime_factor_hints(l, t, cand);
    }
  }
  if (const std::uint64_t g = gcd(q, n); g > 1 && (g & (g - 1)) == 0) {
    power_of_two_hints(static_cast<unsigned>(__builtin_ctzll(g)), t, cand);
  }

  std::vector<std::uint64_t> values = std::move(cand).take();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Residue> out;
  for (std::uint64_t a : values) {
    if (check_witness(a, t)) out.emplace_back(a, n);
  }
  return out;
}

}  // namespace obtuse
