#include "obtuse/geometry.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "obtuse/errors.hpp"

namespace obtuse::geometry {

namespace {

void require_star_shape(std::uint64_t n) {
  if (n < 12 || n % 8 != 4) throw DomainError("star unfolding needs n = 4 (mod 8) and n >= 12");
}

double interior_angle(std::uint64_t n) {
  return static_cast<double>(n - 2) * std::numbers::pi / static_cast<double>(n);
}

}  // namespace

RationalAngle::RationalAngle(std::int64_t k, std::int64_t m) {
  if (m == 0) throw DomainError("angle denominator must be nonzero");
  if (m < 0) {
    k = -k;
    m = -m;
  }
  const std::int64_t g = std::gcd(k, m);
  k_ = k / g;
  m_ = m / g;
}

StarCylinders star_cylinders(std::uint64_t n) {
  require_star_shape(n);
  const double a = interior_angle(n);
  CylinderData top{std::sin(a), 2 - 4 * std::cos(a) + 2 * std::cos(2 * a) - 2 * std::cos(3 * a), 0, CylinderSide::top};
  CylinderData bottom{-std::sin(2 * a), 1 - 2 * std::cos(a) + 2 * std::cos(2 * a), 0, CylinderSide::bottom};
  for (CylinderData* c : {&top, &bottom}) {
    if (!(c->height > 0 && c->circumference > 0)) throw std::logic_error("cylinder with non-positive dimension");
    c->modulus = c->height / c->circumference;
  }
  return {top, bottom};
}

double moduli_ratio(std::uint64_t n) {
  require_star_shape(n);
  const double c = std::cos(interior_angle(n));
  return 4 * c * c;
}

double cylinder_ratio(const StarCylinders& c) { return c.bottom.modulus / c.top.modulus; }

RationalAngle doubled_interior_angle(std::uint64_t n) {
  return RationalAngle(2 * (static_cast<std::int64_t>(n) - 2), static_cast<std::int64_t>(n));
}

std::optional<Rational> rational_cosine(const RationalAngle& angle) {
  const std::int64_t m = angle.denominator();
  if (m > 3) return std::nullopt;
  // Position of the angle on the circle in units of pi/m, in [0, 2m).
  const std::int64_t k = ((angle.numerator() % (2 * m)) + 2 * m) % (2 * m);
  switch (m) {
    case 1: return Rational(k == 0 ? 1 : -1);
    case 2: return Rational(0);
    default: return (k == 1 || k == 5) ? Rational(1, 2) : Rational(-1, 2);
  }
}

LatticeStatus family3_verdict(std::uint64_t n) {
  require_star_shape(n);
  if (n == 12) return {Lattice::lattice, std::string(provenance::hooper)};
  if (rational_cosine(doubled_interior_angle(n))) {
    throw std::logic_error("rational cosine of 2 alpha for n > 12 in the star family");
  }
  return {Lattice::not_lattice,
          std::string(provenance::cylinder_moduli) +
              ": moduli ratio 4cos^2(alpha) is irrational; parallel cylinders on a Veech surface "
              "have commensurable moduli (Veech, Remark on p. 582)"};
}

}  // namespace obtuse::geometry
