#pragma once

// Horizontal cylinders on the star-shaped unfolding of (1, 4, r), r = 7 mod 8.
// With alpha = (n - 2) pi / n the interior angle of the regular unit n-gon:
//
//   top:    h = sin(alpha),   c = 2 - 4 cos(alpha) + 2 cos(2 alpha) - 2 cos(3 alpha)
//   bottom: h = -sin(2 alpha), c = 1 - 2 cos(alpha) + 2 cos(2 alpha)
//
// and the moduli ratio is 4 cos^2(alpha). Parallel cylinders on a lattice
// surface have commensurable moduli, so an irrational ratio rules it out.

#include <cstdint>
#include <optional>

#include <boost/rational.hpp>

#include "obtuse/lattice.hpp"

namespace obtuse::geometry {

enum class CylinderSide { top, bottom };

struct CylinderData {
  double height;
  double circumference;
  double modulus;
  CylinderSide which;
};

struct StarCylinders {
  CylinderData top;
  CylinderData bottom;
};

/// The angle k pi / m in lowest terms.
class RationalAngle {
 public:
  RationalAngle(std::int64_t k, std::int64_t m);

  std::int64_t numerator() const noexcept { return k_; }
  std::int64_t denominator() const noexcept { return m_; }

 private:
  std::int64_t k_;
  std::int64_t m_;
};

using Rational = boost::rational<std::int64_t>;

/// Throws DomainError unless n = 4 (mod 8) and n >= 12.
StarCylinders star_cylinders(std::uint64_t n);

double moduli_ratio(std::uint64_t n);

/// (h_b / c_b) / (h_t / c_t) from the cylinder data.
double cylinder_ratio(const StarCylinders& c);

/// 2 alpha = 2 (n - 2) pi / n, reduced.
RationalAngle doubled_interior_angle(std::uint64_t n);

/// cos(k pi / m) when it is rational (multiples of pi/2 or pi/3), else nullopt.
std::optional<Rational> rational_cosine(const RationalAngle& angle);

LatticeStatus family3_verdict(std::uint64_t n);

}  // namespace obtuse::geometry
