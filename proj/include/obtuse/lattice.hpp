#pragma once

#include <string>
#include <string_view>

namespace obtuse {

enum class Lattice { lattice, not_lattice, out_of_theorem_scope };

std::string_view to_string(Lattice l);

/// Lattice verdict with a tag naming the fact it rests on.
struct LatticeStatus {
  Lattice status = Lattice::out_of_theorem_scope;
  std::string provenance;

  friend bool operator==(const LatticeStatus&, const LatticeStatus&) = default;
};

namespace provenance {
inline constexpr std::string_view veech_family = "veech-isosceles-family";
inline constexpr std::string_view vorobets_ward_family = "vorobets-ward-family";
inline constexpr std::string_view hooper = "hooper-triangle";
inline constexpr std::string_view mw_criterion = "mw-criterion";
inline constexpr std::string_view cylinder_moduli = "cylinder-moduli";
inline constexpr std::string_view rde_check = "rde-dense-orbit-check";
inline constexpr std::string_view none = "none";
}  // namespace provenance

}  // namespace obtuse
