#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "obtuse/enumerate.hpp"

namespace obtuse {

inline constexpr std::string_view kRecordSchema = "obtuse-triple-record";
inline constexpr int kRecordSchemaVersion = 1;

/// Fixed field order: p, q, r, n, region, mw_satisfied, witness, families,
/// lattice_status, provenance.
nlohmann::ordered_json triple_record(const Triple& t, const Verdict& v, const FamilyLabel& families,
                                     const LatticeStatus& status);
nlohmann::ordered_json triple_record(const EnumeratedTriple& e);

std::string csv_header();
std::string csv_row(const nlohmann::ordered_json& record);

}  // namespace obtuse
