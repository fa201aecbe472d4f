#include "obtuse/record.hpp"

#include <sstream>

namespace obtuse {

nlohmann::ordered_json triple_record(const Triple& t, const Verdict& v, const FamilyLabel& families,
                                     const LatticeStatus& status) {
  nlohmann::ordered_json j;
  j["p"] = t.p();
  j["q"] = t.q();
  j["r"] = t.r();
  j["n"] = t.n();
  j["region"] = std::string(to_string(region(t)));
  j["mw_satisfied"] = v.satisfied;
  j["witness"] = v.witness ? nlohmann::ordered_json(v.witness->value()) : nlohmann::ordered_json(nullptr);
  auto fams = nlohmann::ordered_json::array();
  for (Family f : families.labels()) fams.push_back(std::string(to_string(f)));
  j["families"] = fams;
  j["lattice_status"] = std::string(to_string(status.status));
  j["provenance"] = status.provenance;
  return j;
}

nlohmann::ordered_json triple_record(const EnumeratedTriple& e) {
  return triple_record(e.triple, e.verdict, e.families, lattice_status(e.triple, e.verdict));
}

std::string csv_header() { return "p,q,r,n,region,mw_satisfied,witness,families,lattice_status,provenance"; }

std::string csv_row(const nlohmann::ordered_json& record) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream row;
  bool first = true;
  for (const auto& [key, value] : record.items()) {
    if (!first) row << ',';
    first = false;
    if (value.is_null()) continue;
    if (value.is_string()) {
      row << quote(value.get<std::string>());
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) joined += (joined.empty() ? "" : ";") + item.get<std::string>();
      row << quote(joined);
    } else {
      row << value.dump();
    }
  }
  return row.str();
}

}  // namespace obtuse
