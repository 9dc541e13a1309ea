#pragma once

#include <string>
#include <vector>

#include "mks/harness.hpp"

namespace mks {

// One output row per simplified candidate. All numeric fields are exact
// fraction strings; decimal columns are an opt-in convenience and never
// replace the exact values.
struct SlopeRecord {
  std::string type;
  std::string slope;
  std::string twist;
  std::string chi_over_s;
  std::string sheets;
  std::string boundary;
  std::string chi;
  std::string rho;
  std::string genus_quantity;
  std::string u0;  // empty for types II/III
  std::vector<std::string> paths;
};

std::vector<SlopeRecord> slope_records(const BoundReport& rep);

std::string slopes_to_json(const BoundReport& rep, bool decimal);
std::string slopes_to_csv(const BoundReport& rep, bool decimal);
std::string slopes_to_table(const BoundReport& rep, bool decimal);

std::string report_to_json(const BoundReport& rep);
std::string report_to_text(const BoundReport& rep);

}  // namespace mks
