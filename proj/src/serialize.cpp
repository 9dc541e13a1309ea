#include "mks/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace mks {

using nlohmann::json;

std::vector<SlopeRecord> slope_records(const BoundReport& rep) {
  std::vector<SlopeRecord> out;
  out.reserve(rep.simplified.size());
  for (const EvaluatedCandidate& ec : rep.simplified) {
    SlopeRecord r;
    r.type = surface_type_name(ec.system.kind);
    r.slope = ec.inv.slope.str();
    r.twist = ec.inv.twist.str();
    r.chi_over_s = ec.inv.chi_over_s.str();
    r.sheets = ec.inv.sheets.get_str();
    r.boundary = ec.inv.boundary.get_str();
    r.chi = ec.inv.chi.get_str();
    r.rho = ec.inv.rho.str();
    r.genus_quantity = ec.inv.genus_quantity.get_str();
    if (ec.system.u0) r.u0 = ec.system.u0->str();
    for (const Edgepath& p : ec.system.paths) r.paths.push_back(encode(p));
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

double decimal_of(const std::string& frac) {
  std::size_t slash = frac.find('/');
  if (slash == std::string::npos) return std::stod(frac);
  return std::stod(frac.substr(0, slash)) / std::stod(frac.substr(slash + 1));
}

std::string decimal_str(const std::string& frac) {
  std::ostringstream os;
  os.precision(10);
  os << decimal_of(frac);
  return os.str();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    q += c;
  }
  return q + "\"";
}

json record_json(const SlopeRecord& r, bool decimal) {
  json j{{"type", r.type},
         {"slope", r.slope},
         {"twist", r.twist},
         {"chi_over_s", r.chi_over_s},
         {"sheets", r.sheets},
         {"boundary", r.boundary},
         {"chi", r.chi},
         {"rho", r.rho},
         {"genus_quantity", r.genus_quantity},
         {"paths", r.paths}};
  if (!r.u0.empty()) j["u0"] = r.u0;
  if (decimal) j["slope_decimal"] = decimal_of(r.slope);
  return j;
}

}  // namespace

std::string slopes_to_json(const BoundReport& rep, bool decimal) {
  json j;
  j["knot"] = rep.knot.str();
  j["seifert_twist"] = rep.tau_seifert.str();
  if (rep.exception) {
    j["pretzel_exception"] = {{"t", rep.exception->t.get_str()},
                              {"mirrored", rep.exception->mirrored}};
  }
  j["candidates"] = json::array();
  for (const SlopeRecord& r : slope_records(rep)) j["candidates"].push_back(record_json(r, decimal));
  return j.dump(2) + "\n";
}

std::string slopes_to_csv(const BoundReport& rep, bool decimal) {
  std::string out =
      "type,slope,twist,chi_over_s,sheets,boundary,chi,rho,genus_quantity,u0,paths";
  if (decimal) out += ",slope_decimal";
  out += "\n";
  for (const SlopeRecord& r : slope_records(rep)) {
    std::string paths;
    for (std::size_t i = 0; i < r.paths.size(); ++i) {
      if (i) paths += "|";
      paths += r.paths[i];
    }
    out += r.type + "," + r.slope + "," + r.twist + "," + r.chi_over_s + "," + r.sheets + "," +
           r.boundary + "," + r.chi + "," + r.rho + "," + r.genus_quantity + "," + r.u0 + "," +
           csv_quote(paths);
    if (decimal) out += "," + decimal_str(r.slope);
    out += "\n";
  }
  return out;
}

std::string slopes_to_table(const BoundReport& rep, bool decimal) {
  std::vector<SlopeRecord> recs = slope_records(rep);
  std::vector<std::string> headers{"type", "slope",          "twist", "chi/#s", "#s",
                                   "#b",   "chi",            "rho",   "g2",     "u0"};
  if (decimal) headers.push_back("slope~");
  std::vector<std::vector<std::string>> rows;
  for (const SlopeRecord& r : recs) {
    std::vector<std::string> row{r.type, r.slope, r.twist, r.chi_over_s, r.sheets,
                                 r.boundary, r.chi, r.rho, r.genus_quantity, r.u0};
    if (decimal) row.push_back(decimal_str(r.slope));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    width[c] = headers[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  os << rep.knot.str() << "  (tau_S = " << rep.tau_seifert.str() << ")";
  if (rep.exception)
    os << "  pretzel exception t = " << rep.exception->t.get_str()
       << (rep.exception->mirrored ? " (mirrored)" : "");
  os << "\n";
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c] << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  };
  emit_row(headers);
  for (const auto& row : rows) emit_row(row);
  os << rows.size() << " simplified candidate(s), " << rep.total_candidates
     << " before simplification (superset of essential surfaces; not filtered for"
        " incompressibility)\n";
  return os.str();
}

std::string report_to_json(const BoundReport& rep) {
  json j;
  j["knot"] = rep.knot.str();
  j["seifert_twist"] = rep.tau_seifert.str();
  j["total_candidates"] = rep.total_candidates;
  j["simplified"] = rep.simplified.size();
  if (rep.exception)
    j["pretzel_exception"] = {{"t", rep.exception->t.get_str()},
                              {"mirrored", rep.exception->mirrored}};
  j["exceptional_candidates"] = rep.exceptional_candidates;
  json checks = json::array();
  for (std::size_t i = 0; i < rep.simplified.size(); ++i) {
    json c{{"slope", rep.simplified[i].inv.slope.str()}, {"checks", json::array()}};
    for (const CheckResult& cr : rep.per_candidate[i])
      c["checks"].push_back({{"name", cr.name}, {"pass", cr.pass}, {"detail", cr.detail}});
    checks.push_back(std::move(c));
  }
  j["per_candidate"] = std::move(checks);
  json pairs = json::array();
  for (const PairwiseCheck& pc : rep.pairwise) {
    json p{{"slopes", {rep.simplified[pc.i].inv.slope.str(), rep.simplified[pc.j].inv.slope.str()}},
           {"difference", pc.difference.str()},
           {"distance", pc.dist.get_str()},
           {"bound", pc.bound.str()},
           {"pass", pc.pass}};
    for (const CheckResult& cr : pc.corollaries)
      p["corollaries"].push_back({{"name", cr.name}, {"pass", cr.pass}, {"detail", cr.detail}});
    pairs.push_back(std::move(p));
  }
  j["pairwise"] = std::move(pairs);
  j["violations"] = rep.violations;
  j["notes"] = rep.notes;
  return j.dump(2) + "\n";
}

std::string report_to_text(const BoundReport& rep) {
  std::ostringstream os;
  os << rep.knot.str() << ": " << rep.total_candidates << " candidates, "
     << rep.simplified.size() << " simplified slopes";
  if (rep.exception)
    os << ", pretzel exception t = " << rep.exception->t.get_str()
       << (rep.exception->mirrored ? " (mirrored)" : "");
  os << "\n";
  os << "slopes:";
  for (const EvaluatedCandidate& ec : rep.simplified) os << " " << ec.inv.slope.str();
  os << "\n";
  for (const std::string& n : rep.notes) os << "note: " << n << "\n";
  if (rep.violations.empty()) {
    os << "all bound checks pass\n";
  } else {
    for (const std::string& v : rep.violations) os << "VIOLATION: " << v << "\n";
  }
  return os.str();
}

}  // namespace mks
