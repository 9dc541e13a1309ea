// Command-line front end: boundary-slope tables, bound verification (single
// knot or sweep) and SVG diagrams for Montesinos knots.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "mks/parse.hpp"
#include "mks/serialize.hpp"
#include "mks/svg.hpp"
#include "mks/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitInternal = 3;

std::optional<mks::Fraction> parse_override(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return mks::parse_fraction(s);
}

int cmd_slopes(const std::string& knot_text, bool as_json, bool as_csv, bool decimal,
               const std::string& seifert_override) {
  mks::TangleList knot = mks::parse_knot(knot_text);
  mks::BoundReport rep = mks::report(knot, parse_override(seifert_override));
  if (as_json)
    std::cout << mks::slopes_to_json(rep, decimal);
  else if (as_csv)
    std::cout << mks::slopes_to_csv(rep, decimal);
  else
    std::cout << mks::slopes_to_table(rep, decimal);
  return kExitOk;
}

int cmd_verify_single(const std::string& knot_text, bool as_json,
                      const std::string& seifert_override) {
  mks::TangleList knot = mks::parse_knot(knot_text);
  mks::BoundReport rep = mks::report(knot, parse_override(seifert_override));
  std::cout << (as_json ? mks::report_to_json(rep) : mks::report_to_text(rep));
  if (!rep.violations.empty()) return kExitViolation;
  return rep.inconsistent_candidates == 0 ? kExitOk : kExitInternal;
}

int cmd_verify_sweep(int n, long max_den, int jobs, bool canonicalize) {
  mks::SweepParams params;
  params.n = n;
  params.max_den = max_den;
  params.jobs = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  params.canonicalize = canonicalize;

  auto t0 = std::chrono::steady_clock::now();
  mks::SweepResult res = mks::run_sweep(params);
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << "sweep N=" << n << " max-den=" << max_den << ": " << res.knots << " knots, "
            << res.candidates << " candidates, " << res.simplified << " simplified slopes\n"
            << "exceptional knots: " << res.exceptional_knots
            << ", exceptional candidates: " << res.exceptional_candidates << "\n"
            << "knots with corollary notes: " << res.corollary_note_knots
            << ", inconsistent candidates: " << res.inconsistent_candidates << "\n"
            << "violations: " << res.violations.size() << ", internal errors: "
            << res.internal_errors.size() << "  (" << dt << " s, " << params.jobs << " jobs)\n";
  for (const std::string& v : res.violations) std::cout << "VIOLATION: " << v << "\n";
  for (const std::string& e : res.internal_errors) std::cout << "INTERNAL: " << e << "\n";
  if (!res.internal_errors.empty()) return kExitInternal;
  if (!res.violations.empty()) return kExitViolation;
  return res.inconsistent_candidates == 0 ? kExitOk : kExitInternal;
}

int cmd_diagram(const std::string& knot_text, const std::string& out_path, long max_den,
                const std::string& seifert_override) {
  mks::TangleList knot = mks::parse_knot(knot_text);
  mks::BoundReport rep = mks::report(knot, parse_override(seifert_override));
  std::string svg = mks::render_diagram(rep, max_den);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write to '" + out_path + "'");
  out << svg;
  if (!out.flush()) throw std::invalid_argument("write failed for '" + out_path + "'");
  std::cout << "wrote " << out_path << " (" << svg.size() << " bytes, "
            << rep.simplified.size() << " candidate groups)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary slopes of Montesinos knots via edgepath-system enumeration"};
  app.require_subcommand(1);

  std::string knot_text, seifert_override, out_path;
  bool as_json = false, as_csv = false, decimal = false, no_canonicalize = false;
  bool sweep = false;
  int n = 3, jobs = 0;
  long max_den = 9, diagram_cap = 12;

  CLI::App* slopes = app.add_subcommand("slopes", "Table of simplified candidate surfaces");
  slopes->add_option("knot", knot_text, "e.g. \"K(-1/2,1/3,1/7)\"")->required();
  slopes->add_flag("--json", as_json, "JSON output");
  slopes->add_flag("--csv", as_csv, "CSV output");
  slopes->add_flag("--decimal", decimal, "add a decimal slope column");
  slopes->add_option("--seifert-twist", seifert_override,
                     "override the reference twist (audit aid), e.g. -18");

  CLI::App* verify = app.add_subcommand("verify", "Check the denominator/difference bounds");
  verify->add_option("knot", knot_text, "single knot to verify");
  verify->add_flag("--sweep", sweep, "verify a whole family");
  verify->add_option("--n", n, "tangle count for --sweep")->check(CLI::Range(3, 16));
  verify->add_option("--max-den", max_den, "denominator cap for --sweep");
  verify->add_option("--jobs", jobs, "worker threads (default: hardware)");
  verify->add_flag("--no-canonicalize", no_canonicalize,
                   "sweep all ordered tuples, not just sorted ones");
  verify->add_flag("--json", as_json, "JSON output (single-knot mode)");
  verify->add_option("--seifert-twist", seifert_override, "override the reference twist");

  CLI::App* diagram = app.add_subcommand("diagram", "SVG of the diagram with candidate systems");
  diagram->add_option("knot", knot_text, "knot to draw")->required();
  diagram->add_option("--out", out_path, "output SVG path")->required();
  diagram->add_option("--max-den-vertices", diagram_cap, "vertex denominator cap");
  diagram->add_option("--seifert-twist", seifert_override, "override the reference twist");

  try {
    app.parse(argc, argv);
    if (slopes->parsed()) return cmd_slopes(knot_text, as_json, as_csv, decimal, seifert_override);
    if (verify->parsed()) {
      if (sweep) return cmd_verify_sweep(n, max_den, jobs, !no_canonicalize);
      if (knot_text.empty()) {
        std::cerr << "verify: give a knot or --sweep\n";
        return kExitUsage;
      }
      return cmd_verify_single(knot_text, as_json, seifert_override);
    }
    if (diagram->parsed())
      return cmd_diagram(knot_text, out_path, diagram_cap, seifert_override);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const mks::internal_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
