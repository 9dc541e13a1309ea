#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mks/invariants.hpp"

namespace mks {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct PairwiseCheck {
  std::size_t i = 0, j = 0;  // indices into the simplified list
  Fraction difference;       // |R_i - R_j|
  mpz_class dist;            // Delta(R_i, R_j)
  Fraction bound;            // 2(x_i + x_j) + 4
  bool pass = true;          // the difference bound
  std::vector<CheckResult> corollaries;
};

// Full verification record for one knot. violations is empty exactly when
// every bound check passed; corollary evaluations whose proofs need
// essentiality or orientability are recorded per pair but reported as notes,
// not violations, since the candidate set is a superset of the essential
// surfaces.
struct BoundReport {
  TangleList knot;
  std::optional<PretzelException> exception;
  Fraction tau_seifert;
  std::vector<EvaluatedCandidate> simplified;
  std::vector<std::vector<CheckResult>> per_candidate;
  std::vector<PairwiseCheck> pairwise;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  std::size_t total_candidates = 0;
  std::size_t exceptional_candidates = 0;   // candidates passing only the weakened bounds
  std::size_t inconsistent_candidates = 0;  // flagged Q does not divide #s, excluded from checks
};

// Q <= -chi/#b, weakened to Q <= -chi/#b + 1 with #b >= 2 for candidates of
// the exceptional pretzel family.
CheckResult check_denominator_bound(const SurfaceInvariants& inv, bool exceptional);

// -chi/#s >= 1, weakened to >= (Q-1)/Q with #b >= 2 for exceptional knots.
CheckResult check_chi_ratio_lower(const SurfaceInvariants& inv, bool exceptional);

// Remainder-term claims over the simplified list: rho <= 4 everywhere,
// rho <= 0 for type III, at most one candidate with rho > 0, and
// rho_i + rho_j <= 4 for every pair.
std::vector<CheckResult> check_remainder_claims(const std::vector<EvaluatedCandidate>& cands);

// |R1 - R2| <= 2(x1 + x2) + 4 plus the equivalent distance form; corollary
// evaluations (genus, linear, quadratic forms) are attached as annotations.
PairwiseCheck check_difference_bound(std::size_t i, const EvaluatedCandidate& a, std::size_t j,
                                     const EvaluatedCandidate& b);

// Full pipeline: enumerate, evaluate, simplify, run every check.
BoundReport report(const TangleList& t);
BoundReport report(const TangleList& t, const std::optional<Fraction>& seifert_override);

}  // namespace mks
