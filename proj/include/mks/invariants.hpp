#pragma once

#include <string>
#include <vector>

#include "mks/candidates.hpp"

namespace mks {

// Exact invariants of one candidate surface. chi is derived as
// -(chi_over_s * sheets) and its integrality is asserted; boundary comes from
// sheets = Q * boundary, and a candidate where Q does not divide sheets is
// flagged inconsistent instead of aborting the batch.
struct SurfaceInvariants {
  Fraction twist;            // tau
  Fraction chi_over_s;       // -chi / #s
  mpz_class sheets = 1;      // #s
  Fraction slope;            // R = P/Q, reduced
  mpz_class boundary = 1;    // #b
  mpz_class chi = 0;
  Fraction rho;              // |tau| - 2(-chi/#s)
  Fraction kappa;            // min(l+, l-)
  mpz_class genus_quantity = 0;  // 2 - chi - #b; orientable genus doubles
  bool consistent = true;    // sheets = Q * boundary held
  bool chi_integral = true;
};

Fraction chi_over_s(const CandidateSystem& c);
mpz_class num_sheets(const CandidateSystem& c);
Fraction twist(const CandidateSystem& c);

// Twist of the reference (Seifert) candidate: per tangle, the basic edgepath
// through the convergents of the all-even continued fraction expansion.
Fraction seifert_twist(const TangleList& t);
BasicEdgepathSystem seifert_reference_paths(const TangleList& t);

Fraction slope(const CandidateSystem& c, const Fraction& tau_s);

// sheets / Q; throws internal_error when Q does not divide sheets.
mpz_class boundary_count(const mpz_class& sheets, const mpz_class& q);

Fraction remainder_rho(const Fraction& tau, const Fraction& chi_over_s);

// Total lengths l+ and l- of positive- and negative-sign non-inf edges over
// the non-constant paths; kappa = min(l+, l-).
Fraction cancellation_kappa(const CandidateSystem& c);
std::pair<Fraction, Fraction> signed_edge_lengths(const CandidateSystem& c);

// Minimal geometric intersection number |P1*Q2 - P2*Q1| of two slopes.
mpz_class distance(const Fraction& r1, const Fraction& r2);

SurfaceInvariants compute_invariants(const CandidateSystem& c, const Fraction& tau_s);

struct EvaluatedCandidate {
  CandidateSystem system;
  SurfaceInvariants inv;
  std::string encoding;
};

std::vector<EvaluatedCandidate> evaluate_all(std::vector<CandidateSystem> cands,
                                             const Fraction& tau_s);

// One representative of minimal -chi/#s per boundary slope, ties broken by
// lexicographically least encoding; output sorted by slope then -chi/#s.
std::vector<EvaluatedCandidate> simplify(const std::vector<EvaluatedCandidate>& cands);

// Structural identities every candidate must satisfy: chi integrality,
// sheets = Q*boundary (or flagged), the rho identity, the twist-cancellation
// identity |tau| = 2*sum|gamma_{>=0}| - 4*kappa, and genus_quantity >= 0.
// Returns human-readable failure descriptions, empty when all hold.
std::vector<std::string> structural_failures(const EvaluatedCandidate& ec);

}  // namespace mks
