#include "mks/harness.hpp"

#include <algorithm>

namespace mks {

namespace {

Fraction chi_over_b(const SurfaceInvariants& inv) {
  return Fraction(-inv.chi, inv.boundary);
}

}  // namespace

CheckResult check_denominator_bound(const SurfaceInvariants& inv, bool exceptional) {
  CheckResult r{"denominator bound", true, ""};
  Fraction q(inv.slope.den());
  Fraction bound = chi_over_b(inv);
  if (q <= bound) return r;
  if (exceptional && q <= bound + Fraction(1) && inv.boundary >= 2) {
    r.detail = "weakened";
    return r;
  }
  r.pass = false;
  r.detail = "Q = " + q.str() + " > -chi/#b = " + bound.str() +
             (exceptional ? " (+1 clause failed)" : "");
  return r;
}

CheckResult check_chi_ratio_lower(const SurfaceInvariants& inv, bool exceptional) {
  CheckResult r{"chi ratio lower bound", true, ""};
  const Fraction& x = inv.chi_over_s;
  if (x >= Fraction(1)) return r;
  if (exceptional && x >= Fraction(inv.slope.den() - 1, inv.slope.den()) && inv.boundary >= 2) {
    r.detail = "weakened";
    return r;
  }
  r.pass = false;
  r.detail = "-chi/#s = " + x.str() + " < 1" + (exceptional ? " ((Q-1)/Q clause failed)" : "");
  return r;
}

std::vector<CheckResult> check_remainder_claims(const std::vector<EvaluatedCandidate>& cands) {
  std::vector<CheckResult> out;
  const Fraction four(4), zero(0);

  CheckResult all4{"rho <= 4 (types I and II)", true, ""};
  CheckResult type3{"type III rho <= 0", true, ""};
  CheckResult at_most_one{"at most one candidate with rho > 0", true, ""};
  CheckResult pair_sum{"pairwise rho_1 + rho_2 <= 4", true, ""};

  int positive = 0;
  // Largest and second-largest rho bound every pairwise sum.
  const Fraction* top1 = nullptr;
  const Fraction* top2 = nullptr;
  for (const EvaluatedCandidate& ec : cands) {
    const Fraction& rho = ec.inv.rho;
    if (rho > four) {
      all4.pass = false;
      all4.detail = "rho = " + rho.str() + " [" + ec.encoding + "]";
    }
    if (ec.system.kind == SurfaceType::III && rho > zero) {
      type3.pass = false;
      type3.detail = "rho = " + rho.str() + " [" + ec.encoding + "]";
    }
    if (rho > zero) ++positive;
    if (!top1 || rho > *top1) {
      top2 = top1;
      top1 = &rho;
    } else if (!top2 || rho > *top2) {
      top2 = &rho;
    }
  }
  if (positive > 1) {
    at_most_one.pass = false;
    at_most_one.detail = std::to_string(positive) + " candidates with rho > 0";
  }
  if (top1 && top2 && *top1 + *top2 > four) {
    pair_sum.pass = false;
    pair_sum.detail = "max pair sum = " + (*top1 + *top2).str();
  }
  out.push_back(std::move(all4));
  out.push_back(std::move(type3));
  out.push_back(std::move(at_most_one));
  out.push_back(std::move(pair_sum));
  return out;
}

PairwiseCheck check_difference_bound(std::size_t i, const EvaluatedCandidate& a, std::size_t j,
                                     const EvaluatedCandidate& b) {
  PairwiseCheck pc;
  pc.i = i;
  pc.j = j;
  const SurfaceInvariants& x = a.inv;
  const SurfaceInvariants& y = b.inv;
  pc.difference = (x.slope - y.slope).abs();
  pc.dist = distance(x.slope, y.slope);
  pc.bound = Fraction(2) * (x.chi_over_s + y.chi_over_s) + Fraction(4);
  pc.pass = pc.difference <= pc.bound;

  // Equivalent distance form of the same bound.
  {
    CheckResult r{"distance form", true, ""};
    Fraction rhs = Fraction(2) * (Fraction(y.slope.den()) * chi_over_b(x) +
                                  Fraction(x.slope.den()) * chi_over_b(y)) +
                   Fraction(mpz_class(4 * x.slope.den() * y.slope.den()));
    if (Fraction(pc.dist) > rhs) {
      r.pass = false;
      r.detail = "Delta = " + pc.dist.get_str() + " > " + rhs.str();
    }
    pc.corollaries.push_back(std::move(r));
  }
  // Genus form, orientable-compatible candidates only.
  {
    CheckResult r{"genus form |R1-R2| <= 4(g1+g2)", true, ""};
    bool even1 = mpz_even_p(x.genus_quantity.get_mpz_t());
    bool even2 = mpz_even_p(y.genus_quantity.get_mpz_t());
    if (!even1 || !even2) {
      r.detail = "skipped: odd genus quantity (orientability unclassified)";
    } else {
      Fraction rhs = Fraction(mpz_class(2 * (x.genus_quantity + y.genus_quantity)));
      if (pc.difference > rhs) {
        r.pass = false;
        r.detail = pc.difference.str() + " > " + rhs.str();
      }
    }
    pc.corollaries.push_back(std::move(r));
  }
  // Linear form.
  {
    CheckResult r{"linear form |R1-R2| <= 6(x1+x2)", true, ""};
    Fraction rhs = Fraction(6) * (x.chi_over_s + y.chi_over_s);
    if (pc.difference > rhs) {
      r.pass = false;
      r.detail = pc.difference.str() + " > " + rhs.str();
    }
    pc.corollaries.push_back(std::move(r));
  }
  // Quadratic form, needs both Euler characteristics negative.
  {
    CheckResult r{"quadratic form Delta <= 8(-chi1/#b1)(-chi2/#b2)", true, ""};
    if (x.chi >= 0 || y.chi >= 0) {
      r.detail = "skipped: nonnegative Euler characteristic";
    } else {
      Fraction rhs = Fraction(8) * chi_over_b(x) * chi_over_b(y);
      if (Fraction(pc.dist) > rhs) {
        r.pass = false;
        r.detail = pc.dist.get_str() + " > " + rhs.str();
      }
    }
    pc.corollaries.push_back(std::move(r));
  }
  return pc;
}

namespace {

// Q <= g2 - 1 when #b = 1, Q <= g2/2 + 1 when #b >= 2; algebraic consequence
// of the strict denominator bound, so evaluated only for strict passers.
CheckResult check_genus_denominator_form(const SurfaceInvariants& inv) {
  CheckResult r{"genus denominator form", true, ""};
  Fraction q(inv.slope.den());
  Fraction rhs = inv.boundary == 1 ? Fraction(mpz_class(inv.genus_quantity - 1))
                                   : Fraction(inv.genus_quantity, 2) + Fraction(1);
  if (q > rhs) {
    r.pass = false;
    r.detail = "Q = " + q.str() + " > " + rhs.str();
  }
  return r;
}

}  // namespace

BoundReport report(const TangleList& t) { return report(t, std::nullopt); }

BoundReport report(const TangleList& t, const std::optional<Fraction>& seifert_override) {
  BoundReport rep;
  rep.knot = validated_tangle_list(t.tangles);
  rep.exception = detect_pretzel_exception(rep.knot);
  rep.tau_seifert = seifert_override ? *seifert_override : seifert_twist(rep.knot);

  std::vector<CandidateSystem> cands = enumerate_candidates(rep.knot);
  rep.total_candidates = cands.size();
  std::vector<EvaluatedCandidate> evaluated = evaluate_all(std::move(cands), rep.tau_seifert);

  std::vector<EvaluatedCandidate> usable;
  usable.reserve(evaluated.size());
  for (EvaluatedCandidate& ec : evaluated) {
    for (std::string& f : structural_failures(ec))
      rep.violations.push_back("structural: " + std::move(f));
    if (!ec.inv.consistent) {
      ++rep.inconsistent_candidates;
      rep.notes.push_back("inconsistent candidate excluded from checks: Q = " +
                          ec.inv.slope.den().get_str() + " does not divide #s = " +
                          ec.inv.sheets.get_str() + " [" + ec.encoding + "]");
      continue;
    }
    if (!ec.inv.chi_integral) continue;  // already a structural violation
    usable.push_back(std::move(ec));
  }

  rep.simplified = simplify(usable);
  bool exceptional = rep.exception.has_value();

  for (const EvaluatedCandidate& ec : rep.simplified) {
    std::vector<CheckResult> checks;
    checks.push_back(check_denominator_bound(ec.inv, exceptional));
    checks.push_back(check_chi_ratio_lower(ec.inv, exceptional));
    bool weakened = false;
    for (const CheckResult& c : checks) {
      if (!c.pass)
        rep.violations.push_back(c.name + ": " + c.detail + " [" + ec.encoding + "]");
      else if (c.detail == "weakened")
        weakened = true;
    }
    if (Fraction(ec.inv.slope.den()) <= chi_over_b(ec.inv)) {
      CheckResult g = check_genus_denominator_form(ec.inv);
      if (!g.pass) rep.violations.push_back(g.name + ": " + g.detail + " [" + ec.encoding + "]");
      checks.push_back(std::move(g));
    }
    if (weakened) ++rep.exceptional_candidates;
    rep.per_candidate.push_back(std::move(checks));
  }
  if (rep.exceptional_candidates > 0)
    rep.notes.push_back(std::to_string(rep.exceptional_candidates) +
                        " candidate(s) pass only the weakened pretzel bounds");

  for (CheckResult& c : check_remainder_claims(rep.simplified)) {
    if (!c.pass) rep.violations.push_back("remainder: " + c.name + ": " + c.detail);
  }

  std::size_t corollary_failures = 0;
  for (std::size_t i = 0; i < rep.simplified.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.simplified.size(); ++j) {
      PairwiseCheck pc = check_difference_bound(i, rep.simplified[i], j, rep.simplified[j]);
      if (!pc.pass)
        rep.violations.push_back("difference bound: |" + rep.simplified[i].inv.slope.str() +
                                 " - " + rep.simplified[j].inv.slope.str() + "| = " +
                                 pc.difference.str() + " > " + pc.bound.str());
      if (!pc.corollaries[0].pass)
        rep.violations.push_back("difference bound (distance form): " + pc.corollaries[0].detail);
      for (std::size_t k = 1; k < pc.corollaries.size(); ++k)
        if (!pc.corollaries[k].pass) ++corollary_failures;
      rep.pairwise.push_back(std::move(pc));
    }
  }
  if (corollary_failures > 0)
    rep.notes.push_back(std::to_string(corollary_failures) +
                        " corollary evaluation(s) fail on the candidate superset");
  return rep;
}

}  // namespace mks
