#include "mks/invariants.hpp"

#include <algorithm>
#include <map>

namespace mks {

Fraction chi_over_s(const CandidateSystem& c) {
  switch (c.kind) {
    case SurfaceType::III: {
      Fraction sum(0);
      for (const Edgepath& p : c.paths) sum += path_length(p, true);
      return sum;
    }
    case SurfaceType::II: {
      Fraction sum(0);
      for (const Edgepath& p : c.paths) sum += path_length(p, true);
      return sum + c.sum_at_zero.abs() - Fraction(2);
    }
    case SurfaceType::I: {
      const long n = static_cast<long>(c.paths.size());
      long n_const = 0;
      Fraction sum(0);
      Fraction const_inv_q(0);
      for (const Edgepath& p : c.paths) {
        if (p.is_constant()) {
          ++n_const;
          const_inv_q += Fraction(1, p.start.den());
        } else {
          sum += path_length(p, true);
        }
      }
      Fraction stretch = (Fraction(1) - *c.u0).reciprocal();
      return sum + Fraction(n_const) - Fraction(n) +
             (Fraction(n - 2) - const_inv_q) * stretch;
    }
  }
  throw internal_error("chi_over_s: bad candidate kind");
}

mpz_class num_sheets(const CandidateSystem& c) {
  mpz_class l = 1;
  for (const Edgepath& p : c.paths) {
    mpz_class m = 1;
    if (p.is_constant())
      m = p.constant_ratio->num();  // ratio k/m contributes k
    else if (p.final_partial)
      m = p.final_partial->den();   // partial length k/m contributes m
    l = lcm(l, m);
  }
  return l;
}

Fraction twist(const CandidateSystem& c) {
  Fraction t(0);
  for (const Edgepath& p : c.paths) t += twist_of_edgepath(p);
  return t;
}

BasicEdgepathSystem seifert_reference_paths(const TangleList& t) {
  BasicEdgepathSystem sys;
  sys.reserve(t.tangles.size());
  for (const Fraction& k : t.tangles) {
    std::vector<Fraction> conv = cf_convergents(even_cf(k));
    Edgepath p;
    p.start = k;
    p.vertices.assign(conv.rbegin(), conv.rend());  // read from <K_i>
    if (p.vertices.front() != k || !p.vertices.back().is_integer())
      throw internal_error("seifert_reference_paths: bad convergent chain for " + k.str());
    sys.push_back(std::move(p));
  }
  return sys;
}

Fraction seifert_twist(const TangleList& t) {
  Fraction tau(0);
  for (const Edgepath& p : seifert_reference_paths(t)) tau += twist_of_edgepath(p);
  return tau;
}

Fraction slope(const CandidateSystem& c, const Fraction& tau_s) { return twist(c) - tau_s; }

mpz_class boundary_count(const mpz_class& sheets, const mpz_class& q) {
  if (sheets % q != 0)
    throw internal_error("boundary_count: Q = " + q.get_str() + " does not divide #s = " +
                         sheets.get_str());
  return sheets / q;
}

Fraction remainder_rho(const Fraction& tau, const Fraction& chi_over_s) {
  return tau.abs() - Fraction(2) * chi_over_s;
}

std::pair<Fraction, Fraction> signed_edge_lengths(const CandidateSystem& c) {
  Fraction pos(0), neg(0);
  for (const Edgepath& p : c.paths) {
    if (p.is_constant()) continue;
    std::size_t edges = p.vertices.size() - 1;
    for (std::size_t i = 0; i < edges; ++i) {
      Fraction len = (i + 1 == edges && p.final_partial) ? *p.final_partial : Fraction(1);
      if (len.is_zero()) continue;
      if (edge_sign(p.vertices[i + 1], p.vertices[i]) > 0)
        pos += len;
      else
        neg += len;
    }
    if (p.vertical_run > 0)
      pos += Fraction(p.vertical_run);
    else if (p.vertical_run < 0)
      neg += Fraction(mpz_class(-p.vertical_run));
  }
  return {pos, neg};
}

Fraction cancellation_kappa(const CandidateSystem& c) {
  auto [pos, neg] = signed_edge_lengths(c);
  return pos < neg ? pos : neg;
}

mpz_class distance(const Fraction& r1, const Fraction& r2) {
  mpz_class d = r1.num() * r2.den() - r2.num() * r1.den();
  return abs(d);
}

SurfaceInvariants compute_invariants(const CandidateSystem& c, const Fraction& tau_s) {
  SurfaceInvariants inv;
  inv.twist = twist(c);
  inv.chi_over_s = chi_over_s(c);
  inv.sheets = num_sheets(c);
  inv.slope = inv.twist - tau_s;
  inv.rho = remainder_rho(inv.twist, inv.chi_over_s);
  inv.kappa = cancellation_kappa(c);

  Fraction chi_f = -(inv.chi_over_s * Fraction(inv.sheets));
  inv.chi_integral = chi_f.is_integer();
  inv.chi = chi_f.is_integer() ? chi_f.num() : mpz_class(0);

  try {
    inv.boundary = boundary_count(inv.sheets, inv.slope.den());
  } catch (const internal_error&) {
    inv.consistent = false;
    inv.boundary = 0;
  }
  inv.genus_quantity = 2 - inv.chi - inv.boundary;
  return inv;
}

std::vector<EvaluatedCandidate> evaluate_all(std::vector<CandidateSystem> cands,
                                             const Fraction& tau_s) {
  std::vector<EvaluatedCandidate> out;
  out.reserve(cands.size());
  for (CandidateSystem& c : cands) {
    EvaluatedCandidate ec;
    ec.inv = compute_invariants(c, tau_s);
    ec.encoding = encode(c);
    ec.system = std::move(c);
    out.push_back(std::move(ec));
  }
  return out;
}

std::vector<EvaluatedCandidate> simplify(const std::vector<EvaluatedCandidate>& cands) {
  std::map<Fraction, const EvaluatedCandidate*> best;
  for (const EvaluatedCandidate& ec : cands) {
    auto [it, inserted] = best.try_emplace(ec.inv.slope, &ec);
    if (inserted) continue;
    const EvaluatedCandidate* cur = it->second;
    if (ec.inv.chi_over_s < cur->inv.chi_over_s ||
        (ec.inv.chi_over_s == cur->inv.chi_over_s && ec.encoding < cur->encoding))
      it->second = &ec;
  }
  std::vector<EvaluatedCandidate> out;
  out.reserve(best.size());
  for (const auto& [r, ec] : best) out.push_back(*ec);
  return out;  // std::map iterates slopes in ascending order
}

std::vector<std::string> structural_failures(const EvaluatedCandidate& ec) {
  std::vector<std::string> fails;
  const SurfaceInvariants& inv = ec.inv;
  if (!inv.chi_integral)
    fails.push_back("chi = -(-chi/#s * #s) is not an integer");
  if (inv.consistent) {
    if (inv.sheets != inv.slope.den() * inv.boundary)
      fails.push_back("#s != Q * #b");
    if (inv.genus_quantity < 0)
      fails.push_back("genus quantity 2 - chi - #b is negative");
  }
  if (inv.rho != inv.twist.abs() - Fraction(2) * inv.chi_over_s)
    fails.push_back("rho identity broken");
  auto [pos, neg] = signed_edge_lengths(ec.system);
  if (inv.twist.abs() != Fraction(2) * (pos + neg) - Fraction(4) * inv.kappa)
    fails.push_back("|tau| = 2*sum(lengths) - 4*kappa identity broken");
  for (std::string& f : fails) f += " [" + ec.encoding + "]";
  return fails;
}

}  // namespace mks
