#include "mks/arith.hpp"

#include <algorithm>

namespace mks {

TangleList TangleList::mirrored() const {
  TangleList out;
  out.tangles.reserve(tangles.size());
  for (const Fraction& k : tangles) out.tangles.push_back(-k);
  return out;
}

std::string TangleList::str() const {
  std::string s = "K(";
  for (std::size_t i = 0; i < tangles.size(); ++i) {
    if (i) s += ",";
    s += tangles[i].str();
  }
  return s + ")";
}

bool is_knot(const TangleList& t) {
  int even_dens = 0;
  int odd_nums = 0;
  for (const Fraction& k : t.tangles) {
    if (mpz_even_p(k.den().get_mpz_t())) ++even_dens;
    if (mpz_odd_p(k.num().get_mpz_t())) ++odd_nums;
  }
  if (even_dens == 1) return true;
  if (even_dens == 0) return odd_nums % 2 == 1;
  return false;
}

TangleList validated_tangle_list(std::vector<Fraction> tangles) {
  if (tangles.size() < 3)
    throw std::invalid_argument("a Montesinos knot needs at least 3 tangles, got " +
                                std::to_string(tangles.size()));
  for (const Fraction& k : tangles) {
    if (k.is_integer())
      throw std::invalid_argument("integral tangle " + k.str() +
                                  ": every tangle must be a non-integral fraction");
  }
  TangleList t{std::move(tangles)};
  if (!is_knot(t))
    throw std::invalid_argument(t.str() + " is a link, not a knot");
  return t;
}

std::pair<Fraction, Fraction> farey_parents(const Fraction& f) {
  if (f.is_integer())
    throw std::invalid_argument("farey_parents: integer " + f.str() + " has no parents");
  const mpz_class& p = f.num();
  const mpz_class& q = f.den();
  // s = p^{-1} mod q in [1, q-1]; then r = (p*s - 1)/q gives p*s - q*r = 1,
  // so r/s < f and the other neighbor is (p-r)/(q-s).
  mpz_class s;
  if (mpz_invert(s.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t()) == 0)
    throw internal_error("farey_parents: not coprime: " + f.str());
  mpz_class r = (p * s - 1) / q;
  Fraction lower(r, s);
  Fraction upper(p - r, q - s);
  return {lower, upper};
}

namespace {

// Tail of the expansion: recip is the current remainder reciprocal, |recip|>1.
// At most one even integer a satisfies |recip - a| < 1, which is what keeps
// the remainder denominators strictly decreasing.
void even_cf_tail(const Fraction& recip, std::vector<mpz_class>& cur,
                  std::vector<std::vector<mpz_class>>& out) {
  if (recip.is_integer()) {
    if (mpz_even_p(recip.num().get_mpz_t())) {
      cur.push_back(recip.num());
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  mpz_class half_floor = Fraction(recip.num(), 2 * recip.den()).floor();
  mpz_class low_even = 2 * half_floor;
  const Fraction one(1);
  for (mpz_class a : {low_even, mpz_class(low_even + 2)}) {
    if (abs(a) < 2) continue;
    Fraction diff = recip - Fraction(a);
    if (diff.abs() >= one) continue;
    cur.push_back(a);
    even_cf_tail(diff.reciprocal(), cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<mpz_class> even_cf(const Fraction& f) {
  if (f.is_integer())
    throw std::invalid_argument("even_cf: input must be non-integral, got " + f.str());
  bool den_even = mpz_even_p(f.den().get_mpz_t());
  std::vector<std::vector<mpz_class>> found;
  std::vector<mpz_class> cur;
  for (mpz_class a0 : {f.floor(), f.ceil()}) {
    if (den_even && mpz_odd_p(a0.get_mpz_t())) continue;
    cur.assign(1, a0);
    even_cf_tail((f - Fraction(a0)).reciprocal(), cur, found);
  }
  if (found.size() != 1)
    throw internal_error("even_cf: expected exactly one expansion of " + f.str() + ", found " +
                         std::to_string(found.size()));
  return found.front();
}

std::vector<Fraction> cf_convergents(const std::vector<mpz_class>& cf) {
  // Standard recurrence: h_j = a_j h_{j-1} + h_{j-2}, same for denominators.
  std::vector<Fraction> out;
  mpz_class h0 = 1, k0 = 0;  // virtual c_{-1} = 1/0
  mpz_class h1 = cf.at(0), k1 = 1;
  out.emplace_back(h1, k1);
  for (std::size_t j = 1; j < cf.size(); ++j) {
    mpz_class h2 = cf[j] * h1 + h0;
    mpz_class k2 = cf[j] * k1 + k0;
    out.emplace_back(h2, k2);
    h0 = h1;
    k0 = k1;
    h1 = h2;
    k1 = k2;
  }
  return out;
}

namespace {

// Residues {1/2, 1/3, 1/t} summing to -1/2 + 1/3 + 1/t characterize
// K((-1/2)+k, (1/3)+l, (1/t)-k-l).
std::optional<mpz_class> match_pretzel_family(const TangleList& t) {
  if (t.n() != 3) return std::nullopt;
  std::vector<Fraction> res;
  Fraction sum;
  for (const Fraction& k : t.tangles) {
    res.push_back(k.frac());
    sum += k;
  }
  const Fraction half(1, 2), third(1, 3);
  for (int i = 0; i < 3; ++i) {
    if (res[i] != half) continue;
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      if (res[j] != third) continue;
      const Fraction& last = res[3 - i - j];
      if (last.num() != 1) continue;
      const mpz_class& tt = last.den();
      if (tt < 3 || mpz_even_p(tt.get_mpz_t())) continue;
      if (sum == Fraction(-1, 2) + third + last) return tt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PretzelException> detect_pretzel_exception(const TangleList& t) {
  if (auto direct = match_pretzel_family(t)) return PretzelException{*direct, false};
  if (auto mir = match_pretzel_family(t.mirrored())) return PretzelException{*mir, true};
  return std::nullopt;
}

}  // namespace mks
