#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mks/fraction.hpp"

namespace mks {

// Ordered tangles of a Montesinos knot K(K_1, ..., K_N). The struct itself is
// open; validated_tangle_list() enforces N >= 3, non-integral entries and the
// knot condition.
struct TangleList {
  std::vector<Fraction> tangles;

  int n() const { return static_cast<int>(tangles.size()); }
  TangleList mirrored() const;
  std::string str() const;  // "K(-1/2,1/3,1/7)"
};

// True iff the Montesinos link with these tangles is a knot: exactly one
// denominator is even, or all denominators are odd and the number of odd
// numerators is odd.
bool is_knot(const TangleList& t);

TangleList validated_tangle_list(std::vector<Fraction> tangles);

// The unique Farey neighbors r1/s1 < f < r2/s2 with s1, s2 < den(f) and
// |num(f)*s_i - den(f)*r_i| = 1, returned smaller value first. They satisfy
// the mediant identity s1 + s2 = den(f), r1 + r2 = num(f). Integer input is
// an error (integers are terminal vertices of the diagram).
std::pair<Fraction, Fraction> farey_parents(const Fraction& f);

// Continued fraction f = a0 + 1/(a1 + 1/(... + 1/am)) with every a_j (j >= 1)
// even and |a_j| >= 2, found by depth-first search over a0 in {floor, ceil}
// and, per level, the even integers flanking the remainder reciprocal.
// Uniqueness is a runtime check: zero or multiple expansions raise
// internal_error. For inputs with even denominator a0 is further required to
// be even (the all-even expansion), otherwise both root branches close.
std::vector<mpz_class> even_cf(const Fraction& f);

// Convergents c_0 = a0, ..., c_m = f of an expansion as above.
std::vector<Fraction> cf_convergents(const std::vector<mpz_class>& cf);

struct PretzelException {
  mpz_class t;     // odd, >= 3
  bool mirrored;   // matched after negating all tangles
};

// Detects membership in the family K((-1/2)+k, (1/3)+l, (1/t)-k-l) for odd
// t >= 3 and integers k, l, or its mirror image; these are the knots whose
// denominator and ratio bounds weaken by one unit.
std::optional<PretzelException> detect_pretzel_exception(const TangleList& t);

}  // namespace mks
