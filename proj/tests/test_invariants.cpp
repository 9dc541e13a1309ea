#include <doctest.h>

#include "mks/invariants.hpp"
#include "mks/sweep.hpp"

using namespace mks;

namespace {

Edgepath basic(std::vector<Fraction> vertices) {
  Edgepath p;
  p.start = vertices.front();
  p.vertices = std::move(vertices);
  return p;
}

BasicEdgepathSystem system_of(std::initializer_list<std::vector<Fraction>> chains) {
  BasicEdgepathSystem sys;
  for (const auto& c : chains) sys.push_back(basic(c));
  return sys;
}

// The annulus-type candidate of K(-1/2,1/3,1/3), cut at u = 1/2.
CandidateSystem annulus_candidate() {
  return cut_at(system_of({{Fraction(-1, 2), Fraction(-1)},
                           {Fraction(1, 3), Fraction(0)},
                           {Fraction(1, 3), Fraction(0)}}),
                Fraction(1, 2));
}

// Type I system of K(-1/2,1/3,1/7) with one constant path, cut at u = 3/5.
CandidateSystem pretzel7_type1() {
  return cut_at(system_of({{Fraction(-1, 2), Fraction(-1)},
                           {Fraction(1, 3), Fraction(1, 2), Fraction(1)},
                           {Fraction(1, 7), Fraction(0)}}),
                Fraction(3, 5));
}

// The increasing type III system of K(-1/2,1/3,1/7).
CandidateSystem pretzel7_type3() {
  return build_type_three(
      system_of({{Fraction(-1, 2), Fraction(0)},
                 {Fraction(1, 3), Fraction(1, 2), Fraction(1)},
                 {Fraction(1, 7), Fraction(1, 6), Fraction(1, 5), Fraction(1, 4), Fraction(1, 3),
                  Fraction(1, 2), Fraction(1)}}));
}

TangleList pretzel(long t) { return TangleList{{Fraction(-1, 2), Fraction(1, 3), Fraction(1, t)}}; }

}  // namespace

TEST_CASE("chi_over_s per type") {
  CHECK(chi_over_s(annulus_candidate()) == Fraction(0));
  CHECK(chi_over_s(pretzel7_type3()) == Fraction(9));  // t + 2
  CHECK(chi_over_s(pretzel7_type1()) == Fraction(1, 2));

  // one complete edge per path, no vertical run: sum + |Gamma(+0)| - 2 = 2
  CandidateSystem t2 = build_type_two(system_of(
      {{Fraction(-1, 2), Fraction(-1)}, {Fraction(1, 3), Fraction(0)}, {Fraction(1, 7), Fraction(0)}}));
  CHECK(chi_over_s(t2) == Fraction(2));
}

TEST_CASE("num_sheets is the lcm of partial and constant contributions") {
  CHECK(num_sheets(annulus_candidate()) == 2);   // lcm(1, 2, 2)
  CHECK(num_sheets(pretzel7_type1()) == 4);      // lcm(4, 2, 4) = t - 3
  CHECK(num_sheets(pretzel7_type3()) == 1);      // all complete edges
}

TEST_CASE("twist") {
  CHECK(twist(annulus_candidate()).abs() == Fraction(2));
  CHECK(twist(pretzel7_type3()) == Fraction(-18));     // -2(t+2)
  CHECK(twist(pretzel7_type1()) == Fraction(1, 2));    // 2/(t-3)
}

TEST_CASE("seifert twist via even continued fractions") {
  CHECK(seifert_twist(pretzel(7)) == Fraction(-18));
  CHECK(seifert_twist(pretzel(3)) == Fraction(-10));

  // mirroring negates the reference twist
  for (long t : {3L, 5L, 7L, 9L}) {
    TangleList k = pretzel(t);
    CHECK(seifert_twist(k.mirrored()) == -seifert_twist(k));
  }
  TangleList other{{Fraction(2, 5), Fraction(-3, 4), Fraction(1, 3)}};
  CHECK(seifert_twist(other.mirrored()) == -seifert_twist(other));
}

TEST_CASE("slope is the twist difference") {
  Fraction tau_s = seifert_twist(pretzel(7));
  CHECK(slope(pretzel7_type1(), tau_s) == Fraction(37, 2));
  CHECK(slope(pretzel7_type3(), tau_s) == Fraction(0));
}

TEST_CASE("boundary_count") {
  CHECK(boundary_count(2, 1) == 2);
  CHECK(boundary_count(4, 2) == 2);  // #s = t-3, Q = (t-3)/2 at t = 7
  CHECK(boundary_count(1, 1) == 1);
  CHECK_THROWS_AS(boundary_count(3, 2), internal_error);
}

TEST_CASE("remainder term") {
  CHECK(remainder_rho(Fraction(6), Fraction(1)) == Fraction(4));
  CHECK(remainder_rho(Fraction(-18), Fraction(9)) == Fraction(0));
  CHECK(remainder_rho(Fraction(2), Fraction(0)) == Fraction(2));  // the annulus candidate
  CHECK(remainder_rho(twist(annulus_candidate()), chi_over_s(annulus_candidate())) ==
        Fraction(2));
}

TEST_CASE("cancellation") {
  CHECK(cancellation_kappa(pretzel7_type3()) == Fraction(0));  // monotone
  CHECK(cancellation_kappa(pretzel7_type1()) == Fraction(1, 2));

  // one full increasing and one full decreasing edge
  CandidateSystem mixed = build_type_two(system_of(
      {{Fraction(-1, 2), Fraction(-1)}, {Fraction(1, 3), Fraction(0)}, {Fraction(1, 2), Fraction(1)}}));
  CHECK(cancellation_kappa(mixed) == Fraction(1));
}

TEST_CASE("distance") {
  CHECK(distance(Fraction(37, 2), Fraction(0)) == 37);
  CHECK(distance(Fraction(16), Fraction(20)) == 4);
  CHECK(distance(Fraction(1, 2), Fraction(1, 3)) == 1);
}

TEST_CASE("compute_invariants assembles consistent values") {
  Fraction tau_s = seifert_twist(pretzel(7));
  SurfaceInvariants inv = compute_invariants(pretzel7_type1(), tau_s);
  CHECK(inv.slope == Fraction(37, 2));
  CHECK(inv.chi_over_s == Fraction(1, 2));
  CHECK(inv.sheets == 4);
  CHECK(inv.boundary == 2);
  CHECK(inv.chi == -2);
  CHECK(inv.consistent);
  CHECK(inv.chi_integral);
  CHECK(inv.genus_quantity == 2);  // 2 - (-2) - 2
  CHECK(inv.rho == Fraction(1, 2) - Fraction(1));
  CHECK(inv.kappa == Fraction(1, 2));
}

TEST_CASE("simplify keeps one minimal representative per slope") {
  CandidateSystem dummy = annulus_candidate();
  auto mk = [&](Fraction slope, Fraction x, std::string enc) {
    EvaluatedCandidate ec;
    ec.system = dummy;
    ec.inv.slope = std::move(slope);
    ec.inv.chi_over_s = std::move(x);
    ec.encoding = std::move(enc);
    return ec;
  };
  std::vector<EvaluatedCandidate> in{mk(Fraction(5), Fraction(3), "b"),
                                     mk(Fraction(5), Fraction(1), "c"),
                                     mk(Fraction(0), Fraction(2), "a"),
                                     mk(Fraction(5), Fraction(1), "a")};
  auto out = simplify(in);
  REQUIRE(out.size() == 2);
  CHECK(out[0].inv.slope == Fraction(0));
  CHECK(out[1].inv.slope == Fraction(5));
  CHECK(out[1].inv.chi_over_s == Fraction(1));
  CHECK(out[1].encoding == "a");  // lexicographic tie-break

  auto single = simplify({mk(Fraction(7), Fraction(1), "x")});
  REQUIRE(single.size() == 1);
  CHECK(single[0].encoding == "x");
}

TEST_CASE("structural invariants hold over a small sweep") {
  SweepParams params;
  params.n = 3;
  params.max_den = 4;
  for (const TangleList& knot : sweep_knots(params)) {
    Fraction tau_s = seifert_twist(knot);
    for (EvaluatedCandidate& ec : evaluate_all(enumerate_candidates(knot), tau_s)) {
      CAPTURE(knot.str());
      CAPTURE(ec.encoding);
      CHECK(structural_failures(ec).empty());
      CHECK(ec.inv.chi_integral);
      CHECK(ec.inv.consistent);
      CHECK(ec.inv.genus_quantity >= 0);
    }
  }
}
