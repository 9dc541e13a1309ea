#include <doctest.h>

#include "mks/arith.hpp"

using namespace mks;

namespace {

// All reduced non-integral fractions with 2 <= den <= max_den, |num| < 2*den.
std::vector<Fraction> small_fractions(long max_den) {
  std::vector<Fraction> out;
  for (long q = 2; q <= max_den; ++q)
    for (long p = -(2 * q - 1); p < 2 * q; ++p) {
      if (p == 0 || gcd(mpz_class(p), mpz_class(q)) != 1) continue;
      out.emplace_back(p, q);
    }
  return out;
}

Fraction eval_cf(const std::vector<mpz_class>& cf) {
  Fraction acc(cf.back());
  for (std::size_t i = cf.size() - 1; i-- > 0;) acc = Fraction(cf[i]) + acc.reciprocal();
  return acc;
}

}  // namespace

TEST_CASE("reduce") {
  CHECK(reduce(2, 4) == Fraction(1, 2));
  CHECK(reduce(-3, -6) == Fraction(1, 2));
  CHECK(reduce(0, 5) == Fraction(0, 1));
  CHECK(reduce(0, 5).den() == 1);
  CHECK(reduce(7, -3) == Fraction(-7, 3));
  CHECK(reduce(7, -3).den() == 3);
  CHECK_THROWS_AS(reduce(1, 0), std::invalid_argument);
}

TEST_CASE("fraction arithmetic and order") {
  Fraction a(1, 2), b(1, 3);
  CHECK(a + b == Fraction(5, 6));
  CHECK(a - b == Fraction(1, 6));
  CHECK(a * b == Fraction(1, 6));
  CHECK(a / b == Fraction(3, 2));
  CHECK(b < a);
  CHECK(Fraction(-1, 2) < Fraction(1, 3));
  CHECK(Fraction(2, 4) == Fraction(1, 2));
  CHECK(Fraction(-7, 2).floor() == -4);
  CHECK(Fraction(-7, 2).ceil() == -3);
  CHECK(Fraction(-7, 2).frac() == Fraction(1, 2));
  CHECK(Fraction(5, 3).str() == "5/3");
  CHECK(Fraction(-4).str() == "-4");
}

TEST_CASE("farey_parents examples") {
  CHECK(farey_parents(Fraction(1, 2)) == std::pair{Fraction(0), Fraction(1)});
  CHECK(farey_parents(Fraction(1, 3)) == std::pair{Fraction(0), Fraction(1, 2)});
  // brute force over all s < 5 checking |ps - qr| = 1 gives (1/3, 1/2)
  CHECK(farey_parents(Fraction(2, 5)) == std::pair{Fraction(1, 3), Fraction(1, 2)});
  CHECK(farey_parents(Fraction(-1, 2)) == std::pair{Fraction(-1), Fraction(0)});
  CHECK_THROWS_AS(farey_parents(Fraction(3)), std::invalid_argument);
}

TEST_CASE("farey_parents mediant identity and brute-force agreement") {
  for (const Fraction& f : small_fractions(12)) {
    auto [lo, hi] = farey_parents(f);
    CHECK(lo < f);
    CHECK(f < hi);
    CHECK(lo.den() + hi.den() == f.den());
    CHECK(lo.num() + hi.num() == f.num());
    CHECK(abs(mpz_class(f.num() * lo.den() - f.den() * lo.num())) == 1);
    CHECK(abs(mpz_class(f.num() * hi.den() - f.den() * hi.num())) == 1);
    CHECK(mediant(lo, hi) == f);

    // independent search: the unique adjacent fractions with smaller denominator
    int found = 0;
    for (long s = 1; s < f.den().get_si(); ++s) {
      mpz_class r_lo = (f.num() * s - 1), r_hi = (f.num() * s + 1);
      for (const mpz_class& t : {r_lo, r_hi}) {
        if (t % f.den() != 0) continue;
        Fraction cand(t / f.den(), s);
        if (cand.den() != s) continue;  // not reduced at this s
        ++found;
        CHECK((cand == lo || cand == hi));
      }
    }
    CHECK(found == 2);
  }
}

TEST_CASE("even_cf examples") {
  CHECK(even_cf(Fraction(-1, 2)) == std::vector<mpz_class>{0, -2});
  CHECK(even_cf(Fraction(1, 3)) == std::vector<mpz_class>{1, -2, 2});
  CHECK(even_cf(Fraction(1, 5)) == std::vector<mpz_class>{1, -2, 2, -2, 2});
  CHECK_THROWS_AS(even_cf(Fraction(4)), std::invalid_argument);
}

TEST_CASE("even_cf properties") {
  for (const Fraction& f : small_fractions(40)) {
    std::vector<mpz_class> cf = even_cf(f);
    CHECK(eval_cf(cf) == f);
    for (std::size_t j = 1; j < cf.size(); ++j) {
      CHECK(mpz_even_p(cf[j].get_mpz_t()));
      CHECK(abs(cf[j]) >= 2);
    }
    std::vector<Fraction> conv = cf_convergents(cf);
    CHECK(conv.front() == Fraction(cf[0]));
    CHECK(conv.back() == f);
    for (std::size_t j = 0; j + 1 < conv.size(); ++j) {
      mpz_class det = conv[j].num() * conv[j + 1].den() - conv[j].den() * conv[j + 1].num();
      CHECK(abs(det) == 1);
      CHECK(conv[j].den() < conv[j + 1].den());
    }
  }
}

TEST_CASE("is_knot") {
  auto knot = [](std::vector<Fraction> v) { return is_knot(TangleList{std::move(v)}); };
  CHECK(knot({Fraction(-1, 2), Fraction(1, 3), Fraction(1, 7)}));
  CHECK(knot({Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)}));
  CHECK_FALSE(knot({Fraction(1, 3), Fraction(2, 3), Fraction(1, 3)}));
  CHECK_FALSE(knot({Fraction(1, 2), Fraction(1, 2), Fraction(1, 3)}));  // two even dens

  // invariant under mirroring
  std::vector<Fraction> dom = small_fractions(5);
  for (std::size_t a = 0; a < dom.size(); a += 3)
    for (std::size_t b = a; b < dom.size(); b += 5)
      for (std::size_t c = b; c < dom.size(); c += 7) {
        TangleList t{{dom[a], dom[b], dom[c]}};
        CHECK(is_knot(t) == is_knot(t.mirrored()));
      }
}

TEST_CASE("validated_tangle_list errors") {
  CHECK_THROWS_AS(validated_tangle_list({Fraction(1, 2), Fraction(1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(validated_tangle_list({Fraction(1, 2), Fraction(2), Fraction(1, 3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validated_tangle_list({Fraction(1, 2), Fraction(1, 2), Fraction(1, 3)}),
                  std::invalid_argument);
  CHECK_NOTHROW(validated_tangle_list({Fraction(-1, 2), Fraction(1, 3), Fraction(1, 7)}));
}

TEST_CASE("detect_pretzel_exception") {
  auto detect = [](std::vector<Fraction> v) {
    return detect_pretzel_exception(TangleList{std::move(v)});
  };
  auto r = detect({Fraction(-1, 2), Fraction(1, 3), Fraction(1, 7)});
  REQUIRE(r.has_value());
  CHECK(r->t == 7);
  CHECK_FALSE(r->mirrored);

  // K((-1/2)+k, (1/3)+l, (1/t)-k-l) with k=1, l=0, t=3
  r = detect({Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)});
  REQUIRE(r.has_value());
  CHECK(r->t == 3);

  CHECK_FALSE(detect({Fraction(-1, 2), Fraction(1, 3), Fraction(2, 7)}).has_value());

  // mirror image
  r = detect({Fraction(1, 2), Fraction(-1, 3), Fraction(-1, 7)});
  REQUIRE(r.has_value());
  CHECK(r->t == 7);
  CHECK(r->mirrored);

  // wrong sum: residues match but the family shift does not
  CHECK_FALSE(detect({Fraction(1, 2), Fraction(1, 3), Fraction(1, 7)}).has_value());
}

TEST_CASE("detect_pretzel_exception invariances") {
  std::vector<Fraction> base{Fraction(-1, 2), Fraction(1, 3), Fraction(1, 5)};
  auto check_t5 = [](const TangleList& t) {
    auto r = detect_pretzel_exception(t);
    REQUIRE(r.has_value());
    CHECK(r->t == 5);
  };
  // permutations
  check_t5(TangleList{{base[0], base[1], base[2]}});
  check_t5(TangleList{{base[2], base[0], base[1]}});
  check_t5(TangleList{{base[1], base[2], base[0]}});
  // integer shifts k, l, -k-l
  for (long k = -2; k <= 2; ++k)
    for (long l = -2; l <= 2; ++l) {
      TangleList t{{base[0] + Fraction(k), base[1] + Fraction(l), base[2] - Fraction(k + l)}};
      check_t5(t);
    }
}
