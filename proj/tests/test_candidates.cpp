#include <doctest.h>

#include <set>

#include "mks/candidates.hpp"

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

Fraction sum_at(const BasicEdgepathSystem& sys, const Fraction& u) {
  Fraction s(0);
  for (const Edgepath& p : sys) s += eval_extended(p, u);
  return s;
}

}  // namespace

TEST_CASE("solve_type_one: isolated roots") {
  // three partial edges meeting at u = 2/5
  auto sys = system_of({{Fraction(1, 2), Fraction(0)},
                        {Fraction(1, 3), Fraction(0)},
                        {Fraction(-1, 2), Fraction(-1)}});
  TypeOneRoots r = solve_type_one(sys);
  CHECK(r.intervals.empty());
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0] == Fraction(2, 5));

  sys = system_of({{Fraction(1, 2), Fraction(0)},
                   {Fraction(1, 3), Fraction(0)},
                   {Fraction(-2, 3), Fraction(-1)}});
  r = solve_type_one(sys);
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0] == Fraction(1, 2));
}

TEST_CASE("solve_type_one: non-isolated interval") {
  auto sys = system_of({{Fraction(1, 2), Fraction(0)},
                        {Fraction(2, 3), Fraction(1)},
                        {Fraction(-4, 3), Fraction(-1)}});
  TypeOneRoots r = solve_type_one(sys);
  CHECK(r.points.empty());
  REQUIRE(r.intervals.size() == 1);
  CHECK(r.intervals[0] == std::pair{Fraction(0), Fraction(1, 2)});

  // same zero set from the <0>-<1/3>, <0>-<1/3>, <0>-<-1/2> configuration
  sys = system_of({{Fraction(1, 3), Fraction(0)},
                   {Fraction(1, 3), Fraction(0)},
                   {Fraction(-1, 2), Fraction(0)}});
  r = solve_type_one(sys);
  CHECK(r.points.empty());
  REQUIRE(r.intervals.size() == 1);
  CHECK(r.intervals[0] == std::pair{Fraction(0), Fraction(1, 2)});
}

TEST_CASE("cut_at fixtures") {
  SUBCASE("cut exactly at the starting vertex keeps a zero-length partial") {
    auto sys = system_of({{Fraction(1, 2), Fraction(0)},
                          {Fraction(1, 3), Fraction(0)},
                          {Fraction(-2, 3), Fraction(-1)}});
    CandidateSystem c = cut_at(sys, Fraction(1, 2));
    CHECK(c.kind == SurfaceType::I);
    REQUIRE(c.paths.size() == 3);
    CHECK_FALSE(c.paths[0].is_constant());
    CHECK(*c.paths[0].final_partial == Fraction(0));
    CHECK(path_length(c.paths[0], true) == Fraction(0));
    CHECK(path_length(c.paths[1], true) == Fraction(1, 2));
    CHECK(path_length(c.paths[2], true) == Fraction(1, 2));
    validate_candidate(c);
  }
  SUBCASE("horizontal crossings become constant paths, ratio q(1-u0)") {
    auto sys = system_of({{Fraction(1, 2), Fraction(0)},
                          {Fraction(1, 3), Fraction(0)},
                          {Fraction(-4, 5), Fraction(-1)}});
    CandidateSystem c = cut_at(sys, Fraction(2, 3));
    REQUIRE(c.paths[0].is_constant());
    CHECK(*c.paths[0].constant_ratio == Fraction(2, 3));
    CHECK(path_length(c.paths[1], true) == Fraction(0));
    CHECK(path_length(c.paths[2], true) == Fraction(1, 2));
    validate_candidate(c);
  }
  SUBCASE("constant ratio (t-3)/(t-2) at u = (t-1)/(2(t-2)), t = 7") {
    auto sys = system_of({{Fraction(1, 2), Fraction(0)},
                          {Fraction(1, 3), Fraction(1, 2), Fraction(1)},
                          {Fraction(-6, 7), Fraction(-1)}});
    CandidateSystem c = cut_at(sys, Fraction(3, 5));
    REQUIRE(c.paths[0].is_constant());
    CHECK(*c.paths[0].constant_ratio == Fraction(4, 5));
    CHECK(path_length(c.paths[1], true) == Fraction(1, 2));
    CHECK(path_length(c.paths[2], true) == Fraction(3, 4));
    validate_candidate(c);
  }
  SUBCASE("u0 must be a gluing-consistent point to validate") {
    auto sys = system_of({{Fraction(1, 2), Fraction(0)},
                          {Fraction(1, 3), Fraction(0)},
                          {Fraction(-1, 2), Fraction(-1)}});
    CandidateSystem c = cut_at(sys, Fraction(2, 5));
    CHECK_NOTHROW(validate_candidate(c));
    CandidateSystem bad = cut_at(sys, Fraction(1, 3));
    CHECK_THROWS_AS(validate_candidate(bad), internal_error);
  }
  CHECK_THROWS_AS(cut_at(system_of({{Fraction(1, 2), Fraction(0)}}), Fraction(0)),
                  std::invalid_argument);

  SUBCASE("all-constant cuts are rejected (they require a zero tangle sum)") {
    // (1/2, 1/3, -5/6) sums to zero; the gluing equation vanishes identically
    // on [5/6, 1) and cutting there makes every path constant
    auto sys = system_of({{Fraction(1, 2), Fraction(0)},
                          {Fraction(1, 3), Fraction(0)},
                          {Fraction(-5, 6), Fraction(-1)}});
    TypeOneRoots r = solve_type_one(sys);
    REQUIRE(!r.intervals.empty());
    CHECK(r.intervals.back().second == Fraction(1));
    CHECK_THROWS_AS(cut_at(sys, Fraction(9, 10)), internal_error);
  }
}

TEST_CASE("build_type_two") {
  // all three decreasing paths end at <0>: no vertical correction
  auto sys = system_of({{Fraction(1, 2), Fraction(0)},
                        {Fraction(1, 5), Fraction(0)},
                        {Fraction(1, 5), Fraction(0)}});
  CandidateSystem c = build_type_two(sys);
  CHECK(c.sum_at_zero == Fraction(0));
  for (const Edgepath& p : c.paths) CHECK(p.vertical_run == 0);
  validate_candidate(c);

  // endpoints (-1, 0, 0): one upward vertical unit
  sys = system_of({{Fraction(-1, 2), Fraction(-1)},
                   {Fraction(1, 3), Fraction(0)},
                   {Fraction(1, 7), Fraction(0)}});
  c = build_type_two(sys);
  CHECK(c.sum_at_zero == Fraction(-1));
  CHECK(c.paths[0].vertical_run == 1);
  CHECK(c.paths[1].vertical_run == 0);
  validate_candidate(c);
}

TEST_CASE("build_type_three") {
  auto sys = system_of({{Fraction(-1, 2), Fraction(0)},
                        {Fraction(1, 3), Fraction(1, 2), Fraction(1)},
                        {Fraction(1, 7), Fraction(1, 6), Fraction(1, 5), Fraction(1, 4),
                         Fraction(1, 3), Fraction(1, 2), Fraction(1)}});
  CandidateSystem c = build_type_three(sys);
  for (const Edgepath& p : c.paths) CHECK(p.appended_infinity);
  validate_candidate(c);
  Fraction len(0);
  for (const Edgepath& p : c.paths) len += path_length(p, true);
  CHECK(len == Fraction(9));  // t + 2 at t = 7
  Fraction tw(0);
  for (const Edgepath& p : c.paths) tw += twist_of_edgepath(p);
  CHECK(tw == Fraction(-18));  // -2(t + 2)
}

TEST_CASE("enumerate_candidates") {
  TangleList trefoilish{{Fraction(-1, 2), Fraction(1, 3), Fraction(1, 3)}};
  auto cands = enumerate_candidates(trefoilish);

  // 2*2*2 basic systems, each contributing one type II and one type III
  int type2 = 0, type3 = 0, type1 = 0;
  for (const CandidateSystem& c : cands) {
    validate_candidate(c);
    switch (c.kind) {
      case SurfaceType::I: ++type1; break;
      case SurfaceType::II: ++type2; break;
      case SurfaceType::III: ++type3; break;
    }
  }
  CHECK(type2 == 8);
  CHECK(type3 == 8);
  CHECK(type1 > 0);

  // the annulus-type candidate at u = 1/2 is present
  bool found_half = false;
  for (const CandidateSystem& c : cands)
    if (c.kind == SurfaceType::I && c.u0 && *c.u0 == Fraction(1, 2)) found_half = true;
  CHECK(found_half);

  CHECK_THROWS_AS(
      enumerate_candidates(TangleList{{Fraction(1, 3), Fraction(2, 3), Fraction(1, 3)}}),
      std::invalid_argument);

  // deterministic: two runs give identical encodings in identical order
  auto again = enumerate_candidates(trefoilish);
  REQUIRE(again.size() == cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) CHECK(encode(cands[i]) == encode(again[i]));
}

TEST_CASE("interval roots: candidates at both endpoints inside (0,1), u0 = 0 dropped") {
  TangleList t{{Fraction(1, 3), Fraction(1, 3), Fraction(-1, 2)}};
  auto cands = enumerate_candidates(t);
  std::set<std::string> interval_u0;
  for (const CandidateSystem& c : cands)
    if (c.source_interval) {
      CHECK(*c.u0 > Fraction(0));
      CHECK(*c.u0 < Fraction(1));
      interval_u0.insert(c.u0->str());
      CHECK(*c.source_interval == std::pair{Fraction(0), Fraction(1, 2)});
    }
  // only the right endpoint of [0, 1/2] is realizable as type I
  CHECK(interval_u0 == std::set<std::string>{"1/2"});
}

TEST_CASE("solve_type_one agrees with a dense sampling oracle") {
  // every basic system of a few small knots, sampled at 1000 rational points
  std::vector<TangleList> knots{
      TangleList{{Fraction(-1, 2), Fraction(1, 3), Fraction(1, 3)}},
      TangleList{{Fraction(1, 2), Fraction(1, 5), Fraction(1, 5)}},
      TangleList{{Fraction(-2, 3), Fraction(2, 5), Fraction(4, 3)}},
  };
  for (const TangleList& t : knots) {
    std::vector<std::vector<Edgepath>> per;
    for (const Fraction& k : t.tangles) per.push_back(enumerate_basic_edgepaths(k));
    std::vector<std::size_t> idx(t.tangles.size(), 0);
    for (;;) {
      BasicEdgepathSystem sys;
      for (std::size_t i = 0; i < idx.size(); ++i) sys.push_back(per[i][idx[i]]);
      TypeOneRoots roots = solve_type_one(sys);

      auto claimed_zero = [&](const Fraction& u) {
        for (const Fraction& p : roots.points)
          if (p == u) return true;
        for (const auto& iv : roots.intervals)
          if (iv.first <= u && u <= iv.second) return true;
        return false;
      };
      Fraction prev_u(1, 1001);
      Fraction prev_v = sum_at(sys, prev_u);
      if (prev_v.is_zero()) CHECK(claimed_zero(prev_u));
      for (int j = 2; j <= 1000; ++j) {
        Fraction u(j, 1001);
        Fraction v = sum_at(sys, u);
        if (v.is_zero()) CHECK(claimed_zero(u));
        if (prev_v.sign() * v.sign() < 0) {
          bool bracketed = false;
          for (const Fraction& p : roots.points) bracketed |= (prev_u < p && p < u);
          CHECK(bracketed);
        }
        prev_u = u;
        prev_v = v;
      }
      for (const Fraction& p : roots.points)
        if (Fraction(0) < p && p < Fraction(1)) CHECK(sum_at(sys, p).is_zero());

      std::size_t d = 0;
      while (d < idx.size() && ++idx[d] == per[d].size()) idx[d++] = 0;
      if (d == idx.size()) break;
    }
  }
}
