#include "mks/candidates.hpp"

#include <algorithm>

namespace mks {

const char* surface_type_name(SurfaceType t) {
  switch (t) {
    case SurfaceType::I: return "I";
    case SurfaceType::II: return "II";
    case SurfaceType::III: return "III";
  }
  return "?";
}

namespace {

Fraction u_of_tangle(const Fraction& f) { return Fraction(f.den() - 1, f.den()); }

TangleList tangles_of(const BasicEdgepathSystem& system) {
  TangleList t;
  t.tangles.reserve(system.size());
  for (const Edgepath& p : system) t.tangles.push_back(p.start);
  return t;
}

Fraction eval_at_breakpoint(const Edgepath& path, const Fraction& u) {
  if (u.is_zero()) return value_at_zero(path);
  if (u == Fraction(1)) return path.start;
  return eval_extended(path, u);
}

}  // namespace

TypeOneRoots solve_type_one(const BasicEdgepathSystem& system) {
  std::vector<Fraction> bps{Fraction(0), Fraction(1)};
  for (const Edgepath& p : system)
    for (const Fraction& v : p.vertices)
      if (!v.is_integer()) bps.push_back(u_of_tangle(v));
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  std::vector<Fraction> vals;
  vals.reserve(bps.size());
  for (const Fraction& u : bps) {
    Fraction sum(0);
    for (const Edgepath& p : system) sum += eval_at_breakpoint(p, u);
    vals.push_back(std::move(sum));
  }

  TypeOneRoots roots;
  std::size_t nseg = bps.size() - 1;
  std::vector<bool> zero_seg(nseg);
  for (std::size_t i = 0; i < nseg; ++i) zero_seg[i] = vals[i].is_zero() && vals[i + 1].is_zero();

  // Maximal runs of identically-zero segments become closed intervals.
  for (std::size_t i = 0; i < nseg;) {
    if (!zero_seg[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < nseg && zero_seg[j + 1]) ++j;
    roots.intervals.emplace_back(bps[i], bps[j + 1]);
    i = j + 1;
  }

  // Zero breakpoints outside those runs are isolated roots.
  for (std::size_t i = 1; i + 1 < bps.size(); ++i) {
    if (!vals[i].is_zero()) continue;
    bool in_run = (i > 0 && zero_seg[i - 1]) || (i < nseg && zero_seg[i]);
    if (!in_run) roots.points.push_back(bps[i]);
  }

  // Strict sign changes give one interior root per segment, exactly.
  for (std::size_t i = 0; i < nseg; ++i) {
    if (vals[i].sign() * vals[i + 1].sign() >= 0) continue;
    Fraction u = bps[i] + (bps[i + 1] - bps[i]) * vals[i] / (vals[i] - vals[i + 1]);
    roots.points.push_back(std::move(u));
  }
  std::sort(roots.points.begin(), roots.points.end());
  return roots;
}

CandidateSystem cut_at(const BasicEdgepathSystem& system, const Fraction& u0) {
  if (u0 <= Fraction(0) || u0 >= Fraction(1))
    throw std::invalid_argument("cut_at: u0 = " + u0.str() + " outside (0,1)");
  CandidateSystem c;
  c.tangles = tangles_of(system);
  c.kind = SurfaceType::I;
  c.u0 = u0;
  int non_constant = 0;
  for (const Edgepath& lambda : system) {
    Edgepath g;
    g.start = lambda.start;
    Fraction uk = u_of_tangle(lambda.start);
    if (uk < u0) {
      // The cut lands on the horizontal edge <K>-o<K>.
      g.constant_ratio = Fraction(lambda.start.den()) * (Fraction(1) - u0);
    } else if (uk == u0) {
      // Cut exactly at the starting vertex: zero-length partial edge.
      g.vertices = {lambda.vertices[0], lambda.vertices[1]};
      g.final_partial = Fraction(0);
      ++non_constant;
    } else {
      std::size_t j = 1;
      while (u_of_tangle(lambda.vertices[j]) > u0) ++j;
      g.vertices.assign(lambda.vertices.begin(), lambda.vertices.begin() + j + 1);
      Fraction uj = u_of_tangle(lambda.vertices[j]);
      if (uj != u0)
        g.final_partial = partial_edge_length(lambda.vertices[j].den(),
                                              lambda.vertices[j - 1].den(), u0);
      ++non_constant;
    }
    c.paths.push_back(std::move(g));
  }
  if (non_constant == 0)
    throw internal_error("cut_at: all-constant type I system at u0 = " + u0.str() +
                         " (impossible for a knot)");
  return c;
}

CandidateSystem build_type_two(const BasicEdgepathSystem& system) {
  CandidateSystem c;
  c.tangles = tangles_of(system);
  c.kind = SurfaceType::II;
  c.paths = system;
  Fraction g(0);
  for (const Edgepath& p : system) g += value_at_zero(p);
  c.sum_at_zero = g;
  if (!g.is_zero()) c.paths.front().vertical_run = -g.num();
  return c;
}

CandidateSystem build_type_three(const BasicEdgepathSystem& system) {
  CandidateSystem c;
  c.tangles = tangles_of(system);
  c.kind = SurfaceType::III;
  c.paths = system;
  Fraction g(0);
  for (const Edgepath& p : system) g += value_at_zero(p);
  c.sum_at_zero = g;
  for (Edgepath& p : c.paths) p.appended_infinity = true;
  return c;
}

std::vector<CandidateSystem> enumerate_candidates(const TangleList& t) {
  if (!is_knot(t))
    throw std::invalid_argument(t.str() + " is not a knot");
  std::vector<std::vector<Edgepath>> per_tangle;
  per_tangle.reserve(t.tangles.size());
  for (const Fraction& k : t.tangles) per_tangle.push_back(enumerate_basic_edgepaths(k));

  std::vector<CandidateSystem> out;
  std::vector<std::size_t> idx(t.tangles.size(), 0);
  for (;;) {
    BasicEdgepathSystem sys;
    sys.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) sys.push_back(per_tangle[i][idx[i]]);

    TypeOneRoots roots = solve_type_one(sys);
    const Fraction zero(0), one(1);
    for (const Fraction& u0 : roots.points)
      if (zero < u0 && u0 < one) out.push_back(cut_at(sys, u0));
    for (const auto& iv : roots.intervals) {
      for (const Fraction* e : {&iv.first, &iv.second}) {
        if (zero < *e && *e < one) {
          CandidateSystem c = cut_at(sys, *e);
          c.source_interval = iv;
          out.push_back(std::move(c));
        }
      }
    }
    out.push_back(build_type_two(sys));
    out.push_back(build_type_three(sys));

    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == per_tangle[d].size()) idx[d++] = 0;
    if (d == idx.size()) break;
  }
  return out;
}

std::string encode(const CandidateSystem& c) {
  std::string s = surface_type_name(c.kind);
  if (c.u0) s += "@" + c.u0->str();
  if (c.source_interval)
    s += "~[" + c.source_interval->first.str() + "," + c.source_interval->second.str() + "]";
  s += "[";
  for (std::size_t i = 0; i < c.paths.size(); ++i) {
    if (i) s += "|";
    s += encode(c.paths[i]);
  }
  return s + "]";
}

namespace {

// u-coordinate of the endpoint of a truncated path (complete final edge ends
// on its last vertex; a partial edge of length l on <p/q>-<r/s> ends at
// u = 1 + 1/(l(s-q) - s)).
Fraction end_u(const Edgepath& p) {
  const Fraction& last = p.vertices.back();
  if (!p.final_partial) return Fraction(last.den() - 1, last.den());
  const Fraction& prev = p.vertices[p.vertices.size() - 2];
  Fraction denom = *p.final_partial * Fraction(prev.den() - last.den()) - Fraction(prev.den());
  return Fraction(1) + denom.reciprocal();
}

Fraction end_v(const Edgepath& p) {
  const Fraction& last = p.vertices.back();
  if (!p.final_partial) return last;
  const Fraction& prev = p.vertices[p.vertices.size() - 2];
  Fraction ul = Fraction(last.den() - 1, last.den());
  Fraction ur = Fraction(prev.den() - 1, prev.den());
  Fraction u = end_u(p);
  return last + (u - ul) * (prev - last) / (ur - ul);
}

}  // namespace

void validate_candidate(const CandidateSystem& c) {
  auto fail = [&](const std::string& why) {
    throw internal_error("candidate violates " + why + ": " + encode(c));
  };
  if (c.paths.size() != c.tangles.tangles.size() || c.paths.empty()) fail("path count");
  for (std::size_t i = 0; i < c.paths.size(); ++i) {
    const Edgepath& p = c.paths[i];
    if (p.start != c.tangles.tangles[i]) fail("E1 (start tangle)");
    if (p.is_constant()) {
      if (!p.vertices.empty() || p.final_partial || p.appended_infinity || p.vertical_run != 0)
        fail("E1 (constant edgepath shape)");
      if (*p.constant_ratio <= Fraction(0) || *p.constant_ratio > Fraction(1))
        fail("E1 (constant ratio range)");
      if (c.kind != SurfaceType::I) fail("E1 (constant path outside type I)");
      continue;
    }
    if (p.vertices.front() != p.start) fail("E1 (first vertex)");
    for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) {
      edge_sign(p.vertices[j + 1], p.vertices[j]);  // throws unless Farey-adjacent
      if (p.vertices[j + 1].den() >= p.vertices[j].den()) fail("E4 (u not decreasing)");
      if (j >= 1 && p.vertices[j - 1] == mediant(p.vertices[j], p.vertices[j + 1]))
        fail("E2 (two sides of one triangle)");
    }
  }
  switch (c.kind) {
    case SurfaceType::I: {
      if (!c.u0) fail("type I u0 missing");
      Fraction vsum(0);
      for (const Edgepath& p : c.paths) {
        if (p.appended_infinity || p.vertical_run != 0) fail("type I shape");
        if (p.is_constant()) {
          if (u_of_tangle(p.start) >= *c.u0) fail("E1 (constant but vertex inside cut)");
          if (*p.constant_ratio != Fraction(p.start.den()) * (Fraction(1) - *c.u0))
            fail("E1 (constant ratio value)");
          vsum += p.start;
        } else {
          if (end_u(p) != *c.u0) fail("E3 (common endpoint line)");
          vsum += end_v(p);
        }
      }
      if (!vsum.is_zero()) fail("E3 (v-sum nonzero)");
      break;
    }
    case SurfaceType::II: {
      Fraction vsum(0);
      mpz_class run_signs = 0;
      for (const Edgepath& p : c.paths) {
        if (p.appended_infinity || p.final_partial) fail("type II shape");
        vsum += value_at_zero(p) + Fraction(p.vertical_run);
        if (p.vertical_run != 0) {
          int s = sgn(p.vertical_run);
          if (run_signs != 0 && run_signs != s) fail("mixed-direction vertical runs");
          run_signs = s;
        }
      }
      if (!vsum.is_zero()) fail("E3 (v-sum after vertical runs nonzero)");
      break;
    }
    case SurfaceType::III: {
      for (const Edgepath& p : c.paths)
        if (!p.appended_infinity || p.final_partial || p.vertical_run != 0)
          fail("type III shape");
      break;
    }
  }
}

}  // namespace mks
