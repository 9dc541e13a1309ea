#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mks/arith.hpp"
#include "mks/edgepath.hpp"

namespace mks {

enum class SurfaceType { I, II, III };

const char* surface_type_name(SurfaceType t);

using BasicEdgepathSystem = std::vector<Edgepath>;

// An N-tuple of edgepaths satisfying E1-E4. Type I systems end on a common
// vertical line u = u0 > 0 with v-values summing to zero; type II systems end
// on u = 0 after a vertical correction run; type III systems end at <inf>.
struct CandidateSystem {
  TangleList tangles;
  SurfaceType kind = SurfaceType::I;
  std::vector<Edgepath> paths;
  std::optional<Fraction> u0;                                // type I only
  Fraction sum_at_zero;                                      // Gamma(+0), types II/III
  std::optional<std::pair<Fraction, Fraction>> source_interval;  // type I from a non-isolated root
};

// Zeros of f(u) = sum_i eval_extended(path_i, u) on (0,1): isolated rational
// points plus closed intervals where f vanishes identically (reported with
// their closure endpoints, which may touch 0).
struct TypeOneRoots {
  std::vector<Fraction> points;
  std::vector<std::pair<Fraction, Fraction>> intervals;
};

TypeOneRoots solve_type_one(const BasicEdgepathSystem& system);

// Cuts every extended basic edgepath at u0 in (0,1): tangles whose horizontal
// edge crosses u0 become constant paths with ratio q(1-u0); the rest are
// truncated with a final partial edge. Rejects all-constant results.
CandidateSystem cut_at(const BasicEdgepathSystem& system, const Fraction& u0);

// Appends |Gamma(+0)| unit vertical edges to the first path, single
// direction, so the endpoint v-values sum to zero.
CandidateSystem build_type_two(const BasicEdgepathSystem& system);

// Appends one complete inf-edge to every path.
CandidateSystem build_type_three(const BasicEdgepathSystem& system);

// All type I/II/III candidates over the Cartesian product of per-tangle basic
// edgepaths. Type I roots contribute one candidate per isolated point and one
// per closed-interval endpoint inside (0,1); a root at u0 = 0 is dropped (that
// surface is the type II candidate of the same basic system). Requires
// is_knot(t).
std::vector<CandidateSystem> enumerate_candidates(const TangleList& t);

std::string encode(const CandidateSystem& c);

// Structural E1-E4 assertions; throws internal_error on violation.
void validate_candidate(const CandidateSystem& c);

}  // namespace mks
