#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mks/diagram.hpp"
#include "mks/fraction.hpp"

namespace mks {

// A leftward-monotone path in the diagram, stored right-to-left (starting
// tangle first). Non-constant paths record the tangle vertices they touch;
// the last recorded edge may be traversed only partially. Constant paths are
// a single point on the horizontal edge <K>-o<K>, held as the sheet ratio
// k/m of that point. A zero-length final partial edge (cut exactly at the
// starting vertex) keeps the path non-constant with final_partial 0.
struct Edgepath {
  Fraction start;                          // the tangle K_i
  std::vector<Fraction> vertices;          // decreasing u; empty iff constant
  std::optional<Fraction> final_partial;   // completeness of last edge; nullopt = complete
  std::optional<Fraction> constant_ratio;  // k/m in (0,1]; set iff constant
  bool appended_infinity = false;          // one complete inf-edge after u = 0
  mpz_class vertical_run = 0;              // signed unit edges at u = 0; + moves v up

  bool is_constant() const { return constant_ratio.has_value(); }
  bool operator==(const Edgepath& o) const = default;
};

// All minimal leftward monotone paths from <K> to an integer vertex. At each
// vertex both Farey parents are offered; a continuation is excluded exactly
// when the previous vertex is the mediant of the current vertex and the
// continuation target (the edge pair would run along two sides of one
// triangle). Deterministic order: smaller parent explored first.
std::vector<Edgepath> enumerate_basic_edgepaths(const Fraction& k);

// v-coordinate of the extended basic edgepath at u in (0,1): the constant K
// on the horizontal part u >= (q-1)/q, linear interpolation between vertex
// coordinates elsewhere.
Fraction eval_extended(const Edgepath& path, const Fraction& u);

// gamma(+0): the integer v-value where a basic edgepath meets u = 0, before
// any vertical run.
Fraction value_at_zero(const Edgepath& path);

// Sum of edge lengths: complete edges count 1, the final partial edge its
// completeness, constant paths 0. With restrict_positive_u the vertical run
// and the inf-edge (which lie at u <= 0) contribute 0; otherwise they count
// in full.
Fraction path_length(const Edgepath& path, bool restrict_positive_u);

// Sum over non-inf edges of -2 * sign(e) * |e|, including the vertical run.
// Constant paths and inf-edges contribute 0.
Fraction twist_of_edgepath(const Edgepath& path);

// Stable text form, also the lexicographic tie-break key for candidates.
std::string encode(const Edgepath& path);

}  // namespace mks
