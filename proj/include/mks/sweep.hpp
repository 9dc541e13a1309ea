#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mks/harness.hpp"

namespace mks {

struct SweepParams {
  int n = 3;
  long max_den = 9;
  int jobs = 1;
  bool canonicalize = true;  // sorted tuples, one representative per permutation class
};

struct SweepResult {
  std::uint64_t knots = 0;
  std::uint64_t candidates = 0;
  std::uint64_t simplified = 0;
  std::uint64_t exceptional_knots = 0;
  std::uint64_t exceptional_candidates = 0;
  std::uint64_t inconsistent_candidates = 0;
  std::uint64_t corollary_note_knots = 0;
  std::vector<std::string> violations;  // each prefixed with the knot
  std::vector<std::string> internal_errors;
};

// Reduced non-integral fractions p/q with 2 <= q <= max_den and |p| < 2q,
// ascending. The sweep tangle domain.
std::vector<Fraction> sweep_tangles(long max_den);

// All N-tuples over the domain that form knots; canonicalized tuples are
// non-decreasing, deduplicating permutation-equivalent Montesinos knots.
std::vector<TangleList> sweep_knots(const SweepParams& p);

// Runs report() over every sweep knot on a worker pool. Aggregation order is
// fixed by the knot enumeration order regardless of scheduling. The optional
// hook sees every report in that order (hook calls are serialized).
SweepResult run_sweep(const SweepParams& p,
                      const std::function<void(const BoundReport&)>& hook = {});

}  // namespace mks
