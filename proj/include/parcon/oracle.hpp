#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "parcon/contraction.hpp"
#include "parcon/matrix.hpp"

namespace parcon {

struct IndexEstimate {
  int index = -1;       // dim - best_rank
  int best_rank = -1;   // max rank over trials
  int agreeing = 0;     // trials attaining best_rank
  std::vector<int> ranks;
};

// Randomized generic-index certificate: sample functionals with integer
// coordinates in [-bound, bound], form the skew matrix f([b_i, b_j]) and take
// its exact rank; the index estimate is dim minus the best rank seen.
// Deterministic for a fixed seed.
IndexEstimate generic_index(int dim, const std::function<SparseVec(int, int)>& bracket,
                            int trials, std::uint64_t seed, long bound = 10000);

struct RegularityResult {
  int rank = -1;
  int stacked_rank = -1;
  bool rank_ok = false;       // rank == dim - |T|
  bool direct_sum_ok = false; // image + span{x_{-gamma} : gamma in T} fills the dual
};

RegularityResult regularity_and_complement(const ContractionAlgebra& ca,
                                           const std::vector<Root>& S,
                                           const std::vector<Root>& T);

// Exact determinant of the skew form (x, x') -> K(y, [x, x']) restricted to
// the span of O; OddDimensionError when |O| is odd.
Rat phi_restricted_det(const ContractionAlgebra& ca, const std::vector<Root>& O,
                       const std::vector<Root>& support);

// The same matrix (handy for entry-pattern checks in tests).
RationalMatrix phi_restricted_matrix(const ContractionAlgebra& ca,
                                     const std::vector<Root>& O,
                                     const std::vector<Root>& support);

}  // namespace parcon
