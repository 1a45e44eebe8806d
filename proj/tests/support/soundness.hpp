#pragma once

// Randomized soundness check of the two-involution eigenvalue bound and its
// Jordan-block discount, on exact rational matrices. Shared by the unit suite
// and the acceptance run.

#include "support/rat_matrix.hpp"

#include <f4rigid/levirep.hpp>
#include <f4rigid/verifier.hpp>

#include <cstdint>
#include <random>

namespace testsupport {

/// Runs `instances` random (involution, involution, unipotent) products of
/// the given dimension and block budget; returns how many violated
///   dim ker(AB + I)  >= two_involution_bound, or
///   dim ker(ABU + I) >= two_involution_bound - blocks.
inline int soundness_violations(int dimension, int max_blocks, int instances,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_pick(0, dimension);
  std::uniform_int_distribution<int> block_pick(0, max_blocks);
  int violations = 0;
  for (int k = 0; k < instances; ++k) {
    const int ap = dim_pick(rng);
    const f4rigid::InvolutionEigenData ea{ap, dimension - ap};
    const int bp = dim_pick(rng);
    const f4rigid::InvolutionEigenData eb{bp, dimension - bp};

    const RatMat A = involution_matrix(ea.dim_plus, ea.dim_minus, random_unimodular(dimension, rng));
    const RatMat B = involution_matrix(eb.dim_plus, eb.dim_minus, random_unimodular(dimension, rng));
    const RatMat P = rat_mul(A, B);
    const int bound = f4rigid::two_involution_bound(ea, eb, dimension);
    if (nullity(rat_add_identity(P)) < bound) ++violations;

    const int blocks = block_pick(rng);
    const RatMat U = unipotent_matrix(dimension, blocks, random_unimodular(dimension, rng), rng);
    if (nullity(rat_add_identity(rat_mul(P, U))) < bound - blocks) ++violations;
  }
  return violations;
}

}  // namespace testsupport
