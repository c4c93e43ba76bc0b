#pragma once

#include <cstdint>
#include <string>

#include "qbmm/boolean_matrix.hpp"

namespace qbmm {

struct Instance {
  BooleanMatrix a;
  BooleanMatrix b;
  uint64_t ell_actual = 0;  // ones in the true product, by brute force
  bool converged = true;    // false only for target-ell bisection failures
};

// i.i.d. Bernoulli entries with the given densities; reproducible from seed.
Instance random_instance(uint32_t n, double p_a, double p_b, uint64_t seed);

// Bisects a shared density p = pA = pB until the realized output count
// lands in [target/2, 2*target] (exact for target in {0, n^2}). At most 50
// iterations; on non-convergence returns the closest instance found with
// converged = false.
Instance instance_with_target_ell(uint32_t n, uint64_t target_ell, uint64_t seed);

// A = I, B with exactly t_f ones at uniformly random positions, so C = B.
Instance threshold_instance(uint32_t n, uint64_t t_f, uint64_t seed);

// A nonzero only in column 1, B nonzero only in row 1, sized to the largest
// product of ones-counts <= target; every output pair is witnessed by k = 1.
Instance single_witness_instance(uint32_t n, uint64_t target_ell, uint64_t seed);

// Writes <family>_n<k>_seed<s>_A.txt and ..._B.txt in the matrix text format.
void dump_instance(const std::string& dir, const std::string& family, uint32_t n, uint64_t seed,
                   const Instance& inst);

}  // namespace qbmm
