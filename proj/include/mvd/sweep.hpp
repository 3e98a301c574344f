#pragma once

#include <cstdint>
#include <random>

#include "mvd/canonical.hpp"

namespace mvd {

// Entries uniform in the complex box scale * ([-1,1] + [-1,1]i).
ComplexMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, double scale = 1.0);

// Random n x n matrix kept away from singularity (identity plus a small
// random perturbation).
ComplexMatrix random_nonsingular(std::mt19937_64& rng, int n);

// Deterministic random canonical structure with total dimension <= max_dim
// (max_dim >= 1). The case index cycles through targeted scenarios before a
// free mix, so a sweep of a few dozen cases covers every off-diagonal table
// row: equal/inverse/unit H lambda collisions, H/Gamma parity hits, odd-size
// J couplings, equal and gapped J sizes. Structures come out canonicalized.
CanonicalStructure sweep_structure(std::uint64_t seed, int case_index, int max_dim);

} // namespace mvd
