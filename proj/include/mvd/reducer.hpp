#pragma once

#include <utility>
#include <vector>

#include "mvd/linalg.hpp"
#include "mvd/matrix.hpp"
#include "mvd/star_pattern.hpp"

namespace mvd {

// Precomputed data for the reduction iteration: for every matrix unit E_ij a
// fixed F_ij with E_ij + F_ij^T A + A F_ij supported on the pattern (F_ij = 0
// when (i,j) is itself a star), plus the constants that size the certified
// neighborhood.
struct ReducerSetup {
    ComplexMatrix a;
    StarPattern pattern;
    std::vector<ComplexMatrix> f;  // indexed by column-stacked unit order
    double a_norm = 0.0;           // ||A||
    double f_sum = 0.0;            // sum over all units of ||F_ij||
    double eps_max = 0.0;          // 1 / max{f(a+1)(f+2), 3}

    const ComplexMatrix& f_at(int i, int j) const;  // 1-based unit position
};

// Solves the off-pattern conditions for all n^2 units with minimum-norm
// solutions. Throws NotSpanning when T(A) + D(C) misses some direction.
ReducerSetup prepare(const ComplexMatrix& a, const StarPattern& pattern,
                     double tol = kDefaultRankTol);

struct StepResult {
    ComplexMatrix m_next;
    ComplexMatrix c;
};

// One iteration: C_k = sum m_ij F_ij and
// A + M_{k+1} = (I + C_k)^T (A + M_k) (I + C_k).
StepResult step(const ReducerSetup& setup, const ComplexMatrix& m_k);

struct TraceRecord {
    int k = 0;               // 1-based iteration index
    double norm_m = 0.0;     // ||M_k||
    double masked_norm_m = 0.0;  // ||M_k|| restricted off the pattern
    double norm_c = 0.0;     // ||C_k||
    double delta_bound = 0.0;    // delta_k of the certified bound sequence
    double tau_bound = 0.0;      // tau_k
};

struct ReductionTrace {
    std::vector<TraceRecord> records;
    bool converged = false;
    int iterations = 0;
};

struct ReduceOptions {
    double eps = 0.0;       // <= 0: just below min(eps_max, 1/3)
    double stop_tol = -1.0; // < 0: 1e-12 * (1 + ||A||)
    int max_iter = 200;
};

struct ReductionResult {
    ComplexMatrix s;  // accumulated transformation, S^T (A+E) S = A + D
    ComplexMatrix d;  // supported exactly on the pattern
    ReductionTrace trace;
    double residual = 0.0;  // masked norm of the final M
    double eps = 0.0;       // the epsilon the bounds were computed with
    bool in_certified_basin = false;  // eps admissible and ||E|| < eps^5
    bool converged = false;
};

// Iterates step() until the masked norm of M_k drops below stop_tol, the
// masked norm stagnates (ratio > 0.9 three times in a row), or max_iter is
// hit. Convergence outside the certified basin is attempted and reported,
// not rejected.
ReductionResult reduce(const ReducerSetup& setup, const ComplexMatrix& e,
                       const ReduceOptions& opts = {});

// The certified bound sequence (delta_k, tau_k), k = 1..k_max, from
// delta_1 = tau_1 = eps^5, delta_{k+1} = delta_k tau_k / eps,
// tau_{k+1} = tau_k + delta_k / eps. Requires 0 < eps < 1/3.
std::vector<std::pair<double, double>> bound_sequence(double eps, int k_max);

} // namespace mvd
