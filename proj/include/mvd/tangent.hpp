#pragma once

#include <string>
#include <vector>

#include "mvd/linalg.hpp"
#include "mvd/matrix.hpp"
#include "mvd/star_pattern.hpp"

namespace mvd {

// C^T A + A C, the first-order congruence direction generated by C.
ComplexMatrix congruence_direction(const ComplexMatrix& a, const ComplexMatrix& c);

// Matrix of C -> C^T A + A C in column-stacked coordinates: column k is the
// image of the k-th matrix unit. Its column space is the tangent space T(A).
struct TangentOperator {
    ComplexMatrix base;
    ComplexMatrix op;  // n^2 x n^2
};

TangentOperator tangent_operator(const ComplexMatrix& a);

// Matrix of (S, R) -> (S^T M + N R, R^T N + M S) for M m x m, N n x n, with
// S m x n and R n x m. Columns: the S units then the R units; rows: the first
// output (n x m) stacked over the second (m x n).
struct PairTangentOperator {
    ComplexMatrix m, n;
    ComplexMatrix op;  // 2mn x 2mn
};

PairTangentOperator pair_tangent_operator(const ComplexMatrix& m, const ComplexMatrix& n);

enum class Verdict { DirectSum, SumNotDirect, NotSpanning };

const char* to_string(Verdict v);

struct TransversalityReport {
    int dim = 0;  // ambient dimension: n^2, or 2mn for the pair test
    int tangent_rank = 0;
    int pattern_stars = 0;
    int combined_rank = 0;
    Verdict verdict = Verdict::NotSpanning;
    std::vector<std::string> warnings;
};

// Rank test for C^{n x n} = T(A) (+) D(C): builds [tangent columns | star
// units], ranks both, and classifies. DirectSum iff the combined columns span
// and tangent_rank + stars equals the ambient dimension.
TransversalityReport check_transversality(const ComplexMatrix& a, const StarPattern& pattern,
                                          double tol = kDefaultRankTol);

// Blockwise analogue on the pair space C^{n x m} (+) C^{m x n}.
TransversalityReport check_pair_transversality(const ComplexMatrix& m, const ComplexMatrix& n,
                                               const StarPattern& pattern_ji,
                                               const StarPattern& pattern_ij,
                                               double tol = kDefaultRankTol);

struct PatternProjection {
    ComplexMatrix d;  // supported exactly on the pattern
    ComplexMatrix x;  // least-norm witness with D = C + X^T A + A X
};

// The unique pattern-supported representative of C modulo T(A). Requires a
// DirectSum verdict; throws NotTransversal otherwise.
PatternProjection project_onto_pattern(const ComplexMatrix& a, const StarPattern& pattern,
                                       const ComplexMatrix& c, double tol = kDefaultRankTol);

// Greedy basis completion: scans matrix units row-major ((1,1), (1,2), ...,
// (n,n)) and keeps each unit that enlarges the span of T(A) plus the kept
// units. The result has n^2 - rank T(A) stars.
StarPattern greedy_miniversal(const ComplexMatrix& a, double tol = kDefaultRankTol);

} // namespace mvd
