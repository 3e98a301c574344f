#pragma once

#include <memory>
#include <vector>

#include "mvd/matrix.hpp"

namespace mvd {

inline constexpr double kDefaultRankTol = 1e-10;

// Numerical rank decision: magnitudes holds the singular values in descending
// order; rank counts those above tolerance * magnitudes.front(). Deterministic
// for a fixed input.
struct RankReport {
    int rank = 0;
    double tolerance = kDefaultRankTol;
    std::vector<double> magnitudes;
};

RankReport rank_of(const ComplexMatrix& p, double tol = kDefaultRankTol);

// Minimum-Frobenius-norm x with ||Mx - b|| <= tol * (1 + ||b||).
// Throws InconsistentSystem when no x reaches that residual.
std::vector<cplx> solve_least_norm(const ComplexMatrix& m, const std::vector<cplx>& b,
                                   double tol = kDefaultRankTol);

// Orthonormal basis of the column space of m (one column per basis vector),
// using the same rank threshold rule as rank_of. Returns a rows x 0 result as
// an empty vector list when m is numerically zero.
std::vector<std::vector<cplx>> orthonormal_colspace(const ComplexMatrix& m,
                                                    double tol = kDefaultRankTol);

// Factored minimum-norm solver for repeated right-hand sides against a fixed
// matrix.
class LeastNormSolver {
public:
    explicit LeastNormSolver(const ComplexMatrix& m, double tol = kDefaultRankTol);
    ~LeastNormSolver();
    LeastNormSolver(LeastNormSolver&&) noexcept;
    LeastNormSolver& operator=(LeastNormSolver&&) noexcept;

    int rank() const;

    // Minimum-norm solution; throws InconsistentSystem when the residual
    // exceeds tol * (1 + ||b||).
    std::vector<cplx> solve(const std::vector<cplx>& b) const;

    // As above but reports the residual instead of throwing.
    std::vector<cplx> solve_unchecked(const std::vector<cplx>& b, double& residual) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace mvd
