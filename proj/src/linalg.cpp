#include "mvd/linalg.hpp"

#include <Eigen/Dense>

#include <stdexcept>

#include "mvd/errors.hpp"

namespace mvd {

namespace {

using EigenMat = Eigen::MatrixXcd;
using EigenVec = Eigen::VectorXcd;

EigenMat to_eigen(const ComplexMatrix& m) {
    return Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        m.data().data(), m.rows(), m.cols());
}

EigenVec to_eigen(const std::vector<cplx>& v) {
    return Eigen::Map<const EigenVec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<cplx> from_eigen(const EigenVec& v) {
    return std::vector<cplx>(v.data(), v.data() + v.size());
}

int rank_from_singular_values(const Eigen::VectorXd& sv, double tol) {
    if (sv.size() == 0) return 0;
    const double cutoff = tol * sv(0);
    int r = 0;
    while (r < sv.size() && sv(r) > cutoff) ++r;
    return r;
}

} // namespace

RankReport rank_of(const ComplexMatrix& p, double tol) {
    if (tol <= 0) throw std::invalid_argument("rank tolerance must be positive");
    Eigen::JacobiSVD<EigenMat> svd(to_eigen(p));
    RankReport report;
    report.tolerance = tol;
    const Eigen::VectorXd& sv = svd.singularValues();
    report.magnitudes.assign(sv.data(), sv.data() + sv.size());
    report.rank = rank_from_singular_values(sv, tol);
    return report;
}

std::vector<std::vector<cplx>> orthonormal_colspace(const ComplexMatrix& m, double tol) {
    Eigen::JacobiSVD<EigenMat> svd(to_eigen(m), Eigen::ComputeThinU);
    const int r = rank_from_singular_values(svd.singularValues(), tol);
    std::vector<std::vector<cplx>> basis;
    basis.reserve(r);
    for (int k = 0; k < r; ++k) basis.push_back(from_eigen(svd.matrixU().col(k)));
    return basis;
}

struct LeastNormSolver::Impl {
    Eigen::CompleteOrthogonalDecomposition<EigenMat> cod;
    EigenMat m;
    double tol;
};

LeastNormSolver::LeastNormSolver(const ComplexMatrix& m, double tol)
    : impl_(std::make_unique<Impl>()) {
    if (tol <= 0) throw std::invalid_argument("solver tolerance must be positive");
    impl_->m = to_eigen(m);
    impl_->tol = tol;
    impl_->cod.setThreshold(tol);
    impl_->cod.compute(impl_->m);
}

LeastNormSolver::~LeastNormSolver() = default;
LeastNormSolver::LeastNormSolver(LeastNormSolver&&) noexcept = default;
LeastNormSolver& LeastNormSolver::operator=(LeastNormSolver&&) noexcept = default;

int LeastNormSolver::rank() const { return static_cast<int>(impl_->cod.rank()); }

std::vector<cplx> LeastNormSolver::solve_unchecked(const std::vector<cplx>& b,
                                                   double& residual) const {
    if (static_cast<Eigen::Index>(b.size()) != impl_->m.rows())
        throw std::invalid_argument("right-hand side length does not match matrix rows");
    EigenVec bv = to_eigen(b);
    EigenVec x = impl_->cod.solve(bv);
    residual = (impl_->m * x - bv).norm();
    return from_eigen(x);
}

std::vector<cplx> LeastNormSolver::solve(const std::vector<cplx>& b) const {
    double residual = 0.0;
    std::vector<cplx> x = solve_unchecked(b, residual);
    const double bnorm = to_eigen(b).norm();
    if (residual > impl_->tol * (1.0 + bnorm))
        throw InconsistentSystem("linear system inconsistent: residual " +
                                 std::to_string(residual) + " exceeds tolerance");
    return x;
}

std::vector<cplx> solve_least_norm(const ComplexMatrix& m, const std::vector<cplx>& b,
                                   double tol) {
    return LeastNormSolver(m, tol).solve(b);
}

} // namespace mvd
