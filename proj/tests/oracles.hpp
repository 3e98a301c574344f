#pragma once

// Brute-force reference computations for the test suites. Everything here is
// deliberately independent of the library's Eigen-backed solvers: plain
// Gram-Schmidt spans and Gaussian elimination over ComplexMatrix only.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mvd/matrix.hpp"

namespace oracle {

using mvd::ComplexMatrix;
using mvd::cplx;

inline double vec_norm(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return std::sqrt(s);
}

inline std::vector<cplx> matvec(const ComplexMatrix& m, const std::vector<cplx>& v) {
    if (v.size() != static_cast<size_t>(m.cols())) throw std::invalid_argument("matvec shape");
    std::vector<cplx> out(static_cast<size_t>(m.rows()), cplx(0.0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[static_cast<size_t>(i)] += m(i, j) * v[static_cast<size_t>(j)];
    return out;
}

// Dimension of the span of the given vectors: modified Gram-Schmidt with a
// second orthogonalization pass, keeping vectors whose remainder exceeds
// tol relative to their own norm.
inline int span_dim(std::vector<std::vector<cplx>> vecs, double tol = 1e-10) {
    std::vector<std::vector<cplx>> basis;
    for (std::vector<cplx>& v : vecs) {
        const double scale = vec_norm(v);
        if (scale == 0.0) continue;
        for (int pass = 0; pass < 2; ++pass) {
            for (const std::vector<cplx>& q : basis) {
                cplx coeff(0.0);
                for (size_t k = 0; k < v.size(); ++k) coeff += std::conj(q[k]) * v[k];
                for (size_t k = 0; k < v.size(); ++k) v[k] -= coeff * q[k];
            }
        }
        const double rem = vec_norm(v);
        if (rem > tol * scale) {
            for (cplx& z : v) z /= rem;
            basis.push_back(std::move(v));
        }
    }
    return static_cast<int>(basis.size());
}

inline int column_span_dim(const ComplexMatrix& m, double tol = 1e-10) {
    std::vector<std::vector<cplx>> cols;
    cols.reserve(static_cast<size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<cplx> c(static_cast<size_t>(m.rows()));
        for (int i = 0; i < m.rows(); ++i) c[static_cast<size_t>(i)] = m(i, j);
        cols.push_back(std::move(c));
    }
    return span_dim(std::move(cols), tol);
}

// Square solve by Gaussian elimination with partial pivoting.
inline std::vector<cplx> gauss_solve(ComplexMatrix a, std::vector<cplx> b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("gauss_solve shape");
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) == 0.0) throw std::runtime_error("singular system");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            std::swap(b[static_cast<size_t>(pivot)], b[static_cast<size_t>(col)]);
        }
        for (int r = col + 1; r < n; ++r) {
            const cplx factor = a(r, col) / a(col, col);
            if (factor == cplx(0.0)) continue;
            for (int j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
            b[static_cast<size_t>(r)] -= factor * b[static_cast<size_t>(col)];
        }
    }
    std::vector<cplx> x(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        cplx acc = b[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) acc -= a(i, j) * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] = acc / a(i, i);
    }
    return x;
}

// Minimum-norm solution of a consistent full-row-rank system via the normal
// equations x = M* (M M*)^{-1} b.
inline std::vector<cplx> least_norm_normal_equations(const ComplexMatrix& m,
                                                     const std::vector<cplx>& b) {
    const ComplexMatrix gram = m * m.adjoint();
    const std::vector<cplx> y = gauss_solve(gram, b);
    return matvec(m.adjoint(), y);
}

// The n^2 spanning directions {E_ij^T A + A E_ij} of the tangent space,
// built from explicit unit matrices and plain matrix products.
inline std::vector<std::vector<cplx>> tangent_directions(const ComplexMatrix& a) {
    const int n = a.rows();
    std::vector<std::vector<cplx>> dirs;
    dirs.reserve(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            ComplexMatrix e(n, n);
            e(i, j) = cplx(1.0);
            dirs.push_back(vectorize(e.transpose() * a + a * e));
        }
    }
    return dirs;
}

inline int tangent_span_dim(const ComplexMatrix& a, double tol = 1e-10) {
    return span_dim(tangent_directions(a), tol);
}

} // namespace oracle
