#include "mvd/reducer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mvd/errors.hpp"

namespace mvd {

namespace {

inline int vec_index(int i, int j, int r) { return j * r + i; }

ComplexMatrix tangent_matrix(const ComplexMatrix& a) {
    const int n = a.rows();
    ComplexMatrix op(n * n, n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int col = vec_index(i, j, n);
            for (int c = 0; c < n; ++c) op(vec_index(j, c, n), col) += a(i, c);
            for (int r = 0; r < n; ++r) op(vec_index(r, j, n), col) += a(r, i);
        }
    }
    return op;
}

} // namespace

const ComplexMatrix& ReducerSetup::f_at(int i, int j) const {
    return f[static_cast<size_t>(vec_index(i - 1, j - 1, a.rows()))];
}

ReducerSetup prepare(const ComplexMatrix& a, const StarPattern& pattern, double tol) {
    if (!a.is_square()) throw std::invalid_argument("prepare requires a square matrix");
    const int n = a.rows();
    if (pattern.rows() != n || pattern.cols() != n)
        throw std::invalid_argument("pattern dimensions must match the matrix");

    const ComplexMatrix t = tangent_matrix(a);
    std::vector<int> off_rows;
    off_rows.reserve(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (!pattern.contains(i + 1, j + 1)) off_rows.push_back(vec_index(i, j, n));

    ReducerSetup setup;
    setup.a = a;
    setup.pattern = pattern;
    setup.a_norm = frobenius_norm(a);
    setup.f.assign(static_cast<size_t>(n) * n, ComplexMatrix(n, n));

    if (!off_rows.empty()) {
        ComplexMatrix m_off(static_cast<int>(off_rows.size()), n * n);
        for (size_t r = 0; r < off_rows.size(); ++r)
            for (int col = 0; col < n * n; ++col)
                m_off(static_cast<int>(r), col) = t(off_rows[r], col);
        LeastNormSolver solver(m_off, tol);

        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                if (pattern.contains(i + 1, j + 1)) continue;  // F_ij = 0 for stars
                const int k = vec_index(i, j, n);
                std::vector<cplx> b(off_rows.size(), cplx(0.0));
                for (size_t r = 0; r < off_rows.size(); ++r)
                    if (off_rows[r] == k) b[r] = cplx(-1.0);
                try {
                    setup.f[static_cast<size_t>(k)] =
                        devectorize(solver.solve(b), n, n);
                } catch (const InconsistentSystem&) {
                    throw NotSpanning("tangent space plus pattern misses the direction of unit (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                }
            }
        }
    }

    for (const ComplexMatrix& f : setup.f) setup.f_sum += frobenius_norm(f);
    setup.eps_max =
        1.0 / std::max(setup.f_sum * (setup.a_norm + 1.0) * (setup.f_sum + 2.0), 3.0);
    return setup;
}

StepResult step(const ReducerSetup& setup, const ComplexMatrix& m_k) {
    const int n = setup.a.rows();
    if (m_k.rows() != n || m_k.cols() != n)
        throw std::invalid_argument("M_k dimensions must match the setup");
    ComplexMatrix c(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const cplx w = m_k(i, j);
            if (w == cplx(0.0)) continue;
            const ComplexMatrix& f = setup.f[static_cast<size_t>(vec_index(i, j, n))];
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) c(r, s) += w * f(r, s);
        }
    }
    const ComplexMatrix ic = ComplexMatrix::identity(n) + c;
    const ComplexMatrix m_next = ic.transpose() * (setup.a + m_k) * ic - setup.a;
    return {m_next, c};
}

ReductionResult reduce(const ReducerSetup& setup, const ComplexMatrix& e,
                       const ReduceOptions& opts) {
    const int n = setup.a.rows();
    if (e.rows() != n || e.cols() != n)
        throw std::invalid_argument("E dimensions must match the setup");

    double eps = opts.eps;
    if (eps <= 0.0) eps = 0.999 * std::min(setup.eps_max, 1.0 / 3.0);
    const double stop_tol =
        opts.stop_tol >= 0.0 ? opts.stop_tol : 1e-12 * (1.0 + setup.a_norm);

    ReductionResult result;
    result.eps = eps;
    result.in_certified_basin =
        eps < setup.eps_max && eps < 1.0 / 3.0 && frobenius_norm(e) < std::pow(eps, 5);

    ComplexMatrix m = e;
    ComplexMatrix s = ComplexMatrix::identity(n);
    double delta = std::pow(eps, 5);
    double tau = delta;
    double prev_masked = -1.0;
    int stall = 0;

    for (int k = 1; k <= opts.max_iter; ++k) {
        const double masked = masked_norm(m, setup.pattern);
        if (masked < stop_tol) {
            result.converged = true;
            break;
        }
        auto [m_next, c] = step(setup, m);
        result.trace.records.push_back(
            {k, frobenius_norm(m), masked, frobenius_norm(c), delta, tau});
        s = s * (ComplexMatrix::identity(n) + c);
        m = std::move(m_next);

        const double next_bound_delta = delta * tau / eps;
        tau = tau + delta / eps;
        delta = next_bound_delta;

        if (prev_masked >= 0.0 && masked > 0.9 * prev_masked) {
            if (++stall >= 3) break;
        } else {
            stall = 0;
        }
        prev_masked = masked;
    }
    if (!result.converged && masked_norm(m, setup.pattern) < stop_tol) result.converged = true;

    result.trace.converged = result.converged;
    result.trace.iterations = static_cast<int>(result.trace.records.size());
    result.s = s;
    result.d = restrict_to_pattern(m, setup.pattern);
    result.residual = masked_norm(m, setup.pattern);
    return result;
}

std::vector<std::pair<double, double>> bound_sequence(double eps, int k_max) {
    if (!(eps > 0.0 && eps < 1.0 / 3.0))
        throw std::domain_error("bound_sequence requires 0 < eps < 1/3");
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<size_t>(k_max));
    double delta = std::pow(eps, 5);
    double tau = delta;
    for (int k = 1; k <= k_max; ++k) {
        out.emplace_back(delta, tau);
        if (!(delta > 0.0 && delta < std::pow(eps, 2 * k)) || !(tau > 0.0 && tau < std::pow(eps, 3)))
            throw std::logic_error("bound sequence left its certified envelope");
        const double next_delta = delta * tau / eps;
        tau = tau + delta / eps;
        delta = next_delta;
    }
    return out;
}

} // namespace mvd
