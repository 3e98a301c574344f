#include "mvd/tangent.hpp"

#include <cmath>
#include <stdexcept>

#include "mvd/errors.hpp"

namespace mvd {

namespace {

void require_square(const ComplexMatrix& a, const char* who) {
    if (!a.is_square()) throw std::invalid_argument(std::string(who) + " requires a square matrix");
}

// Column-stacked index of the 0-based position (i, j) in an r x c matrix.
inline int vec_index(int i, int j, int r) { return j * r + i; }

// Incremental orthonormal span with two-pass Gram-Schmidt projection.
class Span {
public:
    explicit Span(std::vector<std::vector<cplx>> basis) : basis_(std::move(basis)) {}

    // Returns true (and absorbs the vector) when v is independent of the
    // current span at the given threshold relative to ||v||.
    bool try_extend(std::vector<cplx> v, double tol) {
        const double scale = norm(v);
        if (scale == 0.0) return false;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis_) {
                cplx coeff(0.0);
                for (size_t k = 0; k < v.size(); ++k) coeff += std::conj(q[k]) * v[k];
                for (size_t k = 0; k < v.size(); ++k) v[k] -= coeff * q[k];
            }
        }
        const double rem = norm(v);
        if (rem <= tol * scale) return false;
        for (cplx& z : v) z /= rem;
        basis_.push_back(std::move(v));
        return true;
    }

private:
    static double norm(const std::vector<cplx>& v) {
        double s = 0.0;
        for (const cplx& z : v) s += std::norm(z);
        return std::sqrt(s);
    }

    std::vector<std::vector<cplx>> basis_;
};

TransversalityReport classify(int dim, int tangent_rank, int stars, int combined_rank) {
    TransversalityReport r;
    r.dim = dim;
    r.tangent_rank = tangent_rank;
    r.pattern_stars = stars;
    r.combined_rank = combined_rank;
    if (combined_rank < dim)
        r.verdict = Verdict::NotSpanning;
    else if (tangent_rank + stars == dim)
        r.verdict = Verdict::DirectSum;
    else
        r.verdict = Verdict::SumNotDirect;
    return r;
}

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::DirectSum: return "DirectSum";
        case Verdict::SumNotDirect: return "SumNotDirect";
        case Verdict::NotSpanning: return "NotSpanning";
    }
    return "?";
}

ComplexMatrix congruence_direction(const ComplexMatrix& a, const ComplexMatrix& c) {
    require_square(a, "congruence_direction");
    return c.transpose() * a + a * c;
}

TangentOperator tangent_operator(const ComplexMatrix& a) {
    require_square(a, "tangent_operator");
    const int n = a.rows();
    ComplexMatrix op(n * n, n * n);
    // The unit E_ij contributes row j of the image from E_ij^T A (a copy of
    // row i of A) and column j from A E_ij (a copy of column i of A).
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int col = vec_index(i, j, n);
            for (int c = 0; c < n; ++c) op(vec_index(j, c, n), col) += a(i, c);
            for (int r = 0; r < n; ++r) op(vec_index(r, j, n), col) += a(r, i);
        }
    }
    return {a, op};
}

PairTangentOperator pair_tangent_operator(const ComplexMatrix& m, const ComplexMatrix& n) {
    require_square(m, "pair_tangent_operator");
    require_square(n, "pair_tangent_operator");
    const int mm = m.rows();
    const int nn = n.rows();
    const int mn = mm * nn;
    ComplexMatrix op(2 * mn, 2 * mn);
    // S unit at (p, q), S is mm x nn. First output (nn x mm): S^T M has row q
    // equal to row p of M. Second output (mm x nn): M S has column q equal to
    // column p of M.
    for (int q = 0; q < nn; ++q) {
        for (int p = 0; p < mm; ++p) {
            const int col = vec_index(p, q, mm);
            for (int c = 0; c < mm; ++c) op(vec_index(q, c, nn), col) += m(p, c);
            for (int r = 0; r < mm; ++r) op(mn + vec_index(r, q, mm), col) += m(r, p);
        }
    }
    // R unit at (p, q), R is nn x mm. First output: N R has column q equal to
    // column p of N. Second output: R^T N has row q equal to row p of N.
    for (int q = 0; q < mm; ++q) {
        for (int p = 0; p < nn; ++p) {
            const int col = mn + vec_index(p, q, nn);
            for (int r = 0; r < nn; ++r) op(vec_index(r, q, nn), col) += n(r, p);
            for (int c = 0; c < nn; ++c) op(mn + vec_index(q, c, mm), col) += n(p, c);
        }
    }
    return {m, n, op};
}

TransversalityReport check_transversality(const ComplexMatrix& a, const StarPattern& pattern,
                                          double tol) {
    require_square(a, "check_transversality");
    const int n = a.rows();
    if (pattern.rows() != n || pattern.cols() != n)
        throw std::invalid_argument("pattern dimensions must match the matrix");
    const TangentOperator t = tangent_operator(a);
    const int dim = n * n;
    const int stars = pattern.size();
    ComplexMatrix combined(dim, dim + stars);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) combined(i, j) = t.op(i, j);
    int col = dim;
    for (const auto& [i, j] : pattern.stars())
        combined(vec_index(i - 1, j - 1, n), col++) = cplx(1.0);
    return classify(dim, rank_of(t.op, tol).rank, stars, rank_of(combined, tol).rank);
}

TransversalityReport check_pair_transversality(const ComplexMatrix& m, const ComplexMatrix& n,
                                               const StarPattern& pattern_ji,
                                               const StarPattern& pattern_ij, double tol) {
    const int mm = m.rows();
    const int nn = n.rows();
    if (pattern_ji.rows() != nn || pattern_ji.cols() != mm)
        throw std::invalid_argument("pattern_ji must be n x m");
    if (pattern_ij.rows() != mm || pattern_ij.cols() != nn)
        throw std::invalid_argument("pattern_ij must be m x n");
    const PairTangentOperator t = pair_tangent_operator(m, n);
    const int dim = 2 * mm * nn;
    const int stars = pattern_ji.size() + pattern_ij.size();
    ComplexMatrix combined(dim, dim + stars);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) combined(i, j) = t.op(i, j);
    int col = dim;
    for (const auto& [i, j] : pattern_ji.stars())
        combined(vec_index(i - 1, j - 1, nn), col++) = cplx(1.0);
    for (const auto& [i, j] : pattern_ij.stars())
        combined(mm * nn + vec_index(i - 1, j - 1, mm), col++) = cplx(1.0);
    return classify(dim, rank_of(t.op, tol).rank, stars, rank_of(combined, tol).rank);
}

PatternProjection project_onto_pattern(const ComplexMatrix& a, const StarPattern& pattern,
                                       const ComplexMatrix& c, double tol) {
    require_square(a, "project_onto_pattern");
    const int n = a.rows();
    if (c.rows() != n || c.cols() != n)
        throw std::invalid_argument("C must have the same dimensions as A");
    const TransversalityReport report = check_transversality(a, pattern, tol);
    if (report.verdict != Verdict::DirectSum)
        throw NotTransversal(std::string("pattern is not a direct-sum transversal: ") +
                             to_string(report.verdict));

    const TangentOperator t = tangent_operator(a);
    // Solve the off-pattern rows of vec(C) + T vec(X) = 0.
    std::vector<int> off_rows;
    off_rows.reserve(static_cast<size_t>(n) * n - pattern.size());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (!pattern.contains(i + 1, j + 1)) off_rows.push_back(vec_index(i, j, n));

    ComplexMatrix m_off(static_cast<int>(off_rows.size()), n * n);
    for (size_t r = 0; r < off_rows.size(); ++r)
        for (int j = 0; j < n * n; ++j) m_off(static_cast<int>(r), j) = t.op(off_rows[r], j);

    const std::vector<cplx> vc = vectorize(c);
    std::vector<cplx> b(off_rows.size());
    for (size_t r = 0; r < off_rows.size(); ++r) b[r] = -vc[off_rows[r]];

    const std::vector<cplx> vx = solve_least_norm(m_off, b, tol);
    const ComplexMatrix x = devectorize(vx, n, n);
    const ComplexMatrix d_full = c + congruence_direction(a, x);
    return {restrict_to_pattern(d_full, pattern), x};
}

StarPattern greedy_miniversal(const ComplexMatrix& a, double tol) {
    require_square(a, "greedy_miniversal");
    const int n = a.rows();
    const TangentOperator t = tangent_operator(a);
    Span span(orthonormal_colspace(t.op, tol));
    StarPattern kept(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            std::vector<cplx> unit(static_cast<size_t>(n) * n, cplx(0.0));
            unit[vec_index(i - 1, j - 1, n)] = cplx(1.0);
            if (span.try_extend(std::move(unit), tol)) kept.add(i, j);
        }
    }
    return kept;
}

} // namespace mvd
