#include "mvd/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mvd {

namespace {

void check_dims(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("matrix dimensions must be positive, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_finite(const std::vector<cplx>& entries) {
    for (const cplx& z : entries)
        if (!finite(z)) throw std::invalid_argument("matrix entries must be finite");
}

} // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dims(rows, cols);
    data_.assign(static_cast<size_t>(rows) * cols, cplx(0.0));
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    check_dims(rows, cols);
    if (data_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match dimensions");
    check_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    check_dims(rows_, cols_);
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("ragged initializer rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
    check_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = cplx(1.0);
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix c = *this;
    for (cplx& z : c.data_) z = std::conj(z);
    return c;
}

ComplexMatrix ComplexMatrix::adjoint() const { return transpose().conjugate(); }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix addition shape mismatch");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix subtraction shape mismatch");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ComplexMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) continue;
            for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

double frobenius_norm(const ComplexMatrix& p) {
    double s = 0.0;
    for (const cplx& z : p.data()) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& p) {
    double m = 0.0;
    for (const cplx& z : p.data()) m = std::max(m, std::abs(z));
    return m;
}

std::vector<cplx> vectorize(const ComplexMatrix& p) {
    std::vector<cplx> v(static_cast<size_t>(p.rows()) * p.cols());
    size_t k = 0;
    for (int j = 0; j < p.cols(); ++j)
        for (int i = 0; i < p.rows(); ++i) v[k++] = p(i, j);
    return v;
}

ComplexMatrix devectorize(const std::vector<cplx>& v, int rows, int cols) {
    if (v.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("vector length does not match target dimensions");
    ComplexMatrix p(rows, cols);
    size_t k = 0;
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) p(i, j) = v[k++];
    return p;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return max_abs(a - b) <= tol;
}

} // namespace mvd
