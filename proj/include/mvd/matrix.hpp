#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace mvd {

using cplx = std::complex<double>;

// Dense complex matrix with row-major storage. Entries must be finite; the
// constructors that accept entry data enforce this, as do the parsers.
//
// Vectorization is column-stacking: the matrix unit E_ij (1-based) maps to
// the unit vector e_k with k = (j-1)*rows + i. This indexing is shared by
// every module that works in vectorized coordinates and must not change.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(int rows, int cols, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    // 0-based element access.
    cplx& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator-(ComplexMatrix a) { return a *= cplx(-1.0); }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

double frobenius_norm(const ComplexMatrix& p);
double max_abs(const ComplexMatrix& p);

// Column-stacking bijection; devectorize(vectorize(p), p.rows(), p.cols()) == p.
std::vector<cplx> vectorize(const ComplexMatrix& p);
ComplexMatrix devectorize(const std::vector<cplx>& v, int rows, int cols);

// Entrywise comparison: max |a_ij - b_ij| <= tol. Shapes must match.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

} // namespace mvd
