#include "mvd/star_pattern.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mvd {

namespace {

void check_grid(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("pattern dimensions must be positive");
}

} // namespace

StarPattern::StarPattern(int rows, int cols) : rows_(rows), cols_(cols) { check_grid(rows, cols); }

StarPattern::StarPattern(int rows, int cols, std::initializer_list<Pos> stars)
    : StarPattern(rows, cols) {
    for (const Pos& p : stars) add(p.first, p.second);
}

StarPattern StarPattern::full(int rows, int cols) {
    StarPattern p(rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) p.stars_.insert({i, j});
    return p;
}

void StarPattern::add(int i, int j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("star position (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    stars_.insert({i, j});
}

void StarPattern::unite(const StarPattern& other) {
    if (other.rows_ != rows_ || other.cols_ != cols_)
        throw std::invalid_argument("pattern union dimension mismatch");
    stars_.insert(other.stars_.begin(), other.stars_.end());
}

void StarPattern::embed(const StarPattern& block, int row_offset, int col_offset) {
    if (row_offset < 0 || col_offset < 0 || row_offset + block.rows_ > rows_ ||
        col_offset + block.cols_ > cols_)
        throw std::invalid_argument("embedded pattern does not fit");
    for (const Pos& p : block.stars_) stars_.insert({p.first + row_offset, p.second + col_offset});
}

StarPattern StarPattern::rotated90() const {
    StarPattern r(cols_, rows_);
    for (const Pos& p : stars_) r.stars_.insert({p.second, rows_ + 1 - p.first});
    return r;
}

StarPattern StarPattern::transposed() const {
    StarPattern t(cols_, rows_);
    for (const Pos& p : stars_) t.stars_.insert({p.second, p.first});
    return t;
}

std::string StarPattern::render() const {
    std::string out;
    out.reserve(static_cast<size_t>(rows_) * (2 * cols_));
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            out += contains(i, j) ? '*' : '0';
            if (j < cols_) out += ' ';
        }
        if (i < rows_) out += '\n';
    }
    return out;
}

double masked_norm(const ComplexMatrix& p, const StarPattern& pattern) {
    if (p.rows() != pattern.rows() || p.cols() != pattern.cols())
        throw std::invalid_argument("masked_norm dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j)
            if (!pattern.contains(i + 1, j + 1)) s += std::norm(p(i, j));
    return std::sqrt(s);
}

ComplexMatrix restrict_to_pattern(const ComplexMatrix& p, const StarPattern& pattern) {
    if (p.rows() != pattern.rows() || p.cols() != pattern.cols())
        throw std::invalid_argument("restrict_to_pattern dimension mismatch");
    ComplexMatrix out(p.rows(), p.cols());
    for (const auto& [i, j] : pattern.stars()) out(i - 1, j - 1) = p(i - 1, j - 1);
    return out;
}

ComplexMatrix restrict_off_pattern(const ComplexMatrix& p, const StarPattern& pattern) {
    ComplexMatrix out = p;
    for (const auto& [i, j] : pattern.stars()) out(i - 1, j - 1) = cplx(0.0);
    return out;
}

} // namespace mvd
