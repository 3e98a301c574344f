#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <utility>

#include "mvd/matrix.hpp"

namespace mvd {

// The star positions of a (0,*) template: a set of 1-based (row, col) indices
// inside a rows x cols grid. Iteration order is the sorted set order, so
// renderings and serializations are deterministic.
class StarPattern {
public:
    using Pos = std::pair<int, int>;

    StarPattern() = default;
    StarPattern(int rows, int cols);
    StarPattern(int rows, int cols, std::initializer_list<Pos> stars);

    static StarPattern full(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int size() const { return static_cast<int>(stars_.size()); }
    bool contains(int i, int j) const { return stars_.count({i, j}) != 0; }
    const std::set<Pos>& stars() const { return stars_; }

    void add(int i, int j);

    // In-place union with a pattern of identical dimensions.
    void unite(const StarPattern& other);

    // In-place union with `block` placed at the given 0-based corner offsets;
    // the block must fit inside this grid.
    void embed(const StarPattern& block, int row_offset, int col_offset);

    // Clockwise quarter turn: a rows x cols pattern becomes cols x rows with
    // (i, j) -> (j, rows + 1 - i).
    StarPattern rotated90() const;

    StarPattern transposed() const;

    // Grid of '0' and '*' characters, one line per row.
    std::string render() const;

    friend bool operator==(const StarPattern& a, const StarPattern& b) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::set<Pos> stars_;
};

// Frobenius norm of p over the positions NOT in the pattern. Dimensions of p
// and pattern must agree.
double masked_norm(const ComplexMatrix& p, const StarPattern& pattern);

// Zeroes the off-pattern entries / the on-pattern entries of p.
ComplexMatrix restrict_to_pattern(const ComplexMatrix& p, const StarPattern& pattern);
ComplexMatrix restrict_off_pattern(const ComplexMatrix& p, const StarPattern& pattern);

} // namespace mvd
