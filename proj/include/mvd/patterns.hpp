#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvd/canonical.hpp"
#include "mvd/star_pattern.hpp"

namespace mvd {

// Primitive (0,*) shapes. The NW shapes place their stars along the first
// column (when rows <= cols) or the first row (when rows >= cols):
//   NWArrow  - every position on that edge,
//   NWVdash  - alternating positions starting WITH a star at the corner,
//   NWModels - alternating positions starting with a zero at the corner.
// The NE/SE/SW variants are the NW shapes rotated clockwise by 90/180/270
// degrees. UpDown is a full first (or last) row. Pmn, defined for
// rows <= cols, has stars at (rows, rows+2..cols). DownRow is a full last row.
enum class ShapeKind {
    NWArrow, NWVdash, NWModels,
    NEArrow, NEVdash, NEModels,
    SEArrow, SEVdash, SEModels,
    SWArrow, SWVdash, SWModels,
    UpDown, Pmn, Zero, Full, DownRow,
};

// Layout selector for the shapes that admit two equivalent forms. For the
// arrow family on a square box, Column/Row select the pre-rotation form
// (Auto = Column); on rectangular boxes the form is dictated by the shape
// definition and the selector is ignored. For UpDown, Top/Bottom select the
// starred row (Auto = Top). Star counts never depend on the selector.
enum class Orient { Auto, Column, Row, Top, Bottom };

StarPattern primitive_shape(ShapeKind kind, int rows, int cols, Orient orient = Orient::Auto);

struct PatternOptions {
    Orient corner_form = Orient::Auto;  // arrow-family square-box choice
    Orient updown_form = Orient::Auto;  // UpDown row choice
    // Tolerance for the lambda coincidence tests in the off-diagonal tables
    // (lambda = mu, lambda*mu = 1, lambda = +-1). 0 means exact comparison.
    double lambda_tol = 0.0;
};

// The deformation pattern sitting on a block's own diagonal position.
StarPattern diagonal_pattern(const CanonicalBlock& b, const PatternOptions& opts = {});

// The pair (D_ji, D_ij) of patterns for an ordered block pair (i < j) in
// canonical structure order: D_ji is outer_j x outer_i, D_ij the transpose
// shape. Requires the pair in canonical type order (and J sizes decreasing).
std::pair<StarPattern, StarPattern> offdiagonal_pattern(const CanonicalBlock& bi,
                                                        const CanonicalBlock& bj,
                                                        const PatternOptions& opts = {});

// Union of all diagonal and off-diagonal patterns at their block offsets.
// The structure must be in canonical order.
StarPattern full_pattern(const CanonicalStructure& s, const PatternOptions& opts = {});

// Star count of full_pattern = codimension of the congruence class of A_can.
int codimension(const CanonicalStructure& s, const PatternOptions& opts = {});

// Notes for lambdas within `margin` of an excluded value or of a pairwise
// coincidence, where the exact case split of the tables is numerically
// fragile. Exact hits are not warned about (they select their own table row).
std::vector<std::string> lambda_warnings(const CanonicalStructure& s, double margin = 1e-8);

} // namespace mvd
