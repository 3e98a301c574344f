#include "mvd/patterns.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mvd {

namespace {

enum class NWBase { Arrow, Vdash, Models };

// The un-rotated NW shapes. The column form applies when rows <= cols, the
// row form when rows >= cols; on a square box `orient` picks between them.
StarPattern nw_base(NWBase base, int rows, int cols, Orient orient) {
    if (orient == Orient::Top || orient == Orient::Bottom)
        throw std::invalid_argument("Top/Bottom orientation applies only to UpDown shapes");
    bool column;
    if (rows < cols) column = true;
    else if (rows > cols) column = false;
    else column = orient != Orient::Row;

    StarPattern p(rows, cols);
    const int start = base == NWBase::Models ? 2 : 1;
    const int step = base == NWBase::Arrow ? 1 : 2;
    if (column)
        for (int i = start; i <= rows; i += step) p.add(i, 1);
    else
        for (int j = start; j <= cols; j += step) p.add(1, j);
    return p;
}

struct RotatedKind {
    NWBase base;
    int quarter_turns;
};

RotatedKind rotation_of(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::NWArrow: return {NWBase::Arrow, 0};
        case ShapeKind::NWVdash: return {NWBase::Vdash, 0};
        case ShapeKind::NWModels: return {NWBase::Models, 0};
        case ShapeKind::NEArrow: return {NWBase::Arrow, 1};
        case ShapeKind::NEVdash: return {NWBase::Vdash, 1};
        case ShapeKind::NEModels: return {NWBase::Models, 1};
        case ShapeKind::SEArrow: return {NWBase::Arrow, 2};
        case ShapeKind::SEVdash: return {NWBase::Vdash, 2};
        case ShapeKind::SEModels: return {NWBase::Models, 2};
        case ShapeKind::SWArrow: return {NWBase::Arrow, 3};
        case ShapeKind::SWVdash: return {NWBase::Vdash, 3};
        case ShapeKind::SWModels: return {NWBase::Models, 3};
        default: throw std::logic_error("not a rotated corner shape");
    }
}

bool lambda_match(cplx a, cplx b, double tol) {
    if (tol <= 0.0) return a == b;
    return std::abs(a - b) <= tol;
}

bool inverse_match(cplx a, cplx b, double tol) {
    if (tol <= 0.0) return a * b == cplx(1.0);
    return std::abs(a * b - cplx(1.0)) <= tol;
}

} // namespace

StarPattern primitive_shape(ShapeKind kind, int rows, int cols, Orient orient) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("shape dimensions must be positive");
    switch (kind) {
        case ShapeKind::UpDown: {
            if (orient == Orient::Column || orient == Orient::Row)
                throw std::invalid_argument("Column/Row orientation applies only to corner shapes");
            StarPattern p(rows, cols);
            const int r = orient == Orient::Bottom ? rows : 1;
            for (int j = 1; j <= cols; ++j) p.add(r, j);
            return p;
        }
        case ShapeKind::Pmn: {
            if (rows > cols)
                throw std::invalid_argument("Pmn is defined only for rows <= cols");
            StarPattern p(rows, cols);
            for (int j = rows + 2; j <= cols; ++j) p.add(rows, j);
            return p;
        }
        case ShapeKind::Zero: return StarPattern(rows, cols);
        case ShapeKind::Full: return StarPattern::full(rows, cols);
        case ShapeKind::DownRow: {
            StarPattern p(rows, cols);
            for (int j = 1; j <= cols; ++j) p.add(rows, j);
            return p;
        }
        default: break;
    }
    const RotatedKind rk = rotation_of(kind);
    // A quarter turn swaps dimensions, so the pre-rotation box is cols x rows
    // for odd turn counts.
    const bool swap = rk.quarter_turns % 2 == 1;
    StarPattern p = nw_base(rk.base, swap ? cols : rows, swap ? rows : cols, orient);
    for (int t = 0; t < rk.quarter_turns; ++t) p = p.rotated90();
    return p;
}

StarPattern diagonal_pattern(const CanonicalBlock& b, const PatternOptions& o) {
    b.validate();
    switch (b.kind) {
        case BlockKind::H: {
            const int m = b.size;
            StarPattern p(2 * m, 2 * m);
            p.embed(primitive_shape(ShapeKind::SWArrow, m, m, o.corner_form), m, 0);
            if (b.lambda == cplx(1.0)) {
                p.embed(primitive_shape(ShapeKind::NWModels, m, m, o.corner_form), 0, 0);
                p.embed(primitive_shape(ShapeKind::SEModels, m, m, o.corner_form), m, m);
            } else if (b.lambda == cplx(-1.0)) {
                p.embed(primitive_shape(ShapeKind::NWVdash, m, m, o.corner_form), 0, 0);
                p.embed(primitive_shape(ShapeKind::SEVdash, m, m, o.corner_form), m, m);
            }
            return p;
        }
        case BlockKind::Gamma:
            return primitive_shape(b.size % 2 == 0 ? ShapeKind::NWVdash : ShapeKind::NWModels,
                                   b.size, b.size, o.corner_form);
        case BlockKind::JordanZero:
            return primitive_shape(ShapeKind::SWVdash, b.size, b.size, o.corner_form);
    }
    throw std::logic_error("unreachable block kind");
}

std::pair<StarPattern, StarPattern> offdiagonal_pattern(const CanonicalBlock& bi,
                                                        const CanonicalBlock& bj,
                                                        const PatternOptions& o) {
    bi.validate();
    bj.validate();
    const int ni = bi.outer_size();
    const int nj = bj.outer_size();
    StarPattern pji(nj, ni);
    StarPattern pij(ni, nj);

    auto shape = [&](ShapeKind k, int r, int c) { return primitive_shape(k, r, c, o.corner_form); };

    if (bi.kind == BlockKind::H && bj.kind == BlockKind::H) {
        const int m = bi.size, n = bj.size;
        const bool inv = inverse_match(bi.lambda, bj.lambda, o.lambda_tol);
        const bool eq = lambda_match(bi.lambda, bj.lambda, o.lambda_tol);
        // pji is 2n x 2m, partitioned into n x m quarters.
        if (inv) {
            pji.embed(shape(ShapeKind::NWArrow, n, m), 0, 0);
            pji.embed(shape(ShapeKind::SEArrow, n, m), n, m);
        }
        if (eq) {
            pji.embed(shape(ShapeKind::NEArrow, n, m), 0, m);
            pji.embed(shape(ShapeKind::SWArrow, n, m), n, 0);
        }
    } else if (bi.kind == BlockKind::Gamma && bj.kind == BlockKind::Gamma) {
        if ((bi.size - bj.size) % 2 == 0) pji = shape(ShapeKind::NWArrow, nj, ni);
    } else if (bi.kind == BlockKind::JordanZero && bj.kind == BlockKind::JordanZero) {
        const int m = bi.size, n = bj.size;
        if (m < n)
            throw std::invalid_argument(
                "J block pair must be ordered by weakly decreasing size; call canonicalize()");
        pji = shape(ShapeKind::SWVdash, n, m);
        pij = shape(ShapeKind::SWVdash, m, n);
        if (n % 2 == 1) pji.unite(primitive_shape(ShapeKind::Pmn, n, m));
    } else if (bi.kind == BlockKind::H && bj.kind == BlockKind::Gamma) {
        const int m = bi.size, n = bj.size;
        if (lambda_match(bi.lambda, cplx(n % 2 == 1 ? 1.0 : -1.0), o.lambda_tol)) {
            pji.embed(shape(ShapeKind::NWArrow, n, m), 0, 0);
            pji.embed(shape(ShapeKind::NEArrow, n, m), 0, m);
        }
    } else if (bi.kind == BlockKind::H && bj.kind == BlockKind::JordanZero) {
        if (bj.size % 2 == 1)
            pji = primitive_shape(ShapeKind::UpDown, nj, ni, o.updown_form);
    } else if (bi.kind == BlockKind::Gamma && bj.kind == BlockKind::JordanZero) {
        if (bj.size % 2 == 1)
            pji = primitive_shape(ShapeKind::UpDown, nj, ni, o.updown_form);
    } else {
        throw std::invalid_argument(
            "block pair not in canonical type order (H, then Gamma, then J)");
    }
    return {pji, pij};
}

StarPattern full_pattern(const CanonicalStructure& s, const PatternOptions& o) {
    s.validate();
    if (!s.in_canonical_order())
        throw std::invalid_argument(
            "structure must be in canonical order (H, Gamma, J with J sizes weakly decreasing); "
            "call canonicalize() first");
    const int n = s.total_dim();
    StarPattern p(n, n);
    const std::vector<int> off = s.offsets();
    for (size_t i = 0; i < s.blocks.size(); ++i)
        p.embed(diagonal_pattern(s.blocks[i], o), off[i], off[i]);
    for (size_t i = 0; i < s.blocks.size(); ++i) {
        for (size_t j = i + 1; j < s.blocks.size(); ++j) {
            auto [pji, pij] = offdiagonal_pattern(s.blocks[i], s.blocks[j], o);
            p.embed(pji, off[j], off[i]);
            p.embed(pij, off[i], off[j]);
        }
    }
    return p;
}

int codimension(const CanonicalStructure& s, const PatternOptions& o) {
    return full_pattern(s, o).size();
}

std::vector<std::string> lambda_warnings(const CanonicalStructure& s, double margin) {
    std::vector<std::string> warnings;
    auto near = [margin](cplx a, cplx b) { return a != b && std::abs(a - b) <= margin; };
    for (size_t i = 0; i < s.blocks.size(); ++i) {
        const CanonicalBlock& b = s.blocks[i];
        if (b.kind != BlockKind::H) continue;
        std::ostringstream os;
        if (near(b.lambda, cplx(1.0)) || near(b.lambda, cplx(-1.0)) || near(b.lambda, cplx(0.0))) {
            os << "block " << i + 1 << " (" << b.label()
               << "): lambda is within " << margin << " of an excluded value";
            warnings.push_back(os.str());
            continue;
        }
        for (size_t j = i + 1; j < s.blocks.size(); ++j) {
            const CanonicalBlock& c = s.blocks[j];
            if (c.kind != BlockKind::H) continue;
            const bool near_eq = near(b.lambda, c.lambda);
            const bool near_inv =
                b.lambda * c.lambda != cplx(1.0) && std::abs(b.lambda * c.lambda - cplx(1.0)) <= margin;
            if (near_eq || near_inv) {
                std::ostringstream osp;
                osp << "blocks " << i + 1 << " and " << j + 1 << " (" << b.label() << ", "
                    << c.label() << "): lambdas are within " << margin
                    << " of a coincidence without being exactly equal";
                warnings.push_back(osp.str());
            }
        }
    }
    return warnings;
}

} // namespace mvd
