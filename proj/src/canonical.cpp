#include "mvd/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mvd/errors.hpp"

namespace mvd {

const char* to_string(BlockKind k) {
    switch (k) {
        case BlockKind::H: return "H";
        case BlockKind::Gamma: return "Gamma";
        case BlockKind::JordanZero: return "J0";
    }
    return "?";
}

cplx excluded_h_lambda(int m) { return cplx(m % 2 == 0 ? -1.0 : 1.0); }

void CanonicalBlock::validate() const {
    if (size < 1) throw std::invalid_argument("block size must be >= 1");
    if (kind == BlockKind::H) {
        if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
            throw InvalidLambda("H block lambda must be finite");
        if (lambda == cplx(0.0)) throw InvalidLambda("H block requires lambda != 0");
        if (lambda == excluded_h_lambda(size)) {
            std::ostringstream os;
            os << "H block with m = " << size << " requires lambda != "
               << excluded_h_lambda(size).real() << " (the excluded value (-1)^(m+1))";
            throw InvalidLambda(os.str());
        }
    }
}

std::string CanonicalBlock::label() const {
    std::ostringstream os;
    switch (kind) {
        case BlockKind::H:
            os << "H" << size << "(" << lambda.real();
            if (lambda.imag() != 0.0) os << (lambda.imag() > 0 ? "+" : "") << lambda.imag() << "i";
            os << ")";
            break;
        case BlockKind::Gamma: os << "G" << size; break;
        case BlockKind::JordanZero: os << "J" << size; break;
    }
    return os.str();
}

int CanonicalStructure::total_dim() const {
    int n = 0;
    for (const CanonicalBlock& b : blocks) n += b.outer_size();
    return n;
}

void CanonicalStructure::validate() const {
    if (blocks.empty()) throw std::invalid_argument("structure must contain at least one block");
    for (const CanonicalBlock& b : blocks) b.validate();
    int prev_j = -1;
    for (const CanonicalBlock& b : blocks) {
        if (b.kind != BlockKind::JordanZero) continue;
        if (prev_j >= 0 && b.size > prev_j)
            throw std::invalid_argument(
                "J blocks must appear in weakly decreasing size order; call canonicalize()");
        prev_j = b.size;
    }
}

bool CanonicalStructure::in_canonical_order() const {
    int prev_rank = 0;
    int prev_j = -1;
    for (const CanonicalBlock& b : blocks) {
        const int rank = b.kind == BlockKind::H ? 0 : b.kind == BlockKind::Gamma ? 1 : 2;
        if (rank < prev_rank) return false;
        prev_rank = rank;
        if (b.kind == BlockKind::JordanZero) {
            if (prev_j >= 0 && b.size > prev_j) return false;
            prev_j = b.size;
        }
    }
    return true;
}

std::vector<int> CanonicalStructure::offsets() const {
    std::vector<int> off(blocks.size());
    int acc = 0;
    for (size_t i = 0; i < blocks.size(); ++i) {
        off[i] = acc;
        acc += blocks[i].outer_size();
    }
    return off;
}

std::string CanonicalStructure::label() const {
    std::string out;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += " + ";
        out += blocks[i].label();
    }
    return out;
}

std::pair<CanonicalStructure, std::vector<int>> canonicalize(const CanonicalStructure& s) {
    if (s.blocks.empty()) throw std::invalid_argument("structure must contain at least one block");
    for (const CanonicalBlock& b : s.blocks) b.validate();
    std::vector<int> perm(s.blocks.size());
    std::iota(perm.begin(), perm.end(), 0);
    auto type_rank = [&](int idx) {
        switch (s.blocks[idx].kind) {
            case BlockKind::H: return 0;
            case BlockKind::Gamma: return 1;
            case BlockKind::JordanZero: return 2;
        }
        return 3;
    };
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        const int ra = type_rank(a), rb = type_rank(b);
        if (ra != rb) return ra < rb;
        if (s.blocks[a].kind == BlockKind::JordanZero)
            return s.blocks[a].size > s.blocks[b].size;  // r_1 >= r_2 >= ...
        return false;  // stable within H and Gamma groups
    });
    CanonicalStructure out;
    out.blocks.reserve(s.blocks.size());
    for (int idx : perm) out.blocks.push_back(s.blocks[idx]);
    return {out, perm};
}

ComplexMatrix jordan_block(int n, cplx lambda) {
    if (n < 1) throw std::invalid_argument("jordan_block size must be >= 1");
    ComplexMatrix j(n, n);
    for (int i = 0; i < n; ++i) {
        j(i, i) = lambda;
        if (i + 1 < n) j(i, i + 1) = cplx(1.0);
    }
    return j;
}

ComplexMatrix gamma_block(int n) {
    if (n < 1) throw std::invalid_argument("gamma_block size must be >= 1");
    ComplexMatrix g(n, n);
    for (int i = 1; i <= n; ++i) {
        const cplx v((n - i) % 2 == 0 ? 1.0 : -1.0);
        g(i - 1, n - i) = v;          // anti-diagonal entry (i, n+1-i)
        if (i >= 2) g(i - 1, n - i + 1) = v;  // right neighbor (i, n+2-i)
    }
    return g;
}

ComplexMatrix h_block(int m, cplx lambda) {
    CanonicalBlock::h(m, lambda).validate();
    ComplexMatrix h(2 * m, 2 * m);
    const ComplexMatrix j = jordan_block(m, lambda);
    for (int i = 0; i < m; ++i) {
        h(i, m + i) = cplx(1.0);
        for (int k = 0; k < m; ++k) h(m + i, k) = j(i, k);
    }
    return h;
}

ComplexMatrix assemble(const CanonicalStructure& s) {
    s.validate();
    const int n = s.total_dim();
    ComplexMatrix a(n, n);
    const std::vector<int> off = s.offsets();
    for (size_t b = 0; b < s.blocks.size(); ++b) {
        ComplexMatrix blk;
        switch (s.blocks[b].kind) {
            case BlockKind::H: blk = h_block(s.blocks[b].size, s.blocks[b].lambda); break;
            case BlockKind::Gamma: blk = gamma_block(s.blocks[b].size); break;
            case BlockKind::JordanZero: blk = jordan_block(s.blocks[b].size, cplx(0.0)); break;
        }
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j) a(off[b] + i, off[b] + j) = blk(i, j);
    }
    return a;
}

SymSkewPair split_sym_skew(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("split_sym_skew requires a square matrix");
    const ComplexMatrix at = a.transpose();
    SymSkewPair p{a, a};
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            p.sym(i, j) = (a(i, j) + at(i, j)) * 0.5;
            p.skew(i, j) = (a(i, j) - at(i, j)) * 0.5;
        }
    }
    return p;
}

} // namespace mvd
