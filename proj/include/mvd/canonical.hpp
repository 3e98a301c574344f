#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvd/matrix.hpp"

namespace mvd {

enum class BlockKind { H, Gamma, JordanZero };

const char* to_string(BlockKind k);

// The excluded lambda for H_m: (-1)^(m+1).
cplx excluded_h_lambda(int m);

// One summand of a congruence canonical form: H_m(lambda) (outer size 2m),
// Gamma_n, or J_k(0). `size` is m, n, or k respectively; `lambda` is only
// meaningful for H blocks.
struct CanonicalBlock {
    BlockKind kind = BlockKind::Gamma;
    int size = 1;
    cplx lambda{};

    static CanonicalBlock h(int m, cplx lambda) { return {BlockKind::H, m, lambda}; }
    static CanonicalBlock gamma(int n) { return {BlockKind::Gamma, n, cplx(0.0)}; }
    static CanonicalBlock jordan_zero(int k) { return {BlockKind::JordanZero, k, cplx(0.0)}; }

    int outer_size() const { return kind == BlockKind::H ? 2 * size : size; }

    // Throws InvalidLambda / std::invalid_argument on violated side conditions.
    void validate() const;

    // Short display form: "H2(0.5)", "G3", "J2".
    std::string label() const;

    friend bool operator==(const CanonicalBlock&, const CanonicalBlock&) = default;
};

// Ordered direct sum describing A_can. Block order is preserved as given;
// in_canonical_order() tells whether the order matches the convention the
// pattern tables assume (H blocks, then Gamma blocks, then J blocks with
// weakly decreasing sizes).
struct CanonicalStructure {
    std::vector<CanonicalBlock> blocks;

    int total_dim() const;
    void validate() const;
    bool in_canonical_order() const;

    // 0-based row/col offset of each block inside the assembled matrix.
    std::vector<int> offsets() const;

    std::string label() const;

    friend bool operator==(const CanonicalStructure&, const CanonicalStructure&) = default;
};

// Stable reorder into canonical order. perm[k] is the source index of the
// block that lands at position k.
std::pair<CanonicalStructure, std::vector<int>> canonicalize(const CanonicalStructure& s);

// n x n, lambda on the diagonal, 1 on the superdiagonal.
ComplexMatrix jordan_block(int n, cplx lambda);

// The anti-triangular Gamma_n block: entries (i, n+1-i) = (-1)^(n-i) on the
// anti-diagonal and the same value at the right neighbor (i, n+2-i) for i >= 2.
ComplexMatrix gamma_block(int n);

// [[0, I_m], [J_m(lambda), 0]]; throws InvalidLambda when lambda = 0 or
// lambda = (-1)^(m+1).
ComplexMatrix h_block(int m, cplx lambda);

// Block-diagonal direct sum in the structure's block order.
ComplexMatrix assemble(const CanonicalStructure& s);

struct SymSkewPair {
    ComplexMatrix sym;   // (A + A^T) / 2
    ComplexMatrix skew;  // (A - A^T) / 2
};

SymSkewPair split_sym_skew(const ComplexMatrix& a);

} // namespace mvd
