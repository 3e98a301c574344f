#include "examples_table.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "mvd/canonical.hpp"
#include "mvd/patterns.hpp"

namespace {

using namespace mvd;

struct TableCase {
    std::string title;
    CanonicalStructure structure;
    // symbol printed in place of the H-block lambda; empty renders the number
    std::string lambda_symbol;
};

std::vector<TableCase> table_cases() {
    const auto J = CanonicalBlock::jordan_zero;
    const auto G = CanonicalBlock::gamma;
    const auto H = CanonicalBlock::h;
    // representative lambdas; the generic families print a symbol instead
    const cplx lam(2.0), mu(0.5);
    return {
        // dimension 2
        {"J1 + J1", {{J(1), J(1)}}, ""},
        {"G1 + J1", {{G(1), J(1)}}, ""},
        {"G1 + G1", {{G(1), G(1)}}, ""},
        {"H1(-1)", {{H(1, cplx(-1.0))}}, ""},
        {"H1(λ), λ ≠ 0, ±1", {{H(1, lam)}}, "λ"},
        {"G2", {{G(2)}}, ""},
        // dimension 3
        {"J1 + J1 + J1", {{J(1), J(1), J(1)}}, ""},
        {"G1 + J1 + J1", {{G(1), J(1), J(1)}}, ""},
        {"G1 + G1 + J1", {{G(1), G(1), J(1)}}, ""},
        {"G1 + G1 + G1", {{G(1), G(1), G(1)}}, ""},
        {"H1(-1) + J1", {{H(1, cplx(-1.0)), J(1)}}, ""},
        {"H1(λ) + J1, λ ≠ 0, ±1", {{H(1, lam), J(1)}}, "λ"},
        {"J2 + J1", {{J(2), J(1)}}, ""},
        {"G2 + J1", {{G(2), J(1)}}, ""},
        {"H1(-1) + G1", {{H(1, cplx(-1.0)), G(1)}}, ""},
        {"H1(μ) + G1, μ ≠ ±1", {{H(1, mu), G(1)}}, "μ"},
        {"G2 + G1", {{G(2), G(1)}}, ""},
        {"J3", {{J(3)}}, ""},
        {"G3", {{G(3)}}, ""},
    };
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// codepoint-counting width so the lambda symbols pad correctly
size_t display_width(const std::string& s) {
    size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string render_case(const TableCase& tc, int index) {
    const ComplexMatrix a = assemble(tc.structure);
    const StarPattern d = full_pattern(tc.structure);
    const int n = a.rows();

    // entry strings, substituting the symbol at the lambda positions of
    // symbolic H blocks (the diagonal of the J_m(lambda) sub-block)
    std::vector<std::vector<std::string>> cells(
        static_cast<size_t>(n), std::vector<std::string>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cells[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                format_number(a(i, j).real());
    if (!tc.lambda_symbol.empty()) {
        const std::vector<int> off = tc.structure.offsets();
        for (size_t b = 0; b < tc.structure.blocks.size(); ++b) {
            const CanonicalBlock& blk = tc.structure.blocks[b];
            if (blk.kind != BlockKind::H) continue;
            for (int i = 0; i < blk.size; ++i)
                cells[static_cast<size_t>(off[b] + blk.size + i)]
                     [static_cast<size_t>(off[b] + i)] = tc.lambda_symbol;
        }
    }

    size_t width = 1;
    for (const auto& row : cells)
        for (const std::string& cell : row) width = std::max(width, display_width(cell));

    std::string out;
    char head[64];
    std::snprintf(head, sizeof head, "[%2d] ", index);
    out += head;
    out += tc.title + "   (codim " + std::to_string(d.size()) + ")\n";
    for (int i = 0; i < n; ++i) {
        out += "     ";
        for (int j = 0; j < n; ++j) {
            const std::string& cell = cells[static_cast<size_t>(i)][static_cast<size_t>(j)];
            out.append(width - display_width(cell), ' ');
            out += cell;
            if (j + 1 < n) out += ' ';
        }
        out += "  |  ";
        for (int j = 1; j <= n; ++j) {
            out += d.contains(i + 1, j) ? '*' : '0';
            if (j < n) out += ' ';
        }
        out += '\n';
    }
    return out;
}

} // namespace

std::string examples_table() {
    const std::vector<TableCase> cases = table_cases();
    std::string out;
    out +=
        "simplest deformations A_can + D, all 2x2 and 3x3 congruence canonical forms\n"
        "(left: A_can, right: the deformation pattern D; stars are the parameters)\n";
    int index = 1;
    for (const TableCase& tc : cases) {
        if (index == 1) out += "\n-- 2x2 --\n\n";
        if (index == 7) out += "\n-- 3x3 --\n\n";
        out += render_case(tc, index);
        out += '\n';
        ++index;
    }
    return out;
}
