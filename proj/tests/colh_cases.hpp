#pragma once

// The complete table of simplest deformations of 2x2 and 3x3 matrices: every
// canonical structure of total dimension 2 and 3, its deformation pattern,
// and the assembled canonical matrix (with representative lambda values for
// the H-block families). Shared by the unit tests and the acceptance suite.

#include <string>
#include <vector>

#include "mvd/canonical.hpp"
#include "mvd/star_pattern.hpp"

namespace colh {

using mvd::CanonicalBlock;
using mvd::CanonicalStructure;
using mvd::ComplexMatrix;
using mvd::StarPattern;
using mvd::cplx;

struct Case {
    std::string name;
    CanonicalStructure structure;
    StarPattern pattern;
    ComplexMatrix a_can;
};

inline std::vector<Case> two_by_two() {
    const auto J = CanonicalBlock::jordan_zero;
    const auto G = CanonicalBlock::gamma;
    const auto H = CanonicalBlock::h;
    return {
        {"J1+J1",
         {{J(1), J(1)}},
         StarPattern(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}),
         ComplexMatrix{{0, 0}, {0, 0}}},
        {"G1+J1",
         {{G(1), J(1)}},
         StarPattern(2, 2, {{2, 1}, {2, 2}}),
         ComplexMatrix{{1, 0}, {0, 0}}},
        {"G1+G1",
         {{G(1), G(1)}},
         StarPattern(2, 2, {{2, 1}}),
         ComplexMatrix{{1, 0}, {0, 1}}},
        {"H1(-1)",
         {{H(1, cplx(-1.0))}},
         StarPattern(2, 2, {{1, 1}, {2, 1}, {2, 2}}),
         ComplexMatrix{{0, 1}, {-1, 0}}},
        {"H1(lambda)",
         {{H(1, cplx(2.0))}},
         StarPattern(2, 2, {{2, 1}}),
         ComplexMatrix{{0, 1}, {2, 0}}},
        {"G2",
         {{G(2)}},
         StarPattern(2, 2, {{1, 1}}),
         ComplexMatrix{{0, -1}, {1, 1}}},
    };
}

inline std::vector<Case> three_by_three() {
    const auto J = CanonicalBlock::jordan_zero;
    const auto G = CanonicalBlock::gamma;
    const auto H = CanonicalBlock::h;
    return {
        {"J1+J1+J1",
         {{J(1), J(1), J(1)}},
         StarPattern::full(3, 3),
         ComplexMatrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}},
        {"G1+J1+J1",
         {{G(1), J(1), J(1)}},
         StarPattern(3, 3, {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}),
         ComplexMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}},
        {"G1+G1+J1",
         {{G(1), G(1), J(1)}},
         StarPattern(3, 3, {{2, 1}, {3, 1}, {3, 2}, {3, 3}}),
         ComplexMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}},
        {"G1+G1+G1",
         {{G(1), G(1), G(1)}},
         StarPattern(3, 3, {{2, 1}, {3, 1}, {3, 2}}),
         ComplexMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
        {"H1(-1)+J1",
         {{H(1, cplx(-1.0)), J(1)}},
         StarPattern(3, 3, {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}}),
         ComplexMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}},
        {"H1(lambda)+J1",
         {{H(1, cplx(2.0)), J(1)}},
         StarPattern(3, 3, {{2, 1}, {3, 1}, {3, 2}, {3, 3}}),
         ComplexMatrix{{0, 1, 0}, {2, 0, 0}, {0, 0, 0}}},
        {"J2+J1",
         {{J(2), J(1)}},
         StarPattern(3, 3, {{2, 1}, {2, 3}, {3, 1}, {3, 3}}),
         ComplexMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}},
        {"G2+J1",
         {{G(2), J(1)}},
         StarPattern(3, 3, {{1, 1}, {3, 1}, {3, 2}, {3, 3}}),
         ComplexMatrix{{0, -1, 0}, {1, 1, 0}, {0, 0, 0}}},
        {"H1(-1)+G1",
         {{H(1, cplx(-1.0)), G(1)}},
         StarPattern(3, 3, {{1, 1}, {2, 1}, {2, 2}}),
         ComplexMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}},
        {"H1(mu)+G1",
         {{H(1, cplx(0.5)), G(1)}},
         StarPattern(3, 3, {{2, 1}}),
         ComplexMatrix{{0, 1, 0}, {0.5, 0, 0}, {0, 0, 1}}},
        {"G2+G1",
         {{G(2), G(1)}},
         StarPattern(3, 3, {{1, 1}}),
         ComplexMatrix{{0, -1, 0}, {1, 1, 0}, {0, 0, 1}}},
        {"J3",
         {{J(3)}},
         StarPattern(3, 3, {{3, 1}, {3, 3}}),
         ComplexMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}},
        {"G3",
         {{G(3)}},
         StarPattern(3, 3, {{2, 1}}),
         ComplexMatrix{{0, 0, 1}, {0, -1, -1}, {1, 1, 0}}},
    };
}

inline std::vector<Case> all_cases() {
    std::vector<Case> cases = two_by_two();
    const std::vector<Case> three = three_by_three();
    cases.insert(cases.end(), three.begin(), three.end());
    return cases;
}

} // namespace colh
