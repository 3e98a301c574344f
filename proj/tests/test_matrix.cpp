#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mvd/errors.hpp"
#include "mvd/linalg.hpp"
#include "mvd/matrix.hpp"
#include "mvd/star_pattern.hpp"
#include "mvd/sweep.hpp"
#include "oracles.hpp"

using namespace mvd;

TEST_CASE("frobenius norm on fixed matrices") {
    CHECK(frobenius_norm(ComplexMatrix::zero(4, 4)) == 0.0);
    CHECK(frobenius_norm(ComplexMatrix::identity(3)) == doctest::Approx(std::sqrt(3.0)));
    // hand value: 9 + 16 = 25
    const ComplexMatrix p{{3.0, 4.0}, {0.0, 0.0}};
    CHECK(frobenius_norm(p) == doctest::Approx(5.0));
}

TEST_CASE("norm inequalities hold on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix a = random_matrix(rng, 4, 4, 2.0);
        const ComplexMatrix b = random_matrix(rng, 4, 4, 2.0);
        const cplx s(std::uniform_real_distribution<double>(-2, 2)(rng),
                     std::uniform_real_distribution<double>(-2, 2)(rng));
        const cplx t(std::uniform_real_distribution<double>(-2, 2)(rng), 0.0);
        const double lhs = frobenius_norm(s * a + t * b);
        const double rhs = std::abs(s) * frobenius_norm(a) + std::abs(t) * frobenius_norm(b);
        CHECK(lhs <= rhs * (1.0 + 1e-12));
        CHECK(frobenius_norm(a * b) <= frobenius_norm(a) * frobenius_norm(b) * (1.0 + 1e-12));
    }
}

TEST_CASE("masked norm") {
    std::mt19937_64 rng(11);
    const ComplexMatrix p = random_matrix(rng, 3, 3);
    CHECK(masked_norm(p, StarPattern::full(3, 3)) == 0.0);
    CHECK(masked_norm(p, StarPattern(3, 3)) == doctest::Approx(frobenius_norm(p)));

    const ComplexMatrix q{{1.0, 2.0}, {3.0, 4.0}};
    CHECK(masked_norm(q, StarPattern(2, 2, {{2, 1}})) == doctest::Approx(std::sqrt(21.0)));

    CHECK_THROWS_AS(masked_norm(q, StarPattern(3, 2)), std::invalid_argument);
}

TEST_CASE("vectorize and devectorize") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const std::vector<cplx> v = vectorize(i2);
    CHECK(v == std::vector<cplx>{cplx(1), cplx(0), cplx(0), cplx(1)});

    std::mt19937_64 rng(3);
    const ComplexMatrix r = random_matrix(rng, 3, 4);
    CHECK(devectorize(vectorize(r), 3, 4) == r);

    // unit vector e_k maps to E_ij with k = (j-1)*rows + i (1-based)
    for (int k = 1; k <= 6; ++k) {
        std::vector<cplx> e(6, cplx(0.0));
        e[static_cast<size_t>(k - 1)] = cplx(1.0);
        const ComplexMatrix u = devectorize(e, 2, 3);
        const int j = (k - 1) / 2 + 1;
        const int i = (k - 1) % 2 + 1;
        CHECK(u(i - 1, j - 1) == cplx(1.0));
        CHECK(frobenius_norm(u) == doctest::Approx(1.0));
    }

    CHECK_THROWS_AS(devectorize(std::vector<cplx>(5), 2, 3), std::invalid_argument);
}

TEST_CASE("constructors reject non-finite entries and bad shapes") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<cplx>(3)), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(0, 2), std::invalid_argument);
    std::vector<cplx> bad(4, cplx(0.0));
    bad[2] = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, std::move(bad)), std::invalid_argument);
    CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), std::invalid_argument);
}

TEST_CASE("rank_of basics") {
    CHECK(rank_of(ComplexMatrix::identity(5)).rank == 5);

    // outer product uv* has rank 1
    ComplexMatrix u(3, 1), v(1, 3);
    u(0, 0) = cplx(1, 2);
    u(1, 0) = cplx(-1, 0);
    u(2, 0) = cplx(0, 1);
    v(0, 0) = cplx(2, 0);
    v(0, 1) = cplx(0, -1);
    v(0, 2) = cplx(3, 3);
    CHECK(rank_of(u * v).rank == 1);

    CHECK_THROWS_AS(rank_of(ComplexMatrix::identity(2), 0.0), std::invalid_argument);
}

TEST_CASE("rank_of magnitudes are descending and tolerance-consistent") {
    std::mt19937_64 rng(5);
    const ComplexMatrix m = random_matrix(rng, 4, 6);
    const RankReport r = rank_of(m);
    REQUIRE(r.magnitudes.size() == 4);
    for (size_t k = 1; k < r.magnitudes.size(); ++k)
        CHECK(r.magnitudes[k] <= r.magnitudes[k - 1]);
    CHECK(r.rank <= 4);
    CHECK(r.tolerance == kDefaultRankTol);
}

TEST_CASE("rank agrees with brute-force span dimension on random matrices") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows = 2 + static_cast<int>(rng() % 5);
        const int cols = 2 + static_cast<int>(rng() % 5);
        ComplexMatrix m = random_matrix(rng, rows, cols);
        if (trial % 2 == 0 && cols >= 2) {
            // plant a dependent column
            for (int i = 0; i < rows; ++i) m(i, cols - 1) = m(i, 0) * cplx(2.0, -1.0);
        }
        CHECK(rank_of(m).rank == oracle::column_span_dim(m));
        CHECK(rank_of(m).rank == rank_of(m.transpose()).rank);
        CHECK(rank_of(m).rank == rank_of(m.adjoint()).rank);
    }
}

TEST_CASE("rank of the tangent operator matrix for diag(1,1)") {
    // columns are vec(E_ij^T A + A E_ij) for A = I_2; brute-force span says 3
    const ComplexMatrix a = ComplexMatrix::identity(2);
    ComplexMatrix op(4, 4);
    int col = 0;
    for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < 2; ++i) {
            ComplexMatrix e(2, 2);
            e(i, j) = cplx(1.0);
            const std::vector<cplx> img = vectorize(e.transpose() * a + a * e);
            for (int r = 0; r < 4; ++r) op(r, col) = img[static_cast<size_t>(r)];
            ++col;
        }
    }
    CHECK(oracle::tangent_span_dim(a) == 3);
    CHECK(rank_of(op).rank == 3);
}

TEST_CASE("solve_least_norm basics") {
    const ComplexMatrix eye = ComplexMatrix::identity(3);
    const std::vector<cplx> b{cplx(1, 1), cplx(-2, 0), cplx(0, 3)};
    CHECK(solve_least_norm(eye, b) == b);

    ComplexMatrix wide(1, 2);
    wide(0, 0) = wide(0, 1) = cplx(1.0);
    const std::vector<cplx> x = solve_least_norm(wide, {cplx(2.0)});
    CHECK(std::abs(x[0] - cplx(1.0)) < 1e-12);
    CHECK(std::abs(x[1] - cplx(1.0)) < 1e-12);
}

TEST_CASE("solve_least_norm matches the normal-equations oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const int rows = 2 + static_cast<int>(rng() % 3);
        const int cols = rows + 1 + static_cast<int>(rng() % 3);  // underdetermined
        const ComplexMatrix m = random_matrix(rng, rows, cols);
        std::vector<cplx> b(static_cast<size_t>(rows));
        for (cplx& z : b)
            z = cplx(std::uniform_real_distribution<double>(-1, 1)(rng),
                     std::uniform_real_distribution<double>(-1, 1)(rng));

        const std::vector<cplx> x = solve_least_norm(m, b);
        const std::vector<cplx> x_ref = oracle::least_norm_normal_equations(m, b);

        std::vector<cplx> resid = oracle::matvec(m, x);
        for (size_t k = 0; k < b.size(); ++k) resid[k] -= b[k];
        CHECK(oracle::vec_norm(resid) <= 1e-10 * (1.0 + oracle::vec_norm(b)));

        std::vector<cplx> diff(x.size());
        for (size_t k = 0; k < x.size(); ++k) diff[k] = x[k] - x_ref[k];
        CHECK(oracle::vec_norm(diff) <= 1e-8 * (1.0 + oracle::vec_norm(x_ref)));

        // local optimality: adding any nullspace direction only grows the norm
        std::vector<cplx> w(static_cast<size_t>(cols));
        for (cplx& z : w)
            z = cplx(std::uniform_real_distribution<double>(-1, 1)(rng),
                     std::uniform_real_distribution<double>(-1, 1)(rng));
        const std::vector<cplx> mw = oracle::matvec(m, w);
        const std::vector<cplx> back = oracle::least_norm_normal_equations(m, mw);
        std::vector<cplx> null_dir(w.size());
        for (size_t k = 0; k < w.size(); ++k) null_dir[k] = w[k] - back[k];
        std::vector<cplx> perturbed(x.size());
        for (size_t k = 0; k < x.size(); ++k) perturbed[k] = x[k] + null_dir[k];
        CHECK(oracle::vec_norm(perturbed) >= oracle::vec_norm(x) - 1e-9);
    }
}

TEST_CASE("solve_least_norm rejects inconsistent systems") {
    ComplexMatrix tall(2, 1);
    tall(0, 0) = cplx(1.0);
    tall(1, 0) = cplx(1.0);
    CHECK_THROWS_AS(solve_least_norm(tall, {cplx(1.0), cplx(2.0)}), InconsistentSystem);
    CHECK_THROWS_AS(solve_least_norm(tall, {cplx(1.0)}), std::invalid_argument);
}

TEST_CASE("pattern container semantics") {
    StarPattern p(2, 3);
    p.add(1, 1);
    p.add(1, 1);  // set semantics
    p.add(2, 3);
    CHECK(p.size() == 2);
    CHECK(p.contains(1, 1));
    CHECK_FALSE(p.contains(2, 1));
    CHECK_THROWS_AS(p.add(3, 1), std::out_of_range);
    CHECK(p.render() == "* 0 0\n0 0 *");

    StarPattern r = p.rotated90();
    CHECK(r.rows() == 3);
    CHECK(r.cols() == 2);
    CHECK(r.contains(1, 2));  // (1,1) -> (1, 2)
    CHECK(r.contains(3, 1));  // (2,3) -> (3, 1)
}
