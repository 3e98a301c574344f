#include "mvd/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mvd {

namespace {

std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// The unit value an H_m block is allowed to carry: -(-1)^(m+1) = (-1)^m.
cplx allowed_unit_lambda(int m) { return cplx(m % 2 == 0 ? 1.0 : -1.0); }

bool too_close(cplx a, cplx b, double margin = 0.1) { return std::abs(a - b) < margin; }

// Generic lambda away from 0, +-1, and from coincidences (equality or inverse)
// with the lambdas already drawn. Values are snapped to the dyadic grid 1/64
// so every entry of an assembled matrix is exact in binary floating point.
cplx draw_lambda(std::mt19937_64& rng, const std::vector<cplx>& taken) {
    for (int tries = 0; tries < 256; ++tries) {
        double re = std::round(uniform(rng, -2.0, 2.0) * 64.0) / 64.0;
        double im = uniform_int(rng, 0, 1)
                        ? std::round(uniform(rng, -1.5, 1.5) * 64.0) / 64.0
                        : 0.0;
        const cplx l(re, im);
        if (too_close(l, cplx(0.0), 0.2) || too_close(l, cplx(1.0), 0.2) ||
            too_close(l, cplx(-1.0), 0.2))
            continue;
        bool clash = false;
        for (cplx t : taken)
            if (too_close(l, t) || std::abs(l * t - cplx(1.0)) < 0.1) clash = true;
        if (!clash) return l;
    }
    return cplx(0.0, 1.75);
}

// Lambda pairs with exactly representable product 1, so the inverse
// coincidence holds bit-for-bit in the assembled blocks.
const std::pair<cplx, cplx> kInversePairs[] = {
    {cplx(2.0), cplx(0.5)},
    {cplx(4.0), cplx(0.25)},
    {cplx(-2.0), cplx(-0.5)},
    {cplx(-4.0), cplx(-0.25)},
    {cplx(1.0, 1.0), cplx(0.5, -0.5)},
    {cplx(1.0, -1.0), cplx(0.5, 0.5)},
    {cplx(-1.0, 1.0), cplx(-0.5, -0.5)},
    {cplx(0.0, 2.0), cplx(0.0, -0.5)},
    {cplx(0.0, -0.5), cplx(0.0, 2.0)},
};

struct Builder {
    std::mt19937_64& rng;
    int budget;
    CanonicalStructure s;
    std::vector<cplx> lambdas;

    void add_h(int m, cplx lambda) {
        s.blocks.push_back(CanonicalBlock::h(m, lambda));
        lambdas.push_back(lambda);
        budget -= 2 * m;
    }
    void add_h_generic(int m) { add_h(m, draw_lambda(rng, lambdas)); }
    void add_gamma(int n) {
        s.blocks.push_back(CanonicalBlock::gamma(n));
        budget -= n;
    }
    void add_j(int k) {
        s.blocks.push_back(CanonicalBlock::jordan_zero(k));
        budget -= k;
    }

    void fill_random(double stop_prob = 0.3) {
        while (budget >= 1) {
            if (!s.blocks.empty() && std::bernoulli_distribution(stop_prob)(rng)) break;
            const int kind = uniform_int(rng, 0, 2);
            if (kind == 0 && budget >= 2) {
                const int m = uniform_int(rng, 1, budget / 2);
                if (std::bernoulli_distribution(0.15)(rng))
                    add_h(m, allowed_unit_lambda(m));
                else
                    add_h_generic(m);
            } else if (kind == 1) {
                add_gamma(uniform_int(rng, 1, budget));
            } else {
                add_j(uniform_int(rng, 1, budget));
            }
        }
        if (s.blocks.empty()) add_gamma(std::max(1, budget));
    }
};

} // namespace

ComplexMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, double scale) {
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = scale * cplx(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    return m;
}

ComplexMatrix random_nonsingular(std::mt19937_64& rng, int n) {
    return ComplexMatrix::identity(n) + random_matrix(rng, n, n, 0.5 / n);
}

CanonicalStructure sweep_structure(std::uint64_t seed, int case_index, int max_dim) {
    if (max_dim < 1) throw std::invalid_argument("max_dim must be >= 1");
    std::mt19937_64 rng(mix(seed ^ mix(static_cast<std::uint64_t>(case_index))));
    Builder b{rng, max_dim, {}, {}};
    const int scenario = case_index % 12;

    switch (max_dim >= 4 ? scenario : 0) {
        case 1: {  // two H blocks with lambda = mu
            const int m = uniform_int(rng, 1, (max_dim - 2) / 2);
            const int n = uniform_int(rng, 1, (max_dim - 2 * m) / 2);
            const cplx l = draw_lambda(rng, {});
            b.add_h(m, l);
            b.add_h(n, l);
            break;
        }
        case 2: {  // two H blocks with lambda = 1/mu (exact inverse pair)
            const int m = uniform_int(rng, 1, (max_dim - 2) / 2);
            const int n = uniform_int(rng, 1, (max_dim - 2 * m) / 2);
            const auto& [l, inv] = kInversePairs[static_cast<size_t>(
                uniform_int(rng, 0, static_cast<int>(std::size(kInversePairs)) - 1))];
            b.add_h(m, l);
            b.add_h(n, inv);
            break;
        }
        case 3:  // lambda = mu = -1 (odd sizes)
            b.add_h(1, cplx(-1.0));
            b.add_h(1, cplx(-1.0));
            break;
        case 4:  // lambda = mu = 1 (even sizes) when it fits
            b.add_h(2, cplx(1.0));
            if (max_dim >= 8) b.add_h(2, cplx(1.0));
            break;
        case 5: {  // H + Gamma with lambda = (-1)^(n+1)
            struct Option { int m; cplx l; int n; };
            std::vector<Option> options;
            if (max_dim >= 4) options.push_back({1, cplx(-1.0), 2});
            if (max_dim >= 6) options.push_back({1, cplx(-1.0), 4});
            if (max_dim >= 5) options.push_back({2, cplx(1.0), 1});
            if (max_dim >= 7) options.push_back({2, cplx(1.0), 3});
            const Option o = options[static_cast<size_t>(
                uniform_int(rng, 0, static_cast<int>(options.size()) - 1))];
            b.add_h(o.m, o.l);
            b.add_gamma(o.n);
            break;
        }
        case 6: {  // H + odd J
            b.add_h_generic(1);
            const int kmax = max_dim - 2;
            const int k = 1 + 2 * uniform_int(rng, 0, (kmax - 1) / 2);
            b.add_j(k);
            break;
        }
        case 7: {  // Gamma pair with even size difference
            int m = uniform_int(rng, 1, max_dim - 1);
            if (m % 2 == 0 && max_dim - m < 2) --m;
            const int nmax = max_dim - m;
            const int parity = m % 2 == 0 ? 2 : 1;
            const int n = parity + 2 * uniform_int(rng, 0, (nmax - parity) / 2);
            b.add_gamma(m);
            b.add_gamma(n);
            break;
        }
        case 8: {  // Gamma + odd J
            const int m = uniform_int(rng, 1, max_dim - 1);
            const int kmax = max_dim - m;
            const int k = kmax >= 3 && uniform_int(rng, 0, 1) ? 3 : 1;
            b.add_gamma(m);
            b.add_j(k);
            break;
        }
        case 9: {  // equal J sizes
            const int k = uniform_int(rng, 1, max_dim / 2);
            b.add_j(k);
            b.add_j(k);
            break;
        }
        case 10: {  // J pair with m >= n+2 and n odd (nonempty P correction)
            if (max_dim >= 8 && uniform_int(rng, 0, 1)) {
                b.add_j(5);
                b.add_j(3);
            } else {
                const int m = max_dim >= 6 && uniform_int(rng, 0, 1) ? 5 : 3;
                b.add_j(m);
                b.add_j(1);
            }
            break;
        }
        case 11: {  // single H at its allowed unit lambda
            const int m = std::min(uniform_int(rng, 1, 2), max_dim / 2);
            b.add_h(m, allowed_unit_lambda(m));
            break;
        }
        case 0:
        default:
            break;
    }
    b.fill_random();
    auto canonical = canonicalize(b.s).first;
    canonical.validate();
    return canonical;
}

} // namespace mvd
