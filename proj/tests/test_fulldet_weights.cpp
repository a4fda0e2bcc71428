// Weights of l = 3 functions whose maximal minor is the full determinant,
// checked against direct evaluation with plain integer arithmetic mod p.

#include <doctest.h>

#include <array>
#include <vector>

#include "symgrass/minor_algebra.hpp"

using namespace symgrass;

namespace {

using Sym3 = std::array<std::array<long long, 3>, 3>;

std::vector<Sym3> points(long long p) {
    std::vector<Sym3> out;
    long long total = 1;
    for (int i = 0; i < 6; ++i) total *= p;
    for (long long idx = 0; idx < total; ++idx) {
        Sym3 m{};
        long long v = idx;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                m[i][j] = m[j][i] = v % p;
                v /= p;
            }
        out.push_back(m);
    }
    return out;
}

long long minor2(const Sym3& m, int r0, int r1, int c0, int c1) { return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]; }

long long det3(const Sym3& m) {
    return m[0][0] * minor2(m, 1, 2, 1, 2) - m[0][1] * minor2(m, 1, 2, 0, 2) + m[0][2] * minor2(m, 1, 2, 0, 1);
}

// Values of the 14 doset minors, in the order 1, X11, X12, X13, X22, X23, X33,
// d12|12, d12|13, d12|23, d13|13, d13|23, d23|23, d123|123.
std::array<long long, 14> minors(const Sym3& m) {
    return {1,
            m[0][0],
            m[0][1],
            m[0][2],
            m[1][1],
            m[1][2],
            m[2][2],
            minor2(m, 0, 1, 0, 1),
            minor2(m, 0, 1, 0, 2),
            minor2(m, 0, 1, 1, 2),
            minor2(m, 0, 2, 0, 2),
            minor2(m, 0, 2, 1, 2),
            minor2(m, 1, 2, 1, 2),
            det3(m)};
}

long long brute_weight(const std::array<long long, 14>& coeff, long long p) {
    long long w = 0;
    for (const auto& m : points(p)) {
        const auto v = minors(m);
        long long s = 0;
        for (int i = 0; i < 14; ++i) s += coeff[i] * v[i];
        w += ((s % p) + p) % p != 0;
    }
    return w;
}

MinorIndex mi(std::vector<int> r, std::vector<int> c) {
    for (auto& x : r) --x;
    for (auto& x : c) --x;
    return {r, c};
}

}  // namespace

TEST_CASE("full determinant below q^6 - q^5 - q^4 + q^3 at q = 3") {
    const FieldSpec f = field_for_order(3);
    MinorCombination g(*f, 3);
    g.set(mi({}, {}), 2);
    g.set(mi({1}, {1}), 2);
    g.set(mi({2}, {2}), 1);
    g.set(mi({2}, {3}), 1);
    g.set(mi({1, 2}, {1, 3}), 2);
    g.set(mi({1, 3}, {1, 3}), 2);
    g.set(mi({2, 3}, {2, 3}), 1);
    g.set(mi({1, 2, 3}, {1, 2, 3}), 1);
    const std::array<long long, 14> coeff{2, 2, 0, 0, 1, 1, 0, 0, 2, 0, 2, 0, 1, 1};
    const long long w = brute_weight(coeff, 3);
    CHECK(w == 414);
    CHECK(weight(g) == static_cast<std::uint64_t>(w));
    CHECK(maximal_minors(g) == std::vector<MinorIndex>{mi({1, 2, 3}, {1, 2, 3})});
    CHECK(w < 729 - 243 - 81 + 27);
    // Still consistent with the code's minimum distance.
    CHECK(w >= 405);
}

TEST_CASE("least full-determinant weight at q = 2") {
    // All 2^13 functions with det_{123,123} coefficient 1.
    const auto pts = points(2);
    std::vector<std::array<long long, 14>> vals;
    for (const auto& m : pts) vals.push_back(minors(m));
    long long best = 1 << 20;
    std::array<long long, 14> arg{};
    for (int bits = 0; bits < (1 << 13); ++bits) {
        std::array<long long, 14> coeff{};
        for (int i = 0; i < 13; ++i) coeff[i] = (bits >> i) & 1;
        coeff[13] = 1;
        long long w = 0;
        for (const auto& v : vals) {
            long long s = 0;
            for (int i = 0; i < 14; ++i) s += coeff[i] * v[i];
            w += s % 2 != 0;
        }
        if (w < best) {
            best = w;
            arg = coeff;
        }
    }
    CHECK(best == 20);
    CHECK(best < 64 - 32 - 16 + 8);
    CHECK(best < 64 - 32 - 2 * 8 + 3 * 4);
    CHECK(best >= 16);

    const FieldSpec f = field_for_order(2);
    const auto pairs = doset_pairs(3);
    // doset_pairs order matches the minors() order above.
    REQUIRE(pairs.size() == 14);
    MinorCombination g(*f, 3);
    for (std::size_t i = 0; i < 14; ++i) g.set(pairs[i], static_cast<Repr>(arg[i]));
    CHECK(weight(g) == static_cast<std::uint64_t>(best));
}

TEST_CASE("exact full-determinant weights") {
    for (long long q : {2LL, 3LL}) {
        std::array<long long, 14> coeff{};
        coeff[13] = 1;
        const long long q2 = q * q, q3 = q2 * q, q5 = q3 * q2, q6 = q5 * q;
        CHECK(brute_weight(coeff, q) == q6 - q5 - q3 + q2);
        for (long long c = 1; c < q; ++c) {
            coeff[0] = c;
            CHECK(brute_weight(coeff, q) == q6 - q5 + q2);
        }
    }
}
