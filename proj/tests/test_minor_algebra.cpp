#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "symgrass/minor_algebra.hpp"

using namespace symgrass;

namespace {

MinorIndex mi(std::vector<int> r, std::vector<int> c) {
    for (auto& x : r) --x;
    for (auto& x : c) --x;
    return {r, c};
}

Monomial mono(int ell, std::initializer_list<std::pair<int, int>> vars) {
    Monomial m{std::vector<unsigned>(static_cast<std::size_t>(ell * ell), 0)};
    for (auto [i, j] : vars) ++m.exps[static_cast<std::size_t>((i - 1) * ell + (j - 1))];
    return m;
}

// Weight by direct evaluation of every minor at every point.
std::uint64_t brute_weight(const MinorCombination& f) {
    std::uint64_t w = 0;
    for (const auto& x : enumerate_symmetric(f.ell(), f.field()))
        if (evaluate(f, x) != 0) ++w;
    return w;
}

MinorCombination random_combination(const Field& f, int ell, std::mt19937& rng) {
    MinorCombination g(f, ell);
    for (const auto& p : doset_pairs(ell))
        if (rng() % 2) g.set(p, rng() % f.order());
    return g;
}

Matrix random_invertible(const Field& f, int ell, std::mt19937& rng) {
    while (true) {
        Matrix a(f, ell, ell);
        for (int i = 0; i < ell; ++i)
            for (int j = 0; j < ell; ++j) a(i, j) = rng() % f.order();
        if (a.determinant() != 0) return a;
    }
}

}  // namespace

TEST_CASE("evaluate examples") {
    const auto f = field_make(3, 1);
    const auto det = MinorCombination::minor(*f, 2, mi({1, 2}, {1, 2}));
    CHECK(evaluate(det, SymMatrix::from_matrix(Matrix::identity(*f, 2))) == 1);
    SymMatrix anti(*f, 2);
    anti.set(0, 1, 1);
    CHECK(evaluate(det, anti) == 2);
    CHECK(evaluate(det + MinorCombination::constant(*f, 2, 1), SymMatrix(*f, 2)) == 1);
    CHECK_THROWS_AS(evaluate(det, SymMatrix(*field_make(5, 1), 2)), Error);
}

TEST_CASE("combinations reject non-doset keys") {
    const auto f = field_make(3, 1);
    MinorCombination g(*f, 2);
    try {
        g.set(mi({2}, {1}), 1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::label_mismatch);
    }
    g.set(mi({1}, {2}), 2);
    g.add(mi({1}, {2}), 1);
    CHECK(g.is_zero());
}

TEST_CASE("combination text round trip") {
    const auto f = field_make(5, 1);
    std::stringstream in("# comment\n1,2|2,3|4\n-|-|1\n1|1|2\n");
    const MinorCombination g = read_combination(in, *f, 3);
    CHECK(g.coeff(mi({1, 2}, {2, 3})) == 4);
    CHECK(g.coeff({}) == 1);
    CHECK(g.coeff(mi({1}, {1})) == 2);
    std::stringstream out;
    write_combination(out, g);
    CHECK(out.str() == "-|-|1\n1|1|2\n1,2|2,3|4\n");
    std::stringstream bad("1,2|2|1\n");
    CHECK_THROWS_AS(read_combination(bad, *f, 3), Error);
}

TEST_CASE("expand_to_polynomial examples") {
    const auto f = field_make(3, 1);
    const Polynomial det = expand_to_polynomial(mi({1, 2}, {1, 2}), *f, 2);
    CHECK(det.terms().size() == 2);
    CHECK(det.coeff(mono(2, {{1, 1}, {2, 2}})) == 1);
    CHECK(det.coeff(mono(2, {{1, 2}, {2, 1}})) == 2);
    const Polynomial x12 = expand_to_polynomial(mi({1}, {2}), *f, 2);
    CHECK(x12 == Polynomial::from_monomial(*f, mono(2, {{1, 2}})));
    CHECK(expand_to_polynomial(MinorIndex{}, *f, 2) == Polynomial::constant(*f, 2, 1));
}

TEST_CASE("normal_form examples") {
    const auto f = field_make(3, 1);
    CHECK(normal_form(Polynomial::from_monomial(*f, mono(2, {{2, 1}}))) ==
          Polynomial::from_monomial(*f, mono(2, {{1, 2}})));
    CHECK(normal_form(Polynomial::from_monomial(*f, mono(2, {{1, 1}, {1, 1}, {1, 1}}))) ==
          Polynomial::from_monomial(*f, mono(2, {{1, 1}})));
    Polynomial expect(*f, 2);
    expect.add_term(mono(2, {{1, 1}, {2, 2}}), 1);
    expect.add_term(mono(2, {{1, 2}, {1, 2}}), 2);
    CHECK(normal_form(expand_to_polynomial(mi({1, 2}, {1, 2}), *f, 2)) == expect);
    // Over GF(2) the square collapses: X11 X22 + X12.
    const auto f2 = field_make(2, 1);
    Polynomial expect2(*f2, 2);
    expect2.add_term(mono(2, {{1, 1}, {2, 2}}), 1);
    expect2.add_term(mono(2, {{1, 2}}), 1);
    CHECK(normal_form(expand_to_polynomial(mi({1, 2}, {1, 2}), *f2, 2)) == expect2);
}

TEST_CASE("leading_term examples") {
    const auto f = field_make(3, 1);
    CHECK(leading_term(expand_to_polynomial(mi({1, 2}, {1, 2}), *f, 2)) == mono(2, {{1, 1}, {2, 2}}));
    CHECK(leading_term(expand_to_polynomial(mi({1}, {2}), *f, 2)) == mono(2, {{1, 2}}));
    CHECK(leading_term(expand_to_polynomial(mi({1, 2}, {2, 3}), *f, 3)) == mono(3, {{1, 2}, {2, 3}}));
    CHECK_THROWS_AS(leading_term(Polynomial(*f, 2)), Error);
}

TEST_CASE("lex order compares from the largest variable") {
    LexLess less;
    CHECK(less(mono(2, {{1, 2}, {1, 2}}), mono(2, {{1, 1}, {2, 2}})));
    CHECK(less(mono(2, {{1, 1}, {1, 1}, {1, 1}}), mono(2, {{1, 2}})));
    CHECK_FALSE(less(mono(2, {{2, 2}}), mono(2, {{2, 2}})));
}

TEST_CASE("doset leading terms are distinct identity monomials") {
    for (std::uint32_t q : {2u, 3u})
        for (int ell = 1; ell <= 4; ++ell) {
            const auto f = field_for_order(q);
            LexLess less;
            std::vector<Monomial> seen;
            for (const auto& p : doset_pairs(ell)) {
                const Polynomial raw = expand_to_polynomial(p, *f, ell);
                const Monomial lt = leading_term(normal_form(raw));
                CHECK(lt == leading_term(raw));
                Monomial ident{std::vector<unsigned>(static_cast<std::size_t>(ell * ell), 0)};
                for (std::size_t a = 0; a < p.size(); ++a)
                    ++ident.exps[static_cast<std::size_t>(p.rows[a] * ell + p.cols[a])];
                CHECK(lt == ident);
                for (const auto& m : seen) CHECK((less(m, lt) || less(lt, m)));
                seen.push_back(lt);
            }
        }
}

TEST_CASE("normal_form is idempotent and preserves functions") {
    std::mt19937 rng(3);
    for (std::uint32_t q : {2u, 3u, 4u})
        for (int ell = 1; ell <= 2; ++ell) {
            const auto f = field_for_order(q);
            const auto points = enumerate_symmetric(ell, *f);
            for (int trial = 0; trial < 25; ++trial) {
                Polynomial p(*f, ell);
                for (int t = 0; t < 4; ++t) {
                    Monomial m{std::vector<unsigned>(static_cast<std::size_t>(ell * ell), 0)};
                    for (auto& e : m.exps) e = rng() % 7;
                    p.add_term(m, rng() % q);
                }
                const Polynomial nf = normal_form(p);
                REQUIRE(normal_form(nf) == nf);
                for (const auto& x : points) REQUIRE(p.evaluate(x.to_matrix()) == nf.evaluate(x.to_matrix()));
            }
        }
}

TEST_CASE("expansion evaluates to the minor") {
    const auto f = field_make(3, 1);
    for (const auto& p : doset_pairs(3)) {
        const Polynomial poly = expand_to_polynomial(p, *f, 3);
        for (std::uint64_t i = 0; i < 729; i += 7) {
            const SymMatrix x = SymMatrix::from_index(*f, 3, i);
            REQUIRE(poly.evaluate(x.to_matrix()) == minor_value(x, p));
        }
    }
}

TEST_CASE("evaluation map is injective") {
    for (int ell = 1; ell <= 3; ++ell)
        for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
            const auto basis = EvaluationBasis::get(*field_for_order(q), ell);
            CHECK(rank(basis->generator()) == static_cast<int>(catalan(static_cast<unsigned>(ell + 1))));
        }
}

TEST_CASE("codeword and weight agree with direct evaluation") {
    std::mt19937 rng(5);
    const auto f = field_make(3, 1);
    for (int trial = 0; trial < 10; ++trial) {
        const MinorCombination g = random_combination(*f, 2, rng);
        CHECK(weight(g) == brute_weight(g));
        const auto basis = EvaluationBasis::get(*f, 2);
        const auto back = basis->decode(basis->codeword(g));
        REQUIRE(back.has_value());
        CHECK(*back == g);
    }
}

TEST_CASE("act examples") {
    const auto f = field_make(3, 1);
    std::mt19937 rng(1);
    const MinorCombination g = random_combination(*f, 3, rng);
    CHECK(act(g, Matrix::identity(*f, 3), SymMatrix(*f, 3)) == g);

    const auto f123 = MinorCombination::minor(*f, 3, mi({1, 2}, {2, 3}));
    const MinorCombination moved = act(f123, Matrix::elementary(*f, 3, 0, 2, 1), SymMatrix(*f, 3));
    CHECK(moved == f123 - MinorCombination::minor(*f, 3, mi({1, 2}, {1, 2})));

    for (std::uint32_t q : {3u, 5u, 7u}) {
        const auto fq = field_for_order(q);
        const auto det = MinorCombination::minor(*fq, 2, mi({1, 2}, {1, 2}));
        for (Repr c = 1; c < q; ++c) {
            Matrix ci = Matrix::identity(*fq, 2);
            ci(0, 0) = c;
            ci(1, 1) = c;
            const MinorCombination out = act(det, ci, SymMatrix(*fq, 2));
            CHECK(out == det.scaled(fq->pow(c, 4)));
            for (const auto& x : enumerate_symmetric(2, *fq))
                REQUIRE(evaluate(out, x) == evaluate(det, congruence_translate(ci, SymMatrix(*fq, 2), x)));
        }
    }
    Matrix sing(*f, 3, 3);
    try {
        act(g, sing, SymMatrix(*f, 3));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::singular_matrix);
    }
}

TEST_CASE("act agrees pointwise with the transformed function") {
    std::mt19937 rng(17);
    for (auto [ell, q] : std::vector<std::pair<int, std::uint32_t>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
        const auto f = field_for_order(q);
        const auto n = symmetric_count(ell, q);
        for (int trial = 0; trial < 5; ++trial) {
            const MinorCombination g = random_combination(*f, ell, rng);
            const Matrix a = random_invertible(*f, ell, rng);
            const SymMatrix s = SymMatrix::from_index(*f, ell, rng() % n);
            const MinorCombination h = act(g, a, s);
            for (const auto& x : enumerate_symmetric(ell, *f))
                REQUIRE(evaluate(h, x) == evaluate(g, congruence_translate(a, s, x)));
        }
    }
}

TEST_CASE("act is a group action and preserves weight") {
    std::mt19937 rng(23);
    for (auto [ell, q] : std::vector<std::pair<int, std::uint32_t>>{{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}}) {
        const auto f = field_for_order(q);
        const auto n = symmetric_count(ell, q);
        for (int trial = 0; trial < 6; ++trial) {
            const MinorCombination g = random_combination(*f, ell, rng);
            const AffineCongruence t1{random_invertible(*f, ell, rng), SymMatrix::from_index(*f, ell, rng() % n)};
            const AffineCongruence t2{random_invertible(*f, ell, rng), SymMatrix::from_index(*f, ell, rng() % n)};
            const MinorCombination two_steps = act(act(g, t1), t2);
            CHECK(two_steps == act(g, AffineCongruence::compose(t1, t2)));
            CHECK(weight(two_steps) == weight(g));
            CHECK(weight(act(g, t1)) == brute_weight(g));
        }
    }
}

TEST_CASE("congruence preserves minor size grading") {
    std::mt19937 rng(29);
    for (auto [ell, q] : std::vector<std::pair<int, std::uint32_t>>{{2, 3}, {3, 2}, {3, 3}}) {
        const auto f = field_for_order(q);
        for (int t = 0; t <= ell; ++t)
            for (int trial = 0; trial < 4; ++trial) {
                MinorCombination g(*f, ell);
                for (const auto& p : doset_pairs(ell))
                    if (static_cast<int>(p.size()) == t) g.set(p, rng() % q);
                const MinorCombination h = act(g, random_invertible(*f, ell, rng), SymMatrix(*f, ell));
                for (const auto& [p, c] : h.terms()) CHECK(static_cast<int>(p.size()) == t);
            }
    }
}

TEST_CASE("clear_subminors examples") {
    const auto f = field_make(3, 1);
    const auto det = MinorCombination::minor(*f, 2, mi({1, 2}, {1, 2}));
    const auto g = det + MinorCombination::minor(*f, 2, mi({1}, {1}));
    const ClearedMinors c = clear_subminors(g, {0, 1});
    CHECK(c.g == det);
    SymMatrix expect_s(*f, 2);
    expect_s.set(1, 1, 2);
    CHECK(c.s == expect_s);
    // Symbolic oracle: the expansion of g evaluated at X + S.
    const Polynomial poly = expand_to_polynomial(g);
    for (const auto& x : enumerate_symmetric(2, *f))
        REQUIRE(evaluate(c.g, x) == poly.evaluate(x.to_matrix() + c.s.to_matrix()));

    const ClearedMinors same = clear_subminors(det, {0, 1});
    CHECK(same.g == det);
    CHECK(same.s == SymMatrix(*f, 2));
}

TEST_CASE("clear_subminors removes every sub-minor inside I") {
    std::mt19937 rng(31);
    for (std::uint32_t q : {3u, 5u}) {
        const auto f = field_for_order(q);
        for (int trial = 0; trial < 8; ++trial) {
            MinorCombination g(*f, 3);
            g.set(mi({1, 2, 3}, {1, 2, 3}), 1);
            for (const auto& p : doset_pairs(3))
                if (p.size() < 3 && rng() % 2) g.set(p, rng() % q);
            const ClearedMinors c = clear_subminors(g, {0, 1, 2});
            for (const auto& [p, v] : c.g.terms()) CHECK(p.size() != 2);
            CHECK(weight(c.g) == weight(g));
        }
        MinorCombination h(*f, 3);
        h.set(mi({1, 2}, {1, 2}), 1);
        h.set(mi({1}, {2}), 1);
        h.set(mi({2}, {2}), 2);
        h.set(mi({3}, {3}), 1);
        const ClearedMinors c = clear_subminors(h, {0, 1});
        for (const auto& [p, v] : c.g.terms())
            if (p.size() == 1) CHECK(p.rows[0] == 2);
    }
}

TEST_CASE("clear_subminors preconditions") {
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::parse_error;
    };
    const auto f2 = field_make(2, 1);
    const auto f3 = field_make(3, 1);
    CHECK(code_of([&] { clear_subminors(MinorCombination::minor(*f2, 2, mi({1, 2}, {1, 2})), {0, 1}); }) ==
          Errc::even_characteristic);
    CHECK(code_of([&] { clear_subminors(MinorCombination::minor(*f3, 2, mi({1, 2}, {1, 2}), 2), {0, 1}); }) ==
          Errc::coefficient_not_one);
    CHECK(code_of([&] { clear_subminors(MinorCombination::minor(*f3, 2, mi({1, 2}, {1, 2})), {0}); }) ==
          Errc::not_maximal);
    CHECK(code_of([&] { clear_subminors(MinorCombination::minor(*f3, 2, mi({1}, {1})), {0, 1}); }) ==
          Errc::not_maximal);
}

TEST_CASE("spread_reduce examples") {
    const auto f = field_make(3, 1);
    const auto g = MinorCombination::minor(*f, 3, mi({1, 2}, {2, 3}));
    const SpreadReduction r = spread_reduce(g);
    CHECK(r.g.coeff(mi({1, 2}, {1, 2})) != 0);
    CHECK(r.minor == mi({1, 2}, {1, 2}));
    CHECK(brute_weight(r.g) == brute_weight(g));
    CHECK(r.g == act(g, r.a, SymMatrix(*f, 3)));
    try {
        spread_reduce(MinorCombination::minor(*f, 3, mi({1, 2}, {1, 2})));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::already_minimal);
    }
    CHECK_THROWS_AS(spread_reduce(MinorCombination::constant(*f, 3, 1)), Error);
}

TEST_CASE("iterated spread reduction reaches spread k") {
    std::mt19937 rng(37);
    for (auto [ell, q] : std::vector<std::pair<int, std::uint32_t>>{{3, 2}, {3, 3}, {4, 2}}) {
        const auto f = field_for_order(q);
        for (int trial = 0; trial < 6; ++trial) {
            MinorCombination g = random_combination(*f, ell, rng);
            if (g.max_size() <= 0) continue;
            const std::uint64_t w = weight(g);
            const int k = g.max_size();
            for (int step = 0; step < 2 * ell; ++step) {
                try {
                    const SpreadReduction r = spread_reduce(g);
                    CHECK(static_cast<int>(r.minor.size()) == k);
                    g = r.g;
                    CHECK(weight(g) == w);
                    CHECK(g.max_size() == k);
                } catch (const Error& e) {
                    CHECK(e.code() == Errc::already_minimal);
                    break;
                }
            }
            bool has_tight = false;
            for (const auto& [p, c] : g.terms())
                if (static_cast<int>(p.size()) == k && static_cast<int>(spread(p).size()) == k) has_tight = true;
            CHECK(has_tight);
        }
    }
    const auto f2 = field_make(2, 1);
    const SpreadReduction wide = spread_reduce(MinorCombination::minor(*f2, 4, mi({1, 2}, {3, 4})));
    CHECK(spread(wide.minor).size() == 3);
}
