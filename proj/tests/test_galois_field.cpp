#include <doctest.h>

#include <set>

#include "symgrass/galois_field.hpp"

using namespace symgrass;

namespace {

// Schoolbook product of two base-p encoded polynomials reduced by a monic modulus.
Repr oracle_mul(Repr a, Repr b, int p, const std::vector<int>& mod) {
    const int m = static_cast<int>(mod.size()) - 1;
    std::vector<int> da(m), db(m), prod(2 * m, 0);
    for (int i = 0; i < m; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (int d = 2 * m - 1; d >= m; --d) {
        const int c = prod[d];
        for (int i = 0; i <= m; ++i) prod[d - m + i] = ((prod[d - m + i] - c * mod[i]) % p + p) % p;
    }
    Repr r = 0;
    for (int i = m - 1; i >= 0; --i) r = r * p + prod[i];
    return r;
}

const std::vector<std::uint32_t> kSmallOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

}  // namespace

TEST_CASE("field_make builds the requested orders") {
    CHECK(field_make(2, 1)->order() == 2);
    CHECK(field_make(3, 2)->order() == 9);
    CHECK(field_make(2, 16)->order() == 65536);
}

TEST_CASE("field_make rejects bad parameters") {
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::parse_error;
    };
    CHECK(code_of([] { field_make(4, 1); }) == Errc::non_prime);
    CHECK(code_of([] { field_make(1, 1); }) == Errc::non_prime);
    CHECK(code_of([] { field_make(3, 0); }) == Errc::degree_out_of_range);
    CHECK(code_of([] { field_make(3, 11); }) == Errc::degree_out_of_range);
    CHECK(code_of([] { field_for_order(6); }) == Errc::non_prime);
}

TEST_CASE("modulus is the smallest encoded monic irreducible") {
    CHECK(field_make(2, 2)->modulus() == std::vector<int>{1, 1, 1});
    CHECK(field_make(2, 3)->modulus() == std::vector<int>{1, 1, 0, 1});
    CHECK(field_make(3, 2)->modulus() == std::vector<int>{1, 0, 1});
    CHECK(field_make(2, 4)->modulus() == std::vector<int>{1, 1, 0, 0, 1});
    // No smaller candidate is irreducible.
    CHECK_FALSE(is_irreducible({0, 0, 1}, 3));
    CHECK_FALSE(is_irreducible({0, 1, 1}, 3));
    CHECK_FALSE(is_irreducible({2, 0, 1}, 3));
}

TEST_CASE("fields are interned") {
    CHECK(field_make(3, 2).get() == field_make(3, 2).get());
    CHECK(field_for_order(9).get() == field_make(3, 2).get());
}

TEST_CASE("small products and inverses") {
    CHECK(field_make(2, 1)->mul(1, 1) == 1);
    CHECK(field_make(3, 1)->mul(2, 2) == 1);
    // x * x = x + 1 in GF(4)
    CHECK(field_make(2, 2)->mul(2, 2) == 3);
    CHECK(oracle_mul(2, 2, 2, {1, 1, 1}) == 3);
    CHECK(field_make(3, 1)->inv(2) == 2);
    CHECK(field_make(5, 1)->inv(1) == 1);
    CHECK_THROWS_AS(field_make(2, 1)->inv(0), Error);
}

TEST_CASE("multiplication matches the schoolbook oracle") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {2, 8}, {3, 3}}) {
        const auto f = field_make(p, m);
        for (Repr a = 0; a < f->order(); ++a)
            for (Repr b = 0; b < f->order(); ++b) REQUIRE(f->mul(a, b) == oracle_mul(a, b, p, f->modulus()));
    }
}

TEST_CASE("large fields use the log tables correctly") {
    const auto f = field_make(2, 10);
    for (Repr a = 1; a < f->order(); a += 37)
        for (Repr b = 0; b < f->order(); b += 53) CHECK(f->mul(a, b) == oracle_mul(a, b, 2, f->modulus()));
    for (Repr a = 1; a < f->order(); ++a) REQUIRE(f->mul(a, f->inv(a)) == 1);
}

TEST_CASE("elements are listed in repr order") {
    CHECK(field_make(3, 1)->elements() == std::vector<Repr>{0, 1, 2});
    CHECK(field_make(2, 1)->elements() == std::vector<Repr>{0, 1});
    const auto e4 = field_make(2, 2)->elements();
    REQUIRE(e4.size() == 4);
    CHECK(e4[0] == 0);
    CHECK(e4[1] == 1);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (std::uint32_t q : kSmallOrders) {
        const auto f = field_for_order(q);
        CAPTURE(q);
        for (Repr a = 0; a < q; ++a) {
            REQUIRE(f->add(a, 0) == a);
            REQUIRE(f->mul(a, 1) == a);
            REQUIRE(f->add(a, f->neg(a)) == 0);
            if (a != 0) REQUIRE(f->mul(a, f->inv(a)) == 1);
            for (Repr b = 0; b < q; ++b) {
                REQUIRE(f->add(a, b) == f->add(b, a));
                REQUIRE(f->mul(a, b) == f->mul(b, a));
                REQUIRE(f->sub(f->add(a, b), b) == a);
                for (Repr c = 0; c < q; ++c) {
                    REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("Frobenius is an additive bijection") {
    for (std::uint32_t q : kSmallOrders) {
        const auto f = field_for_order(q);
        const auto p = static_cast<std::uint64_t>(f->p());
        std::set<Repr> image;
        for (Repr a = 0; a < q; ++a) {
            image.insert(f->pow(a, p));
            for (Repr b = 0; b < q; ++b) REQUIRE(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
        }
        CHECK(image.size() == q);
    }
}

TEST_CASE("solve_quadratic examples") {
    CHECK(solve_quadratic(*field_make(2, 2), 0, 3) == std::vector<Repr>{2});
    CHECK(solve_quadratic(*field_make(3, 1), 0, 1).empty());
    CHECK(solve_quadratic(*field_make(3, 1), 2, 1) == std::vector<Repr>{2});
}

TEST_CASE("char 2 squaring has exactly one root") {
    for (std::uint32_t q : {2u, 4u, 8u, 16u}) {
        const auto f = field_for_order(q);
        for (Repr c = 0; c < q; ++c) CHECK(solve_quadratic(*f, 0, c).size() == 1);
    }
}

TEST_CASE("quadratic root sets are exact") {
    for (std::uint32_t q : kSmallOrders) {
        const auto f = field_for_order(q);
        for (Repr b = 0; b < q; ++b)
            for (Repr c = 0; c < q; ++c) {
                const auto roots = solve_quadratic(*f, b, c);
                REQUIRE(roots.size() <= 2);
                for (Repr x = 0; x < q; ++x) {
                    const bool is_root = f->add(f->add(f->mul(x, x), f->mul(b, x)), c) == 0;
                    REQUIRE(is_root == (std::find(roots.begin(), roots.end(), x) != roots.end()));
                }
            }
    }
}

TEST_CASE("FieldElement checks its field") {
    const auto f3 = field_make(3, 1);
    const auto f5 = field_make(5, 1);
    const FieldElement a(*f3, 2), b(*f5, 2);
    CHECK((a * a).repr() == 1);
    CHECK((a / a).repr() == 1);
    CHECK((-a).repr() == 1);
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(FieldElement(*f3, 3), Error);
    try {
        (void)(a * b);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::spec_mismatch);
    }
}
