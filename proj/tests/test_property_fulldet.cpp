// Property: every l = 3 function with maximal minor det_{123,123} has weight at
// least q^6 - q^5 - q^4 + q^3. Sampled on 10^4 random functions per field.

#include <doctest.h>

#include <random>

#include "symgrass/minor_algebra.hpp"

using namespace symgrass;

TEST_CASE("full-determinant weight bound, l = 3") {
    const MinorIndex full{{0, 1, 2}, {0, 1, 2}};
    for (std::uint32_t q : {2u, 3u}) {
        CAPTURE(q);
        const FieldSpec f = field_for_order(q);
        const std::uint64_t bound = sat_pow(q, 6) - sat_pow(q, 5) - sat_pow(q, 4) + sat_pow(q, 3);
        std::mt19937_64 rng(q);
        std::uint64_t below = 0, lowest = UINT64_MAX;
        for (int s = 0; s < 10000; ++s) {
            MinorCombination g(*f, 3);
            for (const auto& p : doset_pairs(3)) g.set(p, p == full ? 1 : static_cast<Repr>(rng() % q));
            const auto w = weight(g);
            below += w < bound;
            lowest = std::min(lowest, w);
        }
        CAPTURE(lowest);
        CHECK(below == 0);
    }
}
