#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace test_support;

namespace {

nested_tuple nt(std::vector<int> v) { return nested_tuple(std::move(v)); }

}

TEST_CASE("classes of nesting chains") {
    REQUIRE(hilb_class(nt({1, 2})) == s(1) * s(1));
    REQUIRE(hilb_class(nested_tuple::zeros(3)).is_one());
    REQUIRE(hilb_class(nt({2, 2})) == s(2));
    REQUIRE(hilb_class(nt({1, 1, 3})) == s(1) * s(2));
}

TEST_CASE("classes of attracting cells") {
    SECTION("weight zero when the mass sits in the first step") {
        const decomposition dec({nt({1}), nt({0})});
        REQUIRE(stratum_class(dec) == s(1));
    }
    SECTION("one weight unit per level of the second step") {
        const decomposition dec({nt({0}), nt({1})});
        REQUIRE(stratum_class(dec) == L() * s(1));
    }
    SECTION("all-zero splitting gives the unit") {
        const decomposition dec({nested_tuple::zeros(2), nested_tuple::zeros(2)});
        REQUIRE(stratum_class(dec).is_one());
    }
    SECTION("every cell class is a single effective monomial") {
        for (const auto& dec : enumerate_decompositions(nt({1, 2}), 3)) {
            const auto c = stratum_class(dec);
            REQUIRE(c.terms().size() == 1);
            REQUIRE(c.terms().begin()->second == bigint(1));
        }
    }
}

TEST_CASE("summed cell classes") {
    SECTION("rank one reduces to the chain class") {
        for (const auto& n : enumerate_nested(2, 3))
            REQUIRE(oracle_coefficient(n, 1) == hilb_class(n));
    }
    SECTION("rank two linear coefficient") {
        REQUIRE(oracle_coefficient(nt({1}), 2) == s(1) + L() * s(1));
    }
    SECTION("splitting count equals the total of monomial multiplicities") {
        for (const auto& n : enumerate_nested(2, 2)) {
            for (int r = 1; r <= 3; ++r) {
                bigint total;
                const universal_motive coeff = oracle_coefficient(n, r);
                for (const auto& [mono, c] : coeff.terms()) total += c;
                REQUIRE(total == bigint(static_cast<long long>(
                                     enumerate_decompositions(n, r).size())));
            }
        }
    }
}

TEST_CASE("full series from cells matches the product formula") {
    for (int r = 1; r <= 2; ++r) {
        for (int d = 1; d <= 2; ++d) {
            const auto cfg = quot_series_config::uniform(r, d, 3);
            REQUIRE(oracle_series(cfg) == main_series(cfg));
        }
    }
}

TEST_CASE("integer point counts") {
    SECTION("single step counts points of a projective space") {
        for (int n = 0; n <= 4; ++n)
            REQUIRE(euler_count(1, nt({n})) == bigint(n + 1));
    }
    SECTION("rank two weight two") {
        REQUIRE(euler_count(2, nt({2})) == bigint(10));
    }
    SECTION("zero tuple") {
        REQUIRE(euler_count(3, nested_tuple::zeros(2)) == bigint(1));
    }
    SECTION("config overload checks depth") {
        const auto cfg = quot_series_config::uniform(2, 1, 3);
        REQUIRE(euler_count(cfg, nt({2})) == bigint(10));
        REQUIRE_THROWS_AS(euler_count(cfg, nt({1, 2})), dimension_error);
    }
    SECTION("count agrees with the genus zero specialization") {
        const auto cfg = quot_series_config::uniform(2, 2, 3);
        const auto series = main_series(cfg);
        for (const auto& n : enumerate_nested(2, 3)) {
            const auto c = series.coefficient(n.to_exponents());
            REQUIRE(euler_count(2, n) == apply_euler(c, 0));
        }
    }
}
