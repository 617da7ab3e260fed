#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace test_support;

TEST_CASE("free ring arithmetic") {
    SECTION("products of generators stay unreduced") {
        const auto sq = s(1) * s(1);
        REQUIRE(sq.terms().size() == 1);
        REQUIRE(sq.to_string() == "s1^2");
        REQUIRE(sq != s(2)); // no relation identifies them
    }
    SECTION("distribution over a sum") {
        REQUIRE(L() * (universal_motive::one() + L()) == L() + L(2));
    }
    SECTION("additive inverses cancel") {
        const auto a = s(2) * L() + universal_motive(3);
        REQUIRE((a + (-a)).is_zero());
        REQUIRE(a - a == universal_motive::zero());
    }
    SECTION("mixed products collect exponents") {
        const auto p = (L() * s(1)) * (L(2) * s(1) * s(3));
        REQUIRE(p.to_string() == "L^3*s1^2*s3");
    }
}

TEST_CASE("generator constructors") {
    REQUIRE(universal_motive::lefschetz(0).is_one());
    REQUIRE(universal_motive::sym_class(0).is_one());
    REQUIRE(universal_motive::lefschetz().to_string() == "L");
    REQUIRE(universal_motive::sym_class(4).to_string() == "s4");
    REQUIRE_THROWS_AS(universal_motive::lefschetz(-1), parameter_error);
    REQUIRE_THROWS_AS(universal_motive::sym_class(-2), parameter_error);
}

TEST_CASE("units of the ring") {
    REQUIRE(universal_motive::one().try_invert().has_value());
    REQUIRE(universal_motive(-1).try_invert().has_value());
    REQUIRE(*universal_motive(-1).try_invert() == universal_motive(-1));
    REQUIRE_FALSE(universal_motive(2).try_invert().has_value());
    REQUIRE_FALSE(L().try_invert().has_value());
    REQUIRE_FALSE(universal_motive::zero().try_invert().has_value());
}

TEST_CASE("grading by powers of the distinguished generator") {
    const auto a = s(2) + L(2) * s(2) + L() * s(1) * s(1);
    REQUIRE(a.lefschetz_degree() == 2);
    REQUIRE(a.lefschetz_graded_part(0) == s(2));
    REQUIRE(a.lefschetz_graded_part(1) == s(1) * s(1));
    REQUIRE(a.lefschetz_graded_part(2) == s(2));
    REQUIRE(a.lefschetz_graded_part(3).is_zero());
    REQUIRE(universal_motive::zero().lefschetz_degree() == -1);
}

TEST_CASE("coefficient signs") {
    REQUIRE((s(1) + L()).has_nonnegative_coefficients());
    REQUIRE_FALSE((s(1) - L()).has_nonnegative_coefficients());
    REQUIRE(universal_motive::zero().has_nonnegative_coefficients());
}

TEST_CASE("canonical rendering") {
    REQUIRE(universal_motive::zero().to_string() == "0");
    REQUIRE(universal_motive(7).to_string() == "7");
    REQUIRE((universal_motive(1) - s(1)).to_string() == "1 - s1");
    REQUIRE((s(2) + L(2) * s(2) + L() * s(1) * s(1)).to_string() == "s2 + L^2*s2 + L*s1^2");
    REQUIRE((universal_motive(3) * L(2) * s(1) * s(3) * s(3)).to_string() == "3*L^2*s1*s3^2");
    REQUIRE((-L()).to_string() == "-L");
}

TEST_CASE("ring laws on random elements") {
    std::mt19937 rng(20240815);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_motive(rng);
        const auto b = random_motive(rng);
        const auto c = random_motive(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * universal_motive::one() == a);
        REQUIRE((a * universal_motive::zero()).is_zero());
    }
}
