#include "f1hall/series.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace f1hall;

TEST_CASE("series exp/log basics") {
    SECTION("exp(0) = 1") {
        FormalSeries zero("w", 5);
        FormalSeries e = series_exp(zero);
        CHECK(e.coefficient(0).is_one());
        for (int k = 1; k <= 5; ++k) CHECK(e.coefficient(k).is_zero());
    }

    SECTION("log(1/(1-z)) = z + z^2/2 + z^3/3") {
        FormalSeries g = FormalSeries::geometric("z", 3, LaurentPoly::one());
        FormalSeries f = series_log(g);
        CHECK(f.coefficient(0).is_zero());
        CHECK(f.coefficient(1) == LaurentPoly::one());
        CHECK(f.coefficient(2) == LaurentPoly::constant(Rational(1, 2)));
        CHECK(f.coefficient(3) == LaurentPoly::constant(Rational(1, 3)));
    }

    SECTION("exp(a1*u*w) has w^2 coefficient a1^2 u^2 / 2") {
        LaurentPoly a1 = LaurentPoly::variable("a1");
        LaurentPoly u = LaurentPoly::variable("u");
        FormalSeries f("w", 2);
        f.set_coefficient(1, a1 * u);
        FormalSeries g = series_exp(f);
        CHECK(g.coefficient(2) == Rational(1, 2) * a1.pow(2) * u.pow(2));
    }

    SECTION("constant-term preconditions") {
        FormalSeries bad_exp = FormalSeries::constant("w", 3, LaurentPoly::one());
        CHECK_THROWS_AS(series_exp(bad_exp), BadConstantTerm);
        FormalSeries bad_log("w", 3);
        CHECK_THROWS_AS(series_log(bad_log), BadConstantTerm);
    }
}

TEST_CASE("exp and log against naive powering") {
    oracles::Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        FormalSeries f("w", 6);
        for (int k = 1; k <= 6; ++k) f.set_coefficient(k, rng.laurent({"q"}, 2, 2));
        CHECK(series_exp(f) == oracles::exp_by_powers(f));
        FormalSeries g = series_exp(f);
        CHECK(series_log(g) == oracles::log_by_powers(g));
    }
}

TEST_CASE("log is inverse to exp up to truncation") {
    oracles::Rng rng(42);
    for (int trial = 0; trial < 15; ++trial) {
        FormalSeries f("w", 5);
        for (int k = 1; k <= 5; ++k) f.set_coefficient(k, rng.laurent({"sigma", "tau"}, 3, 2));
        CHECK(series_log(series_exp(f)) == f);
    }
}

TEST_CASE("binary operations truncate to the smaller order") {
    FormalSeries a = FormalSeries::geometric("z", 6, LaurentPoly::one());
    FormalSeries b = FormalSeries::geometric("z", 3, LaurentPoly::one());
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
    FormalSeries other("y", 3);
    CHECK_THROWS_AS(a * other, std::invalid_argument);
}
