#include "f1hall/laurent.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace f1hall;

namespace {

LaurentPoly var(const std::string& n, std::int64_t e = 1) { return LaurentPoly::variable(n, e); }

}  // namespace

TEST_CASE("laurent arithmetic basics") {
    LaurentPoly s = var("s"), sinv = var("s", -1);

    SECTION("difference of squares") {
        CHECK((s - sinv) * (s + sinv) == var("s", 2) - var("s", -2));
    }

    SECTION("additive inverse gives the empty term map") {
        LaurentPoly p = var("sigma", 2) * var("tau", -2);
        LaurentPoly z = p + (-p);
        CHECK(z.is_zero());
        CHECK(z.terms().empty());
        CHECK(z == LaurentPoly::zero());
    }

    SECTION("canonical form is variable-minimal") {
        // s + (1 - s) involves s but the sum does not
        LaurentPoly one = s + (LaurentPoly::one() - s);
        CHECK(one.vars().empty());
        CHECK(one == LaurentPoly::one());
    }
}

TEST_CASE("alpha_1 factor expansion") {
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly q = var("sigma", 2), tinv = var("tau", -2);
    LaurentPoly product = (one - q) * (one - tinv) * (one - q * tinv);

    // (1-a)(1-b)(1-ab) = 1 - a - b + a^2 b + a b^2 - a^2 b^2 with a = sigma^2,
    // b = tau^-2; the two ab cross terms cancel.
    LaurentPoly expected = one - var("sigma", 2) - var("tau", -2) +
                           var("sigma", 4) * var("tau", -2) +
                           var("sigma", 2) * var("tau", -4) -
                           var("sigma", 4) * var("tau", -4);
    CHECK(product == expected);
    CHECK(product.terms().size() == 6);

    // independent route: exact evaluation at rational points
    for (auto [sv, tv] : {std::pair{2, 3}, {5, 2}, {7, 11}}) {
        std::map<std::string, Rational> pt{{"sigma", Rational(sv)}, {"tau", Rational(tv)}};
        Rational a = Rational(sv) * sv, b = Rational(1) / (Rational(tv) * tv);
        CHECK(oracles::eval_at(product, pt) == (1 - a) * (1 - b) * (1 - a * b));
    }
}

TEST_CASE("exact division") {
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly a = var("a");

    SECTION("geometric factor") {
        CHECK(exact_divide(one - a.pow(3), one - a) == one + a + a.pow(2));
    }

    SECTION("geometric factor in q/t") {
        LaurentPoly qt = var("sigma", 2) * var("tau", -2);
        CHECK(exact_divide(one - qt.pow(2), one - qt) == one + qt);
    }

    SECTION("non-divisible pair") {
        CHECK_THROWS_AS(exact_divide(one - a.pow(2), one - a.pow(3)), NotDivisible);
    }

    SECTION("division by zero is rejected") {
        CHECK_THROWS_AS(exact_divide(one, LaurentPoly::zero()), std::invalid_argument);
    }

    SECTION("monomial divisors always divide") {
        LaurentPoly p = var("s", 3) - var("s", -1);
        CHECK(exact_divide(p, var("s", -1)) == var("s", 4) - one);
    }
}

TEST_CASE("specialize") {
    LaurentPoly sigma = var("sigma"), tau = var("tau");

    SECTION("vanishing factor of alpha_1 at t=q") {
        LaurentPoly p = LaurentPoly::one() - sigma * var("tau", -1);
        CHECK(specialize(p, {{"tau", sigma}}).is_zero());
    }

    SECTION("sigma^2 tau^-2 collapses to 1 at sigma=tau=s") {
        LaurentPoly p = var("sigma", 2) * var("tau", -2);
        LaurentPoly s = var("s");
        CHECK(specialize(p, {{"sigma", s}, {"tau", s}}) == LaurentPoly::one());
    }

    SECTION("identity assignment") {
        LaurentPoly p = var("s", 2) - var("s", -2) + LaurentPoly::constant(Rational(1, 3));
        CHECK(specialize(p, {{"s", var("s")}}) == p);
    }

    SECTION("non-monomial image is rejected") {
        CHECK_THROWS_AS(specialize(sigma, {{"sigma", sigma + tau}}), std::invalid_argument);
    }
}

TEST_CASE("ring axioms on random samples") {
    oracles::Rng rng(20260810);
    std::vector<std::string> vars{"sigma", "tau"};
    for (int trial = 0; trial < 60; ++trial) {
        LaurentPoly a = rng.laurent(vars), b = rng.laurent(vars), c = rng.laurent(vars);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("specialize is a ring homomorphism") {
    oracles::Rng rng(7);
    std::map<std::string, LaurentPoly> to_s{{"sigma", var("s")}, {"tau", var("s")}};
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly a = rng.laurent({"sigma", "tau"}), b = rng.laurent({"sigma", "tau"});
        CHECK(specialize(a * b, to_s) == specialize(a, to_s) * specialize(b, to_s));
        CHECK(specialize(a + b, to_s) == specialize(a, to_s) + specialize(b, to_s));
    }
}

TEST_CASE("json round trip") {
    oracles::Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly p = rng.laurent({"s", "sigma", "tau"});
        CHECK(LaurentPoly::from_json(p.to_json()) == p);
    }
    LaurentPoly big = LaurentPoly::constant(
        rational_from_strings("123456789012345678901234567890", "7"));
    CHECK(LaurentPoly::from_json(big.to_json()) == big);
}

TEST_CASE("display order is graded lexicographic") {
    LaurentPoly p = var("s", -1) + var("s", 2) - LaurentPoly::one();
    CHECK(p.to_string() == "s^2 - 1 + s^-1");
    CHECK((var("s") - var("s", -1)).to_string() == "s - s^-1");
    CHECK(LaurentPoly::zero().to_string() == "0");
    CHECK(LaurentPoly::constant(Rational(-1, 2)).to_string() == "-1/2");
}
