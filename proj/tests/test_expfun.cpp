#include <cmath>
#include <random>

#include "doctest.h"
#include "hyp/expfun.hpp"
#include "support.hpp"

using namespace hyp;
using namespace hyp::testing;

namespace {

const ExpPoly kExpXi = ExpPoly::exp(xi());
const ExpPoly kExpXi2 = ExpPoly::exp(poly({0, 0, 1}));

double term_magnitude(const ExpPoly& f, std::complex<double> z) {
    double m = 0.0;
    for (const auto& t : f.terms()) m += std::abs(evaluate(ExpPoly::from_terms({t}), z));
    return m;
}

}  // namespace

TEST_CASE("evaluate examples") {
    CHECK(std::abs(evaluate(kExpXi, 0.0) - 1.0) < 1e-15);
    ExpPoly f = ExpPoly::term(xi(), poly({0, 0, 1}));
    CHECK(std::abs(evaluate(f, 1.0) - std::exp(1.0)) < 1e-14);
    CHECK(std::abs(evaluate(kExpXi - kExpXi, {3.0, 4.0})) == 0.0);
}

TEST_CASE("evaluate reports exponent overflow") {
    CHECK_THROWS_AS(evaluate(kExpXi2, 30.0), OverflowError);
    CHECK_NOTHROW(evaluate(kExpXi2, 20.0));
}

TEST_CASE("differentiate examples") {
    CHECK(differentiate(kExpXi) == kExpXi);
    CHECK(differentiate(kExpXi2) == ExpPoly::term(poly({0, 2}), poly({0, 0, 1})));
    CHECK(differentiate(ExpPoly(5)).is_zero());
}

TEST_CASE("combine examples") {
    CHECK(combine(CombineOp::add, kExpXi, -kExpXi).terms().empty());
    CHECK(combine(CombineOp::multiply, kExpXi, kExpXi2) == ExpPoly::exp(poly({0, 1, 1})));
    ExpPoly f = ExpPoly::term(xi(), xi());
    CHECK(combine(CombineOp::scale, f, ExactComplex(2)) == ExpPoly::term(poly({0, 2}), xi()));
    CHECK_THROWS_AS(combine(CombineOp::scale, f, f), PreconditionError);
}

TEST_CASE("is_zero examples") {
    CHECK_FALSE(is_zero(kExpXi + kExpXi2));
    CHECK(is_zero(ExpPoly::term(poly({1 - 1}), xi())));
    // exp(xi+1) - e*exp(xi): e is carried as the symbolic tag exp(1).
    ExpPoly a = ExpPoly::exp(poly({1, 1}));
    ExpPoly b = ExpPoly::term(poly({1}), xi(), ExactComplex(1));
    CHECK(is_zero(a - b));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 5; ++k) {
        std::complex<double> z{u(rng), u(rng)};
        CHECK(std::abs(evaluate(a, z) - std::exp(1.0) * evaluate(kExpXi, z)) <
              1e-12 * std::abs(evaluate(a, z)));
    }
}

TEST_CASE("constant exponent terms merge with plain polynomials") {
    ExpPoly c = ExpPoly::exp(poly({2}));
    CHECK(c.terms().size() == 1);
    CHECK(c.terms()[0].exponent.is_zero());
    CHECK(c.terms()[0].expconst == ExactComplex(2));
    CHECK_FALSE(c.is_polynomial());
    CHECK(is_zero(c * ExpPoly::exp(poly({-2})) - ExpPoly(1)));
}

TEST_CASE("property: product rule holds exactly") {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 40; ++trial) {
        ExpPoly f = random_exppoly(rng, 3);
        ExpPoly g = random_exppoly(rng, 3);
        ExpPoly lhs = differentiate(combine(CombineOp::multiply, f, g));
        ExpPoly rhs = differentiate(f) * g + f * differentiate(g);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("property: zero sums evaluate to zero") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> radius(0.0, 2.0), angle(0.0, 2 * M_PI);
    for (int trial = 0; trial < 20; ++trial) {
        ExpPoly f = random_exppoly(rng, 3);
        ExpPoly g = random_exppoly(rng, 3);
        // f*g - g*f with the terms of the two products interleaved before canonicalizing.
        ExpPoly fg = f * g, gf = g * f;
        std::vector<ExpPoly::Term> raw;
        for (const auto& t : fg.terms()) raw.push_back(t);
        for (const auto& t : gf.terms()) raw.push_back({-t.coeff, t.expconst, t.exponent});
        ExpPoly h = canonicalize(raw);
        REQUIRE(is_zero(h));
        ExpPoly unsummed = f * g;
        for (int k = 0; k < 20; ++k) {
            std::complex<double> z = std::polar(radius(rng), angle(rng));
            double v = std::abs(evaluate(f * g, z) - evaluate(g * f, z));
            CHECK(v <= 1e-9 * std::max(1.0, term_magnitude(unsummed, z)));
        }
    }
}

TEST_CASE("property: canonical form is a fixpoint") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        ExpPoly f = random_exppoly(rng, 3, 5);
        ExpPoly once = canonicalize(f.terms());
        CHECK(canonicalize(once.terms()) == once);
        CHECK(once == f);
    }
}

TEST_CASE("scaled evaluation matches direct evaluation and survives overflow") {
    ExpPoly f = kExpXi2 + ExpPoly::term(poly({0, 3}), xi());
    CompiledExpPoly cf(f);
    std::complex<double> z{1.3, -0.4};
    ScaledValue s = cf.eval_scaled(z);
    CHECK(std::abs(std::exp(s.log_scale) * s.mantissa - evaluate(f, z)) < 1e-12);
    ScaledValue big = cf.eval_scaled(40.0);
    CHECK(big.log_abs() == doctest::Approx(1600.0).epsilon(1e-12));
}

TEST_CASE("wronskian detects linear dependence") {
    CHECK(is_zero(wronskian({kExpXi, ExpPoly::term(poly({3}), xi())})));
    CHECK_FALSE(is_zero(wronskian({ExpPoly(1), kExpXi, kExpXi2})));
    CHECK(is_zero(wronskian({ExpPoly(1), ExpPoly(-1)})));
}
