#include <cmath>
#include <random>

#include "doctest.h"
#include "hyp/borel.hpp"
#include "support.hpp"

using namespace hyp;
using namespace hyp::testing;

namespace {

ExpSum quadratic_form_sum() {
    // x^2 - (3/2) x y + (1/2) y^2 with p1 = xi, p2 = 2 xi; every exponent is 4 xi.
    ExpSum s;
    s.M = 2;
    s.p1 = xi();
    s.p2 = poly({0, 2});
    s.terms = {{ExactComplex(1), 2, 2, 0},
               {ExactComplex(make_rational(-3, 2)), 1, 1, 0},
               {ExactComplex(make_rational(1, 2)), 0, 0, 0}};
    return s;
}

}  // namespace

TEST_CASE("realize examples") {
    ExpSum one{1, {{ExactComplex(1), 1, 0, 0}}, xi(), Poly()};
    CHECK(realize(one) == ExpPoly::exp(xi()));
    ExpSum cancel{1, {{ExactComplex(1), 1, 0, 0}, {ExactComplex(-1), 1, 0, 0}}, xi(), Poly()};
    CHECK(is_zero(realize(cancel)));
    ExpSum mixed{2, {{ExactComplex(1), 1, 0, 0}}, poly({0, 0, 1}), xi()};
    CHECK(realize(mixed) == ExpPoly::term(poly({0, 2}), poly({0, 1, 1})));
}

TEST_CASE("partition examples") {
    // (i+j, M-i+k) in {(2,0), (0,1)} with p1 = xi, p2 = 2 xi: both exponents 2 xi.
    ExpSum s{1, {{ExactComplex(1), 1, 1, 0}, {ExactComplex(1), 0, 0, 0}}, xi(), poly({0, 2})};
    CHECK(partition_classes(s).size() == 1);
    ExpSum two{1, {{ExactComplex(1), 1, 0, 0}, {ExactComplex(1), 0, 0, 0}}, xi(), poly({0, 0, 1})};
    CHECK(partition_classes(two).size() == 2);
    ExpSum same{1, {{ExactComplex(1), 1, 0, 0}, {ExactComplex(3), 1, 0, 0}}, xi(), xi()};
    CHECK(partition_classes(same).size() == 1);
    // Constant offsets stay in one class.
    ExpSum shifted{1, {{ExactComplex(1), 1, 0, 0}, {ExactComplex(1), 0, 0, 0}}, xi(), poly({5, 1})};
    CHECK(partition_classes(shifted).size() == 1);
}

TEST_CASE("minimal vanishing subsets examples") {
    // p1 = xi, p2 = xi^2, M = 1: i = 1 gives exp(2 xi) when j = 1, i = 0 gives exp(xi^2).
    Poly sq = poly({0, 0, 1});
    ExpSum pairs{1,
                 {{ExactComplex(1), 1, 1, 0},
                  {ExactComplex(-1), 1, 1, 0},
                  {ExactComplex(1), 0, 0, 0},
                  {ExactComplex(-1), 0, 0, 0}},
                 xi(),
                 sq};
    auto subs = minimal_vanishing_subsets(pairs);
    REQUIRE(subs.size() == 2);
    CHECK(subs[0].terms.size() == 2);
    CHECK(subs[1].terms.size() == 2);

    ExpSum triple{1,
                  {{ExactComplex(1), 1, 0, 0}, {ExactComplex(1), 1, 0, 0}, {ExactComplex(-2), 1, 0, 0}},
                  xi(),
                  Poly()};
    subs = minimal_vanishing_subsets(triple);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].terms.size() == 3);

    ExpSum q = quadratic_form_sum();
    subs = minimal_vanishing_subsets(q);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].terms.size() == 3);

    ExpSum bad = q;
    bad.terms[0].coeff = ExactComplex(2);
    CHECK_THROWS_WITH_AS(minimal_vanishing_subsets(bad), "not an identity", PreconditionError);
}

TEST_CASE("case1 examples") {
    ExpPoly e1 = ExpPoly::exp(xi());
    ExpPoly e2 = ExpPoly::exp(poly({0, 0, 1}));
    Case1Report rep = case1_refute({e1, e2, -e1 - e2});
    CHECK(rep.refuted);
    CHECK_FALSE(rep.syntactic);
    CHECK(rep.log_fit_relative > kCase1Residual);
    CHECK(rep.envelope_ratio >= kCase1Envelope);
    // T - sum N stays logarithmic (the SMT bound on H).
    CHECK(rep.delta_relative_residual < 0.05);
    // T grows like r^2: T(32) / T(16) close to 4.
    CHECK(rep.T[3] / rep.T[2] == doctest::Approx(4.0).epsilon(0.1));

    Case1Report l2 = case1_refute({e1, ExpPoly(-xi())});
    CHECK(l2.syntactic);
    CHECK(l2.refuted);

    CHECK_THROWS_AS(case1_refute({e1, -2 * e1, e1}), PreconditionError);
    CHECK_THROWS_AS(case1_refute({e1, e2, -e1}), PreconditionError);  // does not vanish
}

TEST_CASE("case2 examples") {
    AnalysisOutcome o = case2_conclude(quadratic_form_sum());
    CHECK(o.kind == OutcomeKind::case2_proportional);
    CHECK(o.lambda == ExactComplex(1));
    CHECK(o.gamma == ExactComplex(make_rational(1, 2)));
    CHECK(o.factors.size() == 2);
    CHECK(o.omega0 == "1*dxi1/xi1 - (1/2)*dxi2/xi2");

    ExpSum deg{1, {{ExactComplex(1), 1, 0, 0}, {ExactComplex(-1), 1, 0, 0}}, xi(), poly({3})};
    CHECK(case2_conclude(deg).kind == OutcomeKind::degenerate_input);

    ExpSum same{1, {{ExactComplex(1), 1, 0, 0}, {ExactComplex(-1), 0, 0, 0}}, xi(), xi()};
    o = case2_conclude(same);
    CHECK(o.kind == OutcomeKind::case2_proportional);
    CHECK(o.lambda == ExactComplex(1));
    CHECK(o.gamma == ExactComplex(1));

    // Not an identity: x - 2y at (1, 1) does not vanish.
    ExpSum bad{1, {{ExactComplex(1), 1, 0, 0}, {ExactComplex(-2), 0, 0, 0}}, xi(), xi()};
    CHECK_THROWS_AS(case2_conclude(bad), PreconditionError);
    ExpSum mixed{1, {{ExactComplex(1), 1, 0, 0}, {ExactComplex(1), 0, 0, 0}}, xi(), poly({0, 0, 1})};
    CHECK_THROWS_AS(case2_conclude(mixed), PreconditionError);
}

TEST_CASE("case2 roots at infinity and tagged coefficients") {
    // Form y (x - y) with p1 = xi + 1, p2 = xi: offsets move into the coefficients as exp(c).
    ExpSum s{2, {{ExactComplex(1), 1, 1, 1}, {ExactComplex(-1), 0, 2, 0}}, poly({1, 1}), xi()};
    REQUIRE(is_zero(realize(s)));
    HomogeneousForm f = homogeneous_form(s);
    CHECK_FALSE(f.coeffs[1].is_plain());
    FormFactorization fac = factor_form(f);
    CHECK(fac.all_exact);
    CHECK(expand(fac, 2).coeffs == f.coeffs);
    bool has_infinity = false;
    for (const auto& lf : fac.factors) has_infinity |= lf.lambda.is_zero();
    CHECK(has_infinity);
}

TEST_CASE("pipeline examples") {
    AnalysisOutcome o = degeneracy_pipeline(quadratic_form_sum());
    CHECK(o.kind == OutcomeKind::case2_proportional);
    CHECK(o.gamma == ExactComplex(make_rational(1, 2)));

    // Two vanishing classes: exponents 2 xi and xi^2 (p1 = xi, p2 = xi^2, M = 1).
    ExpSum two{1,
               {{ExactComplex(1), 1, 1, 0},
                {ExactComplex(-1), 1, 1, 0},
                {ExactComplex(2), 0, 0, 0},
                {ExactComplex(-2), 0, 0, 0}},
               xi(),
               poly({0, 0, 1})};
    CHECK_THROWS_AS(degeneracy_pipeline(two), PreconditionError);  // cancels termwise

    // Two classes with genuine relations; p1' = p2' so (1, 1) in both.
    ExpSum rel{1,
               {{ExactComplex(1), 1, 0, 0},
                {ExactComplex(-1), 0, 0, 0},
                {ExactComplex(3), 1, 2, 0},
                {ExactComplex(-3), 0, 0, 2}},
               xi(),
               xi()};
    o = degeneracy_pipeline(rel);
    CHECK(o.kind == OutcomeKind::case2_proportional);
    CHECK(o.subsets.size() == 2);
    for (const auto& r : o.subsets) CHECK(r.gamma == ExactComplex(1));

    ExpSum constant{1, {{ExactComplex(1), 1, 0, 0}}, poly({2}), xi()};
    CHECK(degeneracy_pipeline(constant).kind == OutcomeKind::degenerate_input);
}

TEST_CASE("property: realize respects the partition") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> small(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        ExpSum s;
        s.M = 1 + small(rng);
        s.p1 = random_poly(rng, 2);
        s.p2 = random_poly(rng, 2);
        for (int k = 0; k < 5; ++k)
            s.terms.push_back({random_gaussian(rng), std::min(small(rng), s.M), small(rng), small(rng)});
        ExpPoly acc;
        for (const auto& c : partition_classes(s)) acc += realize(subset(s, c.indices));
        CHECK(acc == realize(s));
    }
}

TEST_CASE("property: exact zero test agrees with numeric evaluation") {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        ExpSum s = random_case2(rng);
        bool perturb = trial % 2 == 1;
        if (perturb) s.terms[0].coeff += ExactComplex(1);
        bool exact_zero = is_zero(realize(s));
        ExpPoly f = realize(s);
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            std::complex<double> z(u(rng), u(rng));
            double scale = 0.0;
            for (const auto& t : s.terms) scale += std::abs(evaluate(realize(s, t), z));
            worst = std::max(worst, std::abs(evaluate(f, z)) / std::max(scale, 1e-300));
        }
        if (!perturb) CHECK(exact_zero);
        CHECK(exact_zero == (worst < 1e-8));
    }
}

TEST_CASE("property: case2 annihilation and factor reconstruction") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 60; ++trial) {
        ExpSum s = random_case2(rng);
        REQUIRE(is_zero(realize(s)));
        AnalysisOutcome o = degeneracy_pipeline(s);
        REQUIRE(o.kind == OutcomeKind::case2_proportional);
        CHECK_FALSE((o.lambda.is_zero() && o.gamma.is_zero()));
        CHECK((o.lambda * s.p1.derivative() - o.gamma * s.p2.derivative()).is_zero());
        for (const auto& r : o.subsets) {
            HomogeneousForm f = homogeneous_form(subset(s, r.indices));
            FormFactorization fac = factor_form(f);
            if (fac.all_exact) CHECK(expand(fac, f.M).coeffs == f.coeffs);
        }
    }
}

TEST_CASE("property: exact factorization of split forms") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> mdist(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int M = mdist(rng);
        FormFactorization planted;
        ExactComplex lead;
        do lead = random_gaussian(rng); while (lead.is_zero());
        planted.leading = ExpScalar::exp_term(lead, ExactComplex(trial % 3));
        for (int k = 0; k < M; ++k) {
            if (k == 0 && trial % 4 == 0)
                planted.factors.push_back({ExactComplex(0), ExactComplex(-1), true, BigComplex(0)});
            else
                planted.factors.push_back({ExactComplex(1), random_gaussian(rng), true, BigComplex(0)});
        }
        HomogeneousForm f = expand(planted, M);
        FormFactorization fac = factor_form(f);
        CHECK(fac.all_exact);
        CHECK(fac.factors.size() == static_cast<size_t>(M));
        CHECK(expand(fac, M).coeffs == f.coeffs);
    }
}
