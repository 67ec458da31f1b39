#include <random>

#include "doctest.h"
#include "hyp/bivariate.hpp"
#include "hyp/cyclotomic.hpp"
#include "hyp/roots.hpp"

using namespace hyp;

namespace {

using QPoly = UPoly<Rational>;

QPoly qpoly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(std::move(v));
}

BiPoly<Rational> bi(std::initializer_list<std::tuple<int, int, long>> terms) {
    BiPoly<Rational> p(2);
    for (auto [i, j, c] : terms) p.add_term({i, j}, Rational(c));
    return p;
}

BiPoly<Rational> random_bi(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<int> c(-4, 4);
    BiPoly<Rational> p(2);
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) p.add_term({i, j}, Rational(c(rng)));
    return p;
}

}  // namespace

TEST_CASE("univariate gcd and squarefree decomposition") {
    QPoly a = qpoly({-1, 0, 1});         // (x-1)(x+1)
    QPoly b = qpoly({1, -2, 1});         // (x-1)^2
    CHECK(gcd(a, b) == qpoly({-1, 1}));
    QPoly p = b * b * qpoly({2, 1}) * qpoly({0, 3});  // 3x(x+2)(x-1)^4
    auto sf = squarefree_decomposition(p);
    REQUIRE(sf.size() == 4);
    CHECK(sf[0] == qpoly({0, 2, 1}));
    CHECK(sf[1].degree() == 0);
    CHECK(sf[3] == qpoly({-1, 1}));
}

TEST_CASE("multivariate substitution and partials") {
    MPoly<Rational> x = MPoly<Rational>::variable(3, 0), y = MPoly<Rational>::variable(3, 1);
    MPoly<Rational> f = x * x * y - MPoly<Rational>::constant(3, Rational(3));
    CHECK(f.is_homogeneous(3) == false);
    CHECK(f.partial(0) == Rational(2) * x * y);
    CHECK(f({Rational(2), Rational(5), Rational(0)}) == 17);
    MPoly<Rational> g = f.substitute({y, x, MPoly<Rational>::variable(3, 2)});
    CHECK(g == y * y * x - MPoly<Rational>::constant(3, Rational(3)));
}

TEST_CASE("bivariate gcd recovers a planted factor") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        BiPoly<Rational> g = random_bi(rng, 2), a = random_bi(rng, 2), b = random_bi(rng, 2);
        if (g.total_degree() < 1) continue;
        BiPoly<Rational> d = gcd(g * a, g * b);
        // g divides the gcd, and the gcd of the cofactors is trivial for generic a, b.
        CHECK_NOTHROW(exact_div(d, g));
        CHECK(exact_div(g * a, d).total_degree() >= 0);
        CHECK(gcd(exact_div(g * a, d), exact_div(g * b, d)).total_degree() == 0);
    }
}

TEST_CASE("rational functions reduce to lowest terms") {
    BiPoly<Rational> x = bi({{1, 0, 1}}), y = bi({{0, 1, 1}});
    RatFunc<Rational> r(x * x - y * y, Rational(2) * (x - y));
    CHECK(r.den() == bi({{0, 0, 1}}));
    CHECK(r.num() == Rational(1, 2) * (x + y));
    RatFunc<Rational> s = RatFunc<Rational>(x) / RatFunc<Rational>(y) + RatFunc<Rational>(y) / RatFunc<Rational>(x);
    CHECK(s * RatFunc<Rational>(x * y) == RatFunc<Rational>(x * x + y * y));
}

TEST_CASE("cyclotomic arithmetic") {
    CHECK(cyclotomic_polynomial(4) == qpoly({1, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == qpoly({1, 0, -1, 0, 1}));
    auto f = cyclotomic_field(12);
    CycloElem z = CycloElem::zeta_power(f, 1);
    CycloElem acc(1);
    for (int k = 0; k < 12; ++k) acc *= z;
    CHECK(acc == CycloElem(1));
    CHECK(CycloElem::zeta_power(f, 6) == CycloElem(-1));
    CycloElem w = z + CycloElem(Rational(3, 2));
    CHECK(w * w.inverse() == CycloElem(1));
    CHECK(std::abs(z.to_complex() - std::polar(1.0, M_PI / 6)) < 1e-14);
    BiPoly<CycloElem> p(2);
    p.add_term({1, 0}, z);
    p.add_term({0, 1}, CycloElem(1));
    RatFunc<CycloElem> r(p * p, p);
    CHECK(r.is_polynomial());
}

TEST_CASE("certified roots and rational recovery") {
    QPoly p = qpoly({-2, 0, 1}) * qpoly({-1, 3});  // (x^2-2)(3x-1)
    auto roots = certified_roots(p);
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots) CHECK(r.radius < BigFloat("1e-30"));
    auto rat = rational_roots(p * qpoly({5, 2}) * qpoly({5, 2}));
    REQUIRE(rat.size() == 2);
    CHECK(rat[0] == Rational(-5, 2));
    CHECK(rat[1] == Rational(1, 3));
    UPoly<ExactComplex> g({ExactComplex(1), ExactComplex(0), ExactComplex(1)});
    auto gr = certified_roots(g);
    REQUIRE(gr.size() == 2);
    ExactComplex c = rationalize(gr[0].value, 1000);
    CHECK((c == ExactComplex::i() || c == -ExactComplex::i()));
}
