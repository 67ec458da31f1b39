#include <random>

#include "doctest.h"
#include "hyp/planeconf.hpp"

using namespace hyp;

namespace {

struct Mono {
    long c;
    int a, b, d;
};

PlaneCurve C(std::initializer_list<Mono> ms) {
    Poly3 p(3);
    for (const auto& m : ms) p.add_term({m.a, m.b, m.d}, Rational(m.c));
    return make_curve(p);
}

std::array<Rational, 3> pt(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

Poly3 random_form(std::mt19937_64& rng, int d, int range = 4) {
    std::uniform_int_distribution<int> dist(-range, range);
    Poly3 p(3);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) p.add_term({i, j, d - i - j}, Rational(dist(rng)));
    return p;
}

Matrix3 random_matrix(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-2, 2);
    for (;;) {
        Matrix3 m;
        for (auto& r : m)
            for (auto& v : r) v = Rational(dist(rng));
        Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (sgn(det) != 0) return m;
    }
}

std::array<Rational, 3> normalized(std::array<Rational, 3> p) {
    for (const auto& c : p)
        if (sgn(c) != 0) {
            Rational inv = 1 / c;
            for (auto& x : p) x *= inv;
            break;
        }
    return p;
}

// Sorted (point, multiplicity) list of exact points, with the count of numeric points.
std::pair<std::vector<std::pair<std::array<Rational, 3>, int>>, int> summary(const Intersection& in) {
    std::vector<std::pair<std::array<Rational, 3>, int>> exact;
    int numeric = 0;
    for (const auto& p : in.points) {
        if (p.exact)
            exact.push_back({p.coords, p.multiplicity});
        else
            numeric += p.multiplicity;
    }
    std::sort(exact.begin(), exact.end());
    return {exact, numeric};
}

}  // namespace

TEST_CASE("intersection_points examples") {
    PlaneCurve x0 = C({{1, 1, 0, 0}}), x1 = C({{1, 0, 1, 0}});
    Intersection a = intersection_points(x0, x1);
    REQUIRE(a.points.size() == 1);
    CHECK(a.points[0].coords == pt(0, 0, 1));
    CHECK(a.points[0].multiplicity == 1);

    PlaneCurve conic = C({{1, 1, 0, 1}, {-1, 0, 2, 0}});  // x0 x2 - x1^2
    Intersection b = intersection_points(conic, x1);
    REQUIRE(b.points.size() == 2);
    CHECK(b.points[0].coords == pt(0, 0, 1));
    CHECK(b.points[1].coords == pt(1, 0, 0));
    CHECK(b.points[0].multiplicity == 1);
    CHECK(b.points[1].multiplicity == 1);

    PlaneCurve tangent = C({{1, 0, 1, 1}, {-1, 2, 0, 0}});  // x1 x2 - x0^2
    Intersection c = intersection_points(tangent, x1);
    REQUIRE(c.points.size() == 1);
    CHECK(c.points[0].coords == pt(0, 0, 1));
    CHECK(c.points[0].multiplicity == 2);
    CHECK(c.total_multiplicity == 2);

    CHECK_THROWS_AS(intersection_points(conic, conic), PreconditionError);
}

TEST_CASE("irrational intersection points are numeric") {
    // x0^2 - 2 x2^2 against x1: (sqrt2 : 0 : 1) and (-sqrt2 : 0 : 1).
    PlaneCurve q = C({{1, 2, 0, 0}, {-2, 0, 0, 2}}), x1 = C({{1, 0, 1, 0}});
    Intersection in = intersection_points(q, x1);
    REQUIRE(in.points.size() == 2);
    for (const auto& p : in.points) {
        CHECK_FALSE(p.exact);
        double r = static_cast<double>(p.approx[0].real() / p.approx[2].real());
        CHECK(std::abs(std::abs(r) - std::sqrt(2.0)) < 1e-12);
    }
}

TEST_CASE("smoothness") {
    CHECK(smoothness(C({{1, 3, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 3}})).smooth);  // Fermat cubic
    // Nodal cubic x1^2 x2 - x0^2 (x0 + x2), node at (0:0:1).
    SmoothnessReport node = smoothness(C({{1, 0, 2, 1}, {-1, 3, 0, 0}, {-1, 2, 0, 1}}));
    CHECK_FALSE(node.smooth);
    REQUIRE(node.singular_points.size() == 1);
    CHECK(node.singular_points[0].coords == pt(0, 0, 1));
    // The singular form from the exclusion example, singular at (0:1:0).
    SmoothnessReport s = smoothness(C({{1, 3, 0, 0}, {-1, 0, 1, 2}, {-1, 0, 0, 3}}));
    CHECK_FALSE(s.smooth);
    REQUIRE(s.singular_points.size() == 1);
    CHECK(s.singular_points[0].coords == pt(0, 1, 0));
    CHECK(smoothness(C({{1, 1, 0, 0}})).smooth);
}

TEST_CASE("validate") {
    Poly3 p(3);
    p.add_term({1, 1, 0}, Rational(1));
    p.add_term({0, 0, 1}, Rational(1));
    CHECK_THROWS_AS(make_curve(p), PreconditionError);
    PlaneCurve sq = C({{1, 2, 0, 0}});  // x0^2
    CHECK_THROWS_AS(validate(sq), PreconditionError);
    CHECK_NOTHROW(validate(C({{1, 1, 0, 1}, {-1, 0, 2, 0}})));
    PlaneCurve l = C({{1, 1, 0, 0}});
    CHECK_FALSE(coprime(l, C({{1, 2, 0, 0}, {1, 1, 1, 0}})));  // x0 (x0 + x1)
    CHECK(coprime(l, C({{1, 0, 1, 0}})));
}

TEST_CASE("normal_crossings examples") {
    PlaneCurve x0 = C({{1, 1, 0, 0}}), x1 = C({{1, 0, 1, 0}}), x2 = C({{1, 0, 0, 1}});
    NormalCrossingsReport ok = normal_crossings({{x0, x1, x2}});
    CHECK(ok.pass);
    CHECK(ok.failures.empty());

    PlaneCurve diff = C({{1, 0, 1, 0}, {-1, 0, 0, 1}});
    NormalCrossingsReport triple = normal_crossings({{x1, x2, diff}});
    CHECK_FALSE(triple.pass);
    REQUIRE(triple.failures.size() == 1);
    CHECK(triple.failures[0] == "point on all three curves: (1:0:0)");

    PlaneCurve tangent = C({{1, 0, 1, 1}, {-1, 2, 0, 0}});
    NormalCrossingsReport t = normal_crossings({{tangent, x1, C({{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}})}});
    CHECK_FALSE(t.pass);
    REQUIRE_FALSE(t.failures.empty());
    CHECK(t.failures[0] == "C1 and C2 meet with multiplicity 2 at (0:0:1)");
}

TEST_CASE("case engine examples") {
    EngineReport r333 = two_puncture_case_engine({3, 3, 3}, 10);
    CHECK(r333.survivors.empty());
    CHECK(r333.cases == r333.verdicts.size());
    for (const auto& v : r333.verdicts) {
        CHECK_FALSE(v.possible);
        CHECK_FALSE(v.certificate.empty());
    }

    EngineReport r223 = two_puncture_case_engine({2, 2, 3}, 10);
    REQUIRE_FALSE(r223.survivors.empty());
    for (const auto& v : r223.survivors) {
        CHECK(v.c.d0 == 1);
        for (const auto& s : v.solutions) CHECK(s == std::array<int, 2>{1, 1});
        int middle = -1;
        for (int c : v.c.p_curves)
            if (std::find(v.c.q_curves.begin(), v.c.q_curves.end(), c) != v.c.q_curves.end()) middle = c;
        REQUIRE(middle >= 0);
        CHECK(r223.degrees[static_cast<size_t>(middle)] == 2);
    }

    CHECK(star_condition(1, 1, 1));
    CHECK_FALSE(star_condition(2, 2, 1));
    CHECK(star_condition(3, 2, 2));
    CHECK(fulton_bound(1, 1, 1));
    CHECK_FALSE(fulton_bound(3, 2, 2));
    CHECK_THROWS_AS(two_puncture_case_engine({2, 2, 2}, 3), PreconditionError);
    CHECK_NOTHROW(two_puncture_case_engine({2, 2, 2}, 3, true));
}

TEST_CASE("quadric_line_exclusion examples") {
    PlaneCurve c1 = C({{1, 0, 3, 0}, {-1, 0, 0, 3}, {-1, 2, 0, 1}});  // x1^3 - x2^3 - x0^2 x2
    PlaneCurve c2 = C({{1, 1, 1, 0}, {-1, 0, 0, 2}});                // x0 x1 - x2^2
    PlaneCurve c3 = C({{1, 3, 0, 0}, {-1, 0, 2, 1}, {-1, 0, 0, 3}}); // x0^3 - x1^2 x2 - x2^3
    REQUIRE(smoothness(c1).smooth);
    REQUIRE(smoothness(c3).smooth);
    ExclusionReport rep = quadric_line_exclusion({{c1, c2, c3}});
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.lines.size() == 1);
    const ExcludedLine& l = rep.lines[0];
    CHECK(l.exact);
    CHECK(l.line == pt(0, 0, 1));
    CHECK(l.to_string() == "x2 = 0");
    CHECK(l.quadric == 1);
    CHECK(l.touch[0].coords == pt(1, 0, 0));
    CHECK(l.touch[1].coords == pt(0, 1, 0));

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 3; ++trial) {
        Configuration conf{{make_curve(random_form(rng, 2)), make_curve(random_form(rng, 3)),
                            make_curve(random_form(rng, 3))}};
        ExclusionReport r = quadric_line_exclusion(conf, static_cast<std::uint64_t>(trial));
        CHECK(r.pass);
        CHECK_FALSE(r.vacuous);
    }

    PlaneCurve f = C({{1, 3, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 3}});
    ExclusionReport vac = quadric_line_exclusion({{f, f, f}});
    CHECK(vac.pass);
    CHECK(vac.vacuous);

    PlaneCurve quintic = C({{1, 5, 0, 0}, {1, 0, 5, 0}, {1, 0, 0, 5}});
    CHECK_THROWS_WITH_AS(quadric_line_exclusion({{c2, c1, quintic}}),
                         doctest::Contains("search unsupported at this degree"), UnsupportedError);
}

TEST_CASE("property: Bezout and projective invariance") {
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<int> deg(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        PlaneCurve a = make_curve(random_form(rng, deg(rng)));
        PlaneCurve b = make_curve(random_form(rng, deg(rng)));
        if (a.poly.is_zero() || b.poly.is_zero() || !coprime(a, b)) continue;
        Intersection in = intersection_points(a, b);
        CHECK(in.total_multiplicity == a.degree * b.degree);
        int sum = 0;
        for (const auto& p : in.points) sum += p.multiplicity;
        CHECK(sum == a.degree * b.degree);

        // x -> M x maps the point set of (a o M, b o M) onto that of (a, b) via M.
        Matrix3 M = random_matrix(rng);
        Intersection moved = intersection_points(make_curve(transform(a.poly, M)), make_curve(transform(b.poly, M)),
                                                 static_cast<std::uint64_t>(trial));
        CHECK(moved.total_multiplicity == in.total_multiplicity);
        Intersection mapped = moved;
        for (auto& p : mapped.points) {
            if (!p.exact) continue;
            std::array<Rational, 3> q;
            for (size_t i = 0; i < 3; ++i) {
                q[i] = 0;
                for (size_t j = 0; j < 3; ++j) q[i] += M[i][j] * p.coords[j];
            }
            p.coords = normalized(q);
        }
        CHECK(summary(mapped) == summary(in));
    }
}

TEST_CASE("property: planted intersections") {
    // Products of rational lines meet in known rational points with known multiplicities.
    std::mt19937_64 rng(1212);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        auto line = [&] {
            Poly3 l(3);
            while (l.is_zero() || l.total_degree() != 1) {
                l = Poly3(3);
                l.add_term({1, 0, 0}, Rational(dist(rng)));
                l.add_term({0, 1, 0}, Rational(dist(rng)));
                l.add_term({0, 0, 1}, Rational(dist(rng)));
            }
            return l;
        };
        Poly3 l1 = line(), l2 = line(), l3 = line();
        PlaneCurve a = make_curve(l1 * l1);  // double line, not squarefree but coprime to l2 l3
        PlaneCurve b = make_curve(l2 * l3);
        if (!coprime(a, b)) continue;
        Intersection in = intersection_points(a, b);
        CHECK(in.total_multiplicity == 4);
        for (const auto& p : in.points) {
            CHECK(p.exact);
            std::vector<Rational> x(p.coords.begin(), p.coords.end());
            CHECK(sgn(l1(x)) == 0);
            CHECK(sgn((l2 * l3)(x)) == 0);
        }
    }
}

TEST_CASE("property: engine verdicts recheck") {
    std::mt19937_64 rng(3131);
    std::uniform_int_distribution<int> deg(2, 5);
    for (int trial = 0; trial < 12; ++trial) {
        std::array<int, 3> d{deg(rng), deg(rng), deg(rng)};
        if (std::max({d[0], d[1], d[2]}) < 3) d[0] = 3;
        EngineReport rep = two_puncture_case_engine(d, 10);
        for (const auto& v : rep.verdicts) {
            CHECK(recheck(v, d));
            if (!v.possible) continue;
            for (const auto& s : v.solutions) CHECK(fulton_bound(v.c.d0, s[0], s[1]));
        }
        bool all3 = d[0] >= 3 && d[1] >= 3 && d[2] >= 3;
        if (all3) CHECK(rep.survivors.empty());
        for (const auto& v : rep.survivors) CHECK(v.c.d0 == 1);
    }
}
