#pragma once

#include <random>

#include "hyp/expfun.hpp"

namespace hyp::testing {

inline ExactComplex random_gaussian(std::mt19937_64& rng, int range = 3) {
    std::uniform_int_distribution<int> d(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    return {make_rational(d(rng), den(rng)), make_rational(d(rng), den(rng))};
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree, int range = 3) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<ExactComplex> c;
    int n = deg(rng);
    for (int k = 0; k <= n; ++k) c.push_back(random_gaussian(rng, range));
    return Poly(std::move(c));
}

/// Small random ExpPoly; exponents have integer coefficients so values stay moderate.
inline ExpPoly random_exppoly(std::mt19937_64& rng, int max_degree, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> ec(-1, 1);
    std::uniform_int_distribution<int> edeg(0, max_degree);
    ExpPoly f;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        std::vector<ExactComplex> e;
        int d = edeg(rng);
        for (int j = 0; j <= d; ++j) e.emplace_back(ec(rng));
        f += ExpPoly::term(random_poly(rng, max_degree), Poly(std::move(e)));
    }
    return f;
}

inline Poly xi() { return Poly::x(); }

inline Poly poly(std::initializer_list<long> c) {
    std::vector<ExactComplex> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

}  // namespace hyp::testing

#include "hyp/nevanlinna.hpp"

namespace hyp::testing {

/// Linear form sum c_i z_i.
inline HomDivisor linear(std::initializer_list<long> coeffs) {
    int n = static_cast<int>(coeffs.size());
    MPoly<ExactComplex> p(n);
    int i = 0;
    for (long c : coeffs) {
        Exponents e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i++)] = 1;
        p.add_term(e, ExactComplex(c));
    }
    return {p, 1};
}

inline ProjCurve curve(std::initializer_list<ExpPoly> comps) { return {std::vector<ExpPoly>(comps)}; }

}  // namespace hyp::testing

#include "hyp/borel.hpp"

namespace hyp::testing {

/// Random single-class identity: p1 = kappa p2 + c0 and form (x - kappa y) G(x, y), so
/// realize() vanishes exactly. Some coefficients are split over two terms sharing i.
inline ExpSum random_case2(std::mt19937_64& rng, int max_degree = 2, int max_M = 4) {
    std::uniform_int_distribution<int> mdist(1, max_M);
    std::uniform_int_distribution<int> coin(0, 2);
    ExpSum s;
    s.M = mdist(rng);
    do s.p2 = random_poly(rng, max_degree); while (s.p2.degree() < 1);
    ExactComplex kappa;
    do kappa = random_gaussian(rng); while (kappa.is_zero());
    s.p1 = kappa * s.p2 + Poly(random_gaussian(rng));
    std::vector<ExactComplex> g;
    do {
        g.clear();
        for (int i = 0; i < s.M; ++i) g.push_back(random_gaussian(rng));
    } while (std::all_of(g.begin(), g.end(), [](const ExactComplex& c) { return c.is_zero(); }));
    for (int i = 0; i <= s.M; ++i) {
        ExactComplex c = (i > 0 ? g[static_cast<size_t>(i - 1)] : ExactComplex(0)) -
                         (i < s.M ? kappa * g[static_cast<size_t>(i)] : ExactComplex(0));
        if (c.is_zero()) continue;
        if (coin(rng) == 0) {
            ExactComplex a = random_gaussian(rng);
            s.terms.push_back({a, i, s.M - i, i});
            c -= a;
        }
        s.terms.push_back({c, i, s.M - i, i});
    }
    return s;
}

}  // namespace hyp::testing
