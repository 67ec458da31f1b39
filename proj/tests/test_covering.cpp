#include <random>

#include "doctest.h"
#include "hyp/covering.hpp"
#include "support.hpp"

using namespace hyp;
using namespace hyp::testing;

namespace {

CycloRat mono(long c, int i, int j) { return monomial(CycloElem(c), i, j); }
CycloRat zero() { return CycloRat(); }

SymForm form(int M, std::vector<CycloRat> coeffs, FormBasis basis = FormBasis::plain) {
    return {M, basis, std::move(coeffs)};
}

ExpPoly e(long a) { return ExpPoly::exp(poly({0, a})); }

CycloRat random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ex(0, 2);
    std::uniform_int_distribution<int> coin(0, 3);
    auto field = cyclotomic_field(4);
    CycloPoly num(2);
    num.add_term({ex(rng), ex(rng)}, to_cyclo(random_gaussian(rng), field));
    if (coin(rng) == 0) num.add_term({ex(rng), ex(rng)}, to_cyclo(random_gaussian(rng), field));
    if (num.is_zero()) num = CycloPoly::constant(2, CycloElem(1));
    CycloPoly den = CycloPoly::constant(2, CycloElem(1));
    if (coin(rng) == 1) den.add_term({1, 0}, CycloElem(1));  // 1 + z1
    if (coin(rng) == 2) den = CycloPoly::variable(2, 0) * CycloPoly::variable(2, 1);
    return CycloRat(num, den);
}

}  // namespace

TEST_CASE("deck_pullback examples") {
    CyclicCover c2{2};
    SymForm f = form(2, {zero(), mono(1, 0, 0), zero()});
    CHECK(deck_pullback(f, 1, c2) == form(2, {zero(), mono(-1, 0, 0), zero()}));
    CHECK(deck_pullback(f, 0, c2) == f);
    SymForm g = form(2, {zero(), zero(), mono(1, 1, 0)});
    CHECK(deck_pullback(g, 1, c2) == form(2, {zero(), zero(), mono(-1, 1, 0)}));
    // Order three: dz1 picks up zeta_3, not a rational.
    SymForm dz1 = form(1, {zero(), mono(1, 0, 0)});
    SymForm p = deck_pullback(dz1, 1, CyclicCover{3});
    CHECK_FALSE(p.coeffs[1].num().terms().begin()->second.is_rational());
    CHECK_THROWS_AS(deck_pullback(dz1, 3, CyclicCover{3}), PreconditionError);
}

TEST_CASE("norm_form examples") {
    SymForm f = form(2, {zero(), mono(1, 0, 0), zero()});
    CHECK(norm_form(f, CyclicCover{1}) == f);
    CHECK(norm_form(f, CyclicCover{2}) == form(4, {zero(), zero(), mono(-1, 0, 0), zero(), zero()}));
    SymForm dz2 = form(1, {mono(1, 0, 0), zero()});
    CHECK(norm_form(dz2, CyclicCover{2}) == form(2, {mono(1, 0, 0), zero(), zero()}));
    // dz1 over b = 3: product of zeta^0, zeta^1, zeta^2 is 1.
    SymForm dz1 = form(1, {zero(), mono(1, 0, 0)});
    CHECK(norm_form(dz1, CyclicCover{3}) == form(3, {zero(), zero(), zero(), mono(1, 0, 0)}));
}

TEST_CASE("express_log_basis examples") {
    SymForm f = form(2, {zero(), zero(), mono(1, 0, 0)});
    SymForm l = express_log_basis(f);
    CHECK(l.basis == FormBasis::log1);
    CHECK(l.coeffs[2] == mono(1, 2, 0));
    SymForm g = form(2, {zero(), CycloRat(CycloPoly::constant(2, CycloElem(1)), CycloPoly::variable(2, 0)), zero()});
    CHECK(express_log_basis(g).coeffs[1] == mono(1, 0, 0));
    CHECK(express_plain_basis(express_log_basis(g)) == g);
    CHECK_THROWS_AS(express_log_basis(l), PreconditionError);
}

TEST_CASE("push_down examples") {
    SymForm norm = form(4, {zero(), zero(), mono(-1, 0, 0), zero(), zero()});
    SymForm down = push_down(norm, CyclicCover{2});
    // -(1/(4 xi1)) (dxi1)^2 (dxi2)^2
    CycloRat expected(CycloPoly::constant(2, CycloElem(Rational(-1))),
                      CycloPoly::constant(2, CycloElem(Rational(4))) * CycloPoly::variable(2, 0));
    CHECK(down.coeffs[2] == expected);
    SymForm logdown = push_down(express_log_basis(norm), CyclicCover{2});
    CHECK(logdown.coeffs[2] == monomial(CycloElem(make_rational(-1, 4)), 1, 0));

    SymForm any = form(1, {mono(3, 2, 1), mono(1, 1, 0)});
    CHECK(push_down(any, CyclicCover{1}) == any);

    SymForm bad = form(2, {mono(1, 1, 0), zero(), zero()});
    CHECK_THROWS_WITH_AS(push_down(bad, CyclicCover{2}),
                         doctest::Contains("monomial z1 has z1-exponent 1"), PreconditionError);
}

TEST_CASE("annihilation_check examples") {
    SymForm w = form(1, {mono(-1, 1, 0), mono(1, 0, 1)});  // xi2 dxi1 - xi1 dxi2
    CHECK(annihilation_check(w, e(1), e(1)).annihilates);
    SymForm dxi1 = form(1, {zero(), mono(1, 0, 0)});
    CHECK_FALSE(annihilation_check(dxi1, e(1), e(1)).annihilates);
    SymForm p = form(2, {zero(), mono(2, 1, 1), zero()});
    AnnihilationResult r = annihilation_check(p, e(1), e(-1));
    CHECK_FALSE(r.annihilates);
    CHECK(r.residual == ExpPoly(-2));
    CHECK_THROWS_AS(annihilation_check(w, ExpPoly(xi()), e(1)), PreconditionError);
    // Denominator xi1 - xi2 vanishes on the diagonal curve.
    CycloPoly den = CycloPoly::variable(2, 0) - CycloPoly::variable(2, 1);
    SymForm q = form(1, {CycloRat(CycloPoly::constant(2, CycloElem(1)), den), zero()});
    CHECK_THROWS_AS(annihilation_check(q, e(1), e(1)), PreconditionError);
}

TEST_CASE("property: norm forms are invariant with degree b m") {
    std::mt19937_64 rng(505);
    std::uniform_int_distribution<int> mdist(1, 2), bdist(1, 3), basis(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        int m = mdist(rng), b = bdist(rng);
        SymForm f{m, basis(rng) ? FormBasis::log1 : FormBasis::plain, {}};
        for (int i = 0; i <= m; ++i) f.coeffs.push_back(random_coeff(rng));
        CyclicCover cover{b};
        SymForm n = norm_form(f, cover);
        CHECK(n.M == b * m);
        for (int k = 0; k < b; ++k) CHECK(deck_pullback(n, k, cover) == n);
        SymForm down = push_down(n, cover);
        CHECK(pull_up(down, cover) == n);
    }
}

TEST_CASE("property: annihilation transfers through the double cover") {
    // omega = z2 dz1 - c z1 dz2 kills h = (e^{a eta}, e^{d eta}) iff a = c d.
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<int> dist(1, 4);
    CyclicCover cover{2};
    for (int trial = 0; trial < 20; ++trial) {
        long a = dist(rng), d = dist(rng);
        bool planted = trial % 2 == 0;
        Rational c = planted ? make_rational(a, d) : make_rational(a + 1, d);
        for (FormBasis basis : {FormBasis::plain, FormBasis::log1}) {
            SymForm omega{1, FormBasis::plain,
                          {monomial(CycloElem(Rational(-c)), 1, 0), mono(1, 0, 1)}};
            if (basis == FormBasis::log1) omega = express_log_basis(omega);
            SymForm up = norm_form(omega, cover);
            SymForm down = push_down(up, cover);
            bool up_kills = annihilation_check(up, e(a), e(d)).annihilates;
            bool down_kills = annihilation_check(down, e(2 * a), e(d)).annihilates;
            CHECK(up_kills == planted);
            CHECK(down_kills == up_kills);
        }
    }
}
