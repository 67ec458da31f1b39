#include "hyp/covering.hpp"

#include <numeric>

namespace hyp {

namespace {

template <typename Fn>
CycloPoly map_terms(const CycloPoly& p, Fn fn) {
    CycloPoly out(2);
    for (const auto& [e, c] : p.terms()) {
        auto [e2, c2] = fn(e, c);
        out.add_term(e2, c2);
    }
    return out;
}

template <typename Fn>
CycloRat map_rat(const CycloRat& r, Fn fn) {
    return CycloRat(map_terms(r.num(), fn), map_terms(r.den(), fn));
}

CycloRat scalar(const CycloElem& c) { return CycloRat(CycloPoly::constant(2, c)); }

std::string monomial_string(const Exponents& e) {
    std::string s;
    for (int v = 0; v < 2; ++v) {
        int k = e[static_cast<size_t>(v)];
        if (k == 0) continue;
        if (!s.empty()) s += "*";
        s += "z" + std::to_string(v + 1);
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

std::string to_string(FormBasis b) { return b == FormBasis::plain ? "plain" : "log1"; }

void validate(const SymForm& form) {
    if (form.M < 0) throw PreconditionError("form degree must be nonnegative");
    if (form.coeffs.size() != static_cast<size_t>(form.M) + 1)
        throw PreconditionError("a degree-M form needs M+1 coefficients");
}

void validate(const CyclicCover& cover) {
    if (cover.b < 1) throw PreconditionError("branching order b must be at least 1");
}

std::shared_ptr<const CycloField> cover_field(const CyclicCover& cover) {
    validate(cover);
    return cyclotomic_field(std::lcm(4, cover.b));
}

CycloRat monomial(const CycloElem& c, int i, int j) {
    CycloPoly p(2);
    p.add_term({i, j}, c);
    return CycloRat(p);
}

SymForm lift(const SymForm& form, const CyclicCover& cover) {
    validate(form);
    auto field = cover_field(cover);
    SymForm out = form;
    for (auto& c : out.coeffs)
        c = map_rat(c, [&](const Exponents& e, const CycloElem& v) { return std::pair{e, v.embed(field)}; });
    return out;
}

SymForm sym_product(const SymForm& a, const SymForm& b) {
    validate(a);
    validate(b);
    if (a.basis != b.basis) throw PreconditionError("symmetric product needs a common basis");
    SymForm out{a.M + b.M, a.basis, std::vector<CycloRat>(static_cast<size_t>(a.M + b.M) + 1)};
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            if (!b.coeffs[j].is_zero()) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

SymForm deck_pullback(const SymForm& form, int k, const CyclicCover& cover) {
    validate(cover);
    if (k < 0 || k >= cover.b) throw PreconditionError("deck index k must lie in [0, b)");
    SymForm out = lift(form, cover);
    if (k == 0) return out;
    auto field = cover_field(cover);
    long step = static_cast<long>(field->n / cover.b) * k;  // zeta_b^k = zeta_n^step
    for (size_t i = 0; i < out.coeffs.size(); ++i) {
        CycloRat c = map_rat(out.coeffs[i], [&](const Exponents& e, const CycloElem& v) {
            return std::pair{e, v * CycloElem::zeta_power(field, step * e[0])};
        });
        if (form.basis == FormBasis::plain)
            c *= scalar(CycloElem::zeta_power(field, step * static_cast<long>(i)));
        out.coeffs[i] = std::move(c);
    }
    return out;
}

SymForm norm_form(const SymForm& form, const CyclicCover& cover) {
    SymForm acc = deck_pullback(form, 0, cover);
    for (int k = 1; k < cover.b; ++k) acc = sym_product(acc, deck_pullback(form, k, cover));
    return acc;
}

SymForm express_log_basis(const SymForm& form) {
    validate(form);
    if (form.basis != FormBasis::plain) throw PreconditionError("form is not in the plain basis");
    SymForm out = form;
    out.basis = FormBasis::log1;
    for (size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] *= monomial(CycloElem(1), static_cast<int>(i), 0);
    return out;
}

SymForm express_plain_basis(const SymForm& form) {
    validate(form);
    if (form.basis != FormBasis::log1) throw PreconditionError("form is not in the log basis");
    SymForm out = form;
    out.basis = FormBasis::plain;
    for (size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = out.coeffs[i] / monomial(CycloElem(1), static_cast<int>(i), 0);
    return out;
}

SymForm push_down(const SymForm& form, const CyclicCover& cover) {
    SymForm up = lift(form, cover);
    bool plain = up.basis == FormBasis::plain;
    if (plain) up = express_log_basis(up);
    int b = cover.b;
    for (size_t i = 0; i < up.coeffs.size(); ++i) {
        for (const CycloPoly* p : {&up.coeffs[i].num(), &up.coeffs[i].den()})
            for (const auto& [e, c] : p->terms())
                if (e[0] % b != 0)
                    throw PreconditionError("coefficient " + std::to_string(i) + " is not invariant: monomial " +
                                            monomial_string(e) + " has z1-exponent " + std::to_string(e[0]) +
                                            ", not a multiple of b = " + std::to_string(b));
        CycloRat c = map_rat(up.coeffs[i], [b](const Exponents& e, const CycloElem& v) {
            return std::pair{Exponents{e[0] / b, e[1]}, v};
        });
        Rational w(1);
        for (size_t k = 0; k < i; ++k) w /= b;
        up.coeffs[i] = c * scalar(CycloElem(w));
    }
    return plain ? express_plain_basis(up) : up;
}

SymForm pull_up(const SymForm& form, const CyclicCover& cover) {
    SymForm down = lift(form, cover);
    bool plain = down.basis == FormBasis::plain;
    if (plain) down = express_log_basis(down);
    int b = cover.b;
    for (size_t i = 0; i < down.coeffs.size(); ++i) {
        CycloRat c = map_rat(down.coeffs[i], [b](const Exponents& e, const CycloElem& v) {
            return std::pair{Exponents{e[0] * b, e[1]}, v};
        });
        Rational w(1);
        for (size_t k = 0; k < i; ++k) w *= b;
        down.coeffs[i] = c * scalar(CycloElem(w));
    }
    return plain ? express_plain_basis(down) : down;
}

AnnihilationResult annihilation_check(const SymForm& form, const ExpPoly& g1, const ExpPoly& g2) {
    validate(form);
    if (!g1.is_monomial_unit() || !g2.is_monomial_unit())
        throw PreconditionError("g1 and g2 must be nonvanishing units c exp(P)");
    // Common denominator D; numerators P_i = coeff_i * D.
    CycloPoly D = CycloPoly::constant(2, CycloElem(1));
    for (const auto& c : form.coeffs) {
        if (c.is_zero()) continue;
        CycloPoly g = gcd(D, c.den());
        D = D * exact_div(c.den(), g);
    }
    auto conv = [](const CycloElem& c) {
        ExactComplex z;
        if (!to_gaussian(c, z)) throw UnsupportedError("coefficient " + c.to_string() + " is not in Q(i)");
        return ExpPoly(z);
    };
    std::vector<ExpPoly> values{g1, g2};
    AnnihilationResult res;
    res.denominator = D.eval_as<ExpPoly>(values, conv, ExpPoly());
    if (is_zero(res.denominator)) throw PreconditionError("denominator vanishes identically on the curve");
    ExpPoly w1 = form.basis == FormBasis::plain ? differentiate(g1)
                                                : ExpPoly(g1.terms()[0].exponent.derivative());
    ExpPoly w2 = differentiate(g2);
    for (size_t i = 0; i < form.coeffs.size(); ++i) {
        const CycloRat& c = form.coeffs[i];
        if (c.is_zero()) continue;
        CycloPoly num = c.num() * exact_div(D, c.den());
        ExpPoly term = num.eval_as<ExpPoly>(values, conv, ExpPoly());
        term *= w1.pow(static_cast<unsigned>(i)) * w2.pow(static_cast<unsigned>(form.M) - static_cast<unsigned>(i));
        res.residual += term;
    }
    res.annihilates = is_zero(res.residual);
    return res;
}

std::string to_string(const CycloPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!s.empty()) s += " + ";
        std::string c = it->second.to_string();
        std::string m = monomial_string(it->first);
        if (m == "1")
            s += c;
        else if (c == "1")
            s += m;
        else
            s += "(" + c + ")*" + m;
    }
    return s;
}

std::string to_string(const SymForm& form) {
    std::string s;
    const char* d1 = form.basis == FormBasis::plain ? "dz1" : "(dz1/z1)";
    for (size_t i = form.coeffs.size(); i-- > 0;) {
        const CycloRat& c = form.coeffs[i];
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c.num()) + ")";
        if (!c.is_polynomial()) s += "/(" + to_string(c.den()) + ")";
        if (i > 0) s += std::string("*") + d1 + (i > 1 ? "^" + std::to_string(i) : "");
        size_t j = static_cast<size_t>(form.M) - i;
        if (j > 0) s += "*dz2" + (j > 1 ? "^" + std::to_string(j) : "");
    }
    return s.empty() ? "0" : s;
}

}  // namespace hyp
