#include "hyp/expfun.hpp"

#include <cmath>
#include <limits>

namespace hyp {

namespace {

// exp() of a double overflows above this and underflows to zero below the negative.
constexpr double kExpMax = 709.78;

Poly strip_constant(const Poly& p, ExactComplex& absorbed) {
    if (p.is_zero()) return p;
    std::vector<ExactComplex> c = p.coeffs();
    absorbed += c[0];
    c[0] = ExactComplex(0);
    return Poly(std::move(c));
}

}  // namespace

// ---------------------------------------------------------------- ExpScalar

ExpScalar ExpScalar::exp_term(const ExactComplex& r, const ExactComplex& c) {
    ExpScalar s;
    s.add(c, r);
    return s;
}

void ExpScalar::add(const ExactComplex& c, const ExactComplex& r) {
    if (r.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(c, r);
    if (!inserted) {
        it->second += r;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool ExpScalar::is_plain() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

ExactComplex ExpScalar::plain_value() const {
    if (!is_plain()) throw PreconditionError("scalar carries a transcendental exponential factor");
    return terms_.empty() ? ExactComplex(0) : terms_.begin()->second;
}

ExpScalar ExpScalar::inverse() const {
    if (terms_.size() != 1) throw UnsupportedError("inverse of a multi-term exponential scalar");
    const auto& [c, r] = *terms_.begin();
    return exp_term(r.inverse(), -c);
}

std::complex<double> ExpScalar::to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [c, r] : terms_) acc += r.to_complex() * std::exp(c.to_complex());
    return acc;
}

ExpScalar ExpScalar::operator-() const {
    ExpScalar s = *this;
    for (auto& [c, r] : s.terms_) r = -r;
    return s;
}

ExpScalar& ExpScalar::operator+=(const ExpScalar& o) {
    for (const auto& [c, r] : o.terms_) add(c, r);
    return *this;
}

ExpScalar& ExpScalar::operator-=(const ExpScalar& o) {
    for (const auto& [c, r] : o.terms_) add(c, -r);
    return *this;
}

ExpScalar operator*(const ExpScalar& a, const ExpScalar& b) {
    ExpScalar s;
    for (const auto& [ca, ra] : a.terms_)
        for (const auto& [cb, rb] : b.terms_) s.add(ca + cb, ra * rb);
    return s;
}

// ---------------------------------------------------------------- ExpPoly

ExpPoly::ExpPoly(const Poly& p) {
    if (!p.is_zero()) terms_.push_back({p, ExactComplex(0), Poly()});
}

ExpPoly ExpPoly::term(const Poly& coeff, const Poly& exponent, const ExactComplex& expconst) {
    return canonicalize({{coeff, expconst, exponent}});
}

ExpPoly ExpPoly::from_terms(const std::vector<Term>& terms) { return canonicalize(terms); }

ExpPoly canonicalize(const std::vector<ExpPoly::Term>& terms) {
    std::map<std::pair<Poly, ExactComplex>, Poly> acc;
    for (const auto& t : terms) {
        ExactComplex c = t.expconst;
        Poly e = strip_constant(t.exponent, c);
        acc[{e, c}] += t.coeff;
    }
    std::vector<ExpPoly::Term> out;
    for (auto& [key, coeff] : acc)
        if (!coeff.is_zero()) out.push_back({coeff, key.second, key.first});
    ExpPoly f;
    f.terms_ = std::move(out);
    return f;
}

bool ExpPoly::is_polynomial() const {
    for (const auto& t : terms_)
        if (!t.exponent.is_zero() || !t.expconst.is_zero()) return false;
    return true;
}

bool ExpPoly::is_monomial_unit() const {
    return terms_.size() == 1 && terms_[0].coeff.degree() == 0;
}

int ExpPoly::max_exponent_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exponent.degree());
    return d;
}

std::map<Poly, UPoly<ExpScalar>> ExpPoly::by_exponent() const {
    std::map<Poly, UPoly<ExpScalar>> out;
    for (const auto& t : terms_) {
        std::vector<ExpScalar> c;
        c.reserve(t.coeff.coeffs().size());
        for (const auto& q : t.coeff.coeffs()) c.push_back(ExpScalar::exp_term(q, t.expconst));
        out[t.exponent] += UPoly<ExpScalar>(std::move(c));
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
    std::vector<ExpPoly::Term> t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return canonicalize(t);
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    std::vector<ExpPoly::Term> t;
    t.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            t.push_back({x.coeff * y.coeff, x.expconst + y.expconst, x.exponent + y.exponent});
    return canonicalize(t);
}

ExpPoly ExpPoly::pow(unsigned e) const {
    ExpPoly result(1);
    ExpPoly b = *this;
    while (e > 0) {
        if (e & 1U) result *= b;
        e >>= 1U;
        if (e > 0) b *= b;
    }
    return result;
}

// ---------------------------------------------------------------- numerics

double ScaledValue::log_abs() const {
    double m = std::abs(mantissa);
    if (m == 0.0) return -std::numeric_limits<double>::infinity();
    return log_scale + std::log(m);
}

namespace {

std::vector<std::complex<double>> to_double(const Poly& p) {
    std::vector<std::complex<double>> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.to_complex());
    return v;
}

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace

CompiledExpPoly::CompiledExpPoly(const ExpPoly& f) {
    for (const auto& t : f.terms()) {
        Term ct;
        ct.coeff = to_double(t.coeff);
        ct.exponent = to_double(t.exponent);
        if (ct.exponent.empty()) ct.exponent.emplace_back(0.0, 0.0);
        ct.exponent[0] = t.expconst.to_complex();
        terms_.push_back(std::move(ct));
    }
}

ScaledValue CompiledExpPoly::eval_scaled(std::complex<double> z) const {
    ScaledValue v;
    if (terms_.empty()) return v;
    std::vector<std::complex<double>> q(terms_.size()), e(terms_.size());
    double scale = -std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < terms_.size(); ++k) {
        q[k] = horner(terms_[k].coeff, z);
        e[k] = horner(terms_[k].exponent, z);
        scale = std::max(scale, e[k].real());
    }
    std::complex<double> m{0.0, 0.0};
    for (size_t k = 0; k < terms_.size(); ++k) m += q[k] * std::exp(e[k] - scale);
    v.log_scale = scale;
    v.mantissa = m;
    return v;
}

std::complex<double> evaluate(const ExpPoly& f, std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& t : f.terms()) {
        std::complex<double> e = t.expconst.to_complex() + horner(to_double(t.exponent), z);
        if (std::abs(e.real()) > kExpMax)
            throw OverflowError("exponent real part " + std::to_string(e.real()) +
                                " outside the floating-point range");
        acc += horner(to_double(t.coeff), z) * std::exp(e);
    }
    return acc;
}

// ---------------------------------------------------------------- algebra

ExpPoly differentiate(const ExpPoly& f) {
    std::vector<ExpPoly::Term> t;
    for (const auto& x : f.terms())
        t.push_back({x.coeff.derivative() + x.coeff * x.exponent.derivative(), x.expconst,
                     x.exponent});
    return canonicalize(t);
}

ExpPoly combine(CombineOp op, const ExpPoly& f, const ExpPoly& g) {
    switch (op) {
        case CombineOp::add:
            return f + g;
        case CombineOp::multiply:
            return f * g;
        case CombineOp::scale:
            if (!g.is_zero() && (!g.is_polynomial() || g.terms()[0].coeff.degree() > 0))
                throw PreconditionError("scale expects a constant factor");
            return f * g;
    }
    return {};
}

ExpPoly combine(CombineOp op, const ExpPoly& f, const ExactComplex& scalar) {
    return combine(op, f, ExpPoly(scalar));
}

bool is_zero(const ExpPoly& f) {
    // Canonical terms have distinct (exponent, tag) keys and nonzero coefficients,
    // so by linear independence of exp(P + c) the sum vanishes iff no term remains.
    return canonicalize(f.terms()).is_zero();
}

ExpPoly determinant(const std::vector<std::vector<ExpPoly>>& m) {
    size_t n = m.size();
    if (n == 0) return ExpPoly(1);
    for (const auto& row : m)
        if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
    if (n == 1) return m[0][0];
    ExpPoly acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<ExpPoly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<ExpPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        ExpPoly term = m[0][j] * determinant(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

ExpPoly wronskian(const std::vector<ExpPoly>& fs) {
    size_t n = fs.size();
    std::vector<std::vector<ExpPoly>> m(n, std::vector<ExpPoly>(n));
    for (size_t j = 0; j < n; ++j) {
        ExpPoly d = fs[j];
        for (size_t i = 0; i < n; ++i) {
            m[i][j] = d;
            d = differentiate(d);
        }
    }
    return determinant(m);
}

}  // namespace hyp
