#pragma once

#include "hyp/mpoly.hpp"
#include "hyp/upoly.hpp"

namespace hyp {

/// Bivariate polynomial over a field, variables (x, y) with y the main variable.
template <typename F>
using BiPoly = MPoly<F>;

template <typename F>
using Nested = UPoly<UPoly<F>>;

template <typename F>
Nested<F> to_nested(const BiPoly<F>& p) {
    std::vector<std::vector<F>> rows;
    for (const auto& [e, c] : p.terms()) {
        auto y = static_cast<size_t>(e[1]);
        auto x = static_cast<size_t>(e[0]);
        if (rows.size() <= y) rows.resize(y + 1);
        if (rows[y].size() <= x) rows[y].resize(x + 1, Arith<F>::zero());
        rows[y][x] = c;
    }
    std::vector<UPoly<F>> coeffs;
    for (auto& r : rows) coeffs.emplace_back(std::move(r));
    return Nested<F>(std::move(coeffs));
}

template <typename F>
BiPoly<F> from_nested(const Nested<F>& n) {
    BiPoly<F> p(2);
    for (int y = 0; y <= n.degree(); ++y) {
        const auto& row = n.coeffs()[static_cast<size_t>(y)];
        for (int x = 0; x <= row.degree(); ++x) p.add_term({x, y}, row.coeffs()[static_cast<size_t>(x)]);
    }
    return p;
}

/// Monic gcd of the F[x]-coefficients.
template <typename F>
UPoly<F> content(const Nested<F>& n) {
    UPoly<F> g;
    for (const auto& c : n.coeffs()) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

template <typename F>
Nested<F> divide_coeffs(const Nested<F>& n, const UPoly<F>& d) {
    std::vector<UPoly<F>> c;
    for (const auto& v : n.coeffs()) c.push_back(exact_div(v, d));
    return Nested<F>(std::move(c));
}

template <typename F>
Nested<F> primitive_part(const Nested<F>& n) {
    if (n.is_zero()) return n;
    return divide_coeffs(n, content(n));
}

/// Pseudo-remainder of a by b in the main variable.
template <typename F>
Nested<F> pseudo_remainder(Nested<F> a, const Nested<F>& b) {
    int db = b.degree();
    const UPoly<F>& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Nested<F> lead_a = Nested<F>::monomial(a.leading(), shift);
        a = Nested<F>(lb) * a - lead_a * b;
    }
    return a;
}

/// Divides by the coefficient of the lexicographically largest monomial.
template <typename F>
BiPoly<F> normalize_leading(const BiPoly<F>& p) {
    if (p.is_zero()) return p;
    return Arith<F>::inverse(p.terms().rbegin()->second) * p;
}

/// Greatest common divisor over F (primitive PRS in F[x][y]), normalized by normalize_leading.
template <typename F>
BiPoly<F> gcd(const BiPoly<F>& a, const BiPoly<F>& b) {
    if (a.is_zero()) return normalize_leading(b);
    if (b.is_zero()) return normalize_leading(a);
    Nested<F> na = to_nested(a), nb = to_nested(b);
    UPoly<F> cont = gcd(content(na), content(nb));
    na = primitive_part(na);
    nb = primitive_part(nb);
    if (na.degree() < nb.degree()) std::swap(na, nb);
    while (!nb.is_zero()) {
        Nested<F> r = pseudo_remainder(na, nb);
        na = std::move(nb);
        nb = primitive_part(r);
    }
    Nested<F> g = na.degree() > 0 ? primitive_part(na) : Nested<F>(UPoly<F>(Arith<F>::one()));
    return normalize_leading(from_nested(Nested<F>(cont) * g));
}

/// Exact quotient a / b; throws PreconditionError when b does not divide a.
template <typename F>
BiPoly<F> exact_div(const BiPoly<F>& a, const BiPoly<F>& b) {
    if (b.is_zero()) throw PreconditionError("bivariate division by zero");
    Nested<F> na = to_nested(a), nb = to_nested(b);
    Nested<F> q;
    while (!na.is_zero() && na.degree() >= nb.degree()) {
        auto [c, r] = divmod(na.leading(), nb.leading());
        if (!r.is_zero()) throw PreconditionError("bivariate division is not exact");
        Nested<F> t = Nested<F>::monomial(c, na.degree() - nb.degree());
        q += t;
        na -= t * nb;
    }
    if (!na.is_zero()) throw PreconditionError("bivariate division is not exact");
    return from_nested(q);
}

/// Reduced quotient of bivariate polynomials; the denominator is normalized by normalize_leading.
template <typename F>
class RatFunc {
public:
    RatFunc() : num_(2), den_(BiPoly<F>::constant(2, Arith<F>::one())) {}
    RatFunc(BiPoly<F> num) : num_(std::move(num)), den_(BiPoly<F>::constant(2, Arith<F>::one())) {  // NOLINT
        if (num_.nvars() == 0) num_ = BiPoly<F>(2);
    }
    RatFunc(BiPoly<F> num, BiPoly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
        reduce();
    }

    const BiPoly<F>& num() const { return num_; }
    const BiPoly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.total_degree() == 0; }

    RatFunc operator-() const { return RatFunc(-num_, den_, true); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, a.den_ * b.den_, true);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw PreconditionError("division by the zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    RatFunc(BiPoly<F> num, BiPoly<F> den, bool /*reduced*/) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    void reduce() {
        if (num_.is_zero()) {
            num_ = BiPoly<F>(2);
            den_ = BiPoly<F>::constant(2, Arith<F>::one());
            return;
        }
        BiPoly<F> g = gcd(num_, den_);
        if (g.total_degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        normalize();
    }

    void normalize() {
        F lead = den_.terms().rbegin()->second;
        if (lead == Arith<F>::one()) return;
        F inv = Arith<F>::inverse(lead);
        num_ = inv * num_;
        den_ = inv * den_;
    }

    BiPoly<F> num_;
    BiPoly<F> den_;
};

}  // namespace hyp
