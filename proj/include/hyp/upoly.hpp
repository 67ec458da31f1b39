#pragma once

#include <algorithm>
#include <compare>
#include <utility>
#include <vector>

#include "hyp/exact.hpp"

namespace hyp {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// The zero polynomial has no coefficients and degree -1.
template <typename F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(F constant) {  // NOLINT(google-explicit-constructor)
        if (!hyp::is_zero(constant)) c_.push_back(std::move(constant));
    }

    static UPoly monomial(F coeff, int degree) {
        if (hyp::is_zero(coeff)) return {};
        std::vector<F> c(static_cast<size_t>(degree) + 1, Arith<F>::zero());
        c.back() = std::move(coeff);
        return UPoly(std::move(c));
    }
    static UPoly x() { return monomial(Arith<F>::one(), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int k) const {
        if (k < 0 || k > degree()) return Arith<F>::zero();
        return c_[static_cast<size_t>(k)];
    }
    const F& leading() const { return c_.back(); }

    UPoly derivative() const {
        std::vector<F> d;
        for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * F(static_cast<long>(k)));
        return UPoly(std::move(d));
    }

    /// Horner evaluation at a point of the coefficient ring.
    F operator()(const F& x) const {
        F acc = Arith<F>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Evaluation in another ring T, given a coefficient conversion.
    template <typename T, typename Conv>
    T eval_as(const T& x, Conv conv) const {
        T acc = T(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + conv(*it);
        return acc;
    }

    /// Composition this(g).
    UPoly compose(const UPoly& g) const {
        UPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + UPoly(*it);
        return acc;
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Arith<F>::zero());
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Arith<F>::zero());
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, Arith<F>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (hyp::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    friend UPoly operator*(const F& s, const UPoly& p) {
        std::vector<F> r;
        r.reserve(p.c_.size());
        for (const auto& v : p.c_) r.push_back(s * v);
        return UPoly(std::move(r));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Ordering by degree, then coefficients from the constant term upwards.
    friend auto operator<=>(const UPoly& a, const UPoly& b)
        requires std::three_way_comparable<F>
    {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        for (size_t k = 0; k < a.c_.size(); ++k)
            if (auto c = a.c_[k] <=> b.c_[k]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    UPoly pow(unsigned e) const {
        UPoly result(Arith<F>::one());
        UPoly b = *this;
        while (e > 0) {
            if (e & 1U) result *= b;
            e >>= 1U;
            if (e > 0) b *= b;
        }
        return result;
    }

private:
    void trim() {
        while (!c_.empty() && hyp::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
};

/// Quotient and remainder over a field.
template <typename F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<F> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly<F>(), a};
    std::vector<F> quot(static_cast<size_t>(a.degree() - db) + 1, Arith<F>::zero());
    F inv_lead = Arith<F>::inverse(b.leading());
    for (int k = a.degree(); k >= db; --k) {
        F q = rem[static_cast<size_t>(k)] * inv_lead;
        if (hyp::is_zero(q)) continue;
        quot[static_cast<size_t>(k - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k - db + j)] -= q * b.coeffs()[static_cast<size_t>(j)];
    }
    rem.resize(static_cast<size_t>(db));
    return {UPoly<F>(std::move(quot)), UPoly<F>(std::move(rem))};
}

template <typename F>
UPoly<F> make_monic(const UPoly<F>& p) {
    if (p.is_zero()) return p;
    return Arith<F>::inverse(p.leading()) * p;
}

/// Monic greatest common divisor over a field (zero if both inputs are zero).
template <typename F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Exact quotient; throws if b does not divide a.
template <typename F>
UPoly<F> exact_div(const UPoly<F>& a, const UPoly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw PreconditionError("polynomial division is not exact");
    return q;
}

/// Squarefree decomposition (Yun): returns factors s_1, s_2, ... with
/// p = lc * prod s_k^k, each s_k monic and squarefree (possibly constant 1).
template <typename F>
std::vector<UPoly<F>> squarefree_decomposition(const UPoly<F>& p) {
    std::vector<UPoly<F>> out;
    if (p.degree() <= 0) return out;
    UPoly<F> a0 = make_monic(p);
    UPoly<F> d = a0.derivative();
    UPoly<F> g = gcd(a0, d);
    UPoly<F> b = exact_div(a0, g);
    UPoly<F> c = exact_div(d, g);
    UPoly<F> e = c - b.derivative();
    while (b.degree() > 0) {
        UPoly<F> a = gcd(b, e);
        out.push_back(a);
        b = exact_div(b, a);
        c = exact_div(e, a);
        e = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

}  // namespace hyp
