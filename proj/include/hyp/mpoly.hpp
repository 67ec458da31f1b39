#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "hyp/exact.hpp"
#include "hyp/upoly.hpp"

namespace hyp {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial in a fixed number of variables.
/// Terms are kept in lexicographic exponent order with no zero coefficients.
template <typename F>
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, F c) {
        MPoly p(nvars);
        p.add_term(Exponents(static_cast<size_t>(nvars), 0), std::move(c));
        return p;
    }
    static MPoly variable(int nvars, int index) {
        MPoly p(nvars);
        Exponents e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(index)] = 1;
        p.add_term(std::move(e), Arith<F>::one());
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, F>& terms() const { return terms_; }

    void add_term(const Exponents& e, const F& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw PreconditionError("monomial arity does not match polynomial");
        if (hyp::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (hyp::is_zero(it->second)) terms_.erase(it);
        }
    }

    F coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Arith<F>::zero() : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }
    int degree_in(int var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
        return d;
    }
    bool is_homogeneous(int degree) const {
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
        return !terms_.empty();
    }

    MPoly partial(int var) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<size_t>(var)];
            if (k == 0) continue;
            Exponents e2 = e;
            e2[static_cast<size_t>(var)] -= 1;
            r.add_term(e2, c * F(static_cast<long>(k)));
        }
        return r;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        adopt_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        adopt_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(std::max(a.nvars_, b.nvars_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (size_t k = 0; k < ea.size(); ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const F& s, const MPoly& p) {
        MPoly r(p.nvars_);
        for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    MPoly pow(unsigned e) const {
        MPoly result = constant(nvars_, Arith<F>::one());
        MPoly b = *this;
        while (e > 0) {
            if (e & 1U) result *= b;
            e >>= 1U;
            if (e > 0) b *= b;
        }
        return result;
    }

    /// Evaluates in a ring T given a coefficient conversion; powers are cached per variable.
    template <typename T, typename Conv>
    T eval_as(const std::vector<T>& values, Conv conv, T zero) const {
        std::vector<std::vector<T>> powers(values.size());
        T acc = std::move(zero);
        for (const auto& [e, c] : terms_) {
            T term = conv(c);
            for (size_t v = 0; v < e.size(); ++v) {
                int k = e[v];
                if (k == 0) continue;
                auto& pw = powers[v];
                if (pw.empty()) pw.push_back(values[v]);
                while (static_cast<int>(pw.size()) < k) pw.push_back(pw.back() * values[v]);
                term = term * pw[static_cast<size_t>(k - 1)];
            }
            acc = acc + term;
        }
        return acc;
    }

    F operator()(const std::vector<F>& values) const {
        return eval_as<F>(values, [](const F& c) { return c; }, Arith<F>::zero());
    }

    /// Substitutes a polynomial for every variable.
    MPoly substitute(const std::vector<MPoly>& images) const {
        int n = images.empty() ? 0 : images.front().nvars();
        return eval_as<MPoly>(images, [n](const F& c) { return constant(n, c); }, MPoly(n));
    }

private:
    void adopt_arity(const MPoly& o) {
        if (nvars_ == 0) nvars_ = o.nvars_;
    }

    int nvars_ = 0;
    std::map<Exponents, F> terms_;
};

}  // namespace hyp
