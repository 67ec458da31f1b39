#pragma once

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <string>

#include "hyp/error.hpp"

namespace hyp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws PreconditionError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Best rational approximation with denominator at most max_den (continued fractions).
Rational rationalize(double x, long max_den);

std::string to_string(const Rational& q);

/// Element of Q[i]: a complex number with rational real and imaginary parts.
class ExactComplex {
public:
    ExactComplex() = default;
    ExactComplex(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactComplex i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    ExactComplex conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    ExactComplex inverse() const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    std::string to_string() const;

    ExactComplex operator-() const { return {-re_, -im_}; }
    ExactComplex& operator+=(const ExactComplex& o);
    ExactComplex& operator-=(const ExactComplex& o);
    ExactComplex& operator*=(const ExactComplex& o);
    ExactComplex& operator/=(const ExactComplex& o);

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend std::strong_ordering operator<=>(const ExactComplex& a, const ExactComplex& b);

private:
    Rational re_{0};
    Rational im_{0};
};

ExactComplex pow(const ExactComplex& base, unsigned exponent);

/// Arithmetic traits used by the polynomial templates. The primary template
/// forwards to member functions; number types without them are specialised.
template <typename F>
struct Arith {
    static bool is_zero(const F& x) { return x.is_zero(); }
    static F zero() { return F(0); }
    static F one() { return F(1); }
    static F inverse(const F& x) { return x.inverse(); }
};

template <>
struct Arith<Rational> {
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational inverse(const Rational& x) {
        if (sgn(x) == 0) throw PreconditionError("division by zero");
        return Rational(1) / x;
    }
};

template <typename F>
bool is_zero(const F& x) {
    return Arith<F>::is_zero(x);
}

}  // namespace hyp
