#include "hyp/exact.hpp"

#include <cmath>

namespace hyp {

Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw PreconditionError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rationalize(double x, long max_den) {
    if (!std::isfinite(x)) throw PreconditionError("cannot rationalize a non-finite value");
    // Convergents h/k of the continued fraction of x.
    Integer h_prev = 1, h = static_cast<long>(std::floor(x));
    Integer k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    while (frac > 1e-300) {
        double inv = 1.0 / frac;
        double a = std::floor(inv);
        if (a > 1e15) break;
        Integer ai = static_cast<long>(a);
        Integer k_next = ai * k + k_prev;
        if (k_next > max_den) break;
        Integer h_next = ai * h + h_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        frac = inv - a;
    }
    return make_rational(h, k);
}

std::string to_string(const Rational& q) { return q.get_str(); }

ExactComplex ExactComplex::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw PreconditionError("inverse of zero");
    return {re_ / n, -im_ / n};
}

std::string ExactComplex::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    if (sgn(re_) == 0) return im_.get_str() + "i";
    std::string s = re_.get_str();
    s += sgn(im_) > 0 ? "+" : "-";
    Rational a = abs(im_);
    s += a.get_str() + "i";
    return s;
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const ExactComplex& a, const ExactComplex& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ExactComplex pow(const ExactComplex& base, unsigned exponent) {
    ExactComplex result(1);
    ExactComplex b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent > 0) b *= b;
    }
    return result;
}

}  // namespace hyp
