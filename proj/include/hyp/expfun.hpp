#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "hyp/exact.hpp"
#include "hyp/upoly.hpp"

namespace hyp {

/// Univariate polynomial with Q[i] coefficients.
using Poly = UPoly<ExactComplex>;

/// Finite sum  sum_k r_k * exp(c_k)  with r_k, c_k in Q[i].
///
/// Distinct exponents c_k give linearly independent values over the algebraic
/// numbers (Lindemann-Weierstrass), so equality and zero tests are exact
/// comparisons of the (c_k, r_k) table.
class ExpScalar {
public:
    ExpScalar() = default;
    ExpScalar(int v) : ExpScalar(ExactComplex(v)) {}  // NOLINT(google-explicit-constructor)
    ExpScalar(long v) : ExpScalar(ExactComplex(v)) {}  // NOLINT(google-explicit-constructor)
    ExpScalar(const ExactComplex& r) {  // NOLINT(google-explicit-constructor)
        if (!r.is_zero()) terms_.emplace(ExactComplex(0), r);
    }

    /// r * exp(c).
    static ExpScalar exp_term(const ExactComplex& r, const ExactComplex& c);

    const std::map<ExactComplex, ExactComplex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when the value is a plain Q[i] number (no exponential factor).
    bool is_plain() const;
    ExactComplex plain_value() const;
    ExpScalar inverse() const;  // single-term values only
    std::complex<double> to_complex() const;

    ExpScalar operator-() const;
    ExpScalar& operator+=(const ExpScalar& o);
    ExpScalar& operator-=(const ExpScalar& o);
    friend ExpScalar operator+(ExpScalar a, const ExpScalar& b) { return a += b; }
    friend ExpScalar operator-(ExpScalar a, const ExpScalar& b) { return a -= b; }
    friend ExpScalar operator*(const ExpScalar& a, const ExpScalar& b);
    ExpScalar& operator*=(const ExpScalar& o) { return *this = *this * o; }
    friend bool operator==(const ExpScalar& a, const ExpScalar& b) { return a.terms_ == b.terms_; }

private:
    void add(const ExactComplex& c, const ExactComplex& r);

    std::map<ExactComplex, ExactComplex> terms_;
};

/// Finite sum  sum_k q_k(xi) * exp(c_k) * exp(P_k(xi))  in canonical form:
/// every P_k has zero constant term (constants live in the symbolic tag c_k),
/// the pairs (P_k, c_k) are distinct, and no q_k is zero.
class ExpPoly {
public:
    struct Term {
        Poly coeff;
        ExactComplex expconst;
        Poly exponent;
        friend bool operator==(const Term&, const Term&) = default;
    };

    ExpPoly() = default;
    ExpPoly(const ExactComplex& c) : ExpPoly(Poly(c)) {}  // NOLINT(google-explicit-constructor)
    ExpPoly(int c) : ExpPoly(ExactComplex(c)) {}  // NOLINT(google-explicit-constructor)
    ExpPoly(const Poly& p);  // NOLINT(google-explicit-constructor)

    /// coeff * exp(exponent); a constant term of the exponent is absorbed into the tag.
    static ExpPoly term(const Poly& coeff, const Poly& exponent,
                        const ExactComplex& expconst = ExactComplex(0));
    static ExpPoly exp(const Poly& exponent) { return term(Poly(ExactComplex(1)), exponent); }
    static ExpPoly from_terms(const std::vector<Term>& terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// No exponential part (every exponent polynomial and tag is zero).
    bool is_polynomial() const;
    /// Exactly one exponential class and a constant coefficient (a unit c*exp(P)).
    bool is_monomial_unit() const;
    int max_exponent_degree() const;

    /// Terms grouped by exponent polynomial; the tags move into ExpScalar coefficients.
    std::map<Poly, UPoly<ExpScalar>> by_exponent() const;

    ExpPoly operator-() const;
    friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    ExpPoly& operator+=(const ExpPoly& o) { return *this = *this + o; }
    ExpPoly& operator*=(const ExpPoly& o) { return *this = *this * o; }
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

    ExpPoly pow(unsigned e) const;

private:
    friend ExpPoly canonicalize(const std::vector<Term>& terms);

    std::vector<Term> terms_;
};

/// Numerical value carried as exp(log_scale) * mantissa so huge terms do not overflow.
struct ScaledValue {
    double log_scale = 0.0;
    std::complex<double> mantissa{0.0, 0.0};

    /// log|value|; -infinity for zero.
    double log_abs() const;
};

/// Floating-point image of an ExpPoly for repeated evaluation.
class CompiledExpPoly {
public:
    CompiledExpPoly() = default;
    explicit CompiledExpPoly(const ExpPoly& f);

    ScaledValue eval_scaled(std::complex<double> z) const;
    bool empty() const { return terms_.empty(); }

private:
    struct Term {
        std::vector<std::complex<double>> coeff;
        std::vector<std::complex<double>> exponent;  // constant slot holds the tag
    };
    std::vector<Term> terms_;
};

enum class CombineOp { add, multiply, scale };

/// sum q_k(z) exp(c_k + P_k(z)); throws OverflowError if some |Re(c_k + P_k(z))|
/// leaves the double exponent range.
std::complex<double> evaluate(const ExpPoly& f, std::complex<double> z);
ExpPoly differentiate(const ExpPoly& f);
ExpPoly combine(CombineOp op, const ExpPoly& f, const ExpPoly& g);
ExpPoly combine(CombineOp op, const ExpPoly& f, const ExactComplex& scalar);
bool is_zero(const ExpPoly& f);

/// Re-canonicalizes an arbitrary term list (identity on canonical input).
ExpPoly canonicalize(const std::vector<ExpPoly::Term>& terms);

/// Determinant of a square matrix of exponential polynomials (Laplace expansion).
ExpPoly determinant(const std::vector<std::vector<ExpPoly>>& m);

/// Wronskian det[f_j^{(i)}]; identically zero iff the functions are linearly dependent.
ExpPoly wronskian(const std::vector<ExpPoly>& fs);

}  // namespace hyp
