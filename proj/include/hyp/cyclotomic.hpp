#pragma once

#include <complex>
#include <memory>
#include <string>

#include "hyp/exact.hpp"
#include "hyp/upoly.hpp"

namespace hyp {

/// Q(zeta_n) presented as Q[t] / Phi_n(t).
struct CycloField {
    int n;
    UPoly<Rational> phi;
};

/// Shared, cached field description for order n >= 1.
std::shared_ptr<const CycloField> cyclotomic_field(int n);

/// n-th cyclotomic polynomial.
UPoly<Rational> cyclotomic_polynomial(int n);

/// Element of a cyclotomic field; a null field means a plain rational.
class CycloElem {
public:
    CycloElem() = default;
    CycloElem(int v) : r_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    CycloElem(long v) : r_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    CycloElem(const Rational& v) : r_(v) {}  // NOLINT(google-explicit-constructor)

    /// zeta_n^k in the given field.
    static CycloElem zeta_power(const std::shared_ptr<const CycloField>& field, long k);

    const UPoly<Rational>& residue() const { return r_; }
    const std::shared_ptr<const CycloField>& field() const { return field_; }
    bool is_zero() const { return r_.is_zero(); }
    bool is_rational() const { return r_.degree() <= 0; }
    Rational rational_value() const;
    CycloElem inverse() const;
    /// Image in Q(zeta_m) for a multiple m of the current order (zeta_n -> zeta_m^(m/n)).
    CycloElem embed(const std::shared_ptr<const CycloField>& target) const;
    std::complex<double> to_complex() const;
    std::string to_string() const;

    CycloElem operator-() const;
    CycloElem& operator+=(const CycloElem& o);
    CycloElem& operator-=(const CycloElem& o);
    CycloElem& operator*=(const CycloElem& o);
    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
    friend CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }
    friend bool operator==(const CycloElem& a, const CycloElem& b) { return a.r_ == b.r_; }

private:
    void adopt(const CycloElem& o);
    void reduce();

    UPoly<Rational> r_;
    std::shared_ptr<const CycloField> field_;
};

/// a + b i as an element of the given field; needs 4 | n unless b = 0.
CycloElem to_cyclo(const ExactComplex& z, const std::shared_ptr<const CycloField>& field);

/// The element as a + b i when it lies in Q(i); false otherwise.
bool to_gaussian(const CycloElem& e, ExactComplex& out);

}  // namespace hyp
