#include "hyp/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace hyp {

UPoly<Rational> cyclotomic_polynomial(int n) {
    if (n < 1) throw PreconditionError("cyclotomic order must be positive");
    UPoly<Rational> p = UPoly<Rational>::monomial(Rational(1), n) - UPoly<Rational>(Rational(1));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = exact_div(p, cyclotomic_polynomial(d));
    return p;
}

std::shared_ptr<const CycloField> cyclotomic_field(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const CycloField>(CycloField{n, cyclotomic_polynomial(n)});
    return slot;
}

CycloElem CycloElem::zeta_power(const std::shared_ptr<const CycloField>& field, long k) {
    long n = field->n;
    long e = ((k % n) + n) % n;
    CycloElem z;
    z.field_ = field;
    z.r_ = UPoly<Rational>::monomial(Rational(1), static_cast<int>(e));
    z.reduce();
    return z;
}

Rational CycloElem::rational_value() const {
    if (!is_rational()) throw PreconditionError("cyclotomic element is not rational");
    return r_.coeff(0);
}

void CycloElem::adopt(const CycloElem& o) {
    if (!o.field_ || o.field_ == field_ || o.is_rational()) return;
    if (!field_ || is_rational()) {
        field_ = o.field_;
    } else if (field_->n != o.field_->n) {
        throw PreconditionError("mixing elements of different cyclotomic fields");
    }
}

void CycloElem::reduce() {
    if (field_ && r_.degree() >= field_->phi.degree()) r_ = divmod(r_, field_->phi).second;
}

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    CycloElem out;
    out.field_ = field_;
    if (is_rational()) {
        out.r_ = UPoly<Rational>(Rational(1) / r_.coeff(0));
        return out;
    }
    // Extended Euclid: s*r + t*phi = 1.
    UPoly<Rational> a = field_->phi, b = r_;
    UPoly<Rational> s0, s1(Rational(1));
    while (b.degree() > 0) {
        auto [q, rem] = divmod(a, b);
        UPoly<Rational> s2 = s0 - q * s1;
        a = std::move(b);
        b = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (b.is_zero()) throw PreconditionError("element is a zero divisor");
    out.r_ = (Rational(1) / b.coeff(0)) * s1;
    out.reduce();
    return out;
}

CycloElem CycloElem::embed(const std::shared_ptr<const CycloField>& target) const {
    if (is_rational() || field_ == target) {
        CycloElem out = *this;
        if (!is_rational()) out.field_ = target;
        return out;
    }
    if (target->n % field_->n != 0)
        throw PreconditionError("cannot embed Q(zeta" + std::to_string(field_->n) + ") into Q(zeta" +
                                std::to_string(target->n) + ")");
    int step = target->n / field_->n;
    CycloElem out;
    out.field_ = target;
    std::vector<Rational> c(static_cast<size_t>(r_.degree() * step + 1), Rational(0));
    for (int k = 0; k <= r_.degree(); ++k) c[static_cast<size_t>(k * step)] = r_.coeff(k);
    out.r_ = UPoly<Rational>(std::move(c));
    out.reduce();
    return out;
}

CycloElem to_cyclo(const ExactComplex& z, const std::shared_ptr<const CycloField>& field) {
    if (z.is_real()) return CycloElem(z.re());
    if (field->n % 4 != 0) throw PreconditionError("field does not contain i");
    return CycloElem(z.re()) + CycloElem(z.im()) * CycloElem::zeta_power(field, field->n / 4);
}

bool to_gaussian(const CycloElem& e, ExactComplex& out) {
    if (e.is_rational()) {
        out = ExactComplex(e.rational_value());
        return true;
    }
    int n = e.field()->n;
    if (n % 4 != 0) return false;
    CycloElem i = CycloElem::zeta_power(e.field(), n / 4);
    // Match a coefficient where the residue of i is nonzero, then verify.
    for (int k = 1; k <= i.residue().degree(); ++k) {
        if (sgn(i.residue().coeff(k)) == 0) continue;
        Rational b = e.residue().coeff(k) / i.residue().coeff(k);
        Rational a = e.residue().coeff(0) - b * i.residue().coeff(0);
        if (CycloElem(a) + CycloElem(b) * i == e) {
            out = ExactComplex(a, b);
            return true;
        }
        return false;
    }
    return false;
}

std::complex<double> CycloElem::to_complex() const {
    if (!field_) return {r_.coeff(0).get_d(), 0.0};
    std::complex<double> z = std::polar(1.0, 2 * M_PI / field_->n);
    std::complex<double> acc{0.0, 0.0};
    for (int k = r_.degree(); k >= 0; --k) acc = acc * z + r_.coeff(k).get_d();
    return acc;
}

std::string CycloElem::to_string() const {
    if (is_rational()) return r_.coeff(0).get_str();
    std::string s;
    std::string z = "zeta" + std::to_string(field_->n);
    for (int k = 0; k <= r_.degree(); ++k) {
        const Rational& c = r_.coeff(k);
        if (sgn(c) == 0) continue;
        if (!s.empty()) s += sgn(c) > 0 ? "+" : "-";
        else if (sgn(c) < 0) s += "-";
        Rational a = abs(c);
        if (k == 0) {
            s += a.get_str();
            continue;
        }
        if (a != 1) s += a.get_str() + "*";
        s += z;
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

CycloElem CycloElem::operator-() const {
    CycloElem o = *this;
    o.r_ = -o.r_;
    return o;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
    adopt(o);
    r_ += o.r_;
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
    adopt(o);
    r_ -= o.r_;
    return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
    adopt(o);
    r_ *= o.r_;
    reduce();
    return *this;
}

}  // namespace hyp
