#include "hyp/roots.hpp"

#include <algorithm>
#include <cmath>

namespace hyp {

namespace {

using boost::multiprecision::abs;

BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& z) {
    BigComplex acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<BigComplex> derivative(const std::vector<BigComplex>& c) {
    std::vector<BigComplex> d;
    for (size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * BigFloat(static_cast<long>(k)));
    return d;
}

std::vector<CertifiedRoot> certify(const std::vector<BigComplex>& c, double width) {
    std::vector<BigComplex> roots = aberth_roots(c);
    std::vector<BigComplex> dc = derivative(c);
    auto n = static_cast<long>(roots.size());
    std::vector<CertifiedRoot> out;
    for (auto& z : roots) {
        // Two Newton steps to polish past the Aberth stopping point.
        for (int k = 0; k < 2; ++k) {
            BigComplex d = horner(dc, z);
            if (abs(d) == 0) break;
            z -= horner(c, z) / d;
        }
        BigComplex d = horner(dc, z);
        if (abs(d) == 0) throw ConvergenceError("multiple root in squarefree input", 1.0);
        BigFloat radius = BigFloat(n) * abs(horner(c, z) / d);
        BigFloat allowed = BigFloat(width) * std::max(BigFloat(1), BigFloat(abs(z)));
        if (radius > allowed)
            throw ConvergenceError("root isolation did not reach the requested width",
                                   static_cast<double>(radius));
        out.push_back({z, radius});
    }
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (abs(out[i].value - out[j].value) <= out[i].radius + out[j].radius)
                throw ConvergenceError("root disks overlap", 0.0);
    return out;
}

}  // namespace

BigFloat to_big(const Rational& q) {
    return BigFloat(q.get_num().get_str()) / BigFloat(q.get_den().get_str());
}

BigComplex to_big(const ExactComplex& z) { return BigComplex(to_big(z.re()), to_big(z.im())); }

std::vector<BigComplex> aberth_roots(const std::vector<BigComplex>& coeffs) {
    if (coeffs.size() < 2 || abs(coeffs.back()) == 0)
        throw PreconditionError("root finding needs a polynomial of positive degree");
    size_t n = coeffs.size() - 1;
    std::vector<BigComplex> c = coeffs;
    BigComplex lead = c.back();
    for (auto& v : c) v /= lead;
    // Cauchy bound for the starting circle.
    BigFloat bound = 0;
    for (size_t k = 0; k < n; ++k) bound = std::max(bound, BigFloat(abs(c[k])));
    bound += 1;
    BigFloat radius = std::min(bound, BigFloat(1) + bound / 2);
    std::vector<BigComplex> dc = derivative(c);
    std::vector<BigComplex> z(n);
    const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
    for (size_t k = 0; k < n; ++k) {
        BigFloat t = two_pi * BigFloat(static_cast<long>(k)) / BigFloat(static_cast<long>(n)) + BigFloat("0.4");
        z[k] = BigComplex(radius * cos(t), radius * sin(t));
    }
    const BigFloat tiny("1e-46");
    for (int iter = 0; iter < 1000; ++iter) {
        BigFloat worst = 0;
        for (size_t k = 0; k < n; ++k) {
            BigComplex p = horner(c, z[k]);
            if (abs(p) == 0) continue;
            BigComplex ratio = p / horner(dc, z[k]);
            BigComplex s(0);
            for (size_t j = 0; j < n; ++j)
                if (j != k) s += BigComplex(1) / (z[k] - z[j]);
            BigComplex w = ratio / (BigComplex(1) - ratio * s);
            z[k] -= w;
            worst = std::max(worst, BigFloat(abs(w) / std::max(BigFloat(1), BigFloat(abs(z[k])))));
        }
        if (worst < tiny) return z;
    }
    return z;
}

std::vector<CertifiedRoot> certified_roots(const UPoly<ExactComplex>& p, double width) {
    std::vector<BigComplex> c;
    for (const auto& v : p.coeffs()) c.push_back(to_big(v));
    return certify(c, width);
}

std::vector<CertifiedRoot> certified_roots(const UPoly<Rational>& p, double width) {
    std::vector<BigComplex> c;
    for (const auto& v : p.coeffs()) c.emplace_back(to_big(v));
    return certify(c, width);
}

Rational rationalize(const BigFloat& x, long max_den) {
    using boost::multiprecision::floor;
    BigFloat fl = floor(x);
    if (abs(fl) > BigFloat("1e18")) throw UnsupportedError("value too large to rationalize");
    Integer h_prev = 1, h = static_cast<long>(fl.convert_to<long long>());
    Integer k_prev = 0, k = 1;
    BigFloat frac = x - fl;
    const BigFloat eps("1e-45");
    while (frac > eps) {
        BigFloat inv = 1 / frac;
        BigFloat a = floor(inv);
        if (a > BigFloat("1e15")) break;
        Integer ai = static_cast<long>(a.convert_to<long long>());
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

ExactComplex rationalize(const BigComplex& z, long max_den) {
    return {rationalize(BigFloat(z.real()), max_den), rationalize(BigFloat(z.imag()), max_den)};
}

std::vector<Rational> rational_roots(const UPoly<Rational>& p) {
    std::vector<Rational> out;
    if (p.degree() <= 0) return out;
    for (const auto& f : squarefree_decomposition(p)) {
        if (f.degree() <= 0) continue;
        std::vector<BigComplex> c;
        for (const auto& v : f.coeffs()) c.emplace_back(to_big(v));
        for (const auto& z : aberth_roots(c)) {
            if (abs(z.imag()) > BigFloat("1e-20") * std::max(BigFloat(1), BigFloat(abs(z)))) continue;
            Rational q = rationalize(BigFloat(z.real()), 1000000000000000000L);
            if (sgn(f(q)) == 0 && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hyp
