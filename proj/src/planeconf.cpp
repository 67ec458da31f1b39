#include "hyp/planeconf.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hyp/bivariate.hpp"

namespace hyp {

namespace {

using QPoly = UPoly<Rational>;
using boost::multiprecision::abs;

constexpr int kRetries = 5;

Poly3 var(int i) { return Poly3::variable(3, i); }

Rational qpow(const Rational& a, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= a;
    return r;
}

Matrix3 identity3() {
    Matrix3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = Rational(i == j ? 1 : 0);
    return m;
}

Rational det3(const Matrix3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 random_change(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    Matrix3 m;
    do {
        for (auto& row : m)
            for (auto& v : row) v = Rational(d(rng));
    } while (sgn(det3(m)) == 0);
    return m;
}

void assign(Rational& out, const Rational& q) { out = q; }
void assign(BigComplex& out, const Rational& q) { out = BigComplex(to_big(q)); }

template <typename S>
std::array<S, 3> mat_apply(const Matrix3& T, const std::array<S, 3>& v) {
    std::array<S, 3> out;
    for (int i = 0; i < 3; ++i) {
        S acc = S(0);
        for (int j = 0; j < 3; ++j) {
            S t;
            assign(t, T[i][j]);
            acc += t * v[j];
        }
        out[i] = acc;
    }
    return out;
}

std::array<Rational, 3> normalize(std::array<Rational, 3> p) {
    for (const auto& c : p)
        if (sgn(c) != 0) {
            Rational inv = 1 / c;
            for (auto& x : p) x *= inv;
            break;
        }
    return p;
}

std::array<BigComplex, 3> normalize(std::array<BigComplex, 3> p) {
    BigFloat m = 0;
    for (const auto& c : p) m = std::max(m, BigFloat(abs(c)));
    for (const auto& c : p)
        if (abs(c) > m * BigFloat("1e-20")) {
            BigComplex inv = BigComplex(1) / c;
            for (auto& x : p) x *= inv;
            break;
        }
    return p;
}

// p(a, y, 1) as a polynomial in y.
QPoly y_poly(const Poly3& p, const Rational& a) {
    std::vector<Rational> c(static_cast<size_t>(std::max(0, p.degree_in(1))) + 1, Rational(0));
    for (const auto& [e, v] : p.terms()) c[static_cast<size_t>(e[1])] += v * qpow(a, e[0]);
    return QPoly(std::move(c));
}

// Coefficient of y^k in p(x, y, 1), as a polynomial in x.
QPoly x_coeff(const Poly3& p, int k) {
    QPoly out;
    for (const auto& [e, v] : p.terms())
        if (e[1] == k) out += QPoly::monomial(v, e[0]);
    return out;
}

Rational det(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    Rational d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && sgn(m[piv][c]) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

// Rows y^k A (k < n - j) and y^k B (k < m - j) over the powers y^(m+n-j-1) ... y^0.
std::vector<std::vector<Rational>> sylvester_rows(const QPoly& A, const QPoly& B, int j) {
    int m = A.degree(), n = B.degree();
    int width = m + n - j;
    std::vector<std::vector<Rational>> rows;
    auto push = [&](const QPoly& P, int shift) {
        std::vector<Rational> row(static_cast<size_t>(width), Rational(0));
        for (int i = 0; i <= P.degree(); ++i) row[static_cast<size_t>(width - 1 - (i + shift))] = P.coeff(i);
        rows.push_back(std::move(row));
    };
    for (int k = n - j - 1; k >= 0; --k) push(A, k);
    for (int k = m - j - 1; k >= 0; --k) push(B, k);
    return rows;
}

// Coefficients s_{k,i} (i = 0..k) of the k-th subresultant in y at one value of x.
std::vector<Rational> subresultant_values(const QPoly& A, const QPoly& B, int k) {
    auto rows = sylvester_rows(A, B, k);
    size_t n = rows.size();
    std::vector<Rational> out;
    for (int i = 0; i <= k; ++i) {
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
        for (size_t r = 0; r < n; ++r) {
            for (size_t c = 0; c + 1 < n; ++c) m[r][c] = rows[r][c];
            m[r][n - 1] = rows[r][rows[r].size() - 1 - static_cast<size_t>(i)];
        }
        out.push_back(det(std::move(m)));
    }
    return out;
}

QPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
    size_t n = xs.size();
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
    QPoly p(ys[n - 1]);
    for (size_t i = n - 1; i-- > 0;) p = p * QPoly(std::vector<Rational>{-xs[i], Rational(1)}) + QPoly(ys[i]);
    return p;
}

// Resultant and the subresultant chain sub[k][i], k = 1..min degree; the top entry is the
// lower-degree curve itself.
struct Elimination {
    QPoly res;
    std::vector<std::vector<QPoly>> sub;
};

Elimination eliminate(const Poly3& F, const Poly3& G, int d1, int d2) {
    int top = std::min(d1, d2);
    const Poly3& low = d1 <= d2 ? F : G;
    Elimination e;
    e.sub.resize(static_cast<size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) e.sub[static_cast<size_t>(top)].push_back(x_coeff(low, i));
    for (size_t n = static_cast<size_t>(d1 * d2) + 2; n <= 512; n *= 2) {
        // samples[c] lists the values of the c-th tracked polynomial.
        std::vector<Rational> xs;
        std::vector<std::vector<Rational>> samples;
        for (size_t k = 0; k < n + 2; ++k) {
            Rational a(static_cast<long>(k));
            QPoly A = y_poly(F, a), B = y_poly(G, a);
            std::vector<Rational> v{det(sylvester_rows(A, B, 0))};
            for (int j = 1; j < top; ++j)
                for (auto& c : subresultant_values(A, B, j)) v.push_back(c);
            samples.resize(v.size());
            for (size_t c = 0; c < v.size(); ++c) samples[c].push_back(v[c]);
            xs.push_back(a);
        }
        std::vector<Rational> fit_x(xs.begin(), xs.begin() + static_cast<long>(n));
        std::vector<QPoly> polys;
        bool ok = true;
        for (size_t c = 0; c < samples.size() && ok; ++c) {
            polys.push_back(
                interpolate(fit_x, std::vector<Rational>(samples[c].begin(), samples[c].begin() + static_cast<long>(n))));
            for (size_t k = n; k < n + 2; ++k) ok = ok && polys.back()(xs[k]) == samples[c][k];
        }
        if (!ok) continue;
        e.res = polys[0];
        size_t c = 1;
        for (int j = 1; j < top; ++j)
            for (int i = 0; i <= j; ++i) e.sub[static_cast<size_t>(j)].push_back(polys[c++]);
        return e;
    }
    throw ConvergenceError("resultant interpolation did not stabilize", 0.0);
}

QPoly mod(const QPoly& a, const QPoly& q) { return divmod(a, q).second; }

// On the roots of q, S_k = s_kk y^k + ... must be a k-th power (y - y0)^k:
// s_kj (k s_kk)^(k-j) = binom(k, j) s_kk s_k,k-1^(k-j) modulo q.
bool is_power_mod(const std::vector<QPoly>& s, const QPoly& q) {
    int k = static_cast<int>(s.size()) - 1;
    QPoly ks = Rational(k) * s[static_cast<size_t>(k)];
    for (int j = 0; j + 1 < k; ++j) {
        Rational bin(1);
        for (int t = 0; t < j; ++t) bin = bin * (k - t) / (t + 1);
        QPoly lhs = s[static_cast<size_t>(j)] * ks.pow(static_cast<unsigned>(k - j));
        QPoly rhs = bin * s[static_cast<size_t>(k)] * s[static_cast<size_t>(k - 1)].pow(static_cast<unsigned>(k - j));
        if (!mod(lhs - rhs, q).is_zero()) return false;
    }
    return true;
}

BigComplex eval_big(const QPoly& p, const BigComplex& x) {
    BigComplex acc(0);
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + BigComplex(to_big(p.coeff(k)));
    return acc;
}

BiPoly<Rational> dehomogenize(const Poly3& p) {
    BiPoly<Rational> out(2);
    for (const auto& [e, c] : p.terms()) out.add_term({e[0], e[1]}, c);
    return out;
}

bool y_leading_ok(const Poly3& p, int d) { return sgn(p.coeff({0, d, 0})) != 0; }

std::string coord_string(const Rational& c) { return c.get_str(); }

std::string coord_string(const BigComplex& c) {
    std::ostringstream s;
    s.precision(12);
    double re = static_cast<double>(c.real()), im = static_cast<double>(c.imag());
    if (std::abs(im) < 1e-15) {
        s << re;
    } else {
        s << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
    }
    return s.str();
}

}  // namespace

// ---------------------------------------------------------------- curves

Poly3 transform(const Poly3& p, const Matrix3& T) {
    std::vector<Poly3> images;
    for (int i = 0; i < 3; ++i) {
        Poly3 img(3);
        for (int j = 0; j < 3; ++j) img += T[i][j] * var(j);
        images.push_back(img);
    }
    return p.substitute(images);
}

PlaneCurve make_curve(const Poly3& p) {
    PlaneCurve c{p, p.total_degree()};
    if (p.nvars() != 3 || p.is_zero() || !p.is_homogeneous(c.degree) || c.degree < 1)
        throw PreconditionError("a plane curve needs a nonzero homogeneous polynomial in x0, x1, x2");
    return c;
}

void validate(const PlaneCurve& c) {
    if (c.poly.nvars() != 3) throw PreconditionError("a plane curve polynomial has three variables");
    if (c.degree < 1 || !c.poly.is_homogeneous(c.degree))
        throw PreconditionError("curve polynomial is not homogeneous of degree " + std::to_string(c.degree));
    std::mt19937_64 rng(0);
    for (int attempt = 0; attempt <= kRetries; ++attempt) {
        Poly3 F = transform(c.poly, attempt == 0 ? identity3() : random_change(rng));
        if (!y_leading_ok(F, c.degree)) continue;
        BiPoly<Rational> f = dehomogenize(F);
        if (gcd(f, f.partial(1)).total_degree() > 0) throw PreconditionError("curve polynomial is not squarefree");
        return;
    }
    throw ConvergenceError("no generic coordinate change found after 5 retries", kRetries);
}

bool coprime(const PlaneCurve& a, const PlaneCurve& b, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt <= kRetries; ++attempt) {
        Matrix3 T = attempt == 0 ? identity3() : random_change(rng);
        Poly3 F = transform(a.poly, T), G = transform(b.poly, T);
        if (!y_leading_ok(F, a.degree) || !y_leading_ok(G, b.degree)) continue;
        return gcd(dehomogenize(F), dehomogenize(G)).total_degree() <= 0;
    }
    throw ConvergenceError("no generic coordinate change found after 5 retries", kRetries);
}

void validate(const Configuration& conf) {
    for (const auto& c : conf.curves) validate(c);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!coprime(conf.curves[static_cast<size_t>(i)], conf.curves[static_cast<size_t>(j)]))
                throw PreconditionError("curves C" + std::to_string(i + 1) + " and C" + std::to_string(j + 1) +
                                        " share a component");
}

std::string PlanePoint::to_string() const {
    std::string s = "(";
    for (int i = 0; i < 3; ++i) {
        if (i > 0) s += ":";
        s += exact ? coord_string(coords[static_cast<size_t>(i)]) : coord_string(approx[static_cast<size_t>(i)]);
    }
    return s + ")";
}

// ---------------------------------------------------------------- intersections

UPoly<Rational> vanishing_part(const PointGroup& group, const Poly3& H) {
    Poly3 Ht = transform(H, group.T);
    int D = H.total_degree();
    QPoly n;
    QPoly neg_s0 = -group.s0;
    for (const auto& [e, c] : Ht.terms())
        n += c * QPoly::monomial(Rational(1), e[0]) * neg_s0.pow(static_cast<unsigned>(e[1])) *
             group.s1.pow(static_cast<unsigned>(D - e[1]));
    return gcd(group.q, n);
}

std::vector<PlanePoint> group_points(const PointGroup& group, const UPoly<Rational>& q) {
    std::vector<PlanePoint> out;
    if (q.degree() <= 0) return out;
    QPoly rest = make_monic(q);
    for (const Rational& x : rational_roots(q)) {
        Rational y = -group.s0(x) / group.s1(x);
        PlanePoint p;
        p.coords = normalize(mat_apply(group.T, std::array<Rational, 3>{x, y, Rational(1)}));
        for (size_t i = 0; i < 3; ++i) p.approx[i] = BigComplex(to_big(p.coords[i]));
        p.multiplicity = group.multiplicity;
        out.push_back(p);
        rest = exact_div(rest, QPoly(std::vector<Rational>{-x, Rational(1)}));
    }
    if (rest.degree() > 0) {
        for (const auto& root : certified_roots(rest)) {
            BigComplex y = -eval_big(group.s0, root.value) / eval_big(group.s1, root.value);
            PlanePoint p;
            p.exact = false;
            p.approx = normalize(mat_apply(group.T, std::array<BigComplex, 3>{root.value, y, BigComplex(1)}));
            p.radius = static_cast<double>(root.radius);
            p.multiplicity = group.multiplicity;
            out.push_back(p);
        }
    }
    return out;
}

Intersection intersection_points(const PlaneCurve& a, const PlaneCurve& b, std::uint64_t seed) {
    for (const PlaneCurve* c : {&a, &b})
        if (c->poly.nvars() != 3 || !c->poly.is_homogeneous(c->degree))
            throw PreconditionError("curve polynomial is not homogeneous of its stated degree");
    std::mt19937_64 rng(seed);
    int d1 = a.degree, d2 = b.degree;
    for (int attempt = 0; attempt <= kRetries; ++attempt) {
        Matrix3 T = attempt == 0 ? identity3() : random_change(rng);
        Poly3 F = transform(a.poly, T), G = transform(b.poly, T);
        if (!y_leading_ok(F, d1) || !y_leading_ok(G, d2)) continue;
        Elimination e = eliminate(F, G, d1, d2);
        if (e.res.is_zero()) throw PreconditionError("curves share a common component");
        if (e.res.degree() != d1 * d2) continue;  // a point on the line x2 = 0
        Intersection out;
        bool generic = true;
        auto factors = squarefree_decomposition(e.res);
        for (size_t m = 0; m < factors.size() && generic; ++m) {
            QPoly rest = factors[m];
            // Split by the degree k of the gcd in y over each root: the first nonzero s_kk.
            for (size_t k = 1; k < e.sub.size() && rest.degree() > 0; ++k) {
                const auto& s = e.sub[k];
                QPoly g = s[k].is_zero() ? rest : gcd(rest, s[k]);
                QPoly part = exact_div(make_monic(rest), g);
                rest = g;
                if (part.degree() <= 0) continue;
                if (k >= 2 && !is_power_mod(s, part)) {
                    generic = false;  // two points over one x
                    break;
                }
                PointGroup grp{part, s[k - 1], Rational(static_cast<long>(k)) * s[k], T, static_cast<int>(m) + 1};
                for (auto& p : group_points(grp, grp.q)) out.points.push_back(std::move(p));
                out.groups.push_back(std::move(grp));
            }
            if (rest.degree() > 0) generic = false;
        }
        if (!generic) continue;
        for (const auto& p : out.points) out.total_multiplicity += p.multiplicity;
        if (out.total_multiplicity != d1 * d2)
            throw ConvergenceError("intersection multiplicities do not add up to the Bezout number",
                                   static_cast<double>(out.total_multiplicity));
        std::stable_sort(out.points.begin(), out.points.end(), [](const PlanePoint& x, const PlanePoint& y) {
            if (x.exact != y.exact) return x.exact;
            if (x.exact) return x.coords < y.coords;
            return false;
        });
        return out;
    }
    throw ConvergenceError("no generic coordinate change found after 5 retries", kRetries);
}

// ---------------------------------------------------------------- smoothness

Poly3 hessian(const Poly3& p) {
    std::array<std::array<Poly3, 3>, 3> h;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = p.partial(i).partial(j);
    return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
           h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

SmoothnessReport smoothness(const PlaneCurve& c, std::uint64_t seed) {
    SmoothnessReport rep;
    if (c.degree == 1) return rep;
    std::array<Poly3, 3> partials{c.poly.partial(0), c.poly.partial(1), c.poly.partial(2)};
    for (const auto& p : partials)
        if (p.total_degree() == 0) return rep;  // a nonzero constant partial
    for (const auto& pi : partials) {
        if (pi.is_zero()) continue;
        Intersection in;
        try {
            in = intersection_points(c, PlaneCurve{pi, c.degree - 1}, seed);
        } catch (const PreconditionError&) {
            continue;  // shares a component with this partial
        }
        for (const auto& g : in.groups) {
            QPoly q = g.q;
            for (const auto& pj : partials)
                if (!pj.is_zero()) q = gcd(q, vanishing_part(g, pj));
            if (q.degree() > 0) {
                rep.smooth = false;
                for (auto& p : group_points(g, q)) rep.singular_points.push_back(std::move(p));
            }
        }
        return rep;
    }
    rep.smooth = false;
    rep.note = "the curve shares a component with every partial derivative (not squarefree)";
    return rep;
}

NormalCrossingsReport normal_crossings(const Configuration& conf, std::uint64_t seed) {
    NormalCrossingsReport rep;
    for (size_t i = 0; i < 3; ++i) {
        SmoothnessReport s = smoothness(conf.curves[i], seed);
        rep.smooth[i] = s.smooth;
        if (!s.smooth) {
            std::string msg = "C" + std::to_string(i + 1) + " is singular";
            for (const auto& p : s.singular_points) msg += " at " + p.to_string();
            if (!s.note.empty()) msg += ": " + s.note;
            rep.failures.push_back(msg);
        }
    }
    const std::array<std::array<size_t, 3>, 3> pairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
    for (size_t k = 0; k < 3; ++k) {
        auto [i, j, other] = pairs[k];
        std::string name = "C" + std::to_string(i + 1) + " and C" + std::to_string(j + 1);
        try {
            rep.pairs[k] = intersection_points(conf.curves[i], conf.curves[j], seed);
        } catch (const PreconditionError&) {
            rep.failures.push_back(name + " share a component");
            continue;
        }
        for (const auto& p : rep.pairs[k].points)
            if (p.multiplicity > 1)
                rep.failures.push_back(name + " meet with multiplicity " + std::to_string(p.multiplicity) + " at " +
                                       p.to_string());
        if (k == 0) {
            for (const auto& g : rep.pairs[k].groups) {
                QPoly triple = vanishing_part(g, conf.curves[other].poly);
                for (const auto& p : group_points(g, triple))
                    rep.failures.push_back("point on all three curves: " + p.to_string());
            }
        }
    }
    rep.pass = rep.failures.empty();
    return rep;
}

// ---------------------------------------------------------------- exclusion

namespace {

template <typename S>
struct Scalar;

template <>
struct Scalar<Rational> {
    static bool zero(const Rational& x, const BigFloat&) { return sgn(x) == 0; }
    static BigFloat mag(const Rational& x) { return BigFloat(abs(to_big(x))); }
};

template <>
struct Scalar<BigComplex> {
    static bool zero(const BigComplex& x, const BigFloat& scale) { return abs(x) <= scale * BigFloat("1e-25"); }
    static BigFloat mag(const BigComplex& x) { return BigFloat(abs(x)); }
};

template <typename S>
S conv(const Rational& q);
template <>
Rational conv<Rational>(const Rational& q) {
    return q;
}
template <>
BigComplex conv<BigComplex>(const Rational& q) {
    return BigComplex(to_big(q));
}

template <typename S>
S eval3(const Poly3& p, const std::array<S, 3>& x) {
    return p.eval_as<S>(std::vector<S>(x.begin(), x.end()), [](const Rational& c) { return conv<S>(c); }, S(0));
}

template <typename S>
std::array<S, 3> cross(const std::array<S, 3>& a, const std::array<S, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <typename S>
BigFloat scale_of(const std::array<S, 3>& v) {
    BigFloat m = 0;
    for (const auto& c : v) m = std::max(m, Scalar<S>::mag(c));
    return m;
}

template <typename S>
bool is_null(const std::array<S, 3>& v, const BigFloat& scale) {
    return std::all_of(v.begin(), v.end(), [&](const S& c) { return Scalar<S>::zero(c, scale); });
}

// Coefficients c_k of t^k s^(d-k) in H(s p + t v), k = 0..d.
template <typename S>
std::vector<S> restrict_to_line(const Poly3& H, const std::array<S, 3>& p, const std::array<S, 3>& v) {
    int d = H.total_degree();
    // Evaluate H(p + t v) at d+1 nodes and interpolate in t.
    std::vector<S> xs, ys;
    for (int k = 0; k <= d; ++k) {
        S t = S(k);
        std::array<S, 3> pt{p[0] + t * v[0], p[1] + t * v[1], p[2] + t * v[2]};
        xs.push_back(t);
        ys.push_back(eval3(H, pt));
    }
    size_t n = xs.size();
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
    std::vector<S> c(n, S(0));
    c[0] = ys[n - 1];
    size_t len = 1;
    for (size_t i = n - 1; i-- > 0;) {
        // c <- c * (t - xs[i]) + ys[i]
        std::vector<S> next(len + 1, S(0));
        for (size_t k = 0; k < len; ++k) {
            next[k + 1] += c[k];
            next[k] -= c[k] * xs[i];
        }
        next[0] += ys[i];
        for (size_t k = 0; k <= len; ++k) c[k] = next[k];
        ++len;
    }
    c.resize(static_cast<size_t>(d) + 1);
    return c;
}

// The single point where a binary form is a d-th power, or false.
template <typename S>
bool single_point(const std::vector<S>& c, const std::array<S, 3>& p, const std::array<S, 3>& v,
                  const BigFloat& scale, std::array<S, 3>& point) {
    size_t d = c.size() - 1;
    if (std::all_of(c.begin(), c.end(), [&](const S& x) { return Scalar<S>::zero(x, scale); })) return false;
    if (Scalar<S>::zero(c[d], scale)) {
        for (size_t k = 1; k <= d; ++k)
            if (!Scalar<S>::zero(c[k], scale)) return false;
        point = v;
        return true;
    }
    S r = -c[d - 1] / (S(static_cast<long>(d)) * c[d]);
    // c_k = c_d binom(d, k) (-r)^(d-k)
    S binom = S(1);
    for (size_t k = d; k-- > 0;) {
        binom = binom * S(static_cast<long>(k + 1)) / S(static_cast<long>(d - k));
        S expect = c[d] * binom;
        for (size_t e = 0; e < d - k; ++e) expect *= -r;
        if (!Scalar<S>::zero(c[k] - expect, scale)) return false;
    }
    point = {p[0] + r * v[0], p[1] + r * v[1], p[2] + r * v[2]};
    return true;
}

template <typename S>
PlanePoint to_plane_point(const std::array<S, 3>& x);
template <>
PlanePoint to_plane_point<Rational>(const std::array<Rational, 3>& x) {
    PlanePoint p;
    p.coords = normalize(x);
    for (size_t i = 0; i < 3; ++i) p.approx[i] = BigComplex(to_big(p.coords[i]));
    return p;
}
template <>
PlanePoint to_plane_point<BigComplex>(const std::array<BigComplex, 3>& x) {
    PlanePoint p;
    p.exact = false;
    p.approx = normalize(x);
    return p;
}

template <typename S>
void set_line(ExcludedLine& out, const std::array<S, 3>& l);
template <>
void set_line<Rational>(ExcludedLine& out, const std::array<Rational, 3>& l) {
    out.line = normalize(l);
    for (size_t i = 0; i < 3; ++i) out.approx[i] = BigComplex(to_big(out.line[i]));
}
template <>
void set_line<BigComplex>(ExcludedLine& out, const std::array<BigComplex, 3>& l) {
    out.exact = false;
    out.approx = normalize(l);
}

// Tests the tangent line to `source` at p against the other curve and the quadric.
template <typename S>
bool check_candidate(const Configuration& conf, int quadric, int source, int other, const std::array<S, 3>& p,
                     ExcludedLine& out) {
    const Poly3& F = conf.curves[static_cast<size_t>(source)].poly;
    std::array<S, 3> l{eval3(F.partial(0), p), eval3(F.partial(1), p), eval3(F.partial(2), p)};
    BigFloat ps = scale_of(p);
    BigFloat ls = scale_of(l);
    if (is_null(l, ls * ps)) return false;  // singular point
    std::array<S, 3> v{};
    bool found = false;
    for (int k = 0; k < 3 && !found; ++k) {
        std::array<S, 3> e{S(0), S(0), S(0)};
        e[static_cast<size_t>(k)] = S(1);
        v = cross(l, e);
        BigFloat vs = scale_of(v);
        found = !is_null(v, vs) && !is_null(cross(v, p), vs * ps);
    }
    if (!found) return false;
    BigFloat scale = 1;
    for (const auto& x : p) scale += Scalar<S>::mag(x);
    for (const auto& x : v) scale += Scalar<S>::mag(x);

    auto coeff_scale = [&](const Poly3& H) {
        BigFloat s = 0;
        for (const auto& [e, c] : H.terms()) s += BigFloat(abs(to_big(c)));
        BigFloat out = s;
        for (int k = 0; k < H.total_degree(); ++k) out *= scale;
        return out;
    };
    // Source: contact of full order at p.
    std::vector<S> cs = restrict_to_line(F, p, v);
    BigFloat ss = coeff_scale(F);
    for (size_t k = 0; k + 1 < cs.size(); ++k)
        if (!Scalar<S>::zero(cs[k], ss)) return false;
    // Other curve: a single point R.
    const Poly3& G = conf.curves[static_cast<size_t>(other)].poly;
    std::array<S, 3> R{};
    if (!single_point(restrict_to_line(G, p, v), p, v, coeff_scale(G), R)) return false;
    // Quadric: exactly {p, R} with R != p.
    const Poly3& Q = conf.curves[static_cast<size_t>(quadric)].poly;
    std::vector<S> cq = restrict_to_line(Q, p, v);
    BigFloat qs = coeff_scale(Q);
    if (!Scalar<S>::zero(cq[0], qs) || Scalar<S>::zero(cq[1], qs)) return false;
    std::array<S, 3> second{cq[2] * p[0] - cq[1] * v[0], cq[2] * p[1] - cq[1] * v[1], cq[2] * p[2] - cq[1] * v[2]};
    if (!is_null(cross(second, R), scale_of(second) * scale_of(R))) return false;

    set_line(out, l);
    out.quadric = quadric;
    PlanePoint ps_pt = to_plane_point(p), r_pt = to_plane_point(R);
    out.others = {std::min(source, other), std::max(source, other)};
    out.touch = source < other ? std::array<PlanePoint, 2>{ps_pt, r_pt} : std::array<PlanePoint, 2>{r_pt, ps_pt};
    return true;
}

}  // namespace

std::string ExcludedLine::to_string() const {
    std::string s;
    const char* names[3] = {"x0", "x1", "x2"};
    for (size_t i = 0; i < 3; ++i) {
        std::string c = exact ? coord_string(line[i]) : coord_string(approx[i]);
        if (c == "0") continue;
        if (!s.empty()) s += " + ";
        s += (c == "1" ? std::string() : "(" + c + ")*") + names[i];
    }
    return s + " = 0";
}

ExclusionReport quadric_line_exclusion(const Configuration& conf, std::uint64_t seed) {
    ExclusionReport rep;
    std::vector<int> quadrics;
    for (int i = 0; i < 3; ++i) {
        int d = conf.curves[static_cast<size_t>(i)].degree;
        if (d > kExclusionMaxDegree)
            throw UnsupportedError("search unsupported at this degree: C" + std::to_string(i + 1) + " has degree " +
                                   std::to_string(d) + " (cap " + std::to_string(kExclusionMaxDegree) + ")");
        if (d == 2) quadrics.push_back(i);
    }
    if (quadrics.empty()) {
        rep.vacuous = true;
        rep.notes.push_back("no quadric in the configuration");
        return rep;
    }
    for (int q : quadrics) {
        std::array<int, 2> others{};
        for (int i = 0, k = 0; i < 3; ++i)
            if (i != q) others[static_cast<size_t>(k++)] = i;
        int source = -1;
        for (int o : others)
            if (conf.curves[static_cast<size_t>(o)].degree >= 3 &&
                (source < 0 || conf.curves[static_cast<size_t>(o)].degree >
                                   conf.curves[static_cast<size_t>(source)].degree))
                source = o;
        if (source < 0)
            throw UnsupportedError("both other curves are conics or lines: their tangent lines form a family");
        int other = others[0] == source ? others[1] : others[0];
        const PlaneCurve& src = conf.curves[static_cast<size_t>(source)];
        PlaneCurve hess{hessian(src.poly), 3 * (src.degree - 2)};
        if (hess.poly.is_zero())
            throw PreconditionError("C" + std::to_string(source + 1) + " has an identically zero Hessian");
        Intersection flexes = intersection_points(src, hess, seed);
        size_t before = rep.lines.size();
        for (const auto& g : flexes.groups) {
            QPoly on_quadric = vanishing_part(g, conf.curves[static_cast<size_t>(q)].poly);
            for (const auto& pt : group_points(g, on_quadric)) {
                ExcludedLine line;
                bool hit = pt.exact ? check_candidate<Rational>(conf, q, source, other, pt.coords, line)
                                    : check_candidate<BigComplex>(conf, q, source, other, pt.approx, line);
                if (hit) rep.lines.push_back(line);
            }
        }
        rep.notes.push_back("quadric C" + std::to_string(q + 1) + ": " + std::to_string(flexes.points.size()) +
                            " flex points of C" + std::to_string(source + 1) + " examined, " +
                            std::to_string(rep.lines.size() - before) + " excluded lines");
    }
    rep.pass = rep.lines.empty();
    return rep;
}

}  // namespace hyp
