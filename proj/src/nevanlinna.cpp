#include "hyp/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace hyp {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr long kMaxPanels = 1L << 23;
constexpr int kMaxSubdivision = 48;

long next_pow2(double x) {
    long n = 1;
    while (static_cast<double>(n) < x && n < kMaxPanels) n <<= 1;
    return n;
}

/// Bound on |d/dtheta| of the phase of any single term on |xi| = r.
double bandwidth(const ExpPoly& h, double r) {
    double b = 0.0;
    for (const auto& t : h.terms()) {
        double s = std::max(0, t.coeff.degree());
        for (int j = 1; j <= t.exponent.degree(); ++j)
            s += j * std::abs(t.exponent.coeff(j).to_complex()) * std::pow(r, j);
        b = std::max(b, s);
    }
    return b;
}

double log_norm(const std::vector<CompiledExpPoly>& comps, std::complex<double> z) {
    double m = -std::numeric_limits<double>::infinity();
    std::vector<double> l(comps.size());
    for (size_t i = 0; i < comps.size(); ++i) {
        l[i] = comps[i].eval_scaled(z).log_abs();
        m = std::max(m, l[i]);
    }
    if (!std::isfinite(m))
        throw PreconditionError("curve components vanish simultaneously on the circle");
    double s = 0.0;
    for (double v : l) s += std::exp(2.0 * (v - m));
    return m + 0.5 * std::log(s);
}

struct PhaseSample {
    double theta;
    std::complex<double> unit;  // h / |h|
    double speed;               // d arg h / d theta
    bool near_zero;
};

class PhaseTracker {
public:
    PhaseTracker(const CompiledExpPoly& h, const CompiledExpPoly& dh, double r, double near_zero)
        : h_(h), dh_(dh), r_(r), near_zero_(near_zero) {}

    PhaseSample sample(double theta) const {
        std::complex<double> z = std::polar(r_, theta);
        ScaledValue v = h_.eval_scaled(z);
        PhaseSample s{theta, {1.0, 0.0}, 0.0, false};
        double mag = std::abs(v.mantissa);
        if (mag == 0.0) {
            s.near_zero = true;
            return s;
        }
        s.unit = v.mantissa / mag;
        ScaledValue d = dh_.eval_scaled(z);
        if (std::abs(d.mantissa) == 0.0) return s;
        double log_ratio = d.log_abs() - v.log_abs();  // log |h'/h|
        if (log_ratio > std::log(1.0 / (near_zero_ * r_))) {
            s.near_zero = true;
            return s;
        }
        std::complex<double> ratio = std::exp(d.log_scale - v.log_scale) * d.mantissa / v.mantissa;
        s.speed = std::real(z * ratio);
        return s;
    }

    /// Phase increment over [a, b]; false when a zero is too close to resolve.
    bool increment(const PhaseSample& a, const PhaseSample& b, int depth, double& out) const {
        if (a.near_zero || b.near_zero) return false;
        double delta = std::arg(b.unit / a.unit);
        double predicted = 0.5 * (b.theta - a.theta) * (a.speed + b.speed);
        if (std::abs(delta) <= M_PI / 8 && std::abs(predicted) <= M_PI / 4 &&
            std::abs(predicted - delta) <= M_PI / 4) {
            out += delta;
            return true;
        }
        if (depth >= kMaxSubdivision) return false;
        PhaseSample m = sample(0.5 * (a.theta + b.theta));
        return increment(a, m, depth + 1, out) && increment(m, b, depth + 1, out);
    }

private:
    const CompiledExpPoly& h_;
    const CompiledExpPoly& dh_;
    double r_;
    double near_zero_;
};

/// Winding number on one fixed circle; false on failure (zero too close, non-integer).
bool try_winding(const CompiledExpPoly& h, const CompiledExpPoly& dh, double bw, double r,
                 double near_zero, long& out) {
    PhaseTracker tr(h, dh, r, near_zero);
    long n = std::max(32L, next_pow2(4.0 * bw));
    double step = kTwoPi / static_cast<double>(n);
    PhaseSample first = tr.sample(0.0);
    PhaseSample prev = first;
    double total = 0.0;
    for (long k = 1; k <= n; ++k) {
        PhaseSample cur = k == n ? PhaseSample{kTwoPi, first.unit, first.speed, first.near_zero}
                                 : tr.sample(step * static_cast<double>(k));
        if (!tr.increment(prev, cur, 0, total)) return false;
        prev = cur;
    }
    double w = total / kTwoPi;
    double rounded = std::round(w);
    if (std::abs(w - rounded) > 0.1) return false;
    out = static_cast<long>(rounded);
    return true;
}

class WindingEngine {
public:
    WindingEngine(const ExpPoly& h, const CountingOptions& opt)
        : h_(h), ch_(h), cdh_(differentiate(h)), opt_(opt) {}

    /// Winding at r, nudged deterministically inside (lo, hi) when a zero is too close.
    long at(double r, double lo, double hi, double* used) const {
        double span = std::min(r - lo, hi - r);
        double base = std::min(1e-6 * r, 0.25 * span);
        double bw = bandwidth(h_, r * 1.001);
        for (int k = 0; k <= opt_.max_nudges; ++k) {
            // 0, +1, -1, +2, -2, +4, -4, ... times base.
            double offset = 0.0;
            if (k > 0) {
                double mag = base * std::ldexp(1.0, (k - 1) / 2) / std::ldexp(1.0, opt_.max_nudges / 2);
                offset = (k % 2 == 1) ? mag : -mag;
            }
            double t = r + offset;
            if (t <= lo || t >= hi) continue;
            long w = 0;
            if (try_winding(ch_, cdh_, bw, t, opt_.near_zero, w)) {
                if (used) *used = t;
                return w;
            }
        }
        throw ConvergenceError("winding number unresolved near radius " + std::to_string(r) +
                                   " after " + std::to_string(opt_.max_nudges) + " nudges",
                               r);
    }

private:
    const ExpPoly& h_;
    CompiledExpPoly ch_;
    CompiledExpPoly cdh_;
    CountingOptions opt_;
};

void locate(const WindingEngine& eng, double lo, long n_lo, double hi, long n_hi,
            const CountingOptions& opt, std::vector<std::pair<double, long>>& jumps) {
    if (n_hi == n_lo) return;
    if (n_hi < n_lo) throw ConvergenceError("zero count decreased with the radius", lo);
    if (hi - lo <= opt.width * hi) {
        jumps.emplace_back(0.5 * (lo + hi), n_hi - n_lo);
        return;
    }
    double used = 0.5 * (lo + hi);
    long n_mid = eng.at(used, lo, hi, &used);
    locate(eng, lo, n_lo, used, n_mid, opt, jumps);
    locate(eng, used, n_mid, hi, n_hi, opt, jumps);
}

double one_norm(const HomDivisor& d) {
    double s = 0.0;
    for (const auto& [e, c] : d.poly.terms()) s += std::abs(c.to_complex());
    return s;
}

void check_radii(const std::vector<double>& radii) {
    if (radii.empty()) throw PreconditionError("at least one radius is required");
    for (size_t k = 0; k < radii.size(); ++k) {
        if (!(radii[k] >= kR0)) throw PreconditionError("radii must be at least r0 = 1");
        if (k > 0 && !(radii[k] > radii[k - 1]))
            throw PreconditionError("radii must be strictly increasing");
    }
}

}  // namespace

void validate(const ProjCurve& f) {
    if (f.components.size() < 2) throw PreconditionError("a curve needs at least two components");
    if (std::all_of(f.components.begin(), f.components.end(), [](const ExpPoly& c) { return is_zero(c); }))
        throw PreconditionError("all curve components are identically zero");
}

void validate(const HomDivisor& d, int nvars) {
    if (d.degree < 1) throw PreconditionError("divisor degree must be positive");
    if (d.poly.nvars() != nvars)
        throw PreconditionError("divisor has " + std::to_string(d.poly.nvars()) +
                                " variables, curve has " + std::to_string(nvars) + " components");
    if (!d.poly.is_homogeneous(d.degree))
        throw PreconditionError("divisor polynomial is not homogeneous of degree " +
                                std::to_string(d.degree));
}

ExpPoly compose(const HomDivisor& d, const ProjCurve& f) {
    validate(f);
    validate(d, static_cast<int>(f.components.size()));
    return d.poly.eval_as<ExpPoly>(f.components, [](const ExactComplex& c) { return ExpPoly(c); },
                                   ExpPoly());
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw PreconditionError("line fit needs two or more points");
    auto n = static_cast<double>(x.size());
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
    }
    if (sxx == 0.0) throw PreconditionError("line fit needs distinct abscissae");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        double r = y[k] - (f.slope * x[k] + f.intercept);
        ss += r * r;
    }
    f.rms = std::sqrt(ss / n);
    return f;
}

double circle_mean(const std::function<double(std::complex<double>)>& g, double r, long n_min,
                   double tol) {
    long n = std::max(8L, n_min);
    double sum = 0.0;
    for (long k = 0; k < n; ++k) sum += g(std::polar(r, kTwoPi * static_cast<double>(k) / static_cast<double>(n)));
    double prev = sum / static_cast<double>(n);
    double diff = std::numeric_limits<double>::infinity();
    while (n < kMaxPanels) {
        double odd = 0.0;
        for (long k = 0; k < n; ++k)
            odd += g(std::polar(r, M_PI * static_cast<double>(2 * k + 1) / static_cast<double>(n)));
        sum += odd;
        n *= 2;
        double cur = sum / static_cast<double>(n);
        diff = std::abs(cur - prev);
        if (diff <= tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw ConvergenceError("circle quadrature did not converge at radius " + std::to_string(r), diff);
}

double characteristic(const ProjCurve& f, double r, double tol) {
    validate(f);
    if (!(r >= kR0)) throw PreconditionError("radius must be at least r0 = 1");
    std::vector<CompiledExpPoly> comps;
    double bw = 0.0;
    for (const auto& c : f.components) {
        comps.emplace_back(c);
        bw = std::max(bw, bandwidth(c, r));
    }
    return circle_mean([&](std::complex<double> z) { return log_norm(comps, z); }, r,
                       next_pow2(std::max(64.0, 4.0 * bw)), tol);
}

double characteristic_scalar(const ExpPoly& g, double r, double tol) {
    if (!(r >= kR0)) throw PreconditionError("radius must be at least r0 = 1");
    CompiledExpPoly cg(g);
    return circle_mean([&](std::complex<double> z) { return std::max(0.0, cg.eval_scaled(z).log_abs()); },
                       r, next_pow2(std::max(64.0, 4.0 * bandwidth(g, r))), tol);
}

double log_mean(const ExpPoly& h, double r, double tol) {
    if (is_zero(h)) throw PreconditionError("log mean of the zero function");
    CompiledExpPoly ch(h);
    return circle_mean([&](std::complex<double> z) { return ch.eval_scaled(z).log_abs(); }, r,
                       next_pow2(std::max(256.0, 8.0 * bandwidth(h, r))), tol);
}

double jensen_counting(const ExpPoly& h, double r, double tol) {
    if (!(r >= kR0)) throw PreconditionError("radius must be at least r0 = 1");
    return log_mean(h, r, tol) - log_mean(h, kR0, tol);
}

long ZeroModuli::count(double r) const {
    long n = inner_count;
    for (const auto& [rho, m] : jumps)
        if (rho <= r) n += m;
    return n;
}

double ZeroModuli::counting(double r) const {
    if (r > r_outer * (1.0 + 1e-12)) throw PreconditionError("radius beyond the located zeros");
    double n = static_cast<double>(inner_count) * std::log(r / kR0);
    for (const auto& [rho, m] : jumps)
        if (rho < r) n += static_cast<double>(m) * std::log(r / std::max(rho, kR0));
    return n;
}

long winding_number(const ExpPoly& h, double r, double lo, double hi, double* used,
                    const CountingOptions& opt) {
    if (is_zero(h)) throw PreconditionError("winding number of the zero function");
    WindingEngine eng(h, opt);
    return eng.at(r, lo, hi, used);
}

ZeroModuli zero_moduli(const ExpPoly& h, double r_outer, const CountingOptions& opt) {
    if (is_zero(h)) throw PreconditionError("P o f vanishes identically");
    if (!(r_outer >= kR0)) throw PreconditionError("radius must be at least r0 = 1");
    WindingEngine eng(h, opt);
    ZeroModuli z;
    double lo = kR0, hi = r_outer;
    z.inner_count = eng.at(kR0, 0.5 * kR0, std::max(1.5 * kR0, r_outer), &lo);
    z.r_inner = lo;
    if (r_outer > lo) {
        long n_hi = eng.at(r_outer, lo, 2.0 * r_outer, &hi);
        z.r_outer = std::max(hi, r_outer);
        locate(eng, lo, z.inner_count, hi, n_hi, opt, z.jumps);
    } else {
        z.r_outer = lo;
    }
    std::sort(z.jumps.begin(), z.jumps.end());
    return z;
}

double counting(const ProjCurve& f, const HomDivisor& d, double r, const CountingOptions& opt) {
    if (!(r >= kR0)) throw PreconditionError("radius must be at least r0 = 1");
    ExpPoly h = compose(d, f);
    if (is_zero(h)) throw PreconditionError("P o f vanishes identically");
    return zero_moduli(h, r, opt).counting(r);
}

GrowthReport order_estimate(const ProjCurve& f, const std::vector<double>& radii, double tol) {
    check_radii(radii);
    if (radii.size() < 4) throw PreconditionError("order estimation needs at least 4 radii");
    if (radii.back() < 10.0 * radii.front())
        throw PreconditionError("order estimation needs radii spanning at least one decade");
    GrowthReport g;
    g.radii = radii;
    std::vector<double> lr;
    for (double r : radii) {
        g.values.push_back(characteristic(f, r, tol));
        lr.push_back(std::log(r));
    }
    g.log_fit = fit_line(lr, g.values);
    double scale = 0.0;
    for (double v : g.values) scale = std::max(scale, std::abs(v));
    g.log_fit_relative = scale > 0.0 ? g.log_fit.rms / scale : 0.0;
    g.log_growth = scale == 0.0 || g.log_fit_relative <= 0.01;
    auto [lo, hi] = std::minmax_element(g.values.begin(), g.values.end());
    bool constant = *hi - *lo <= 10.0 * tol * std::max(1.0, scale);
    g.degenerate = constant ||
                   std::any_of(g.values.begin(), g.values.end(), [](double v) { return !(v > 0.0); });
    if (!g.degenerate) {
        std::vector<double> lt;
        for (double v : g.values) lt.push_back(std::log(v));
        g.fitted_slope = fit_line(lr, lt).slope;
    }
    g.fitted_order = (g.degenerate || g.log_growth) ? 0.0 : g.fitted_slope;
    return g;
}

FmtReport fmt_check(const ProjCurve& f, const HomDivisor& d, const std::vector<double>& radii,
                    double tol, const CountingOptions& opt) {
    check_radii(radii);
    ExpPoly h = compose(d, f);
    if (is_zero(h)) throw PreconditionError("P o f vanishes identically");
    double r_max = std::max(radii.back(), 1.2 * kR0);
    ZeroModuli zm = zero_moduli(h, r_max, opt);

    // Jensen: mean log|h| on |xi| = t equals A(r0) + N(t). Take t >= r0 away from zero moduli.
    double t = kR0;
    for (int k = 0; k < 20; ++k) {
        t = kR0 * (1.0 + 0.01 * k);
        bool clear = std::none_of(zm.jumps.begin(), zm.jumps.end(),
                                  [&](const auto& j) { return std::abs(j.first - t) < 2e-3 * t; });
        if (clear) break;
    }
    CompiledExpPoly ch(h);
    double a_t = circle_mean([&](std::complex<double> z) { return ch.eval_scaled(z).log_abs(); }, t,
                             next_pow2(std::max(256.0, 8.0 * bandwidth(h, t))), 1e-10);
    double a_r0 = a_t - zm.counting(t);

    FmtReport rep;
    rep.radii = radii;
    rep.degree = d.degree;
    rep.constant = std::log(one_norm(d)) - a_r0;
    rep.max_violation = -std::numeric_limits<double>::infinity();
    for (double r : radii) {
        double T = characteristic(f, r, kDefaultTol);
        double N = zm.counting(r);
        rep.T.push_back(T);
        rep.N.push_back(N);
        double v = N - d.degree * T - rep.constant;
        rep.violation.push_back(v);
        rep.defect.push_back(d.degree * T - N);
        rep.max_violation = std::max(rep.max_violation, v);
    }
    rep.pass = rep.max_violation <= tol;
    return rep;
}

ExactComplex determinant(std::vector<std::vector<ExactComplex>> m) {
    size_t n = m.size();
    ExactComplex det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return ExactComplex(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        ExactComplex inv = m[c][c].inverse();
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            ExactComplex factor = m[r][c] * inv;
            for (size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
        }
    }
    return det;
}

void check_general_position(const std::vector<HomDivisor>& hyperplanes, int nvars) {
    std::vector<std::vector<ExactComplex>> forms;
    for (const auto& hp : hyperplanes) {
        validate(hp, nvars);
        if (hp.degree != 1) throw PreconditionError("hyperplanes must have degree 1");
        std::vector<ExactComplex> row;
        for (int i = 0; i < nvars; ++i) {
            Exponents e(static_cast<size_t>(nvars), 0);
            e[static_cast<size_t>(i)] = 1;
            row.push_back(hp.poly.coeff(e));
        }
        forms.push_back(std::move(row));
    }
    auto q = forms.size();
    auto k = static_cast<size_t>(nvars);
    if (q < k) return;
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<std::vector<ExactComplex>> m;
        for (size_t i : idx) m.push_back(forms[i]);
        if (determinant(m).is_zero()) {
            std::string s;
            for (size_t i : idx) s += (s.empty() ? "" : ",") + std::to_string(i);
            throw PreconditionError("hyperplanes not in general position: subset {" + s + "} is dependent");
        }
        // Next combination in lexicographic order.
        size_t i = k;
        while (i > 0 && idx[i - 1] == q - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

SmtReport smt_check(const ProjCurve& f, const std::vector<HomDivisor>& hyperplanes,
                    const std::vector<double>& radii, double tol, const CountingOptions& opt) {
    validate(f);
    check_radii(radii);
    auto nvars = static_cast<int>(f.components.size());
    int n = nvars - 1;
    auto q = static_cast<int>(hyperplanes.size());
    if (q < n + 2)
        throw PreconditionError("need at least n+2 = " + std::to_string(n + 2) + " hyperplanes, got " +
                                std::to_string(q));
    check_general_position(hyperplanes, nvars);
    if (is_zero(wronskian(f.components)))
        throw PreconditionError("curve is linearly degenerate (Wronskian vanishes identically)");

    SmtReport rep;
    rep.radii = radii;
    std::vector<ZeroModuli> zms;
    for (const auto& hp : hyperplanes) zms.push_back(zero_moduli(compose(hp, f), radii.back(), opt));
    rep.N.assign(hyperplanes.size(), {});
    double scale = 0.0;
    std::vector<double> lr;
    for (double r : radii) {
        double T = characteristic(f, r, tol);
        rep.T.push_back(T);
        double sum_n = 0.0;
        for (size_t j = 0; j < zms.size(); ++j) {
            double N = zms[j].counting(r);
            rep.N[j].push_back(N);
            sum_n += N;
        }
        double weighted = (q - n - 1) * T;
        scale = std::max(scale, std::abs(weighted));
        rep.delta.push_back(weighted - sum_n);
        lr.push_back(std::log(r));
    }
    if (radii.size() >= 2) {
        rep.fit = fit_line(lr, rep.delta);
    } else {
        rep.fit.intercept = rep.delta[0];
    }
    double denom = std::max(scale, 1.0);
    rep.relative_residual = rep.fit.rms / denom;
    double excess = -std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < radii.size(); ++k)
        excess = std::max(excess, rep.delta[k] - (rep.fit.slope * lr[k] + rep.fit.intercept));
    rep.max_excess = excess / denom;
    rep.bound_holds = rep.max_excess <= kSmtResidual;
    rep.pass = rep.relative_residual < kSmtResidual && rep.bound_holds;
    return rep;
}

bool is_rational_quotient(const ExpPoly& f0, const ExpPoly& f1) {
    if (is_zero(f1)) throw PreconditionError("denominator is identically zero");
    // f0 = R f1 with R rational iff both have the same exponential classes and the
    // coefficient polynomials q0_k, q1_k share one ratio: q0_k q1_l = q0_l q1_k.
    auto c0 = f0.by_exponent();
    auto c1 = f1.by_exponent();
    if (c0.empty()) return true;
    if (c0.size() != c1.size()) return false;
    for (const auto& [e, q] : c0)
        if (!c1.count(e)) return false;
    const auto& [ref_e, ref_q1] = *c1.begin();
    const auto& ref_q0 = c0.at(ref_e);
    for (const auto& [e, q1] : c1)
        if (!(c0.at(e) * ref_q1 - ref_q0 * q1).is_zero()) return false;
    return true;
}

RationalGrowthReport rational_growth_test(const ExpPoly& f0, const ExpPoly& f1,
                                          const std::vector<double>& radii, double tol) {
    if (is_zero(f1)) throw PreconditionError("denominator is identically zero");
    check_radii(radii);
    RationalGrowthReport rep;
    rep.radii = radii;

    rep.rational = is_rational_quotient(f0, f1);

    // T([f0:f1]) is convex in log r; for a rational quotient its slope increases to the degree,
    // which never exceeds the largest coefficient degree D. Otherwise the slope is unbounded.
    int d = 0;
    for (const ExpPoly* g : {&f0, &f1})
        for (const auto& t : g->terms()) d = std::max(d, t.coeff.degree());
    ProjCurve f{{f0, f1}};
    for (double r : radii) rep.T.push_back(characteristic(f, r, tol));
    rep.max_log_slope = 0.0;
    for (size_t k = 1; k < radii.size(); ++k)
        rep.max_log_slope = std::max(rep.max_log_slope,
                                     (rep.T[k] - rep.T[k - 1]) / std::log(radii[k] / radii[k - 1]));
    rep.slope_bound = d + 0.25;
    rep.numeric_log_growth = rep.max_log_slope <= rep.slope_bound;
    rep.consistent = radii.size() < 2 || rep.numeric_log_growth == rep.rational;
    return rep;
}

}  // namespace hyp
