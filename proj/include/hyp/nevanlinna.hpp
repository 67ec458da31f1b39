#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hyp/expfun.hpp"
#include "hyp/mpoly.hpp"

namespace hyp {

/// Inner radius of every Nevanlinna functional.
inline constexpr double kR0 = 1.0;
inline constexpr double kDefaultTol = 1e-8;

/// Entire curve [f_0 : ... : f_n].
struct ProjCurve {
    std::vector<ExpPoly> components;
};

/// Hypersurface V(P) with P homogeneous of the given degree in n+1 variables.
struct HomDivisor {
    MPoly<ExactComplex> poly;
    int degree = 1;
};

/// Checks arity and homogeneity; throws PreconditionError otherwise.
void validate(const ProjCurve& f);
void validate(const HomDivisor& d, int nvars);

/// P(f_0, ..., f_n) as an exponential polynomial.
ExpPoly compose(const HomDivisor& d, const ProjCurve& f);

/// Least-squares line y = slope * x + intercept with root-mean-square residual.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms = 0.0;
};
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Mean of g over the circle |z| = r by doubling periodic trapezoid sums, starting from
/// n_min panels, until successive estimates differ by at most tol * max(1, |mean|).
double circle_mean(const std::function<double(std::complex<double>)>& g, double r, long n_min,
                   double tol);

/// (1/4pi) * integral of log ||f||^2 over |xi| = r.
double characteristic(const ProjCurve& f, double r, double tol = kDefaultTol);

/// (1/2pi) * integral of log+ |g| over |xi| = r.
double characteristic_scalar(const ExpPoly& g, double r, double tol = kDefaultTol);

/// (1/2pi) * integral of log |h| over |xi| = r.
double log_mean(const ExpPoly& h, double r, double tol = kDefaultTol);

/// N(h, 0, r) from Jensen's formula, log_mean(r) - log_mean(r0); no zero location.
/// Slower to converge when a zero lies close to either circle.
double jensen_counting(const ExpPoly& h, double r, double tol = kDefaultTol);

/// Zeros of an exponential polynomial located by modulus: n(r_inner) zeros in the closed
/// inner disk, then (modulus, multiplicity) jumps of the counting step function.
struct ZeroModuli {
    double r_inner = kR0;
    double r_outer = kR0;
    long inner_count = 0;
    std::vector<std::pair<double, long>> jumps;

    /// integral_{r_inner}^{r} n(t) dt / t for r_inner <= r <= r_outer.
    double counting(double r) const;
    long count(double r) const;
};

struct CountingOptions {
    double width = 1e-8;         // jump localisation, relative to the radius
    double near_zero = 1e-10;    // |h/h'| below near_zero * radius triggers a nudge
    int max_nudges = 12;
};

/// Winding number of h around |xi| = r. The radius may be nudged inside (lo, hi) when a zero
/// lies too close to the circle; the radius actually used is stored in *used.
/// Throws ConvergenceError when every nudge fails.
long winding_number(const ExpPoly& h, double r, double lo, double hi, double* used = nullptr,
                    const CountingOptions& opt = {});

ZeroModuli zero_moduli(const ExpPoly& h, double r_outer, const CountingOptions& opt = {});

/// N_f(D, r) relative to r0.
double counting(const ProjCurve& f, const HomDivisor& d, double r, const CountingOptions& opt = {});

struct GrowthReport {
    std::vector<double> radii;
    std::vector<double> values;
    double fitted_slope = 0.0;   // least-squares slope of log T against log r
    double fitted_order = 0.0;   // fitted_slope, or 0 when T grows like a log
    bool degenerate = false;     // T constant, or not positive somewhere: no log-log fit
    bool log_growth = false;     // T fits a*log r + b within 1% of max |T|
    LinearFit log_fit;           // T against log r
    double log_fit_relative = 0.0;
};

/// Requires at least 4 increasing radii >= r0 spanning at least one decade.
GrowthReport order_estimate(const ProjCurve& f, const std::vector<double>& radii,
                            double tol = kDefaultTol);

struct FmtReport {
    std::vector<double> radii;
    std::vector<double> T;
    std::vector<double> N;
    int degree = 1;
    double constant = 0.0;            // log ||P||_1 - mean log |P o f| on |xi| = r0
    std::vector<double> violation;    // N - d T - C
    std::vector<double> defect;       // d T - N
    double max_violation = 0.0;
    bool pass = false;
};

/// First Main Theorem: N <= d T + C with the single constant C above; pass iff every
/// violation is at most tol.
FmtReport fmt_check(const ProjCurve& f, const HomDivisor& d, const std::vector<double>& radii,
                    double tol = 1e-6, const CountingOptions& opt = {});

struct SmtReport {
    std::vector<double> radii;
    std::vector<double> T;
    std::vector<std::vector<double>> N;  // per hyperplane, per radius
    std::vector<double> delta;           // (q-n-1) T - sum N
    LinearFit fit;                       // delta against log r
    double relative_residual = 0.0;      // fit.rms / max((q-n-1) T)
    double max_excess = 0.0;             // max(delta - fit) / max((q-n-1) T)
    bool bound_holds = false;
    bool pass = false;
};

inline constexpr double kSmtResidual = 0.05;

/// Exact determinant over Q[i].
ExactComplex determinant(std::vector<std::vector<ExactComplex>> m);

/// Throws PreconditionError naming the first (n+1)-subset of linearly dependent forms.
void check_general_position(const std::vector<HomDivisor>& hyperplanes, int nvars);

/// Second Main Theorem defect fit. Preconditions: q >= n+2 linear forms in general
/// position and a linearly nondegenerate curve (nonzero Wronskian).
SmtReport smt_check(const ProjCurve& f, const std::vector<HomDivisor>& hyperplanes,
                    const std::vector<double>& radii, double tol = kDefaultTol,
                    const CountingOptions& opt = {});

struct RationalGrowthReport {
    bool rational = false;         // exact verdict
    bool numeric_log_growth = false;
    bool consistent = false;
    std::vector<double> radii;
    std::vector<double> T;
    double max_log_slope = 0.0;    // max of dT / d log r between consecutive radii
    double slope_bound = 0.0;      // largest coefficient degree + 1/4
};

/// Exact: f0/f1 is a rational function (f1 nonzero).
bool is_rational_quotient(const ExpPoly& f0, const ExpPoly& f1);

/// Exact test that f0/f1 is a rational function, cross-checked by the growth of T([f0:f1]).
RationalGrowthReport rational_growth_test(const ExpPoly& f0, const ExpPoly& f1,
                                          const std::vector<double>& radii,
                                          double tol = kDefaultTol);

}  // namespace hyp
