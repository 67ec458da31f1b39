#include "hyp/borel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

namespace hyp {

namespace {

using boost::multiprecision::abs;

Poly derivative_of(const Poly& p) { return p.derivative(); }

std::string paren(const ExactComplex& z) {
    std::string s = z.to_string();
    bool plain = s.find_first_of("+-/i", 1) == std::string::npos;
    return plain ? s : "(" + s + ")";
}

BigComplex to_big(const ExpScalar& s) {
    BigComplex acc(0);
    for (const auto& [c, r] : s.terms()) acc += hyp::to_big(r) * exp(hyp::to_big(c));
    return acc;
}

ExpScalar horner(const std::vector<ExpScalar>& c, const ExactComplex& z) {
    ExpScalar acc;
    ExpScalar zs(z);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * zs + *it;
    return acc;
}

// Quotient by (t - z); exact because the divisor is monic.
std::vector<ExpScalar> deflate(const std::vector<ExpScalar>& c, const ExactComplex& z) {
    std::vector<ExpScalar> q(c.size() - 1);
    ExpScalar carry;
    ExpScalar zs(z);
    for (size_t k = c.size() - 1; k >= 1; --k) {
        carry = c[k] + carry * zs;
        q[k - 1] = carry;
    }
    return q;
}

std::vector<BigComplex> numeric_roots(const std::vector<ExpScalar>& c) {
    std::vector<BigComplex> b;
    for (const auto& s : c) b.push_back(to_big(s));
    return aberth_roots(b);
}

// A vanishing sum of nonzero summands with no vanishing proper sub-sum.
bool minimal_vanishing(const std::vector<ExpPoly>& psi) {
    size_t L = psi.size();
    ExpPoly total;
    for (const auto& p : psi) total += p;
    if (!is_zero(total)) return false;
    for (unsigned long mask = 1; mask + 1 < (1UL << L); ++mask) {
        ExpPoly s;
        for (size_t k = 0; k < L; ++k)
            if (mask & (1UL << k)) s += psi[k];
        if (is_zero(s)) return false;
    }
    return true;
}

// First subset (by size, then lexicographically) of `pool` realizing zero.
std::vector<size_t> smallest_vanishing(const std::vector<ExpPoly>& realized,
                                       const std::vector<size_t>& pool) {
    size_t n = pool.size();
    for (size_t size = 1; size <= n; ++size) {
        std::vector<size_t> pick(size);
        for (size_t k = 0; k < size; ++k) pick[k] = k;
        while (true) {
            ExpPoly s;
            for (size_t k : pick) s += realized[pool[k]];
            if (is_zero(s)) {
                std::vector<size_t> out;
                for (size_t k : pick) out.push_back(pool[k]);
                return out;
            }
            // next combination
            size_t pos = size;
            while (pos > 0 && pick[pos - 1] == n - size + pos - 1) --pos;
            if (pos == 0) break;
            ++pick[pos - 1];
            for (size_t k = pos; k < size; ++k) pick[k] = pick[k - 1] + 1;
        }
    }
    return {};
}

std::vector<std::vector<size_t>> minimal_vanishing_indices(const ExpSum& sum) {
    validate(sum);
    if (!is_zero(realize(sum))) throw PreconditionError("not an identity");
    std::vector<ExpPoly> realized;
    for (const auto& t : sum.terms) realized.push_back(realize(sum, t));
    std::vector<std::vector<size_t>> out;
    for (const auto& cls : partition_classes(sum)) {
        if (cls.indices.size() > kMaxClassSize)
            throw UnsupportedError("exponential class with " + std::to_string(cls.indices.size()) +
                                   " terms exceeds the subset-search cap of " +
                                   std::to_string(kMaxClassSize));
        std::vector<size_t> pool = cls.indices;
        // The class sum vanishes, so removing a vanishing subset leaves a vanishing rest.
        while (!pool.empty()) {
            std::vector<size_t> s = smallest_vanishing(realized, pool);
            if (s.empty()) throw PreconditionError("not an identity");
            std::vector<size_t> rest;
            std::set_difference(pool.begin(), pool.end(), s.begin(), s.end(), std::back_inserter(rest));
            pool = std::move(rest);
            out.push_back(std::move(s));
        }
    }
    return out;
}

double relative(double rms, const std::vector<double>& v) {
    double m = 1.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return rms / m;
}

}  // namespace

// ---------------------------------------------------------------- sums

void validate(const ExpSum& sum) {
    if (sum.M < 1) throw PreconditionError("M must be positive");
    for (const auto& t : sum.terms) {
        if (t.i < 0 || t.i > sum.M) throw PreconditionError("term index i outside [0, M]");
        if (t.j < 0 || t.k < 0) throw PreconditionError("term indices j, k must be nonnegative");
    }
}

Poly term_exponent(const ExpSum& sum, const ExpTerm& t) {
    return ExactComplex(t.i + t.j) * sum.p1 + ExactComplex(sum.M - t.i + t.k) * sum.p2;
}

ExpPoly realize(const ExpSum& sum, const ExpTerm& t) {
    Poly c = t.coeff * derivative_of(sum.p1).pow(static_cast<unsigned>(t.i)) *
             derivative_of(sum.p2).pow(static_cast<unsigned>(sum.M - t.i));
    return ExpPoly::term(c, term_exponent(sum, t));
}

ExpPoly realize(const ExpSum& sum) {
    validate(sum);
    ExpPoly acc;
    for (const auto& t : sum.terms) acc += realize(sum, t);
    return acc;
}

std::vector<TermClass> partition_classes(const ExpSum& sum) {
    std::map<Poly, std::vector<size_t>> groups;
    for (size_t k = 0; k < sum.terms.size(); ++k) {
        std::vector<ExactComplex> c = term_exponent(sum, sum.terms[k]).coeffs();
        if (!c.empty()) c[0] = ExactComplex(0);
        groups[Poly(std::move(c))].push_back(k);
    }
    std::vector<TermClass> out;
    for (auto& [e, idx] : groups) out.push_back({e, std::move(idx)});
    return out;
}

ExpSum subset(const ExpSum& sum, const std::vector<size_t>& indices) {
    ExpSum s{sum.M, {}, sum.p1, sum.p2};
    for (size_t k : indices) s.terms.push_back(sum.terms.at(k));
    return s;
}

std::vector<ExpSum> minimal_vanishing_subsets(const ExpSum& sum) {
    std::vector<ExpSum> out;
    for (const auto& idx : minimal_vanishing_indices(sum)) out.push_back(subset(sum, idx));
    return out;
}

// ---------------------------------------------------------------- Case 1

Case1Report case1_refute(const std::vector<ExpPoly>& psi, const std::vector<double>& radii,
                         double tol) {
    size_t L = psi.size();
    if (L < 2) throw PreconditionError("Case 1 needs at least two summands");
    for (const auto& p : psi)
        if (is_zero(p)) throw PreconditionError("a summand vanishes identically");
    bool mixed = false;
    for (size_t a = 0; a < L && !mixed; ++a)
        for (size_t b = a + 1; b < L && !mixed; ++b) mixed = !is_rational_quotient(psi[a], psi[b]);
    if (!mixed) throw PreconditionError("all summands lie in one rational class (not Case 1)");

    Case1Report rep;
    rep.L = L;
    if (L == 2) {
        rep.syntactic = true;
        rep.refuted = true;
        rep.reason = "psi_1 + psi_2 = 0 would make psi_1 / psi_2 = -1 rational, but the quotient "
                     "carries a nonconstant exponential";
        return rep;
    }
    if (L > 16) throw UnsupportedError("minimality check is limited to 16 summands");
    if (!minimal_vanishing(psi))
        throw PreconditionError("summands must form a minimal vanishing sum");
    if (radii.size() < 2 || !(radii.front() > kR0))
        throw PreconditionError("at least two radii above r0 = 1 are required");
    for (size_t k = 1; k < radii.size(); ++k)
        if (!(radii[k] > radii[k - 1])) throw PreconditionError("radii must be strictly increasing");

    rep.radii = radii;
    ProjCurve f{psi};
    std::vector<double> logs;
    for (double r : radii) {
        double t = characteristic(f, r, tol);
        double n = 0.0;
        for (const auto& p : psi)
            if (!p.is_monomial_unit()) n += jensen_counting(p, r, tol);
        rep.T.push_back(t);
        rep.N_budget.push_back(n);
        rep.delta.push_back(t - n);
        logs.push_back(std::log(r));
    }
    rep.delta_fit = fit_line(logs, rep.delta);
    rep.delta_relative_residual = relative(rep.delta_fit.rms, rep.T);
    rep.log_fit = fit_line(logs, rep.T);
    rep.log_fit_relative = relative(rep.log_fit.rms, rep.T);
    for (double r : radii) rep.envelope.push_back(rep.T.front() / logs.front() * std::log(r));
    rep.envelope_ratio = rep.T.back() / rep.envelope.back();
    rep.refuted = rep.log_fit_relative > kCase1Residual || rep.envelope_ratio >= kCase1Envelope;
    std::ostringstream why;
    why.precision(6);
    if (rep.refuted)
        why << "T(Psi, r) outgrows every C log r (log-fit residual " << rep.log_fit_relative
            << ", T / envelope " << rep.envelope_ratio
            << " at r_max) while T - sum N stays logarithmic";
    else
        why << "T(Psi, r) is compatible with O(log r) on the sampled radii";
    rep.reason = why.str();
    return rep;
}

Case1Report case1_refute(const ExpSum& sum, const std::vector<double>& radii, double tol) {
    validate(sum);
    std::vector<ExpPoly> psi;
    for (const auto& t : sum.terms) psi.push_back(realize(sum, t));
    return case1_refute(psi, radii, tol);
}

// ---------------------------------------------------------------- Case 2

bool HomogeneousForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const ExpScalar& c) { return c.is_zero(); });
}

std::string LinearFactor::to_string() const {
    if (!exact) {
        std::ostringstream s;
        s.precision(15);
        s << "x - (" << approx.real() << (approx.imag() < 0 ? "" : "+") << approx.imag() << "i)*y";
        return s.str();
    }
    if (lambda.is_zero()) return gamma == ExactComplex(-1) ? "y" : paren(-gamma) + "*y";
    std::string s = lambda.is_one() ? "x" : paren(lambda) + "*x";
    if (gamma.is_zero()) return s;
    return s + " - " + (gamma.is_one() ? "y" : paren(gamma) + "*y");
}

HomogeneousForm homogeneous_form(const ExpSum& sum) {
    validate(sum);
    auto classes = partition_classes(sum);
    if (classes.size() > 1) throw PreconditionError("terms lie in different exponential classes");
    HomogeneousForm form;
    form.M = sum.M;
    form.coeffs.assign(static_cast<size_t>(sum.M) + 1, ExpScalar());
    for (const auto& t : sum.terms) {
        Poly e = term_exponent(sum, t);
        ExactComplex offset = e.is_zero() ? ExactComplex(0) : e.coeffs()[0];
        form.coeffs[static_cast<size_t>(t.i)] += ExpScalar::exp_term(t.coeff, offset);
    }
    return form;
}

FormFactorization factor_form(const HomogeneousForm& form) {
    if (form.is_zero()) throw PreconditionError("the homogeneous form is identically zero");
    size_t d = form.coeffs.size() - 1;
    while (form.coeffs[d].is_zero()) --d;
    FormFactorization out;
    out.leading = form.coeffs[d];
    // Roots at infinity: y divides the form M - d times.
    for (size_t k = d; k < static_cast<size_t>(form.M); ++k)
        out.factors.push_back({ExactComplex(0), ExactComplex(-1), true, BigComplex(0)});

    std::vector<ExpScalar> g(form.coeffs.begin(), form.coeffs.begin() + static_cast<long>(d) + 1);
    std::vector<ExactComplex> exact_roots;
    while (g.size() > 1) {
        bool found = false;
        for (const BigComplex& z : numeric_roots(g)) {
            for (long den = 1; den <= 1000000000L && !found; den *= 10) {
                ExactComplex cand = rationalize(z, den);
                if (horner(g, cand).is_zero()) {
                    g = deflate(g, cand);
                    exact_roots.push_back(cand);
                    found = true;
                }
            }
            if (found) break;
        }
        if (!found) break;
    }
    std::sort(exact_roots.begin(), exact_roots.end());
    for (const auto& z : exact_roots) out.factors.push_back({ExactComplex(1), z, true, BigComplex(0)});
    if (g.size() > 1) {
        out.all_exact = false;
        for (const BigComplex& z : numeric_roots(g))
            out.factors.push_back({ExactComplex(1), ExactComplex(0), false, z});
    }
    return out;
}

HomogeneousForm expand(const FormFactorization& f, int M) {
    if (!f.all_exact) throw PreconditionError("factorization has inexact factors");
    std::vector<ExpScalar> p{f.leading};  // index = power of x
    for (const auto& lf : f.factors) {
        std::vector<ExpScalar> q(p.size() + 1);
        for (size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += ExpScalar(lf.lambda) * p[i];
            q[i] -= ExpScalar(lf.gamma) * p[i];
        }
        p = std::move(q);
    }
    if (static_cast<int>(p.size()) - 1 != M) throw PreconditionError("factor count differs from M");
    return {M, std::move(p)};
}

std::string to_string(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::case1_contradiction:
            return "case1_contradiction";
        case OutcomeKind::case2_proportional:
            return "case2_proportional";
        case OutcomeKind::degenerate_input:
            return "degenerate_input";
    }
    return "";
}

std::string omega0_string(const ExactComplex& lambda, const ExactComplex& gamma) {
    return paren(lambda) + "*dxi1/xi1 - " + paren(gamma) + "*dxi2/xi2";
}

namespace {

std::optional<AnalysisOutcome> degenerate(const ExpSum& sum, bool constant_test) {
    Poly d1 = sum.p1.derivative(), d2 = sum.p2.derivative();
    AnalysisOutcome out;
    out.kind = OutcomeKind::degenerate_input;
    if (d1.is_zero()) {
        out.lambda = ExactComplex(1);
        out.notes.push_back(constant_test ? "p1 is constant" : "p1' vanishes identically");
    } else if (d2.is_zero()) {
        out.gamma = ExactComplex(1);
        out.notes.push_back(constant_test ? "p2 is constant" : "p2' vanishes identically");
    } else {
        return std::nullopt;
    }
    out.notes.push_back("g is algebraically degenerate");
    out.omega0 = omega0_string(out.lambda, out.gamma);
    return out;
}

}  // namespace

AnalysisOutcome case2_conclude(const ExpSum& sum) {
    validate(sum);
    if (sum.terms.empty()) throw PreconditionError("empty sum");
    if (auto d = degenerate(sum, false)) return *d;
    HomogeneousForm form = homogeneous_form(sum);
    FormFactorization fac = factor_form(form);
    Poly d1 = sum.p1.derivative(), d2 = sum.p2.derivative();
    AnalysisOutcome out;
    for (const auto& f : fac.factors) out.factors.push_back(f.to_string());
    for (const auto& f : fac.factors) {
        if (!f.exact) continue;
        if ((f.lambda * d1 - f.gamma * d2).is_zero()) {
            out.kind = OutcomeKind::case2_proportional;
            out.lambda = f.lambda;
            out.gamma = f.gamma;
            out.omega0 = omega0_string(f.lambda, f.gamma);
            return out;
        }
    }
    throw PreconditionError("inconsistent Case 2 input: no linear factor annihilates (p1', p2')");
}

AnalysisOutcome degeneracy_pipeline(const ExpSum& sum) {
    validate(sum);
    if (sum.p1.degree() <= 0 || sum.p2.degree() <= 0) return *degenerate(sum, true);
    std::vector<std::vector<size_t>> subsets = minimal_vanishing_indices(sum);
    AnalysisOutcome out;
    out.kind = OutcomeKind::case2_proportional;
    size_t skipped = 0;
    for (const auto& idx : subsets) {
        ExpSum s = subset(sum, idx);
        if (homogeneous_form(s).is_zero()) {
            ++skipped;
            continue;
        }
        AnalysisOutcome o = case2_conclude(s);
        SubsetResult r;
        r.indices = idx;
        r.exponent = partition_classes(s).front().exponent;
        r.lambda = o.lambda;
        r.gamma = o.gamma;
        r.factors = o.factors;
        out.subsets.push_back(std::move(r));
    }
    if (out.subsets.empty())
        throw PreconditionError("identity cancels termwise: no homogeneous relation is forced");
    out.lambda = out.subsets.front().lambda;
    out.gamma = out.subsets.front().gamma;
    out.factors = out.subsets.front().factors;
    out.omega0 = omega0_string(out.lambda, out.gamma);
    out.notes.push_back(std::to_string(partition_classes(sum).size()) + " exponential classes, " +
                        std::to_string(subsets.size()) + " minimal vanishing sub-sums");
    out.notes.push_back("no minimal vanishing sub-sum mixes exponential classes, so the Case 1 "
                        "branch does not occur");
    if (skipped > 0)
        out.notes.push_back(std::to_string(skipped) + " sub-sums cancel termwise and were skipped");
    return out;
}

}  // namespace hyp
