#pragma once

#include <string>
#include <vector>

#include "hyp/expfun.hpp"
#include "hyp/nevanlinna.hpp"
#include "hyp/roots.hpp"

namespace hyp {

/// coeff * (p1')^i (p2')^(M-i) * exp((i+j) p1 + (M-i+k) p2).
struct ExpTerm {
    ExactComplex coeff;
    int i = 0;
    int j = 0;
    int k = 0;
};

struct ExpSum {
    int M = 1;
    std::vector<ExpTerm> terms;
    Poly p1;
    Poly p2;
};

void validate(const ExpSum& sum);

/// The exponent (i+j) p1 + (M-i+k) p2 of one term, constant term included.
Poly term_exponent(const ExpSum& sum, const ExpTerm& t);
ExpPoly realize(const ExpSum& sum, const ExpTerm& t);
ExpPoly realize(const ExpSum& sum);

/// Terms whose exponents differ by a constant; `exponent` is the class exponent without
/// its constant term.
struct TermClass {
    Poly exponent;
    std::vector<size_t> indices;
};

std::vector<TermClass> partition_classes(const ExpSum& sum);

/// The sub-sum made of the listed terms.
ExpSum subset(const ExpSum& sum, const std::vector<size_t>& indices);

inline constexpr size_t kMaxClassSize = 20;

/// Disjoint inclusion-minimal vanishing sub-sums, per class, covering every term.
/// Throws PreconditionError("not an identity") unless realize(sum) is zero.
std::vector<ExpSum> minimal_vanishing_subsets(const ExpSum& sum);

// ---------------------------------------------------------------- Case 1

struct Case1Report {
    size_t L = 0;
    bool syntactic = false;              // L = 2
    bool refuted = false;
    std::string reason;
    std::vector<double> radii;
    std::vector<double> T;               // T(Psi, r)
    std::vector<double> N_budget;        // sum of N(psi_k, 0, r)
    std::vector<double> delta;           // T - sum N: the defect of L points in H = P^(L-2)
    LinearFit delta_fit;                 // delta against log r
    double delta_relative_residual = 0.0;
    LinearFit log_fit;                   // T against log r
    double log_fit_relative = 0.0;
    std::vector<double> envelope;        // T(r_min) log r / log r_min
    double envelope_ratio = 0.0;         // T / envelope at r_max
};

inline constexpr double kCase1Residual = 0.05;
inline constexpr double kCase1Envelope = 10.0;

/// Numeric evidence that psi_1 + ... + psi_L = 0 cannot hold when some quotient
/// psi_a / psi_b is not rational. Preconditions: L >= 2, some such pair, and for
/// L >= 3 a minimal vanishing sum.
Case1Report case1_refute(const std::vector<ExpPoly>& psi,
                         const std::vector<double>& radii = {4, 8, 16, 32},
                         double tol = kDefaultTol);
Case1Report case1_refute(const ExpSum& sum, const std::vector<double>& radii = {4, 8, 16, 32},
                         double tol = kDefaultTol);

// ---------------------------------------------------------------- Case 2

/// sum_i c_i x^i y^(M-i); terms sharing i are merged.
struct HomogeneousForm {
    int M = 0;
    std::vector<ExpScalar> coeffs;  // index i
    bool is_zero() const;
};

/// Linear factor lambda x - gamma y. Inexact factors carry gamma/lambda numerically only.
struct LinearFactor {
    ExactComplex lambda;
    ExactComplex gamma;
    bool exact = true;
    BigComplex approx;
    std::string to_string() const;
};

struct FormFactorization {
    ExpScalar leading;
    std::vector<LinearFactor> factors;  // with repetition
    bool all_exact = true;
};

/// Form of a single-class sum, with the constant exponent offsets moved into the coefficients.
HomogeneousForm homogeneous_form(const ExpSum& sum);
FormFactorization factor_form(const HomogeneousForm& form);
/// leading * product of factors; defined when every factor is exact.
HomogeneousForm expand(const FormFactorization& f, int M);

enum class OutcomeKind { case1_contradiction, case2_proportional, degenerate_input };
std::string to_string(OutcomeKind k);

struct SubsetResult {
    std::vector<size_t> indices;   // into the analysed sum
    Poly exponent;
    ExactComplex lambda;
    ExactComplex gamma;
    std::vector<std::string> factors;
};

struct AnalysisOutcome {
    OutcomeKind kind = OutcomeKind::degenerate_input;
    ExactComplex lambda;
    ExactComplex gamma;
    std::string omega0;                 // lambda dxi1/xi1 - gamma dxi2/xi2
    std::vector<std::string> factors;
    std::vector<SubsetResult> subsets;  // pipeline only
    std::vector<std::string> notes;
};

/// Single-class sum: returns the first linear factor of its form annihilating (p1', p2').
AnalysisOutcome case2_conclude(const ExpSum& sum);

AnalysisOutcome degeneracy_pipeline(const ExpSum& sum);

std::string omega0_string(const ExactComplex& lambda, const ExactComplex& gamma);

}  // namespace hyp
