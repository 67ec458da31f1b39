#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <optional>
#include <vector>

#include "hyp/exact.hpp"
#include "hyp/upoly.hpp"

namespace hyp {

using BigFloat = boost::multiprecision::cpp_bin_float_50;
using BigComplex = boost::multiprecision::cpp_complex_50;

BigFloat to_big(const Rational& q);
BigComplex to_big(const ExactComplex& z);

/// A root approximation together with a disk radius guaranteed to contain exactly one root.
struct CertifiedRoot {
    BigComplex value;
    BigFloat radius;
};

/// Simultaneous Aberth-Ehrlich iteration; coefficients ascending, leading one nonzero.
std::vector<BigComplex> aberth_roots(const std::vector<BigComplex>& coeffs);

/// Roots of a squarefree polynomial, each isolated in a disk of radius at most
/// width * max(1, |root|); the disks are pairwise disjoint.
/// Throws ConvergenceError when isolation fails.
std::vector<CertifiedRoot> certified_roots(const UPoly<ExactComplex>& p, double width = 1e-30);
std::vector<CertifiedRoot> certified_roots(const UPoly<Rational>& p, double width = 1e-30);

/// Best rational approximation with bounded denominator (continued fractions).
Rational rationalize(const BigFloat& x, long max_den);

/// Gaussian rational candidate near z; the caller verifies it exactly.
ExactComplex rationalize(const BigComplex& z, long max_den);

/// Exact rational roots, found as rationalized numeric roots that verify by substitution.
std::vector<Rational> rational_roots(const UPoly<Rational>& p);

}  // namespace hyp
