#pragma once

#include <string>
#include <vector>

#include "hyp/bivariate.hpp"
#include "hyp/cyclotomic.hpp"
#include "hyp/expfun.hpp"

namespace hyp {

using CycloPoly = BiPoly<CycloElem>;
using CycloRat = RatFunc<CycloElem>;

/// plain: (dz1)^i (dz2)^(M-i); log1: (dz1/z1)^i (dz2)^(M-i).
enum class FormBasis { plain, log1 };
std::string to_string(FormBasis b);

/// Symmetric M-form sum_i coeffs[i] * basis_i in the coordinates (z1, z2) = (x, y).
struct SymForm {
    int M = 0;
    FormBasis basis = FormBasis::plain;
    std::vector<CycloRat> coeffs;

    friend bool operator==(const SymForm& a, const SymForm& b) {
        return a.M == b.M && a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

/// (z1, z2) -> (z1^b, z2).
struct CyclicCover {
    int b = 1;
};

void validate(const SymForm& form);
void validate(const CyclicCover& cover);

/// Q(zeta_n), n = lcm(4, b): holds i and the deck rotations.
std::shared_ptr<const CycloField> cover_field(const CyclicCover& cover);

/// c * x^i y^j as a rational function.
CycloRat monomial(const CycloElem& c, int i, int j);

/// Coefficients moved into the field of the cover.
SymForm lift(const SymForm& form, const CyclicCover& cover);

/// Symmetric product; both forms must use the same basis.
SymForm sym_product(const SymForm& a, const SymForm& b);

/// g_k^* form with g_k(z1, z2) = (zeta_b^k z1, z2).
SymForm deck_pullback(const SymForm& form, int k, const CyclicCover& cover);

/// Product of the b deck pullbacks; degree b * M.
SymForm norm_form(const SymForm& form, const CyclicCover& cover);

/// r_i = z1^i coeff_i.
SymForm express_log_basis(const SymForm& form);
/// coeff_i = r_i / z1^i.
SymForm express_plain_basis(const SymForm& form);

/// Invariant form written in (xi1, xi2) = (z1^b, z2), using b dz1/z1 = dxi1/xi1. Keeps the
/// input basis. Throws PreconditionError naming a monomial whose z1-exponent is not a
/// multiple of b.
SymForm push_down(const SymForm& form, const CyclicCover& cover);

/// Inverse of push_down: substitutes xi1 = z1^b.
SymForm pull_up(const SymForm& form, const CyclicCover& cover);

struct AnnihilationResult {
    bool annihilates = false;
    ExpPoly residual;     // numerator of the pulled-back form, in units of (d eta)^M
    ExpPoly denominator;  // common denominator evaluated on the curve
};

/// Substitutes xi_i = g_i(eta); g1, g2 must be units c exp(P). Coefficients must lie in Q(i).
/// Throws PreconditionError when the common denominator vanishes on the curve.
AnnihilationResult annihilation_check(const SymForm& form, const ExpPoly& g1, const ExpPoly& g2);

std::string to_string(const CycloPoly& p);
std::string to_string(const SymForm& form);

}  // namespace hyp
