#pragma once

#include "sigmatau/relation.hpp"

#include <vector>

namespace sigmatau {

// Genus-2 Klein identity at P → ∞, paired with one of the divisor points
// (x_k, y_k):
//   Σ ℘_ij(u + δ(ξ)) U_i(x, y) U_j(x_k, y_k) - 𝓕(x, y; x_k, y_k)/(x - x_k)²
// with U = (2x, 2) and δ_i = ∫ du_i. The result is a Laurent series whose
// coefficients must all vanish.
struct KleinExpansion {
    Symbol xk, yk;
    LaurentSeries difference;
    int first = 0; // lowest exponent with a nonzero coefficient
    // Coefficient of ξ^n; throws TruncationError past the computed order.
    MultiPoly at(int n) const { return difference.coeff(n); }
    std::vector<MultiPoly> equations() const;
};

KleinExpansion klein_expand(const CurveContext& c, int order);

struct JacobiInversion {
    MultiPoly jip2;  // ℘12 + x_k ℘11 - x_k²
    MultiPoly jip2a; // y_k + ℘112 + x_k ℘111
    // Next coefficient with y_k and x_k² eliminated: a x_k + b.
    MultiPoly linear;
    MultiPoly coeff_xk1, coeff_xk0;
    // ℘1111 and ℘1112 solved forms, then their cross-derivative.
    std::vector<Relation> relations;
};

JacobiInversion jacobi_inversion_extract(const CurveContext& c, const KleinExpansion& e);

// Reduces a polynomial in x_k modulo x_k² = ℘11 x_k + ℘12.
MultiPoly reduce_mod_jip2(const CurveContext& c, const MultiPoly& p, Symbol xk);

} // namespace sigmatau
