#pragma once

#include "sigmatau/partition.hpp"
#include "sigmatau/poly.hpp"

#include <vector>

namespace sigmatau {

// Time symbols t_k (weight -k) and scaled derivations ∂̃_k (weight k) live
// in one process-wide table shared by all Schur computations.
const SymbolTablePtr& schur_table();
Symbol time_symbol(int k);       // "t3"
Symbol derivation_symbol(int k); // "d3", acting as (1/k) ∂/∂t_k

// p_m(t) from m p_m = Σ_{j=1..m} j t_j p_{m-j}; p_0 = 1, p_m = 0 for m < 0.
const MultiPoly& elementary_schur(int m);
// Jacobi–Trudi: det(p_{λ_i - i + j}), or its dual in e_m = s_{1^m} when the
// transpose has fewer rows.
MultiPoly schur_poly(const Partition& lambda);
// s_{(a|b)} = (-1)^{b+1} Σ_{α=0..a} p_{b+α+1}(-t) p_{a-α}(t), computed without
// any determinant.
MultiPoly hook_schur(int arm, int leg);
// det(s_{(α_i|β_j)}) over the Frobenius coordinates.
MultiPoly giambelli_det(const Partition& lambda);
// t_k ↦ ∂̃_k.
MultiPoly as_diff_operator(const MultiPoly& time_poly);

// Exact determinant by cofactor expansion over column subsets; zero entries
// prune the search, so sparse (e.g. Hessenberg) matrices stay cheap.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

} // namespace sigmatau
