#pragma once

#include "sigmatau/curve.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace sigmatau {

// Number of indices of a ζ/℘/σ symbol (ζ_i counts as 1), 0 otherwise.
int index_count(Symbol s);
bool is_wp(Symbol s, int indices);

// ∂/∂u_i: ∂ζ_j = -℘_ij, ∂℘_J = ℘_{J+i}, ∂(σ_J/σ) = σ_{J+i}/σ - (σ_J/σ)(σ_i/σ).
MultiPoly u_derivative(const CurveContext& c, const MultiPoly& e, int i);
// ι: u ↦ -u. ζ and σ-ratios/℘ pick up (-1)^{#indices}.
MultiPoly parity_involution(const MultiPoly& e);
// +1 / -1 when e is ι-even / ι-odd, 0 when mixed (or zero).
int parity(const MultiPoly& e);
// Splits e into its ι-even and ι-odd parts.
std::pair<MultiPoly, MultiPoly> parity_parts(const MultiPoly& e);

// Sigma ladder P_J = σ_J/σ in ζ and ℘, memoized per curve.
class SigmaLadder {
public:
    explicit SigmaLadder(CurveContextPtr c) : c_(std::move(c)) {}
    const MultiPoly& of(std::vector<int> J) const;
    // Replaces every σ_J/σ symbol by P_J.
    MultiPoly reduce(const MultiPoly& e) const;
    const CurveContext& curve() const { return *c_; }

private:
    CurveContextPtr c_;
    mutable std::mutex mu_;
    mutable std::map<std::vector<int>, MultiPoly> memo_;
};

} // namespace sigmatau
