#pragma once

#include "sigmatau/abelian.hpp"
#include "sigmatau/partition.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace sigmatau {

// τ(t;u)/τ(0;u) = σ(u + Σ R_k t_k)/σ(u) · exp(½ Σ ω_{k-1,l-1} t_k t_l),
// expanded once up to total t-weight max_weight.
class TauModel {
public:
    // Builds the winding and ω tables itself (max_time_index = max_weight + 1).
    TauModel(CurveContextPtr c, int max_weight);
    // Uses precomputed tables; both must cover max_weight + 1 time indices.
    TauModel(CurveContextPtr c, WindingData R, OmegaAlgTable omega, int max_weight);

    const CurveContext& curve() const { return *c_; }
    const CurveContextPtr& curve_ptr() const { return c_; }
    int genus() const { return c_->genus(); }
    int max_weight() const { return max_weight_; }
    int max_time_index() const { return max_weight_ + 1; }
    const WindingData& winding() const { return R_; }
    const OmegaAlgTable& omega() const { return omega_; }
    // Pairing of t_k t_l in the exponent.
    const MultiPoly& q(int k, int l) const { return omega_.at(k - 1, l - 1); }
    const SigmaLadder& ladder() const { return ladder_; }

    // ∂_{t_J} (τ/τ0) at t = 0, in σ_J/σ symbols. Throws TruncationError past
    // max_weight.
    MultiPoly tau_t_derivative(const std::vector<int>& Jt) const;
    // s_λ(∂̃)τ/τ0 at t = 0, ladder-reduced to ζ and ℘. Memoized.
    MultiPoly xi(const Partition& lambda) const;
    // (-1)^{n+1} ξ_{(m|n)}
    MultiPoly a_hook(int m, int n) const;

private:
    CurveContextPtr c_;
    int max_weight_;
    WindingData R_;
    OmegaAlgTable omega_;
    SigmaLadder ladder_;
    // t-exponent vector (index k-1) -> coefficient of Π t_k^{a_k} in τ/τ0
    std::map<std::vector<int>, MultiPoly> jet_;
    mutable std::mutex mu_;
    mutable std::map<Partition, MultiPoly> xi_memo_;

    void build_jet();
    const MultiPoly& jet(const std::vector<int>& a) const;
};

} // namespace sigmatau
