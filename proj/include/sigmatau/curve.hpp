#pragma once

#include "sigmatau/poly.hpp"
#include "sigmatau/series.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sigmatau {

enum class Family { HyperellipticG2, CyclicTrigonal34 };

struct CurveParam {
    std::string name;       // symbol name: a0..a4 or mu3..mu12
    int weight = 0;
    int x_power = 0;        // coefficient of x^x_power in P(x)
    std::optional<Rational> value; // specialized, or symbolic when empty
};

struct CurveSpec {
    Family family = Family::HyperellipticG2;
    int n = 2, s = 5, genus = 2;
    std::vector<int> gaps;
    std::vector<CurveParam> params;

    std::string family_name() const;
    // Stable text key: family plus every parameter assignment.
    std::string fingerprint() const;
};

CurveSpec make_curve_spec(Family f);
// `key = value` lines; '#' starts a comment.
CurveSpec parse_spec(std::string_view text);

// du_i = coeff * x^x_power dx / y^y_power
struct DifferentialForm {
    Rational coeff;
    int x_power = 0;
    int y_power = 1;
};

// A curve together with the symbol table every expression about it lives in.
class CurveContext {
public:
    explicit CurveContext(CurveSpec spec);

    const CurveSpec& spec() const { return spec_; }
    const SymbolTablePtr& table() const { return table_; }
    int genus() const { return spec_.genus; }
    int gap(int i) const { return spec_.gaps.at(i - 1); } // 1-based

    // Parameter by name (a4, mu3, ... or alpha4): its symbol, or its value
    // when specialized.
    MultiPoly param(const std::string& name) const;
    // Symbolic parameters, plus the grading symbol when there is one.
    std::vector<Symbol> param_symbols() const;

    // A parameter specialised to a nonzero value v of weight k enters as
    // v·h^k with h of weight 1, so every expression stays homogeneous.
    // Output sets h = 1; regrade() puts it back from the known weight.
    std::optional<Symbol> grading() const { return h_; }
    MultiPoly ungraded(const MultiPoly& p) const;
    MultiPoly regrade(const MultiPoly& p, int weight) const;

    Symbol x() const { return x_; }
    Symbol y() const { return y_; }
    Symbol z() const { return z_; }
    Symbol w() const { return w_; }
    // Coefficients of P(x) in y^n = P(x), index = power of x.
    const std::vector<MultiPoly>& p_coeffs() const { return p_; }
    MultiPoly curve_poly() const; // f(x, y) = y^n - P(x)
    MultiPoly curve_poly(Symbol x, Symbol y) const;
    // Leading coefficient c of y = c ξ^-s (1 + O(ξ)).
    Rational y_lead() const;
    const std::vector<DifferentialForm>& differential_forms() const { return forms_; }

    // Abelian symbols, interned on demand. Index multisets are 1-based.
    Symbol zeta(int i) const;
    Symbol wp(std::vector<int> J) const;
    Symbol sigma_ratio(std::vector<int> J) const;
    Symbol time(int k) const;

    // Resolves a name appearing in an expression: parameters (possibly
    // specialized), z1.., p11.., x/y/z/w. Unknown names throw ConfigError.
    MultiPoly resolve(const std::string& name) const;
    MultiPoly parse(std::string_view text) const;

private:
    CurveSpec spec_;
    SymbolTablePtr table_;
    Symbol x_, y_, z_, w_;
    std::optional<Symbol> h_;
    std::vector<MultiPoly> p_;
    std::vector<DifferentialForm> forms_;
};

using CurveContextPtr = std::shared_ptr<const CurveContext>;

struct LocalExpansion {
    LaurentSeries x, y;
    int order = 0; // f(x(ξ), y(ξ)) vanishes below ξ^order
};

LocalExpansion newton_puiseux_at_infinity(const CurveContext& c, int order);
// du_i/dξ for each holomorphic differential.
std::vector<LaurentSeries> differentials(const CurveContext& c, const LocalExpansion& e);

struct WindingData {
    // R[k-1][i-1] = (R_k)_i
    std::vector<std::vector<MultiPoly>> R;
    int K() const { return int(R.size()); }
    const MultiPoly& at(int k, int i) const { return R.at(k - 1).at(i - 1); }
};

// (R_k)_i = [ξ^{k-1}] du_i/dξ.
WindingData winding_vectors(const CurveContext& c, int K);

struct KleinianPolar {
    MultiPoly full; // F(x,z) + 2yw, or the trigonal 𝓕
    MultiPoly core; // F(x,z) for genus 2, T(x,z) for the trigonal curve
};

KleinianPolar kleinian_polar(const CurveContext& c);

struct OmegaAlgTable {
    int N = 0;
    std::vector<std::vector<MultiPoly>> w;
    const MultiPoly& at(int k, int l) const { return w.at(k).at(l); }
};

OmegaAlgTable omega_alg(const CurveContext& c, int N);

} // namespace sigmatau
