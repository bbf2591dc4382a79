#pragma once

#include "sigmatau/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace sigmatau {

// Truncated Laurent series in one local parameter ξ. Every coefficient with
// exponent < order() is exact; nothing is known at or beyond order().
class LaurentSeries {
public:
    // Order used for series that are exact polynomials in ξ.
    static constexpr int kExact = 1 << 28;

    explicit LaurentSeries(int order = 0) : order_(order) {}
    // c·ξ^k known up to `order`.
    static LaurentSeries monomial(const MultiPoly& c, int k, int order);

    int order() const { return order_; }
    const std::map<int, MultiPoly>& coefficients() const { return c_; }
    std::optional<int> valuation() const;
    // valuation, or order() for a series with no known nonzero term
    int min_exponent() const;
    MultiPoly coeff(int k) const;
    void set(int k, const MultiPoly& v);
    void add(int k, const MultiPoly& v);
    bool is_zero() const { return c_.empty(); }

    LaurentSeries truncated(int order) const;
    LaurentSeries shifted(int k) const; // multiply by ξ^k

    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    LaurentSeries& operator*=(const Rational& c);
    LaurentSeries operator-() const;
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return multiply(a, b); }
    LaurentSeries scaled(const MultiPoly& c) const;

    // Product with the result order additionally capped at `cap`.
    static LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b, std::optional<int> cap = {});

    // Requires a constant rational leading coefficient. An exact input
    // needs a cap on the result order.
    LaurentSeries inverse(std::optional<int> cap = {}) const;
    LaurentSeries pow(int e) const;
    // (1 + h)^r for a series with leading term exactly 1·ξ^0.
    LaurentSeries unit_pow(const Rational& r) const;

    LaurentSeries derivative() const;
    // ∫ with zero constant of integration; throws on a nonzero ξ^-1 term.
    LaurentSeries integrate() const;

    std::string to_string() const;

private:
    std::map<int, MultiPoly> c_;
    int order_;
};

// outer(inner(ξ)); inner must have positive valuation.
LaurentSeries compose(const LaurentSeries& outer, const LaurentSeries& inner);

// Substitutes series for symbols of p; other symbols stay in coefficients.
LaurentSeries evaluate(const MultiPoly& p, const std::map<const SymbolInfo*, LaurentSeries>& values, int order);

// Truncated series in two local parameters. Coefficients (k, l) with
// k + l < order() are exact.
class BiSeries {
public:
    explicit BiSeries(int order = 0) : order_(order) {}
    static BiSeries outer(const LaurentSeries& a, const LaurentSeries& b, std::optional<int> cap = {});

    int order() const { return order_; }
    const std::map<std::pair<int, int>, MultiPoly>& coefficients() const { return c_; }
    MultiPoly coeff(int k, int l) const;
    void add(int k, int l, const MultiPoly& v);

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    BiSeries scaled(const MultiPoly& c) const;

    bool is_symmetric() const;

private:
    std::map<std::pair<int, int>, MultiPoly> c_;
    int order_;
};

} // namespace sigmatau
