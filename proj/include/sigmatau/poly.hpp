#pragma once

#include "sigmatau/rational.hpp"
#include "sigmatau/symbol.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sigmatau {

// Product of symbols with small positive exponents, kept sorted by
// precedence. Exponent overflow throws.
class Monomial {
public:
    using Factor = std::pair<Symbol, std::uint8_t>;

    Monomial() = default;
    static Monomial of(Symbol s, unsigned exp = 1);
    // Factors in any order; repeated symbols are merged, zero exponents dropped.
    static Monomial from_factors(std::vector<std::pair<Symbol, unsigned>> f);

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    int weight() const { return weight_; }
    unsigned degree(Symbol s) const;
    unsigned total_degree() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Requires divides(o) on the divisor side: returns this / d.
    Monomial quotient(const Monomial& d) const;
    Monomial without(Symbol s) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::size_t hash() const;
    std::string to_string() const;

private:
    std::vector<Factor> f_;
    int weight_ = 0;

    void finish();
};

// Term order: total weight, then lexicographic exponents under symbol
// precedence. Returns >0 when a is the larger term.
int term_compare(const Monomial& a, const Monomial& b);

struct TermGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return term_compare(a, b) > 0; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational, TermGreater>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);                  // NOLINT implicit constant
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
    MultiPoly(const Monomial& m, const Rational& c = 1);
    static MultiPoly symbol(Symbol s) { return MultiPoly(Monomial::of(s)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    // Largest term under the term order.
    const std::pair<const Monomial, Rational>& leading() const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    MultiPoly mul_monomial(const Monomial& m, const Rational& c = 1) const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Weight of the leading term; 0 for the zero polynomial.
    int weight() const;
    bool is_homogeneous() const;
    bool is_homogeneous(int w) const;
    MultiPoly homogeneous_component(int w) const;
    std::vector<int> weights() const;

    unsigned degree(Symbol s) const;
    bool contains(Symbol s) const { return degree(s) > 0; }
    // Coefficient of s^k, as a polynomial in the remaining symbols.
    MultiPoly coefficient_of(Symbol s, unsigned k) const;

    MultiPoly substitute(Symbol s, const MultiPoly& value) const;
    // Replaces every symbol for which f returns a value.
    MultiPoly substitute(const std::function<const MultiPoly*(Symbol)>& f) const;
    // Applies a derivation D given by its values on symbols (product rule).
    MultiPoly derive(const std::function<MultiPoly(Symbol)>& d) const;
    MultiPoly filter(const std::function<bool(const Monomial&)>& keep) const;

    // Scales to integer coefficients with gcd 1 and positive leading
    // coefficient. Returns the factor that was applied.
    Rational make_primitive();
    // Scales so the leading coefficient is 1.
    void make_monic();

    std::string to_string() const;

private:
    Terms terms_;
};

// a*b keeping only products with bound(mono) true; lets callers truncate
// while multiplying.
MultiPoly multiply_filtered(const MultiPoly& a, const MultiPoly& b,
                            const std::function<bool(const Monomial&)>& keep);

// Parses "6*p11^2 + a4*p11 + 4*p12 + 1/2*a3" style expressions. Parentheses
// are allowed. Names are resolved through the callback, which may throw.
MultiPoly parse_poly(std::string_view text, const std::function<MultiPoly(const std::string&)>& resolve);

std::string coefficient_prefix(const Rational& c, bool first, bool has_monomial);

} // namespace sigmatau
