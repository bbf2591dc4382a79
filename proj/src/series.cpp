#include "sigmatau/series.hpp"
#include "sigmatau/errors.hpp"

#include <algorithm>
#include <vector>

namespace sigmatau {

LaurentSeries LaurentSeries::monomial(const MultiPoly& c, int k, int order)
{
    LaurentSeries s(order);
    if (k < order)
        s.set(k, c);
    return s;
}

std::optional<int> LaurentSeries::valuation() const
{
    if (c_.empty())
        return std::nullopt;
    return c_.begin()->first;
}

int LaurentSeries::min_exponent() const
{
    return c_.empty() ? order_ : c_.begin()->first;
}

MultiPoly LaurentSeries::coeff(int k) const
{
    if (k >= order_)
        throw TruncationError("coefficient of xi^" + std::to_string(k) + " requested from a series known below xi^" +
                              std::to_string(order_));
    auto it = c_.find(k);
    return it == c_.end() ? MultiPoly() : it->second;
}

void LaurentSeries::set(int k, const MultiPoly& v)
{
    if (k >= order_)
        throw TruncationError("setting a coefficient beyond the truncation order");
    if (v.is_zero())
        c_.erase(k);
    else
        c_[k] = v;
}

void LaurentSeries::add(int k, const MultiPoly& v)
{
    if (k >= order_ || v.is_zero())
        return;
    auto [it, fresh] = c_.try_emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero())
            c_.erase(it);
    }
}

LaurentSeries LaurentSeries::truncated(int order) const
{
    LaurentSeries r(std::min(order, order_));
    for (const auto& [k, v] : c_)
        if (k < r.order_)
            r.c_.emplace(k, v);
    return r;
}

LaurentSeries LaurentSeries::shifted(int k) const
{
    LaurentSeries r(order_ + k);
    for (const auto& [e, v] : c_)
        r.c_.emplace(e + k, v);
    return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o)
{
    order_ = std::min(order_, o.order_);
    for (auto it = c_.lower_bound(order_); it != c_.end();)
        it = c_.erase(it);
    for (const auto& [k, v] : o.c_)
        add(k, v);
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o)
{
    return *this += -o;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& c)
{
    if (c == 0)
        c_.clear();
    for (auto& t : c_)
        t.second *= c;
    return *this;
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries r = *this;
    r *= Rational(-1);
    return r;
}

LaurentSeries LaurentSeries::scaled(const MultiPoly& c) const
{
    LaurentSeries r(order_);
    for (const auto& [k, v] : c_)
        r.set(k, v * c);
    return r;
}

LaurentSeries LaurentSeries::multiply(const LaurentSeries& a, const LaurentSeries& b, std::optional<int> cap)
{
    int order = std::min(a.order_ + b.min_exponent(), b.order_ + a.min_exponent());
    if (cap)
        order = std::min(order, *cap);
    LaurentSeries r(order);
    for (const auto& [i, u] : a.c_) {
        for (const auto& [j, v] : b.c_) {
            if (i + j >= order)
                break;
            r.add(i + j, u * v);
        }
    }
    return r;
}

LaurentSeries LaurentSeries::inverse(std::optional<int> cap) const
{
    auto v = valuation();
    if (!v)
        throw TruncationError("inverse of a series with no known nonzero term");
    const MultiPoly& lead = c_.begin()->second;
    if (!lead.is_constant())
        throw Error("inverse of a series whose leading coefficient is not a rational constant");
    Rational c = lead.constant_term();
    int prec = order_ - *v; // relative precision
    if (cap)
        prec = std::min(prec, *cap + *v);
    if (prec > (1 << 16))
        throw TruncationError("inverse of an exact series needs an order cap");
    // 1/(1+h) coefficients by b_k = -sum_{j>=1} h_j b_{k-j}
    std::vector<MultiPoly> h(prec), b(prec);
    for (const auto& [k, u] : c_)
        if (k - *v < prec)
            h[k - *v] = u * (Rational(1) / c);
    if (prec > 0)
        b[0] = MultiPoly(1);
    for (int k = 1; k < prec; ++k) {
        MultiPoly acc;
        for (int j = 1; j <= k; ++j)
            if (!h[j].is_zero() && !b[k - j].is_zero())
                acc -= h[j] * b[k - j];
        b[k] = acc;
    }
    LaurentSeries r(prec - *v);
    Rational ci = Rational(1) / c;
    for (int k = 0; k < prec; ++k)
        if (!b[k].is_zero())
            r.set(k - *v, b[k] * ci);
    return r;
}

LaurentSeries LaurentSeries::pow(int e) const
{
    if (e < 0)
        return inverse().pow(-e);
    LaurentSeries r = monomial(MultiPoly(1), 0, order_ - min_exponent());
    LaurentSeries b = *this;
    bool first = true;
    while (e) {
        if (e & 1) {
            r = first ? b : r * b;
            first = false;
        }
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

LaurentSeries LaurentSeries::unit_pow(const Rational& r) const
{
    if (valuation() != 0 || c_.begin()->second != MultiPoly(1))
        throw Error("unit_pow needs a series of the form 1 + O(xi)");
    int prec = order_;
    if (prec > (1 << 16))
        throw TruncationError("unit_pow of an exact series is not supported");
    if (prec <= 0)
        throw TruncationError("unit_pow of a series with no precision");
    std::vector<MultiPoly> f(prec), g(prec);
    for (const auto& [k, u] : c_)
        f[k] = u;
    g[0] = MultiPoly(1);
    // J.C.P. Miller: k g_k = sum_{j=1..k} ((r+1) j - k) f_j g_{k-j}
    for (int k = 1; k < prec; ++k) {
        MultiPoly acc;
        for (int j = 1; j <= k; ++j) {
            if (f[j].is_zero() || g[k - j].is_zero())
                continue;
            Rational w = (r + 1) * j - k;
            if (w != 0)
                acc += (f[j] * g[k - j]) * w;
        }
        g[k] = acc * make_rational(1, k);
    }
    LaurentSeries out(prec);
    for (int k = 0; k < prec; ++k)
        out.set(k, g[k]);
    return out;
}

LaurentSeries LaurentSeries::derivative() const
{
    LaurentSeries r(order_ - 1);
    for (const auto& [k, v] : c_)
        if (k != 0)
            r.set(k - 1, v * Rational(k));
    return r;
}

LaurentSeries LaurentSeries::integrate() const
{
    if (order_ <= -1)
        throw TruncationError("cannot integrate: the residue term is beyond the truncation order");
    auto it = c_.find(-1);
    if (it != c_.end())
        throw Error("cannot integrate: nonzero residue " + it->second.to_string());
    LaurentSeries r(order_ + 1);
    for (const auto& [k, v] : c_)
        r.set(k + 1, v * make_rational(1, k + 1));
    return r;
}

std::string LaurentSeries::to_string() const
{
    std::string out;
    for (const auto& [k, v] : c_) {
        if (!out.empty())
            out += " + ";
        out += "(" + v.to_string() + ")*xi^" + std::to_string(k);
    }
    if (out.empty())
        out = "0";
    return out + " + O(xi^" + std::to_string(order_) + ")";
}

LaurentSeries compose(const LaurentSeries& outer, const LaurentSeries& inner)
{
    if (outer.is_zero())
        return LaurentSeries(std::max(outer.order(), 0) * std::max(inner.min_exponent(), 1));
    auto v = inner.valuation();
    if (!v || *v <= 0)
        throw TruncationError("compose: inner series must have strictly positive valuation");
    int target = outer.order() * *v;
    int lo = outer.min_exponent();
    LaurentSeries result(target);
    // inner^k for k from lo upward, each capped at target
    LaurentSeries power = lo >= 0 ? inner.pow(lo) : inner.inverse(target).pow(-lo);
    if (lo == 0)
        power = LaurentSeries::monomial(MultiPoly(1), 0, target);
    for (int k = lo; k < outer.order(); ++k) {
        auto it = outer.coefficients().find(k);
        if (it != outer.coefficients().end())
            result += power.scaled(it->second);
        if (k + 1 < outer.order())
            power = (k + 1 == 0) ? LaurentSeries::monomial(MultiPoly(1), 0, target)
                                 : LaurentSeries::multiply(power, inner, target);
    }
    return result.truncated(target);
}

LaurentSeries evaluate(const MultiPoly& p, const std::map<const SymbolInfo*, LaurentSeries>& values, int order)
{
    LaurentSeries result(order);
    std::map<std::pair<const SymbolInfo*, unsigned>, LaurentSeries> powers;
    for (const auto& [m, c] : p.terms()) {
        LaurentSeries term = LaurentSeries::monomial(MultiPoly(c), 0, LaurentSeries::kExact);
        std::vector<std::pair<Symbol, unsigned>> rest;
        for (const auto& [s, e] : m.factors()) {
            auto vit = values.find(s.info());
            if (vit == values.end()) {
                rest.emplace_back(s, e);
                continue;
            }
            auto key = std::make_pair(s.info(), unsigned(e));
            auto pit = powers.find(key);
            if (pit == powers.end())
                pit = powers.emplace(key, vit->second.pow(int(e))).first;
            term = LaurentSeries::multiply(term, pit->second, order);
        }
        result += term.scaled(MultiPoly(Monomial::from_factors(std::move(rest))));
    }
    return result;
}

BiSeries BiSeries::outer(const LaurentSeries& a, const LaurentSeries& b, std::optional<int> cap)
{
    int order = std::min(a.order() + b.min_exponent(), b.order() + a.min_exponent());
    if (cap)
        order = std::min(order, *cap);
    BiSeries r(order);
    for (const auto& [i, u] : a.coefficients())
        for (const auto& [j, v] : b.coefficients())
            if (i + j < order)
                r.add(i, j, u * v);
    return r;
}

MultiPoly BiSeries::coeff(int k, int l) const
{
    if (k + l >= order_)
        throw TruncationError("bi-series coefficient beyond the truncation order");
    auto it = c_.find({k, l});
    return it == c_.end() ? MultiPoly() : it->second;
}

void BiSeries::add(int k, int l, const MultiPoly& v)
{
    if (k + l >= order_ || v.is_zero())
        return;
    auto [it, fresh] = c_.try_emplace({k, l}, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero())
            c_.erase(it);
    }
}

BiSeries& BiSeries::operator+=(const BiSeries& o)
{
    order_ = std::min(order_, o.order_);
    for (auto it = c_.begin(); it != c_.end();)
        it = (it->first.first + it->first.second >= order_) ? c_.erase(it) : std::next(it);
    for (const auto& [kl, v] : o.c_)
        add(kl.first, kl.second, v);
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o)
{
    return *this += o.scaled(MultiPoly(-1));
}

BiSeries BiSeries::scaled(const MultiPoly& c) const
{
    BiSeries r(order_);
    for (const auto& [kl, v] : c_)
        r.add(kl.first, kl.second, v * c);
    return r;
}

bool BiSeries::is_symmetric() const
{
    for (const auto& [kl, v] : c_)
        if (coeff(kl.second, kl.first) != v)
            return false;
    return true;
}

} // namespace sigmatau
