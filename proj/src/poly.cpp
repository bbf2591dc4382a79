#include "sigmatau/poly.hpp"
#include "sigmatau/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace sigmatau {

namespace {

std::uint8_t checked_exp(unsigned e)
{
    if (e > std::numeric_limits<std::uint8_t>::max())
        throw Error("monomial exponent overflow");
    return static_cast<std::uint8_t>(e);
}

} // namespace

Monomial Monomial::of(Symbol s, unsigned exp)
{
    Monomial m;
    if (exp > 0) {
        m.f_.emplace_back(s, checked_exp(exp));
        m.finish();
    }
    return m;
}

Monomial Monomial::from_factors(std::vector<std::pair<Symbol, unsigned>> f)
{
    std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) { return compare_precedence(a.first, b.first) < 0; });
    Monomial m;
    for (const auto& [s, e] : f) {
        if (e == 0)
            continue;
        if (!m.f_.empty() && m.f_.back().first == s)
            m.f_.back().second = checked_exp(m.f_.back().second + e);
        else
            m.f_.emplace_back(s, checked_exp(e));
    }
    m.finish();
    return m;
}

void Monomial::finish()
{
    weight_ = 0;
    for (const auto& [s, e] : f_)
        weight_ += s.weight() * e;
}

unsigned Monomial::degree(Symbol s) const
{
    for (const auto& [t, e] : f_)
        if (t == s)
            return e;
    return 0;
}

unsigned Monomial::total_degree() const
{
    unsigned d = 0;
    for (const auto& f : f_)
        d += f.second;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    auto i = f_.begin(), j = o.f_.begin();
    while (i != f_.end() && j != o.f_.end()) {
        int c = compare_precedence(i->first, j->first);
        if (c < 0)
            r.f_.push_back(*i++);
        else if (c > 0)
            r.f_.push_back(*j++);
        else {
            r.f_.emplace_back(i->first, checked_exp(unsigned(i->second) + j->second));
            ++i;
            ++j;
        }
    }
    r.f_.insert(r.f_.end(), i, f_.end());
    r.f_.insert(r.f_.end(), j, o.f_.end());
    r.weight_ = weight_ + o.weight_;
    return r;
}

bool Monomial::divides(const Monomial& o) const
{
    auto j = o.f_.begin();
    for (const auto& [s, e] : f_) {
        while (j != o.f_.end() && compare_precedence(j->first, s) < 0)
            ++j;
        if (j == o.f_.end() || j->first != s || j->second < e)
            return false;
    }
    return true;
}

Monomial Monomial::quotient(const Monomial& d) const
{
    if (!d.divides(*this))
        throw Error("monomial quotient: " + d.to_string() + " does not divide " + to_string());
    Monomial r;
    auto j = d.f_.begin();
    for (const auto& [s, e] : f_) {
        unsigned sub = 0;
        if (j != d.f_.end() && j->first == s)
            sub = (j++)->second;
        if (e > sub)
            r.f_.emplace_back(s, static_cast<std::uint8_t>(e - sub));
    }
    r.finish();
    return r;
}

Monomial Monomial::without(Symbol s) const
{
    Monomial r;
    for (const auto& f : f_)
        if (f.first != s)
            r.f_.push_back(f);
    r.finish();
    return r;
}

std::size_t Monomial::hash() const
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [s, e] : f_) {
        h ^= std::hash<const void*>()(s.info()) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= e + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Monomial::to_string() const
{
    if (f_.empty())
        return "1";
    std::vector<Factor> shown = f_;
    std::sort(shown.begin(), shown.end(), [](const Factor& a, const Factor& b) { return compare_display(a.first, b.first) < 0; });
    std::string out;
    for (const auto& [s, e] : shown) {
        if (!out.empty())
            out += '*';
        out += s.name();
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

int term_compare(const Monomial& a, const Monomial& b)
{
    if (a.weight() != b.weight())
        return a.weight() > b.weight() ? 1 : -1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        int c = compare_precedence(fa[i].first, fb[i].first);
        if (c < 0)
            return 1; // a carries a higher-precedence symbol that b lacks
        if (c > 0)
            return -1;
        if (fa[i].second != fb[i].second)
            return fa[i].second > fb[i].second ? 1 : -1;
    }
    if (fa.size() != fb.size())
        return fa.size() > fb.size() ? 1 : -1;
    return 0;
}

MultiPoly::MultiPoly(const Rational& c)
{
    if (c != 0)
        terms_.emplace(Monomial(), c);
}

MultiPoly::MultiPoly(const Monomial& m, const Rational& c)
{
    if (c != 0)
        terms_.emplace(m, c);
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const
{
    return coefficient(Monomial());
}

Rational MultiPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& MultiPoly::leading() const
{
    if (terms_.empty())
        throw Error("leading term of the zero polynomial");
    return *terms_.begin();
}

void MultiPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

MultiPoly multiply_filtered(const MultiPoly& a, const MultiPoly& b,
                            const std::function<bool(const Monomial&)>& keep)
{
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    Rational prod;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma * mb;
            if (keep && !keep(m))
                continue;
            prod = ca * cb;
            auto [it, fresh] = acc.try_emplace(std::move(m), prod);
            if (!fresh)
                it->second += prod;
        }
    }
    MultiPoly r;
    for (auto& [m, c] : acc)
        r.add_term(m, c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.is_constant())
        return b * a.constant_term();
    if (b.is_constant())
        return a * b.constant_term();
    return multiply_filtered(a, b, nullptr);
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const Rational& c) const
{
    MultiPoly r;
    if (c == 0)
        return r;
    for (const auto& [t, k] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), t * m, k * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly r(1), b = *this;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

int MultiPoly::weight() const
{
    return terms_.empty() ? 0 : terms_.begin()->first.weight();
}

bool MultiPoly::is_homogeneous() const
{
    return terms_.empty() || is_homogeneous(weight());
}

bool MultiPoly::is_homogeneous(int w) const
{
    for (const auto& t : terms_)
        if (t.first.weight() != w)
            return false;
    return true;
}

MultiPoly MultiPoly::homogeneous_component(int w) const
{
    return filter([w](const Monomial& m) { return m.weight() == w; });
}

std::vector<int> MultiPoly::weights() const
{
    std::vector<int> w;
    for (const auto& t : terms_)
        if (w.empty() || w.back() != t.first.weight())
            w.push_back(t.first.weight());
    return w;
}

unsigned MultiPoly::degree(Symbol s) const
{
    unsigned d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.first.degree(s));
    return d;
}

MultiPoly MultiPoly::coefficient_of(Symbol s, unsigned k) const
{
    MultiPoly r;
    for (const auto& [m, c] : terms_)
        if (m.degree(s) == k)
            r.add_term(m.without(s), c);
    return r;
}

MultiPoly MultiPoly::substitute(Symbol s, const MultiPoly& value) const
{
    return substitute([&](Symbol t) -> const MultiPoly* { return t == s ? &value : nullptr; });
}

MultiPoly MultiPoly::substitute(const std::function<const MultiPoly*(Symbol)>& f) const
{
    MultiPoly r;
    std::map<std::pair<const void*, unsigned>, MultiPoly> powers;
    for (const auto& [m, c] : terms_) {
        std::vector<std::pair<Symbol, unsigned>> kept;
        MultiPoly factor(c);
        for (const auto& [s, e] : m.factors()) {
            const MultiPoly* v = f(s);
            if (!v) {
                kept.emplace_back(s, e);
                continue;
            }
            auto key = std::make_pair(static_cast<const void*>(s.info()), unsigned(e));
            auto it = powers.find(key);
            if (it == powers.end())
                it = powers.emplace(key, v->pow(e)).first;
            factor = factor * it->second;
        }
        r += factor.mul_monomial(Monomial::from_factors(std::move(kept)));
    }
    return r;
}

MultiPoly MultiPoly::derive(const std::function<MultiPoly(Symbol)>& d) const
{
    std::map<const void*, MultiPoly> cache;
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        for (const auto& [s, e] : m.factors()) {
            auto it = cache.find(s.info());
            if (it == cache.end())
                it = cache.emplace(s.info(), d(s)).first;
            if (it->second.is_zero())
                continue;
            Monomial rest = m.quotient(Monomial::of(s));
            r += it->second.mul_monomial(rest, c * e);
        }
    }
    return r;
}

MultiPoly MultiPoly::filter(const std::function<bool(const Monomial&)>& keep) const
{
    MultiPoly r;
    for (const auto& t : terms_)
        if (keep(t.first))
            r.terms_.emplace_hint(r.terms_.end(), t.first, t.second);
    return r;
}

Rational MultiPoly::make_primitive()
{
    if (terms_.empty())
        return Rational(1);
    mpz_class g = 0, l = 1;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
    }
    Rational f = make_rational(l, g);
    if (terms_.begin()->second < 0)
        f = -f;
    *this *= f;
    return f;
}

void MultiPoly::make_monic()
{
    if (!terms_.empty())
        *this *= Rational(1) / terms_.begin()->second;
}

std::string coefficient_prefix(const Rational& c, bool first, bool has_monomial)
{
    std::string out;
    Rational a = abs(c);
    if (c < 0)
        out = first ? "-" : " - ";
    else if (!first)
        out = " + ";
    if (!has_monomial)
        return out + to_string(a);
    if (a != 1)
        out += to_string(a) + "*";
    return out;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        out += coefficient_prefix(c, first, !m.is_one());
        if (!m.is_one())
            out += m.to_string();
        first = false;
    }
    return out;
}

// Recursive-descent parser: expr := term {(+|-) term}; term := unary {(*|/) unary};
// unary := [-|+] power; power := atom [^ int]; atom := number | name | (expr).
namespace {

class Parser {
public:
    Parser(std::string_view s, const std::function<MultiPoly(const std::string&)>& r) : s_(s), resolve_(r) {}

    MultiPoly parse()
    {
        MultiPoly v = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    const std::function<MultiPoly(const std::string&)>& resolve_;

    [[noreturn]] void fail(const std::string& what)
    {
        throw ConfigError("cannot parse '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr()
    {
        MultiPoly v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    MultiPoly term()
    {
        MultiPoly v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                MultiPoly d = unary();
                if (!d.is_constant() || d.is_zero())
                    fail("division by a non-constant or zero");
                v *= Rational(1) / d.constant_term();
            } else {
                return v;
            }
        }
    }

    MultiPoly unary()
    {
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return power();
    }

    MultiPoly power()
    {
        MultiPoly base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            base = base.pow(std::stoul(std::string(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    MultiPoly atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly v = expr();
            if (!eat(')'))
                fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            // n/m is a rational literal only when digits follow the slash
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
            }
            return MultiPoly(parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return resolve_(std::string(s_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

} // namespace

MultiPoly parse_poly(std::string_view text, const std::function<MultiPoly(const std::string&)>& resolve)
{
    return Parser(text, resolve).parse();
}

} // namespace sigmatau
