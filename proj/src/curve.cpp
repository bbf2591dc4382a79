#include "sigmatau/curve.hpp"
#include "sigmatau/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sigmatau {

std::string CurveSpec::family_name() const
{
    return family == Family::HyperellipticG2 ? "hyperelliptic_g2" : "cyclic_trigonal_34";
}

std::string CurveSpec::fingerprint() const
{
    std::string out = "family=" + family_name();
    for (const auto& p : params)
        out += ";" + p.name + "=" + (p.value ? to_string(*p.value) : std::string("*"));
    return out;
}

CurveSpec make_curve_spec(Family f)
{
    CurveSpec c;
    c.family = f;
    if (f == Family::HyperellipticG2) {
        c.n = 2;
        c.s = 5;
        c.genus = 2;
        c.gaps = {1, 3};
        for (int k = 0; k <= 4; ++k)
            c.params.push_back({"a" + std::to_string(k), 10 - 2 * k, k, std::nullopt});
    } else {
        c.n = 3;
        c.s = 4;
        c.genus = 3;
        c.gaps = {1, 2, 5};
        for (int j = 1; j <= 4; ++j)
            c.params.push_back({"mu" + std::to_string(3 * j), 3 * j, 4 - j, std::nullopt});
    }
    return c;
}

static std::string trim(std::string_view s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return std::string(s.substr(a, b - a));
}

// alpha4 -> a4; anything else unchanged
static std::string canonical_param_name(const std::string& key)
{
    if (key.rfind("alpha", 0) == 0)
        return "a" + key.substr(5);
    return key;
}

CurveSpec parse_spec(std::string_view text)
{
    std::map<std::string, std::string> kv;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (trim(line).empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("curve spec line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("curve spec line " + std::to_string(lineno) + ": empty key or value");
        if (key != "family")
            key = canonical_param_name(key);
        if (!kv.emplace(key, value).second)
            throw ConfigError("curve spec: duplicate key '" + key + "'");
    }
    auto fam = kv.find("family");
    if (fam == kv.end())
        throw ConfigError("curve spec: missing 'family'");
    CurveSpec spec;
    if (fam->second == "hyperelliptic_g2")
        spec = make_curve_spec(Family::HyperellipticG2);
    else if (fam->second == "cyclic_trigonal_34")
        spec = make_curve_spec(Family::CyclicTrigonal34);
    else
        throw ConfigError("curve spec: unknown family '" + fam->second +
                          "' (supported: hyperelliptic_g2, cyclic_trigonal_34)");
    kv.erase(fam);
    for (const auto& [key, value] : kv) {
        auto it = std::find_if(spec.params.begin(), spec.params.end(), [&](const CurveParam& p) { return p.name == key; });
        if (it == spec.params.end())
            throw ConfigError("curve spec: '" + key + "' is not a parameter of " + spec.family_name());
        it->value = parse_rational(value);
    }
    return spec;
}

CurveContext::CurveContext(CurveSpec spec) : spec_(std::move(spec)), table_(std::make_shared<SymbolTable>())
{
    const int n = spec_.n, s = spec_.s;
    x_ = table_->intern("x", n, SymbolKind::Coordinate, {0});
    y_ = table_->intern("y", s, SymbolKind::Coordinate, {1});
    z_ = table_->intern("z", n, SymbolKind::Coordinate, {2});
    w_ = table_->intern("w", s, SymbolKind::Coordinate, {3});
    p_.assign(s + 1, MultiPoly());
    for (const auto& p : spec_.params) {
        int idx = std::stoi(p.name.substr(p.name[0] == 'a' ? 1 : 2));
        if (!p.value) {
            p_[p.x_power] = MultiPoly::symbol(table_->intern(p.name, p.weight, SymbolKind::Param, {idx}));
        } else if (*p.value != 0) {
            if (!h_)
                h_ = table_->intern("h", 1, SymbolKind::Param, {-1});
            p_[p.x_power] = MultiPoly(Monomial::of(*h_, unsigned(p.weight)), *p.value);
        }
    }
    if (spec_.family == Family::HyperellipticG2) {
        p_[5] = MultiPoly(4);
        forms_ = {{Rational(1), 1, 1}, {Rational(1), 0, 1}};
    } else {
        p_[4] = MultiPoly(1);
        forms_ = {{make_rational(1, 3), 0, 1}, {make_rational(1, 3), 1, 2}, {make_rational(1, 3), 0, 2}};
    }
}

MultiPoly CurveContext::param(const std::string& name) const
{
    std::string key = canonical_param_name(name);
    for (const auto& p : spec_.params)
        if (p.name == key)
            return p_[p.x_power];
    throw ConfigError("unknown parameter '" + name + "'");
}

std::vector<Symbol> CurveContext::param_symbols() const
{
    std::vector<Symbol> out;
    for (const auto& p : spec_.params)
        if (!p.value)
            out.push_back(*table_->find(p.name));
    if (h_)
        out.push_back(*h_);
    return out;
}

MultiPoly CurveContext::ungraded(const MultiPoly& p) const
{
    return h_ ? p.substitute(*h_, MultiPoly(1)) : p;
}

MultiPoly CurveContext::regrade(const MultiPoly& p, int weight) const
{
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        int gap = weight - m.weight();
        if (gap < 0 || (gap > 0 && !h_))
            throw ConfigError("term " + m.to_string() + " does not fit weight " + std::to_string(weight));
        out.add_term(gap ? m * Monomial::of(*h_, unsigned(gap)) : m, c);
    }
    return out;
}

MultiPoly CurveContext::curve_poly() const
{
    return curve_poly(x_, y_);
}

MultiPoly CurveContext::curve_poly(Symbol x, Symbol y) const
{
    MultiPoly f = MultiPoly(Monomial::of(y, spec_.n));
    for (int k = 0; k <= spec_.s; ++k)
        f -= p_[k].mul_monomial(Monomial::of(x, k));
    return f;
}

Rational CurveContext::y_lead() const
{
    // genus 2: y = -2ξ^-5 makes du_1 = x dx / y start with +1
    return spec_.family == Family::HyperellipticG2 ? Rational(-2) : Rational(1);
}

static std::string digits(const std::vector<int>& J)
{
    std::string s;
    for (int j : J)
        s += std::to_string(j);
    return s;
}

Symbol CurveContext::zeta(int i) const
{
    if (i < 1 || i > genus())
        throw Error("zeta index out of range");
    return table_->intern("z" + std::to_string(i), gap(i), SymbolKind::Zeta, {i});
}

Symbol CurveContext::wp(std::vector<int> J) const
{
    if (J.size() < 2)
        throw Error("wp needs at least two indices");
    std::sort(J.begin(), J.end());
    int w = 0;
    for (int j : J) {
        if (j < 1 || j > genus())
            throw Error("wp index out of range");
        w += gap(j);
    }
    return table_->intern("p" + digits(J), w, SymbolKind::Wp, J);
}

Symbol CurveContext::sigma_ratio(std::vector<int> J) const
{
    if (J.empty())
        throw Error("sigma ratio with empty index set is 1");
    std::sort(J.begin(), J.end());
    int w = 0;
    for (int j : J)
        w += gap(j);
    return table_->intern("s" + digits(J), w, SymbolKind::SigmaRatio, J);
}

Symbol CurveContext::time(int k) const
{
    return table_->intern("t" + std::to_string(k), -k, SymbolKind::Time, {k});
}

static std::optional<std::vector<int>> index_digits(const std::string& s, std::size_t from)
{
    if (from >= s.size())
        return std::nullopt;
    std::vector<int> J;
    for (std::size_t i = from; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '0')
            return std::nullopt;
        J.push_back(s[i] - '0');
    }
    return J;
}

MultiPoly CurveContext::resolve(const std::string& name) const
{
    if (name == "x")
        return MultiPoly::symbol(x_);
    if (name == "y")
        return MultiPoly::symbol(y_);
    if (name == "z")
        return MultiPoly::symbol(z_);
    if (name == "w")
        return MultiPoly::symbol(w_);
    for (const auto& p : spec_.params)
        if (p.name == canonical_param_name(name))
            return p_[p.x_power];
    auto bad = [&]() -> MultiPoly { throw ConfigError("unknown symbol '" + name + "'"); };
    auto in_range = [&](const std::vector<int>& J) {
        return std::all_of(J.begin(), J.end(), [&](int j) { return j <= genus(); });
    };
    if (name[0] == 'z' || name[0] == 'p' || name[0] == 's') {
        auto J = index_digits(name, 1);
        if (!J || !in_range(*J))
            return bad();
        if (name[0] == 'z')
            return J->size() == 1 ? MultiPoly::symbol(zeta((*J)[0])) : bad();
        if (name[0] == 'p')
            return J->size() >= 2 ? MultiPoly::symbol(wp(*J)) : bad();
        return MultiPoly::symbol(sigma_ratio(*J));
    }
    if (name[0] == 't' && name.size() > 1 &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return MultiPoly::symbol(time(std::stoi(name.substr(1))));
    if (auto s = table_->find(name))
        return MultiPoly::symbol(*s);
    return bad();
}

MultiPoly CurveContext::parse(std::string_view text) const
{
    return parse_poly(text, [this](const std::string& n) { return resolve(n); });
}

LocalExpansion newton_puiseux_at_infinity(const CurveContext& c, int order)
{
    const int n = c.spec().n, s = c.spec().s;
    if (order < n + s)
        throw TruncationError("expansion order must be at least n + s");
    // y = lead ξ^-s w with w^n = P(ξ^-n) ξ^{ns} / lead^n = 1 + O(ξ)
    const int M = order + n * s;
    Rational lead = c.y_lead();
    Rational lead_n = 1;
    for (int i = 0; i < n; ++i)
        lead_n *= lead;
    LaurentSeries g(M);
    for (int k = 0; k <= s; ++k)
        g.add(n * (s - k), c.p_coeffs()[k] * (Rational(1) / lead_n));
    LaurentSeries w = g.unit_pow(make_rational(1, n));

    LocalExpansion e;
    e.x = LaurentSeries::monomial(MultiPoly(1), -n, LaurentSeries::kExact);
    e.y = w.shifted(-s);
    e.y *= lead;
    e.order = order;

    std::map<const SymbolInfo*, LaurentSeries> vals{{c.x().info(), e.x}, {c.y().info(), e.y}};
    LaurentSeries defect = evaluate(c.curve_poly(), vals, order);
    if (defect.order() < order)
        throw TruncationError("curve defect could not be certified to the requested order");
    if (!defect.is_zero())
        throw InconsistencyError("Puiseux expansion does not satisfy the curve equation: " + defect.to_string());
    return e;
}

std::vector<LaurentSeries> differentials(const CurveContext& c, const LocalExpansion& e)
{
    std::vector<LaurentSeries> out;
    LaurentSeries dx = e.x.derivative();
    LaurentSeries yinv = e.y.inverse();
    for (const auto& f : c.differential_forms()) {
        LaurentSeries d = e.x.pow(f.x_power) * yinv.pow(f.y_power) * dx;
        d *= f.coeff;
        out.push_back(std::move(d));
    }
    return out;
}

WindingData winding_vectors(const CurveContext& c, int K)
{
    LocalExpansion e = newton_puiseux_at_infinity(c, K + c.spec().n * c.spec().s + 2);
    auto du = differentials(c, e);
    WindingData wd;
    wd.R.assign(K, std::vector<MultiPoly>(c.genus()));
    for (int i = 0; i < c.genus(); ++i) {
        if (du[i].order() < K)
            throw TruncationError("differential expansion too short for the requested winding vectors");
        for (int k = 1; k <= K; ++k)
            wd.R[k - 1][i] = du[i].coeff(k - 1);
    }
    return wd;
}

// Polynomial part in y of f(x, y) / y.
static MultiPoly poly_part_over(const MultiPoly& f, Symbol y)
{
    MultiPoly r;
    for (const auto& [m, c] : f.terms()) {
        unsigned e = m.degree(y);
        if (e == 0)
            continue;
        r.add_term(m.without(y) * Monomial::of(y, e - 1), c);
    }
    return r;
}

KleinianPolar kleinian_polar(const CurveContext& c)
{
    const auto& P = c.p_coeffs();
    MultiPoly X = MultiPoly::symbol(c.x()), Y = MultiPoly::symbol(c.y());
    MultiPoly Z = MultiPoly::symbol(c.z()), W = MultiPoly::symbol(c.w());
    KleinianPolar k;
    if (c.spec().family == Family::HyperellipticG2) {
        // F(x,z) = Σ_k (xz)^k (2λ_{2k} + λ_{2k+1}(x+z))
        const int g = c.genus();
        MultiPoly xz = X * Z;
        for (int j = 0; j <= g; ++j)
            k.core += xz.pow(j) * (P[2 * j] * Rational(2) + P[2 * j + 1] * (X + Z));
        k.full = k.core + Y * W * Rational(2);
        return k;
    }
    auto T = [&](const MultiPoly& a, const MultiPoly& b) {
        const MultiPoly& m3 = P[3];
        const MultiPoly& m6 = P[2];
        const MultiPoly& m9 = P[1];
        const MultiPoly& m12 = P[0];
        return m12 * Rational(3) + (b + a * Rational(2)) * m9 + a * (a + b * Rational(2)) * m6 +
               m3 * a.pow(2) * b * Rational(3) + a.pow(2) * b.pow(2) + a.pow(3) * b * Rational(2);
    };
    k.core = T(X, Z);
    MultiPoly fxy = c.curve_poly(c.x(), c.y());
    MultiPoly fzw = c.curve_poly(c.z(), c.w());
    k.full = W.pow(2) * Y.pow(2) + W * (W * poly_part_over(fxy, c.y()) + T(X, Z)) +
             Y * (Y * poly_part_over(fzw, c.w()) + T(Z, X));
    return k;
}

namespace {

// Tries to build the table from an expansion of the given order. Returns
// nothing if the bi-series came out too short.
std::optional<OmegaAlgTable> omega_attempt(const CurveContext& c, int N, int exp_order)
{
    const int n = c.spec().n;
    const int target = 2 * N - 1 + 2 * n; // need total degrees up to 2N-2+2n
    LocalExpansion e = newton_puiseux_at_infinity(c, exp_order);
    KleinianPolar polar = kleinian_polar(c);

    MultiPoly fy = c.curve_poly().derive([&](Symbol s) { return s == c.y() ? MultiPoly(1) : MultiPoly(); });
    std::map<const SymbolInfo*, LaurentSeries> vals{{c.x().info(), e.x}, {c.y().info(), e.y}};
    LaurentSeries inv_fy = evaluate(fy, vals, 1 << 28).inverse();
    LaurentSeries dx = e.x.derivative();

    // A_ab(ξ) = ξ^{2n} x^a y^b x'(ξ) / f_y
    std::map<std::pair<unsigned, unsigned>, LaurentSeries> A;
    auto getA = [&](unsigned a, unsigned b) -> const LaurentSeries& {
        auto it = A.find({a, b});
        if (it == A.end()) {
            LaurentSeries s = e.x.pow(int(a)) * e.y.pow(int(b)) * dx * inv_fy;
            it = A.emplace(std::make_pair(a, b), s.shifted(2 * n)).first;
        }
        return it->second;
    };

    BiSeries num(target);
    for (const auto& [m, coef] : polar.full.terms()) {
        unsigned a = m.degree(c.x()), b = m.degree(c.y()), cc = m.degree(c.z()), d = m.degree(c.w());
        BiSeries term = BiSeries::outer(getA(a, b), getA(cc, d), target);
        num += term.scaled(MultiPoly(m.without(c.x()).without(c.y()).without(c.z()).without(c.w()), coef));
    }
    if (num.order() < target)
        return std::nullopt;

    // subtract h², h = Σ_k ξ^k η^{n-1-k}
    BiSeries h2(target);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            h2.add(a + b, 2 * (n - 1) - a - b, MultiPoly(1));
    num -= h2;

    // D(ξ, 1) = (ξ-1)² (1 + ξ + ... + ξ^{n-1})², monic of degree 2n
    std::vector<Rational> D(2 * n + 1, Rational(0));
    {
        std::vector<Rational> h(n, Rational(1)), hh(2 * n - 1, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                hh[i + j] += h[i] * h[j];
        std::vector<Rational> sq{1, -2, 1};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2 * n - 1; ++j)
                D[i + j] += sq[i] * hh[j];
    }

    OmegaAlgTable t;
    t.N = N;
    t.w.assign(N, std::vector<MultiPoly>(N));
    for (int deg = 0; deg < target; ++deg) {
        std::vector<MultiPoly> r(deg + 1);
        for (int i = 0; i <= deg; ++i)
            r[i] = num.coeff(i, deg - i);
        for (int i = deg; i >= 2 * n; --i) {
            MultiPoly q = r[i];
            if (q.is_zero())
                continue;
            int j = i - 2 * n; // ξ^j η^{deg-2n-j}
            int l = deg - 2 * n - j;
            if (j < N && l < N)
                t.w[j][l] = q;
            for (int k = 0; k <= 2 * n; ++k)
                r[j + k] -= q * D[k];
        }
        for (int i = 0; i < std::min(deg + 1, 2 * n); ++i)
            if (!r[i].is_zero())
                throw InconsistencyError("omega_alg: bi-differential numerator is not divisible by the diagonal factor");
    }
    return t;
}

} // namespace

OmegaAlgTable omega_alg(const CurveContext& c, int N)
{
    if (N < 1)
        throw Error("omega_alg table size must be positive");
    const int ns = c.spec().n * c.spec().s;
    int order = 2 * N + 2 * c.spec().n + ns + 2;
    for (int attempt = 0; attempt < 4; ++attempt, order += ns + N) {
        if (auto t = omega_attempt(c, N, order))
            return *t;
    }
    throw TruncationError("omega_alg: could not reach the precision needed for a " + std::to_string(N) + "x" +
                          std::to_string(N) + " table");
}

} // namespace sigmatau
