#include "sigmatau/tau.hpp"
#include "sigmatau/errors.hpp"
#include "sigmatau/schur.hpp"

#include <algorithm>

namespace sigmatau {

namespace {

int time_degree(const Monomial& m)
{
    int d = 0;
    for (const auto& [s, e] : m.factors())
        if (s.kind() == SymbolKind::Time)
            d += s.key().at(0) * e;
    return d;
}

Rational factorial(int n)
{
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return Rational(f);
}

} // namespace

TauModel::TauModel(CurveContextPtr c, int max_weight)
    : TauModel(c, winding_vectors(*c, max_weight + 1), omega_alg(*c, max_weight + 1), max_weight)
{
}

TauModel::TauModel(CurveContextPtr c, WindingData R, OmegaAlgTable omega, int max_weight)
    : c_(std::move(c)), max_weight_(max_weight), R_(std::move(R)), omega_(std::move(omega)), ladder_(c_)
{
    if (max_weight_ < 1)
        throw ConfigError("TauModel: max weight must be positive");
    if (R_.K() < max_time_index() || omega_.N < max_time_index())
        throw TruncationError("TauModel: tables cover fewer than " + std::to_string(max_time_index()) +
                              " time indices");
    build_jet();
}

void TauModel::build_jet()
{
    const int D = max_weight_, g = genus();
    auto keep = [D](const Monomial& m) { return time_degree(m) <= D; };

    std::vector<MultiPoly> v(g);
    for (int i = 1; i <= g; ++i)
        for (int k = 1; k <= D; ++k)
            v[i - 1] += R_.at(k, i) * MultiPoly::symbol(c_->time(k));

    // σ(u+v)/σ(u) = Σ_a (σ_{1^a1 2^a2 ...}/σ) Π v_i^{a_i}/a_i!
    std::vector<std::vector<MultiPoly>> vpow(g);
    for (int i = 0; i < g; ++i) {
        vpow[i].push_back(MultiPoly(1));
        for (int a = 1; a * c_->gap(i + 1) <= D; ++a)
            vpow[i].push_back(multiply_filtered(vpow[i].back(), v[i], keep) * (Rational(1) / a));
    }
    MultiPoly sigma;
    auto rec = [&](auto&& self, int i, int used, MultiPoly acc, std::vector<int>& J) -> void {
        if (i == g) {
            MultiPoly s = J.empty() ? MultiPoly(1) : MultiPoly::symbol(c_->sigma_ratio(J));
            sigma += s * acc;
            return;
        }
        for (int e = 0; used + e * c_->gap(i + 1) <= D; ++e) {
            MultiPoly next = e == 0 ? acc : multiply_filtered(acc, vpow[i][e], keep);
            if (next.is_zero())
                continue;
            for (int r = 0; r < e; ++r)
                J.push_back(i + 1);
            self(self, i + 1, used + e * c_->gap(i + 1), std::move(next), J);
            J.resize(J.size() - e);
        }
    };
    std::vector<int> J;
    rec(rec, 0, 0, MultiPoly(1), J);

    MultiPoly Q;
    for (int k = 1; k <= D; ++k)
        for (int l = 1; k + l <= D; ++l)
            Q += q(k, l) * Rational(1, 2) * MultiPoly(Monomial::from_factors({{c_->time(k), 1}, {c_->time(l), 1}}));
    MultiPoly ex(1), term(1);
    for (int n = 1; 2 * n <= D && !term.is_zero(); ++n) {
        term = multiply_filtered(term, Q, keep) * (Rational(1) / n);
        ex += term;
    }

    MultiPoly tau = multiply_filtered(sigma, ex, keep);
    for (const auto& [m, coef] : tau.terms()) {
        std::vector<int> exps(D, 0);
        std::vector<std::pair<Symbol, unsigned>> rest;
        for (const auto& [s, e] : m.factors()) {
            if (s.kind() == SymbolKind::Time)
                exps.at(s.key().at(0) - 1) = e;
            else
                rest.emplace_back(s, e);
        }
        jet_[exps].add_term(Monomial::from_factors(std::move(rest)), coef);
    }
}

const MultiPoly& TauModel::jet(const std::vector<int>& a) const
{
    static const MultiPoly zero;
    auto it = jet_.find(a);
    return it == jet_.end() ? zero : it->second;
}

MultiPoly TauModel::tau_t_derivative(const std::vector<int>& Jt) const
{
    std::vector<int> a(max_weight_, 0);
    int d = 0;
    for (int k : Jt) {
        if (k < 1 || k > max_time_index())
            throw TruncationError("tau_t_derivative: time index " + std::to_string(k) + " out of range");
        d += k;
        if (d > max_weight_)
            throw TruncationError("tau_t_derivative: total weight exceeds " + std::to_string(max_weight_));
        ++a[k - 1];
    }
    Rational f = 1;
    for (int e : a)
        f *= factorial(e);
    return jet(a) * f;
}

MultiPoly TauModel::xi(const Partition& lambda) const
{
    {
        std::lock_guard lock(mu_);
        auto it = xi_memo_.find(lambda);
        if (it != xi_memo_.end())
            return it->second;
    }
    if (lambda.weight() > max_weight_)
        throw TruncationError("xi: partition " + lambda.to_string() + " exceeds the model weight " +
                              std::to_string(max_weight_));
    // ∂̃_k = (1/k)∂_{t_k}, and ∂^a t^a / a! picks the Taylor coefficient,
    // so each monomial Π t_k^{a_k} contributes Π (a_k!/k^{a_k}) jet[a].
    MultiPoly s = schur_poly(lambda), out;
    for (const auto& [m, coef] : s.terms()) {
        std::vector<int> a(max_weight_, 0);
        Rational f = coef;
        for (const auto& [sym, e] : m.factors()) {
            int k = sym.key().at(0);
            a.at(k - 1) = e;
            f *= factorial(e);
            mpz_class kk;
            mpz_ui_pow_ui(kk.get_mpz_t(), unsigned(k), e);
            f /= kk;
        }
        const MultiPoly& j = jet(a);
        if (!j.is_zero())
            out += j * f;
    }
    out = ladder_.reduce(out);
    std::lock_guard lock(mu_);
    return xi_memo_.emplace(lambda, std::move(out)).first->second;
}

MultiPoly TauModel::a_hook(int m, int n) const
{
    if (m < 0 || n < 0)
        throw ConfigError("a_hook: negative Frobenius coordinate");
    MultiPoly x = xi(Partition::hook(m, n));
    return n % 2 == 0 ? -x : x;
}

} // namespace sigmatau
