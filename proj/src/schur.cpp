#include "sigmatau/schur.hpp"
#include "sigmatau/errors.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>

namespace sigmatau {

const SymbolTablePtr& schur_table()
{
    static const SymbolTablePtr tab = std::make_shared<SymbolTable>();
    return tab;
}

Symbol time_symbol(int k)
{
    return schur_table()->intern("t" + std::to_string(k), -k, SymbolKind::Time, {k});
}

Symbol derivation_symbol(int k)
{
    return schur_table()->intern("d" + std::to_string(k), k, SymbolKind::Derivation, {k});
}

const MultiPoly& elementary_schur(int m)
{
    static std::mutex mu;
    static std::deque<MultiPoly> memo{MultiPoly(1)}; // deque: references stay valid
    static const MultiPoly zero;
    if (m < 0)
        return zero;
    std::lock_guard lock(mu);
    while (int(memo.size()) <= m) {
        int k = int(memo.size());
        MultiPoly acc;
        for (int j = 1; j <= k; ++j)
            acc += memo[k - j].mul_monomial(Monomial::of(time_symbol(j)), Rational(j));
        memo.push_back(acc * make_rational(1, k));
    }
    return memo[m];
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return MultiPoly(1);
    if (n > 30)
        throw Error("determinant too large");
    for (const auto& row : m)
        if (row.size() != n)
            throw Error("determinant of a non-square matrix");
    // layer[mask] = signed sum over partial permutations of the first rows
    std::unordered_map<std::uint32_t, MultiPoly> layer{{0u, MultiPoly(1)}};
    for (std::size_t i = 0; i < n; ++i) {
        std::unordered_map<std::uint32_t, MultiPoly> next;
        for (const auto& [mask, val] : layer) {
            for (std::size_t c = 0; c < n; ++c) {
                if (mask & (1u << c) || m[i][c].is_zero())
                    continue;
                // sign: columns already used that lie to the right of c
                int inv = __builtin_popcount(mask >> (c + 1));
                MultiPoly term = val * m[i][c];
                if (inv % 2)
                    term = -term;
                next[mask | (1u << c)] += term;
            }
        }
        layer = std::move(next);
        if (layer.empty())
            return MultiPoly();
    }
    return layer.begin()->second;
}

static MultiPoly negate_times(const MultiPoly& q);

// e_m(t) = (-1)^m p_m(-t) = s_{1^m}
static MultiPoly elementary_dual(int m)
{
    MultiPoly e = negate_times(elementary_schur(m));
    return m % 2 ? -e : e;
}

MultiPoly schur_poly(const Partition& lambda)
{
    // det(p_{λ_i-i+j}), or the dual det(e_{λ'_i-i+j}) when λ' is shorter
    Partition t = lambda.transpose();
    const bool dual = t.length() < lambda.length();
    const auto& p = dual ? t.parts() : lambda.parts();
    const int n = int(p.size());
    std::vector<std::vector<MultiPoly>> M(n, std::vector<MultiPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M[i][j] = dual ? elementary_dual(p[i] - i + j) : elementary_schur(p[i] - i + j);
    return determinant(M);
}

static MultiPoly negate_times(const MultiPoly& q)
{
    return q.substitute([](Symbol s) -> const MultiPoly* {
        static thread_local std::map<const void*, MultiPoly> neg;
        if (s.kind() != SymbolKind::Time)
            return nullptr;
        auto it = neg.find(s.info());
        if (it == neg.end())
            it = neg.emplace(s.info(), -MultiPoly::symbol(s)).first;
        return &it->second;
    });
}

MultiPoly hook_schur(int arm, int leg)
{
    MultiPoly acc;
    for (int a = 0; a <= arm; ++a)
        acc += negate_times(elementary_schur(leg + a + 1)) * elementary_schur(arm - a);
    return (leg % 2 == 0) ? -acc : acc;
}

MultiPoly giambelli_det(const Partition& lambda)
{
    Frobenius f = lambda.frobenius();
    const std::size_t r = f.arms.size();
    std::vector<std::vector<MultiPoly>> M(r, std::vector<MultiPoly>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            M[i][j] = hook_schur(f.arms[i], f.legs[j]);
    return determinant(M);
}

MultiPoly as_diff_operator(const MultiPoly& time_poly)
{
    std::map<const void*, MultiPoly> d;
    return time_poly.substitute([&](Symbol s) -> const MultiPoly* {
        if (s.kind() != SymbolKind::Time)
            return nullptr;
        auto it = d.find(s.info());
        if (it == d.end())
            it = d.emplace(s.info(), MultiPoly::symbol(derivation_symbol(s.key().at(0)))).first;
        return &it->second;
    });
}

} // namespace sigmatau
