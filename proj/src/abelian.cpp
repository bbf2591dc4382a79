#include "sigmatau/abelian.hpp"
#include "sigmatau/errors.hpp"

#include <algorithm>

namespace sigmatau {

int index_count(Symbol s)
{
    switch (s.kind()) {
    case SymbolKind::Zeta:
    case SymbolKind::Wp:
    case SymbolKind::SigmaRatio:
        return int(s.key().size());
    default:
        return 0;
    }
}

bool is_wp(Symbol s, int indices)
{
    return s.kind() == SymbolKind::Wp && int(s.key().size()) == indices;
}

MultiPoly u_derivative(const CurveContext& c, const MultiPoly& e, int i)
{
    return e.derive([&](Symbol s) -> MultiPoly {
        std::vector<int> J = s.key();
        switch (s.kind()) {
        case SymbolKind::Zeta:
            return -MultiPoly::symbol(c.wp({J[0], i}));
        case SymbolKind::Wp:
            J.push_back(i);
            return MultiPoly::symbol(c.wp(J));
        case SymbolKind::SigmaRatio: {
            MultiPoly r = MultiPoly::symbol(s) * MultiPoly::symbol(c.sigma_ratio({i}));
            J.push_back(i);
            return MultiPoly::symbol(c.sigma_ratio(J)) - r;
        }
        default:
            return MultiPoly();
        }
    });
}

static bool monomial_odd(const Monomial& m)
{
    int n = 0;
    for (const auto& [s, e] : m.factors())
        n += index_count(s) * e;
    return n % 2 != 0;
}

MultiPoly parity_involution(const MultiPoly& e)
{
    MultiPoly r;
    for (const auto& [m, c] : e.terms())
        r.add_term(m, monomial_odd(m) ? -c : c);
    return r;
}

int parity(const MultiPoly& e)
{
    bool even = false, odd = false;
    for (const auto& t : e.terms())
        (monomial_odd(t.first) ? odd : even) = true;
    if (even == odd)
        return 0;
    return even ? 1 : -1;
}

std::pair<MultiPoly, MultiPoly> parity_parts(const MultiPoly& e)
{
    std::pair<MultiPoly, MultiPoly> out;
    for (const auto& [m, c] : e.terms())
        (monomial_odd(m) ? out.second : out.first).add_term(m, c);
    return out;
}

const MultiPoly& SigmaLadder::of(std::vector<int> J) const
{
    std::sort(J.begin(), J.end());
    {
        std::lock_guard lock(mu_);
        auto it = memo_.find(J);
        if (it != memo_.end())
            return it->second;
    }
    MultiPoly v;
    if (J.empty()) {
        v = MultiPoly(1);
    } else {
        // P_{K+i} = ζ_i P_K + ∂_i P_K, peeling off the largest index
        int i = J.back();
        std::vector<int> K(J.begin(), J.end() - 1);
        const MultiPoly& P = of(K);
        v = P * MultiPoly::symbol(c_->zeta(i)) + u_derivative(*c_, P, i);
    }
    std::lock_guard lock(mu_);
    return memo_.emplace(std::move(J), std::move(v)).first->second;
}

MultiPoly SigmaLadder::reduce(const MultiPoly& e) const
{
    return e.substitute([this](Symbol s) -> const MultiPoly* {
        return s.kind() == SymbolKind::SigmaRatio ? &of(s.key()) : nullptr;
    });
}

} // namespace sigmatau
