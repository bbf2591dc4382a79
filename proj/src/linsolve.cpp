#include "sigmatau/linsolve.hpp"
#include "sigmatau/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace sigmatau {

ColumnOrder ColumnOrder::from_list(const std::vector<Monomial>& unknowns)
{
    auto rank = std::make_shared<std::unordered_map<Monomial, int, MonomialHash>>();
    for (std::size_t i = 0; i < unknowns.size(); ++i)
        rank->emplace(unknowns[i], int(i));
    ColumnOrder o;
    o.pivotable = [rank](const Monomial& m) { return rank->count(m) > 0; };
    o.compare = [rank](const Monomial& a, const Monomial& b) {
        int ra = rank->at(a), rb = rank->at(b);
        return ra == rb ? 0 : (ra < rb ? 1 : -1);
    };
    return o;
}

static void merge_sources(std::vector<int>& into, const std::vector<int>& from)
{
    std::vector<int> out;
    std::set_union(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(out));
    into = std::move(out);
}

MultiPoly RowEchelon::reduce(MultiPoly p, std::vector<int>* sources) const
{
    // RREF: a stored row contains no other stored pivot, so one pass suffices.
    for (const auto& r : rows_) {
        Rational c = p.coefficient(r.pivot);
        if (c == 0)
            continue;
        p -= r.poly * c;
        if (sources)
            merge_sources(*sources, r.sources);
    }
    return p;
}

std::optional<Monomial> RowEchelon::best_pivot(const MultiPoly& p) const
{
    std::optional<Monomial> best;
    for (const auto& t : p.terms()) {
        if (!order_.pivotable(t.first))
            continue;
        if (!best || order_.compare(t.first, *best) > 0)
            best = t.first;
    }
    return best;
}

RowEchelon::Insert RowEchelon::insert(MultiPoly p, std::vector<int> sources, MultiPoly* residual)
{
    std::sort(sources.begin(), sources.end());
    p = reduce(std::move(p), &sources);
    if (p.is_zero())
        return Insert::Redundant;
    auto pivot = best_pivot(p);
    if (!pivot) {
        if (residual)
            *residual = p;
        return Insert::Residual;
    }
    p *= Rational(1) / p.coefficient(*pivot);
    for (auto& r : rows_) {
        Rational c = r.poly.coefficient(*pivot);
        if (c == 0)
            continue;
        r.poly -= p * c;
        merge_sources(r.sources, sources);
    }
    EchelonRow row{std::move(p), *pivot, std::move(sources)};
    auto pos = std::find_if(rows_.begin(), rows_.end(),
                            [&](const EchelonRow& r) { return order_.compare(row.pivot, r.pivot) > 0; });
    rows_.insert(pos, std::move(row));
    return Insert::Added;
}

MultiPoly SolvedRow::value() const
{
    MultiPoly v = row;
    v.add_term(pivot, -v.coefficient(pivot));
    return -v;
}

LinearSolution linear_solve(const std::vector<MultiPoly>& rows, const ColumnOrder& order, bool allow_residual,
                            const std::vector<std::vector<int>>& sources)
{
    std::vector<std::size_t> idx(rows.size());
    std::iota(idx.begin(), idx.end(), 0);
    // smallest rows first keeps intermediate expressions short
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });

    RowEchelon ech(order);
    LinearSolution out;
    for (std::size_t i : idx) {
        MultiPoly res;
        auto src = i < sources.size() ? sources[i] : std::vector<int>{};
        if (ech.insert(rows[i], src, &res) == RowEchelon::Insert::Residual) {
            if (!allow_residual)
                throw InconsistencyError("inconsistent linear system: row reduces to " + res.to_string() +
                                         " with no unknown left");
            out.residual.push_back(res);
        }
    }
    for (const auto& r : ech.rows()) {
        SolvedRow s{r.pivot, r.poly, r.sources, true};
        for (const auto& t : r.poly.terms())
            if (t.first != r.pivot && order.pivotable(t.first))
                s.fully_solved = false;
        out.solved.push_back(std::move(s));
    }
    return out;
}

LinearSolution linear_solve(const std::vector<MultiPoly>& rows, const std::vector<Monomial>& unknowns,
                            bool allow_residual)
{
    return linear_solve(rows, ColumnOrder::from_list(unknowns), allow_residual);
}

} // namespace sigmatau
