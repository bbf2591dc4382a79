#include "sigmatau/symbol.hpp"
#include "sigmatau/errors.hpp"

#include <algorithm>

namespace sigmatau {

static int display_rank(SymbolKind k)
{
    switch (k) {
    case SymbolKind::Param: return 0;
    case SymbolKind::Coordinate: return 1;
    case SymbolKind::Time: return 2;
    case SymbolKind::Derivation: return 3;
    case SymbolKind::Zeta: return 4;
    case SymbolKind::SigmaRatio: return 5;
    case SymbolKind::Wp: return 6;
    case SymbolKind::Generic: return 7;
    }
    return 8;
}

static int compare_within_kind(Symbol a, Symbol b)
{
    if (a.key() != b.key())
        return a.key() < b.key() ? -1 : 1;
    int c = a.name().compare(b.name());
    if (c != 0)
        return c < 0 ? -1 : 1;
    throw Error("symbol '" + a.name() + "' appears in two different tables");
}

int compare_precedence(Symbol a, Symbol b)
{
    if (a == b)
        return 0;
    if (a.kind() != b.kind())
        return a.kind() < b.kind() ? -1 : 1;
    return compare_within_kind(a, b);
}

int compare_display(Symbol a, Symbol b)
{
    if (a == b)
        return 0;
    int ra = display_rank(a.kind()), rb = display_rank(b.kind());
    if (ra != rb)
        return ra < rb ? -1 : 1;
    return compare_within_kind(a, b);
}

Symbol SymbolTable::intern(const std::string& name, int weight, SymbolKind kind, std::vector<int> key)
{
    std::lock_guard lock(mu_);
    auto it = by_name_.find(name);
    if (it != by_name_.end()) {
        const SymbolInfo* s = it->second;
        if (s->weight != weight || s->kind != kind)
            throw Error("symbol '" + name + "' redefined with a different weight or kind");
        return Symbol(s);
    }
    if (name.empty())
        throw Error("empty symbol name");
    storage_.push_back(SymbolInfo{name, weight, kind, std::move(key), this});
    const SymbolInfo* s = &storage_.back();
    by_name_.emplace(name, s);
    return Symbol(s);
}

std::optional<Symbol> SymbolTable::find(const std::string& name) const
{
    std::lock_guard lock(mu_);
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return Symbol(it->second);
}

std::vector<Symbol> SymbolTable::all() const
{
    std::lock_guard lock(mu_);
    std::vector<Symbol> out;
    for (const auto& s : storage_)
        out.emplace_back(&s);
    std::sort(out.begin(), out.end(), [](Symbol a, Symbol b) { return compare_precedence(a, b) < 0; });
    return out;
}

} // namespace sigmatau
