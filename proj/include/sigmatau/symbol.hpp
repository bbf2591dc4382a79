#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sigmatau {

// Kinds double as variable precedence in the lexicographic tie-break of the
// term order: ζ before ℘ before everything else, parameters last.
enum class SymbolKind : std::uint8_t {
    Zeta,
    Wp,
    SigmaRatio,
    Time,
    Derivation,
    Coordinate,
    Param,
    Generic,
};

class SymbolTable;

struct SymbolInfo {
    std::string name;
    int weight = 0;
    SymbolKind kind = SymbolKind::Generic;
    // Secondary sort key inside a kind. For ζ/℘/σ symbols this is the sorted
    // index multiset, for parameters and times the numeric suffix.
    std::vector<int> key;
    const SymbolTable* owner = nullptr;
};

// A handle to an interned symbol. Cheap to copy, compared by identity.
class Symbol {
public:
    Symbol() = default;
    explicit Symbol(const SymbolInfo* info) : info_(info) {}

    const std::string& name() const { return info_->name; }
    int weight() const { return info_->weight; }
    SymbolKind kind() const { return info_->kind; }
    const std::vector<int>& key() const { return info_->key; }
    const SymbolInfo* info() const { return info_; }
    bool valid() const { return info_ != nullptr; }

    friend bool operator==(Symbol a, Symbol b) { return a.info_ == b.info_; }
    friend bool operator!=(Symbol a, Symbol b) { return a.info_ != b.info_; }

private:
    const SymbolInfo* info_ = nullptr;
};

// Precedence order (-1, 0, 1). Throws if two distinct symbols look identical,
// which only happens when tables are mixed.
int compare_precedence(Symbol a, Symbol b);

// Order in which factors are printed inside a monomial: parameters first,
// then coordinates, times, ζ, ℘.
int compare_display(Symbol a, Symbol b);

class SymbolTable {
public:
    SymbolTable() = default;
    SymbolTable(const SymbolTable&) = delete;
    SymbolTable& operator=(const SymbolTable&) = delete;

    // Returns the existing symbol if the name is known with the same weight
    // and kind; throws on a conflicting redefinition.
    Symbol intern(const std::string& name, int weight, SymbolKind kind, std::vector<int> key = {});
    std::optional<Symbol> find(const std::string& name) const;
    std::vector<Symbol> all() const;

private:
    mutable std::mutex mu_;
    std::deque<SymbolInfo> storage_;
    std::unordered_map<std::string, const SymbolInfo*> by_name_;
};

using SymbolTablePtr = std::shared_ptr<SymbolTable>;

} // namespace sigmatau
