#pragma once

#include "sigmatau/poly.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace sigmatau {

// Which monomials may be pivots, and in what order of preference.
struct ColumnOrder {
    std::function<bool(const Monomial&)> pivotable;
    // >0 when a should be preferred over b as a pivot.
    std::function<int(const Monomial&, const Monomial&)> compare;

    // Pivots are the listed unknowns, earlier entries first.
    static ColumnOrder from_list(const std::vector<Monomial>& unknowns);
};

struct EchelonRow {
    MultiPoly poly; // coefficient of pivot is 1
    Monomial pivot;
    std::vector<int> sources; // sorted, caller-defined tags
};

// Reduced row echelon form over Q, built incrementally. Because the column
// order is fixed, the stored basis does not depend on insertion order.
class RowEchelon {
public:
    enum class Insert { Redundant, Added, Residual };

    explicit RowEchelon(ColumnOrder order) : order_(std::move(order)) {}

    MultiPoly reduce(MultiPoly p, std::vector<int>* sources = nullptr) const;
    // A Residual result leaves the reduced row (which has no pivotable
    // monomial) in *residual; nothing is stored.
    Insert insert(MultiPoly p, std::vector<int> sources = {}, MultiPoly* residual = nullptr);

    const std::vector<EchelonRow>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    const ColumnOrder& order() const { return order_; }

private:
    ColumnOrder order_;
    std::vector<EchelonRow> rows_;
    std::optional<Monomial> best_pivot(const MultiPoly& p) const;
};

struct SolvedRow {
    Monomial pivot;
    MultiPoly row;            // pivot + rest = 0
    std::vector<int> sources;
    bool fully_solved = false; // no unknown other than the pivot remains
    MultiPoly value() const;   // the expression equal to the pivot
};

struct LinearSolution {
    std::vector<SolvedRow> solved;
    std::vector<MultiPoly> residual; // rows without any unknown, if allowed
};

// Eliminates the system in the given column order. Rows are fed smallest
// first. A row whose unknown part vanishes but whose remainder does not makes
// the system inconsistent: that throws unless allow_residual is set.
LinearSolution linear_solve(const std::vector<MultiPoly>& rows, const ColumnOrder& order,
                            bool allow_residual = false, const std::vector<std::vector<int>>& sources = {});
LinearSolution linear_solve(const std::vector<MultiPoly>& rows, const std::vector<Monomial>& unknowns,
                            bool allow_residual = false);

} // namespace sigmatau
