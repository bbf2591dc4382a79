#pragma once

#include "sigmatau/linsolve.hpp"
#include "sigmatau/tau.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace sigmatau {

enum class RelationClass { FourIndex, QuadThreeIndex, Quasilinear, QuarticEven, Other };
std::string to_string(RelationClass c);
RelationClass relation_class_from_string(const std::string& s);

// expr = 0 on the Jacobian. In solved form expr = solved - rhs.
struct Relation {
    MultiPoly expr;
    int weight = 0;
    std::vector<Partition> source;
    RelationClass cls = RelationClass::Other;
    std::optional<Monomial> solved;

    MultiPoly rhs() const; // requires solved
    std::string to_string() const; // "p1111 = ..." or "... = 0"
};

// Unknown classes in pivot preference order: 0 any ℘ with ≥ 4 indices,
// 1 two or more 3-index factors, 2 exactly one 3-index factor, 3 basic
// (2-index ℘ and parameters). Among basic monomials a pure power of one ℘
// is preferred, so a quartic is solved for ℘12⁴ rather than a mixed term.
int unknown_class(const Monomial& m);
ColumnOrder unknown_order(bool basic_pivotable);
// Solved for a 4-index ℘ or a product of two 3-index ℘: used for rewriting.
bool is_rule(const Relation& r);

// Labels a reduced, ζ-free, weight-W relation and scales it so that its
// preferred monomial has coefficient 1.
Relation classify(const MultiPoly& r, int W);

class RelationDB {
public:
    explicit RelationDB(CurveContextPtr c);
    // Copies the relations; caches start empty.
    RelationDB(const RelationDB& o);
    RelationDB& operator=(const RelationDB&) = delete;

    const CurveContext& curve() const { return *c_; }
    const CurveContextPtr& curve_ptr() const { return c_; }
    std::string fingerprint() const { return c_->spec().fingerprint(); }

    // Layers up to this weight are complete. Starts at 3: no rank-2
    // diagram has weight below 4.
    int complete_through() const { return complete_; }
    void mark_complete(int W);

    // Solved 4-index and quadratic 3-index relations become rewrite rules;
    // everything else joins the linear span. A second relation solved for
    // the same monomial throws.
    void add(Relation r);
    const std::vector<Relation>& relations() const { return rels_; }
    std::vector<const Relation*> at_weight(int W) const;
    const Relation* solved_for(const Monomial& m) const;

    // Rewrites ℘ with ≥ 4 indices (through derivatives of the stored
    // 4-index solved forms) and products of 3-index ℘ until neither occurs
    // in a rule's reach.
    MultiPoly normal_form(const MultiPoly& e) const;
    // normal_form, then every ζ-free coefficient is reduced by the span of
    // non-rule relations (weight < below) times basic monomials.
    MultiPoly reduce(const MultiPoly& e, std::optional<int> below = std::nullopt) const;
    // Basic monomials of weight d (2-index ℘ and symbolic parameters).
    const std::vector<Monomial>& basic_monomials(int d) const;

private:
    CurveContextPtr c_;
    int complete_ = 3;
    std::vector<Relation> rels_;
    std::map<Monomial, std::size_t, TermGreater> rule_index_;
    std::map<std::vector<int>, MultiPoly> wp_rules_; // 4-index J -> value
    std::vector<std::pair<Monomial, MultiPoly>> quad_rules_;

    mutable std::recursive_mutex mu_;
    mutable std::map<std::vector<int>, std::optional<MultiPoly>> wp_memo_;
    mutable std::map<Monomial, MultiPoly, TermGreater> nf_memo_;
    mutable std::map<std::pair<int, int>, RowEchelon> span_memo_;
    mutable std::map<int, std::vector<Monomial>> basic_memo_;

    const std::optional<MultiPoly>& wp_value(const std::vector<int>& J) const;
    const MultiPoly& nf_monomial(const Monomial& m) const;
    const RowEchelon& span(int w, int below) const;
    void invalidate();
};

MultiPoly reduce_mod_db(const MultiPoly& e, const RelationDB& db);

// ξ_λ - det(ξ_{(α_i|β_j)}). Rank 2 always; rank 3 only when allowed.
MultiPoly plucker_relation(const Partition& lambda, const TauModel& model, bool allow_rank3 = false);

struct LayerOptions {
    bool allow_rank3 = false;
};

struct LayerResult {
    int weight = 0;
    int diagrams = 0;  // rank-2 (and rank-3 if enabled) partitions of the weight
    int classes = 0;   // transpose classes
    int rows = 0;      // rows handed to the solver after parity splitting
    std::vector<Relation> relations;
};

// Solves the weight-W layer. The database must be complete below W; it is
// not modified.
LayerResult derive_at_weight(int W, const RelationDB& db, const TauModel& model, const LayerOptions& opt = {});
// derive_at_weight for every layer after complete_through() up to W_max,
// adding each layer to the database.
std::vector<LayerResult> derive_through(int W_max, RelationDB& db, const TauModel& model,
                                        const LayerOptions& opt = {});

// ∂_b R_{M+a} - ∂_a R_{M+b} for every pair of 4-index solved forms, reduced
// against relations of lower weight only. Zero and repeated results are
// dropped.
std::vector<Relation> cross_differentiate(const RelationDB& db);

// (℘111²)(℘112²) - (℘111℘112)² with each factor replaced by its solved
// form; normalised on ℘12⁴. Genus 2 only.
Relation kummer_quartic(const RelationDB& db);

// Canonical representative of r modulo the span of lower-weight non-rule
// relations, scaled monic; equal outputs mean equal relations.
MultiPoly canonical_form(const MultiPoly& r, const RelationDB& db);

// "lhs = rhs" (either side may be 0) as lhs - rhs.
MultiPoly parse_relation(const CurveContext& c, std::string_view text);

} // namespace sigmatau
