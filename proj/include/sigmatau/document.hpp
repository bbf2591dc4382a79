#pragma once

#include "sigmatau/relation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sigmatau {

struct LayerSummary {
    int weight = 0, diagrams = 0, classes = 0, rows = 0, relations = 0;
    friend bool operator==(const LayerSummary&, const LayerSummary&) = default;
};

// Everything a derivation produced, tied to the curve whose symbol table
// the relations live in.
struct RelationDocument {
    CurveContextPtr curve;
    std::string engine_version;
    std::string method; // plucker | classical | both
    int max_weight = 0;
    std::vector<LayerSummary> layers;
    std::vector<Relation> relations; // Plücker engine, plus the Kummer quartic
    std::vector<Relation> classical; // Klein expansion
};

bool same_relations(const std::vector<Relation>& a, const std::vector<Relation>& b);
bool operator==(const RelationDocument& a, const RelationDocument& b);

// Deterministic JSON: rationals as {"num","den"} decimal strings, terms as
// exponent vectors over a shared variable list.
std::string to_json(const RelationDocument& doc);
RelationDocument from_json(std::string_view text);

std::string render_text(const RelationDocument& doc);
std::string render_latex(const RelationDocument& doc);
std::string latex(const MultiPoly& p);
std::string latex(const Relation& r);

Partition parse_partition(std::string_view s); // "(3,2,1)"
// The relation with the grading symbol set to 1, for display.
Relation ungraded(const Relation& r, const CurveContext& c);

} // namespace sigmatau
