#pragma once

#include "sigmatau/curve.hpp"

#include <string>
#include <vector>

namespace sigmatau {

// Published relations a derivation is checked against.
struct ReferenceEntry {
    std::string label;
    int weight = 0;
    std::string text; // "lhs = rhs"
    std::string note;
    bool alias = false; // repeats another entry under a second label
};

const std::vector<ReferenceEntry>& reference_table(Family f);
// Highest weight through which the table lists every relation of a layer.
int reference_complete_through(Family f);

// Trigonal quartic at weight 12. Only its residual modulo a derivation is
// reported; it is not a pass/fail reference.
const std::string& trigonal_quartic_text();

} // namespace sigmatau
