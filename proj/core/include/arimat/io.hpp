#pragma once

#include <string>

#include "arimat/realization.hpp"
#include "arimat/torsion_poset.hpp"

namespace arimat {

// Accepts either a JSON object {"ambient_rank": D, "relations": [[...]],
// "generators": [[...]]} (relations optional) or a whitespace matrix whose
// rows are ambient coordinates and whose columns are the generators.
// Throws input_error on malformed content.
Realization read_realization_text(const std::string& text);
Realization read_realization_file(const std::string& path);

// {"elements": [...], "covers": [...], "components": [...],
//  "f_vector_per_component": [...]}; characters as reduced fractions on
// the canonical domain basis. Stable field order, 2-space indentation.
std::string poset_to_json(const TorsionPoset& p);

// Hasse diagram, edges child -> parent, elements grouped by rank.
std::string poset_to_dot(const TorsionPoset& p);

} // namespace arimat
