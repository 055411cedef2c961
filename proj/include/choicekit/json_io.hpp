#pragma once

#include <json.hpp>

#include "choicekit/degree.hpp"
#include "choicekit/formula.hpp"
#include "choicekit/reductions.hpp"
#include "choicekit/synthesis.hpp"

namespace choicekit {

using Json = nlohmann::ordered_json;

/// Finite degrees are integers, INF is the string "inf".
Json degree_to_json(const Degree& d);
Degree degree_from_json(const Json& j);

/// Sorted array of atom names.
Json interpretation_to_json(const Interpretation& i);
Interpretation interpretation_from_json(const Json& j);

/// {"variables": [...], "table": {"": "inf", "a": 1, "a,b": 1}}
Json assignment_to_json(const DegreeAssignment& a);
DegreeAssignment assignment_from_json(const Json& j);

/// {"matrix": "<text>", "order": [...], "query": "x2"}. The query must be the
/// last order variable. Matrices are parsed with the PL registry.
Json lex_instance_to_json(const LexInstance& inst);
LexInstance lex_instance_from_json(const Json& j);

} // namespace choicekit
