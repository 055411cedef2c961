#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "choicekit/connectives.hpp"
#include "choicekit/formula.hpp"

namespace choicekit {

struct FormulaShape {
  std::size_t max_size = 12;  ///< upper bound on atom occurrences
  std::size_t variables = 4;  ///< atoms are drawn from variable_names(variables)
  bool choice = true;         ///< allow the registry's connectives
};

/// Random formula with between 1 and shape.max_size atom occurrences.
/// Inner nodes are drawn uniformly from ~, &, | and, if enabled, the
/// registry's connectives.
Formula random_formula(std::mt19937_64& rng, const LogicRegistry& reg, const FormulaShape& shape);

/// Uniformly random subset of `vars`.
Interpretation random_interpretation(std::mt19937_64& rng, const VarSet& vars);

} // namespace choicekit
