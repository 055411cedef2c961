#pragma once

#include <set>
#include <string>
#include <vector>

#include "choicekit/degree.hpp"
#include "choicekit/formula.hpp"
#include "reference.hpp"

namespace testing {

// Library degree in the reference encoding (0 for INF).
inline std::uint64_t raw(const choicekit::Degree& d) { return d.is_inf() ? ref::kUnsat : d.value(); }

inline ref::Atoms atoms(const choicekit::Interpretation& i) {
  return {i.atoms().begin(), i.atoms().end()};
}

inline choicekit::Interpretation interp(const ref::Atoms& a) {
  return choicekit::Interpretation(choicekit::VarSet(a.begin(), a.end()));
}

inline std::set<ref::Atoms> atom_sets(const std::vector<choicekit::Interpretation>& models) {
  std::set<ref::Atoms> out;
  for (const auto& m : models) {
    out.insert(atoms(m));
  }
  return out;
}

} // namespace testing
