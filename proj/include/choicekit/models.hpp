#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "choicekit/connectives.hpp"
#include "choicekit/formula.hpp"
#include "choicekit/semantics.hpp"

namespace choicekit {

inline constexpr std::size_t kDefaultVarCap = 22;

/// Limits for exhaustive searches over interpretations.
struct SearchOptions {
  std::size_t var_cap = kDefaultVarCap;
};

/// Degree of every interpretation over a fixed variable set.
class DegreeProfile {
public:
  /// Profile over vars_of(f).
  static DegreeProfile build(const LogicRegistry& reg, const Formula& f,
                             const SearchOptions& opts = {});
  /// Profile over `universe`, which must contain vars_of(f).
  static DegreeProfile build_over(const LogicRegistry& reg, const Formula& f,
                                  const VarSet& universe, const SearchOptions& opts = {});

  const VarSet& variables() const noexcept { return variables_; }
  Optionality optionality() const noexcept { return optionality_; }
  const std::map<Interpretation, Degree>& entries() const noexcept { return entries_; }

  Degree min_degree() const;
  /// Interpretations attaining the minimum, empty if it is infinite.
  std::vector<Interpretation> argmin() const;

private:
  VarSet variables_;
  Optionality optionality_{1};
  std::map<Interpretation, Degree> entries_;
};

/// Throws EnumerationLimit if `count` variables exceed the cap.
void check_enumeration(std::size_t count, const SearchOptions& opts);

bool model_check(const LogicRegistry& reg, const Interpretation& interp, const Formula& f,
                 Degree bound);

/// First interpretation over vars_of(f), in subset order, with degree <= bound.
std::optional<Interpretation> sat_at_most(const LogicRegistry& reg, const Formula& f, Degree bound,
                                          const SearchOptions& opts = {});

Degree min_degree(const LogicRegistry& reg, const Formula& f, const SearchOptions& opts = {});

struct BinarySearchResult {
  Degree degree;
  std::size_t oracle_calls = 0;
};

/// Minimum degree found by binary search over (1, ..., opt(f), inf) with
/// sat_at_most as the oracle.
BinarySearchResult min_degree_binary_search(const LogicRegistry& reg, const Formula& f,
                                            const SearchOptions& opts = {});

/// All preferred models over vars_of(f), sorted.
std::vector<Interpretation> preferred_models(const LogicRegistry& reg, const Formula& f,
                                             const SearchOptions& opts = {});

/// Preferred models with every subset of `universe` considered.
std::vector<Interpretation> preferred_models_over(const LogicRegistry& reg, const Formula& f,
                                                  const VarSet& universe,
                                                  const SearchOptions& opts = {});

bool pref_model_check(const LogicRegistry& reg, const Interpretation& interp, const Formula& f,
                      const SearchOptions& opts = {});

/// First preferred model, in set order, containing `atom`. If `atom` does not occur in
/// `f`, any preferred model extended by it qualifies.
std::optional<Interpretation> pref_model_sat(const LogicRegistry& reg, const Formula& f,
                                             std::string_view atom,
                                             const SearchOptions& opts = {});

struct PrefSatDecision {
  bool answer = false;
  Degree overall;      ///< minimum degree of f
  Degree with_atom;    ///< minimum degree of f with `atom` replaced by TRUE
  std::size_t oracle_calls = 0;
};

/// Decides pref_model_sat with two binary searches: one over f and one over
/// f with every occurrence of `atom` replaced by TRUE. Yes iff both minima
/// are equal and finite.
PrefSatDecision pref_model_sat_by_search(const LogicRegistry& reg, const Formula& f,
                                         std::string_view atom, const SearchOptions& opts = {});

} // namespace choicekit
