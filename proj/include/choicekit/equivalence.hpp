#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "choicekit/connectives.hpp"
#include "choicekit/formula.hpp"
#include "choicekit/models.hpp"

namespace choicekit {

enum class EquivStatus { Equivalent, Inequivalent, Unknown };

std::string_view to_string(EquivStatus status);

/// An interpretation under which the two formulas take different degrees.
struct InterpretationWitness {
  Interpretation interpretation;
  Degree left;
  Degree right;
};

/// The formulas are degree-equivalent but differ in optionality.
struct OptionalityWitness {
  Optionality left;
  Optionality right;
};

/// A context whose preferred models change when the marked occurrence of
/// the left formula is replaced by the right one.
struct ContextWitness {
  Formula context;
  OccurrencePath path;
};

using EquivWitness =
    std::variant<std::monostate, InterpretationWitness, OptionalityWitness, ContextWitness>;

struct EquivVerdict {
  EquivStatus status = EquivStatus::Unknown;
  EquivWitness witness;
  /// How the verdict was reached: "degree-check", "full-check",
  /// "degree-route", "full-route", "degree-refutation" or "unclassified".
  std::string method;
};

/// Same degree under every interpretation over vars(a) + vars(b).
EquivVerdict degree_equivalent(const LogicRegistry& reg, const Formula& a, const Formula& b,
                               const SearchOptions& opts = {});

/// Degree-equivalent and equal optionality.
EquivVerdict fully_equivalent(const LogicRegistry& reg, const Formula& a, const Formula& b,
                              const SearchOptions& opts = {});

/// Strong equivalence routed by the logic's classification: degree
/// equivalence for optionality-ignoring logics, full equivalence for
/// optionality-differentiating ones. Unclassified logics only get the
/// degree refutation (strong implies degree); otherwise Unknown.
EquivVerdict strongly_equivalent(const LogicRegistry& reg, const Formula& a, const Formula& b,
                                 const SearchOptions& opts = {});

/// Re-checks the witness of an inequivalent verdict.
bool witness_holds(const LogicRegistry& reg, const Formula& a, const Formula& b,
                   const EquivVerdict& verdict, const SearchOptions& opts = {});

/// Builds F = (a & G) | (f & H) with G, H constant at min(deg(i,a), deg(i,b))
/// over fresh atoms, verifies that replacing `a` at the returned path by `b`
/// changes the preferred models, and returns it. Throws InvalidArgument if
/// `i` does not separate the degrees and ConstructionFailure if the check
/// fails.
ContextWitness inequivalence_context(const LogicRegistry& reg, const Formula& a, const Formula& b,
                                     const Interpretation& i, const SearchOptions& opts = {});

/// True iff the preferred models of `context` and of the substituted
/// context differ over their joint variables.
bool context_separates(const LogicRegistry& reg, const ContextWitness& ctx, const Formula& b,
                       const SearchOptions& opts = {});

struct AssociativityWitness {
  Formula x, y, z;
  EquivVerdict verdict;  ///< fully_equivalent((x o y) o z, x o (y o z))
};

struct AssociativityCheck {
  bool confirmed = true;
  std::size_t triples = 0;
  std::optional<AssociativityWitness> witness;
};

/// Bounded associativity test of connective `name` over all triples drawn
/// from: atoms and negated atoms over `n_vars` variables, and p o q for
/// atoms p, q and o in {&, |} plus every connective of `reg`. A degree
/// counterexample is preferred over an optionality one.
AssociativityCheck check_associative(const LogicRegistry& reg, std::string_view name,
                                     std::size_t n_vars);

/// Names a, b, c, ... for small variable counts, v0, v1, ... otherwise.
std::vector<std::string> variable_names(std::size_t count);

/// `base` or `base` followed by digits, reserved, not in `taken`.
std::string fresh_atom(std::string_view base, const VarSet& taken);

} // namespace choicekit
