#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "choicekit/connectives.hpp"
#include "choicekit/formula.hpp"

namespace choicekit {

/// A formula and an interpretation under which it takes a particular degree.
struct DegreeWitness {
  Formula formula;
  Interpretation interpretation;
};

/// Degrees reached by a bounded closure, each with its smallest witness.
///
/// This is an under-approximation of the obtainable degrees: degrees that
/// need more than `rounds()` nested connectives are missing.
class ReachableDegrees {
public:
  ReachableDegrees(std::size_t rounds, std::map<Degree, DegreeWitness> witnesses)
      : rounds_(rounds), witnesses_(std::move(witnesses)) {}

  std::size_t rounds() const noexcept { return rounds_; }
  bool contains(const Degree& d) const { return witnesses_.count(d) != 0; }
  std::vector<Degree> degrees() const;
  const std::map<Degree, DegreeWitness>& witnesses() const noexcept { return witnesses_; }

private:
  std::size_t rounds_;
  std::map<Degree, DegreeWitness> witnesses_;
};

/// Closes {TRUE, FALSE} under negation, conjunction, disjunction and every
/// connective of `reg` for `iteration_bound` rounds. Closure works on
/// constant formulas, tracked as (optionality, degree) states.
ReachableDegrees reachable_degrees(const LogicRegistry& reg, std::size_t iteration_bound);

/// Replaces every atom of `g` in `j` by TRUE and every other atom by FALSE;
/// the result takes degree(j, g) under every interpretation. The constants
/// are built over `constant_atom`.
Formula ground_to_degree(const Formula& g, const Interpretation& j,
                         std::string_view constant_atom = kConstantAtom);

/// Conjunction of a for a in j and ~a for a in vars \ j; TRUE when vars is
/// empty. Throws InvalidArgument if j is not a subset of vars.
Formula characteristic_formula(const Interpretation& j, const VarSet& vars);

/// Target degrees for every subset of a finite variable set.
class DegreeAssignment {
public:
  DegreeAssignment(VarSet variables, std::map<Interpretation, Degree> table);

  const VarSet& variables() const noexcept { return variables_; }
  const std::map<Interpretation, Degree>& table() const noexcept { return table_; }
  /// Value for interp restricted to variables().
  const Degree& at(const Interpretation& interp) const;

private:
  VarSet variables_;
  std::map<Interpretation, Degree> table_;
};

/// Builds F = OR over J of (G_J & S_J) with degree(I, F) = table(I & V).
/// Infinite entries use FALSE; every finite entry needs a witness, and
/// each used witness is re-evaluated in `reg` before it is trusted.
Formula synthesize(const LogicRegistry& reg, const DegreeAssignment& assignment,
                   const std::map<Degree, DegreeWitness>& witnesses);
Formula synthesize(const LogicRegistry& reg, const DegreeAssignment& assignment,
                   const ReachableDegrees& reachable);

} // namespace choicekit
