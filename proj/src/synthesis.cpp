#include "choicekit/synthesis.hpp"

#include <algorithm>
#include <utility>

#include "choicekit/semantics.hpp"

namespace choicekit {

std::vector<Degree> ReachableDegrees::degrees() const {
  std::vector<Degree> out;
  for (const auto& [d, _] : witnesses_) {
    out.push_back(d);
  }
  return out;
}

namespace {

struct State {
  Optionality opt;
  Degree degree;
  friend auto operator<=>(const State&, const State&) = default;
};

void offer(std::map<State, Formula>& states, State s, Formula f) {
  auto it = states.find(s);
  if (it == states.end()) {
    states.emplace(s, std::move(f));
  } else if (size_of(f) < size_of(it->second)) {
    it->second = std::move(f);
  }
}

} // namespace

ReachableDegrees reachable_degrees(const LogicRegistry& reg, std::size_t iteration_bound) {
  if (iteration_bound == 0) {
    throw InvalidArgument("iteration bound must be at least 1");
  }
  std::map<State, Formula> states;
  states.emplace(State{Optionality(1), Degree::finite(1)}, Formula::top());
  states.emplace(State{Optionality(1), kInf}, Formula::bottom());

  for (std::size_t round = 0; round < iteration_bound; ++round) {
    auto next = states;
    for (const auto& [s, f] : states) {
      offer(next, State{Optionality(1), s.degree.is_inf() ? Degree::finite(1) : kInf},
            Formula::negation(f));
      for (const auto& [t, g] : states) {
        Optionality joint = std::max(s.opt, t.opt);
        offer(next, State{joint, std::max(s.degree, t.degree)}, Formula::conjunction(f, g));
        offer(next, State{joint, std::min(s.degree, t.degree)}, Formula::disjunction(f, g));
        for (const auto& spec : reg.connectives()) {
          try {
            State out{connective_optionality(spec, s.opt, t.opt),
                      connective_degree(spec, s.opt, t.opt, s.degree, t.degree)};
            offer(next, out, Formula::choice(spec.name, f, g));
          } catch (const ArithmeticOverflow&) {
            // Beyond 64-bit optionality; not representable, so not reached.
          }
        }
      }
    }
    states = std::move(next);
  }

  std::map<Degree, DegreeWitness> witnesses;
  for (const auto& [s, f] : states) {
    auto it = witnesses.find(s.degree);
    if (it == witnesses.end()) {
      witnesses.emplace(s.degree, DegreeWitness{f, Interpretation{}});
    } else if (size_of(f) < size_of(it->second.formula)) {
      it->second.formula = f;
    }
  }
  return ReachableDegrees(iteration_bound, std::move(witnesses));
}

Formula ground_to_degree(const Formula& g, const Interpretation& j, std::string_view constant_atom) {
  switch (g.kind()) {
  case NodeKind::Atom:
    return j.contains(g.name()) ? Formula::top(constant_atom) : Formula::bottom(constant_atom);
  case NodeKind::Neg:
    return Formula::negation(ground_to_degree(g.child(), j, constant_atom));
  case NodeKind::And:
    return Formula::conjunction(ground_to_degree(g.left(), j, constant_atom),
                                ground_to_degree(g.right(), j, constant_atom));
  case NodeKind::Or:
    return Formula::disjunction(ground_to_degree(g.left(), j, constant_atom),
                                ground_to_degree(g.right(), j, constant_atom));
  case NodeKind::Choice:
    return Formula::choice(g.name(), ground_to_degree(g.left(), j, constant_atom),
                           ground_to_degree(g.right(), j, constant_atom));
  }
  return g;
}

Formula characteristic_formula(const Interpretation& j, const VarSet& vars) {
  if (!j.subset_of(vars)) {
    throw InvalidArgument("interpretation " + j.to_string() + " is not a subset of the variables");
  }
  if (vars.empty()) {
    return Formula::top();
  }
  std::vector<Formula> literals;
  for (const auto& v : vars) {
    auto atom = Formula::atom(v);
    literals.push_back(j.contains(v) ? atom : Formula::negation(atom));
  }
  return conjunction_of(literals);
}

DegreeAssignment::DegreeAssignment(VarSet variables, std::map<Interpretation, Degree> table)
    : variables_(std::move(variables)), table_(std::move(table)) {
  if (variables_.size() > 20) {
    throw InvalidArgument("degree assignment over more than 20 variables");
  }
  for (const auto& [interp, _] : table_) {
    if (!interp.subset_of(variables_)) {
      throw InvalidArgument("table key " + interp.to_string() + " is not a subset of the variables");
    }
  }
  if (table_.size() != (std::size_t{1} << variables_.size())) {
    throw InvalidArgument("degree table must list all " +
                          std::to_string(std::size_t{1} << variables_.size()) + " subsets, got " +
                          std::to_string(table_.size()));
  }
}

const Degree& DegreeAssignment::at(const Interpretation& interp) const {
  return table_.at(interp.restricted_to(variables_));
}

namespace {

Formula synthesize_with(const LogicRegistry& reg, const DegreeAssignment& assignment,
                        const std::map<Degree, DegreeWitness>& witnesses,
                        const std::string& missing_hint) {
  std::vector<Formula> clauses;
  for (const auto& [j, d] : assignment.table()) {
    Formula grounded = Formula::bottom();
    if (d.is_finite()) {
      auto it = witnesses.find(d);
      if (it == witnesses.end()) {
        throw UnobtainableDegree("no witness for degree " + d.to_string() + missing_hint);
      }
      if (degree(reg, it->second.interpretation, it->second.formula) != d) {
        throw InvalidArgument("witness for degree " + d.to_string() + " evaluates differently");
      }
      grounded = ground_to_degree(it->second.formula, it->second.interpretation);
    }
    clauses.push_back(Formula::conjunction(characteristic_formula(j, assignment.variables()),
                                           grounded));
  }
  return disjunction_of(clauses);
}

} // namespace

Formula synthesize(const LogicRegistry& reg, const DegreeAssignment& assignment,
                   const std::map<Degree, DegreeWitness>& witnesses) {
  return synthesize_with(reg, assignment, witnesses, "");
}

Formula synthesize(const LogicRegistry& reg, const DegreeAssignment& assignment,
                   const ReachableDegrees& reachable) {
  return synthesize_with(reg, assignment, reachable.witnesses(),
                         " within " + std::to_string(reachable.rounds()) +
                             " closure rounds; raise the iteration bound");
}

} // namespace choicekit
