#include "choicekit/models.hpp"

#include <algorithm>

namespace choicekit {

void check_enumeration(std::size_t count, const SearchOptions& opts) {
  if (count > opts.var_cap || count > 62) {
    throw EnumerationLimit(count, std::min<std::size_t>(opts.var_cap, 62));
  }
}

namespace {

std::uint64_t space_size(std::size_t vars) { return std::uint64_t{1} << vars; }

} // namespace

DegreeProfile DegreeProfile::build(const LogicRegistry& reg, const Formula& f,
                                   const SearchOptions& opts) {
  return build_over(reg, f, vars_of(f), opts);
}

DegreeProfile DegreeProfile::build_over(const LogicRegistry& reg, const Formula& f,
                                        const VarSet& universe, const SearchOptions& opts) {
  Evaluator eval(reg, f);
  for (const auto& v : eval.variables()) {
    if (universe.count(v) == 0) {
      throw InvalidArgument("profile universe is missing variable '" + v + "'");
    }
  }
  check_enumeration(universe.size(), opts);

  DegreeProfile profile;
  profile.variables_ = universe;
  profile.optionality_ = eval.optionality();
  std::vector<std::string> names(universe.begin(), universe.end());
  // Bit position of each formula variable inside the universe.
  std::vector<std::size_t> position;
  for (const auto& v : eval.variables()) {
    position.push_back(static_cast<std::size_t>(
        std::lower_bound(names.begin(), names.end(), v) - names.begin()));
  }
  for (std::uint64_t mask = 0; mask < space_size(names.size()); ++mask) {
    std::uint64_t local = 0;
    for (std::size_t i = 0; i < position.size(); ++i) {
      if (((mask >> position[i]) & 1U) != 0) {
        local |= std::uint64_t{1} << i;
      }
    }
    VarSet atoms;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (((mask >> i) & 1U) != 0) {
        atoms.insert(names[i]);
      }
    }
    profile.entries_.emplace(Interpretation(std::move(atoms)), eval.degree(local));
  }
  return profile;
}

Degree DegreeProfile::min_degree() const {
  Degree best = kInf;
  for (const auto& [_, d] : entries_) {
    best = std::min(best, d);
  }
  return best;
}

std::vector<Interpretation> DegreeProfile::argmin() const {
  std::vector<Interpretation> out;
  Degree best = min_degree();
  if (best.is_inf()) {
    return out;
  }
  for (const auto& [interp, d] : entries_) {
    if (d == best) {
      out.push_back(interp);
    }
  }
  return out;
}

bool model_check(const LogicRegistry& reg, const Interpretation& interp, const Formula& f,
                 Degree bound) {
  return degree(reg, interp, f) <= bound;
}

std::optional<Interpretation> sat_at_most(const LogicRegistry& reg, const Formula& f, Degree bound,
                                          const SearchOptions& opts) {
  Evaluator eval(reg, f);
  check_enumeration(eval.variables().size(), opts);
  for (std::uint64_t mask = 0; mask < space_size(eval.variables().size()); ++mask) {
    if (eval.degree(mask) <= bound) {
      return eval.interpretation_of(mask);
    }
  }
  return std::nullopt;
}

Degree min_degree(const LogicRegistry& reg, const Formula& f, const SearchOptions& opts) {
  Evaluator eval(reg, f);
  check_enumeration(eval.variables().size(), opts);
  Degree best = kInf;
  for (std::uint64_t mask = 0; mask < space_size(eval.variables().size()); ++mask) {
    best = std::min(best, eval.degree(mask));
    if (best == Degree::finite(1)) {
      break;
    }
  }
  return best;
}

BinarySearchResult min_degree_binary_search(const LogicRegistry& reg, const Formula& f,
                                            const SearchOptions& opts) {
  check_enumeration(vars_of(f).size(), opts);
  // Candidates are 1..opt(f) followed by inf; index opt(f) is inf and always
  // satisfiable, so it never needs an oracle call.
  const std::uint64_t top = optionality(reg, f).value();
  auto candidate = [top](std::uint64_t index) {
    return index == top ? kInf : Degree::finite(index + 1);
  };
  BinarySearchResult result;
  std::uint64_t lo = 0;
  std::uint64_t hi = top;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    ++result.oracle_calls;
    if (sat_at_most(reg, f, candidate(mid), opts)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  result.degree = candidate(lo);
  return result;
}

std::vector<Interpretation> preferred_models(const LogicRegistry& reg, const Formula& f,
                                             const SearchOptions& opts) {
  return DegreeProfile::build(reg, f, opts).argmin();
}

std::vector<Interpretation> preferred_models_over(const LogicRegistry& reg, const Formula& f,
                                                  const VarSet& universe,
                                                  const SearchOptions& opts) {
  return DegreeProfile::build_over(reg, f, universe, opts).argmin();
}

bool pref_model_check(const LogicRegistry& reg, const Interpretation& interp, const Formula& f,
                      const SearchOptions& opts) {
  Evaluator eval(reg, f);
  check_enumeration(eval.variables().size(), opts);
  Degree mine = eval.degree(interp);
  if (mine.is_inf()) {
    return false;
  }
  for (std::uint64_t mask = 0; mask < space_size(eval.variables().size()); ++mask) {
    if (eval.degree(mask) < mine) {
      return false;
    }
  }
  return true;
}

std::optional<Interpretation> pref_model_sat(const LogicRegistry& reg, const Formula& f,
                                             std::string_view atom, const SearchOptions& opts) {
  auto vars = vars_of(f);
  bool occurs = vars.count(atom) != 0;
  for (const auto& model : preferred_models(reg, f, opts)) {
    if (model.contains(atom)) {
      return model;
    }
    if (!occurs) {
      auto extended = model;
      extended.insert(std::string(atom));
      return extended;
    }
  }
  return std::nullopt;
}

PrefSatDecision pref_model_sat_by_search(const LogicRegistry& reg, const Formula& f,
                                         std::string_view atom, const SearchOptions& opts) {
  auto overall = min_degree_binary_search(reg, f, opts);
  auto grounded = replace_atom(f, atom, Formula::top());
  auto with_atom = min_degree_binary_search(reg, grounded, opts);
  PrefSatDecision out;
  out.overall = overall.degree;
  out.with_atom = with_atom.degree;
  out.oracle_calls = overall.oracle_calls + with_atom.oracle_calls;
  out.answer = out.overall.is_finite() && out.overall == out.with_atom;
  return out;
}

} // namespace choicekit
