#include "choicekit/equivalence.hpp"

#include "choicekit/semantics.hpp"
#include "choicekit/synthesis.hpp"

namespace choicekit {

std::string_view to_string(EquivStatus status) {
  switch (status) {
  case EquivStatus::Equivalent:
    return "equivalent";
  case EquivStatus::Inequivalent:
    return "inequivalent";
  case EquivStatus::Unknown:
    return "unknown";
  }
  return "unknown";
}

namespace {

VarSet joint_vars(const Formula& a, const Formula& b) {
  auto vars = vars_of(a);
  auto more = vars_of(b);
  vars.insert(more.begin(), more.end());
  return vars;
}

std::optional<InterpretationWitness> separating_interpretation(const LogicRegistry& reg,
                                                               const Formula& a, const Formula& b,
                                                               const SearchOptions& opts) {
  auto vars = joint_vars(a, b);
  check_enumeration(vars.size(), opts);
  Evaluator ea(reg, a);
  Evaluator eb(reg, b);
  std::vector<std::string> names(vars.begin(), vars.end());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << names.size()); ++mask) {
    VarSet atoms;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (((mask >> i) & 1U) != 0) {
        atoms.insert(names[i]);
      }
    }
    Interpretation interp(std::move(atoms));
    Degree da = ea.degree(interp);
    Degree db = eb.degree(interp);
    if (da != db) {
      return InterpretationWitness{std::move(interp), da, db};
    }
  }
  return std::nullopt;
}

} // namespace

EquivVerdict degree_equivalent(const LogicRegistry& reg, const Formula& a, const Formula& b,
                               const SearchOptions& opts) {
  EquivVerdict v;
  v.method = "degree-check";
  if (auto w = separating_interpretation(reg, a, b, opts)) {
    v.status = EquivStatus::Inequivalent;
    v.witness = std::move(*w);
  } else {
    v.status = EquivStatus::Equivalent;
  }
  return v;
}

EquivVerdict fully_equivalent(const LogicRegistry& reg, const Formula& a, const Formula& b,
                              const SearchOptions& opts) {
  EquivVerdict v = degree_equivalent(reg, a, b, opts);
  v.method = "full-check";
  if (v.status == EquivStatus::Inequivalent) {
    return v;
  }
  auto oa = optionality(reg, a);
  auto ob = optionality(reg, b);
  if (oa != ob) {
    v.status = EquivStatus::Inequivalent;
    v.witness = OptionalityWitness{oa, ob};
  }
  return v;
}

EquivVerdict strongly_equivalent(const LogicRegistry& reg, const Formula& a, const Formula& b,
                                 const SearchOptions& opts) {
  if (reg.optionality_ignoring()) {
    auto v = degree_equivalent(reg, a, b, opts);
    v.method = "degree-route";
    return v;
  }
  if (reg.optionality_differentiating()) {
    auto v = fully_equivalent(reg, a, b, opts);
    v.method = "full-route";
    return v;
  }
  auto v = degree_equivalent(reg, a, b, opts);
  if (v.status == EquivStatus::Inequivalent) {
    v.method = "degree-refutation";
  } else {
    v.status = EquivStatus::Unknown;
    v.method = "unclassified";
  }
  return v;
}

bool context_separates(const LogicRegistry& reg, const ContextWitness& ctx, const Formula& b,
                       const SearchOptions& opts) {
  auto replaced = substitute(ctx.context, ctx.path, b);
  auto universe = joint_vars(ctx.context, replaced);
  return preferred_models_over(reg, ctx.context, universe, opts) !=
         preferred_models_over(reg, replaced, universe, opts);
}

bool witness_holds(const LogicRegistry& reg, const Formula& a, const Formula& b,
                   const EquivVerdict& verdict, const SearchOptions& opts) {
  if (verdict.status != EquivStatus::Inequivalent) {
    return false;
  }
  return std::visit(
      [&](const auto& w) -> bool {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, InterpretationWitness>) {
          return degree(reg, w.interpretation, a) == w.left &&
                 degree(reg, w.interpretation, b) == w.right && w.left != w.right;
        } else if constexpr (std::is_same_v<W, OptionalityWitness>) {
          return optionality(reg, a) == w.left && optionality(reg, b) == w.right &&
                 w.left != w.right;
        } else if constexpr (std::is_same_v<W, ContextWitness>) {
          return subformula_at(w.context, w.path) == a && context_separates(reg, w, b, opts);
        } else {
          return false;
        }
      },
      verdict.witness);
}

std::string fresh_atom(std::string_view base, const VarSet& taken) {
  std::string stem = std::string(kReservedPrefix) + std::string(base);
  if (taken.count(stem) == 0) {
    return stem;
  }
  for (std::size_t i = 1;; ++i) {
    auto candidate = stem + std::to_string(i);
    if (taken.count(candidate) == 0) {
      return candidate;
    }
  }
}

ContextWitness inequivalence_context(const LogicRegistry& reg, const Formula& a, const Formula& b,
                                     const Interpretation& i, const SearchOptions& opts) {
  auto vars = joint_vars(a, b);
  auto local = i.restricted_to(vars);
  Degree m = degree(reg, local, a);
  Degree n = degree(reg, local, b);
  if (m == n) {
    throw InvalidArgument("interpretation " + local.to_string() +
                          " gives both formulas degree " + m.to_string());
  }
  // The smaller degree is finite and realized by whichever side attains it.
  const Formula& source = m < n ? a : b;

  VarSet taken = vars;
  auto g_atom = fresh_atom("g", taken);
  taken.insert(g_atom);
  auto h_atom = fresh_atom("h", taken);
  taken.insert(h_atom);
  auto switch_atom = fresh_atom("f", taken);

  Formula g = ground_to_degree(source, local, g_atom);
  Formula h = ground_to_degree(source, local, h_atom);
  Formula context =
      Formula::disjunction(Formula::conjunction(a, g),
                           Formula::conjunction(Formula::atom(switch_atom), h));
  ContextWitness out{context, OccurrencePath{{Step::Left, Step::Left}}};
  if (!context_separates(reg, out, b, opts)) {
    throw ConstructionFailure("separating context for " + debug_string(a) + " vs " +
                              debug_string(b) + " did not change the preferred models");
  }
  return out;
}

std::vector<std::string> variable_names(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i))
                              : "v" + std::to_string(i));
  }
  return out;
}

AssociativityCheck check_associative(const LogicRegistry& reg, std::string_view name,
                                     std::size_t n_vars) {
  const auto& spec = reg.at(name);
  if (n_vars == 0) {
    throw InvalidArgument("associativity check needs at least one variable");
  }
  std::vector<Formula> pool;
  std::vector<Formula> atoms;
  for (const auto& v : variable_names(n_vars)) {
    atoms.push_back(Formula::atom(v));
  }
  for (const auto& atom : atoms) {
    pool.push_back(atom);
    pool.push_back(Formula::negation(atom));
  }
  for (const auto& p : atoms) {
    for (const auto& q : atoms) {
      pool.push_back(Formula::conjunction(p, q));
      pool.push_back(Formula::disjunction(p, q));
      for (const auto& other : reg.connectives()) {
        pool.push_back(Formula::choice(other.name, p, q));
      }
    }
  }

  AssociativityCheck result;
  SearchOptions opts;
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      for (const auto& z : pool) {
        ++result.triples;
        auto lhs = Formula::choice(spec.name, Formula::choice(spec.name, x, y), z);
        auto rhs = Formula::choice(spec.name, x, Formula::choice(spec.name, y, z));
        auto verdict = fully_equivalent(reg, lhs, rhs, opts);
        if (verdict.status != EquivStatus::Inequivalent) {
          continue;
        }
        bool degree_witness = std::holds_alternative<InterpretationWitness>(verdict.witness);
        if (degree_witness || !result.witness) {
          result.confirmed = false;
          result.witness = AssociativityWitness{x, y, z, std::move(verdict)};
        }
        if (degree_witness) {
          return result;
        }
      }
    }
  }
  return result;
}

} // namespace choicekit
