#include "choicekit/generate.hpp"

#include "choicekit/equivalence.hpp"

namespace choicekit {

namespace {

Formula build(std::mt19937_64& rng, const std::vector<std::string>& names,
              const std::vector<std::string>& ops, std::size_t size) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  if (size == 1) {
    Formula a = Formula::atom(names[pick(names.size())]);
    return pick(3) == 0 ? Formula::negation(a) : a;
  }
  // Negation does not add atoms, so it is mixed in at a fixed rate.
  if (pick(6) == 0) {
    return Formula::negation(build(rng, names, ops, size));
  }
  std::size_t left = 1 + pick(size - 1);
  Formula l = build(rng, names, ops, left);
  Formula r = build(rng, names, ops, size - left);
  const auto& op = ops[pick(ops.size())];
  if (op == "&") {
    return Formula::conjunction(l, r);
  }
  if (op == "|") {
    return Formula::disjunction(l, r);
  }
  return Formula::choice(op, l, r);
}

} // namespace

Formula random_formula(std::mt19937_64& rng, const LogicRegistry& reg, const FormulaShape& shape) {
  if (shape.max_size == 0 || shape.variables == 0) {
    throw InvalidArgument("formula shape needs a positive size and variable count");
  }
  std::vector<std::string> ops{"&", "|"};
  if (shape.choice) {
    for (const auto& spec : reg.connectives()) {
      ops.push_back(spec.name);
    }
  }
  auto size = std::uniform_int_distribution<std::size_t>(1, shape.max_size)(rng);
  return build(rng, variable_names(shape.variables), ops, size);
}

Interpretation random_interpretation(std::mt19937_64& rng, const VarSet& vars) {
  Interpretation out;
  for (const auto& v : vars) {
    if (rng() & 1U) {
      out.insert(v);
    }
  }
  return out;
}

} // namespace choicekit
