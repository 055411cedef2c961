#include "choicekit/semantics.hpp"

#include <algorithm>

namespace choicekit {

namespace {

Degree negate(const Degree& d) { return d.is_inf() ? Degree::finite(1) : kInf; }

} // namespace

Evaluation evaluate(const LogicRegistry& reg, const Interpretation& interp, const Formula& f) {
  switch (f.kind()) {
  case NodeKind::Atom:
    return {Optionality(1), interp.contains(f.name()) ? Degree::finite(1) : kInf};
  case NodeKind::Neg:
    return {Optionality(1), negate(evaluate(reg, interp, f.child()).degree)};
  case NodeKind::And: {
    auto a = evaluate(reg, interp, f.left());
    auto b = evaluate(reg, interp, f.right());
    return {std::max(a.optionality, b.optionality), std::max(a.degree, b.degree)};
  }
  case NodeKind::Or: {
    auto a = evaluate(reg, interp, f.left());
    auto b = evaluate(reg, interp, f.right());
    return {std::max(a.optionality, b.optionality), std::min(a.degree, b.degree)};
  }
  case NodeKind::Choice: {
    const auto& spec = reg.at(f.name());
    auto a = evaluate(reg, interp, f.left());
    auto b = evaluate(reg, interp, f.right());
    return {connective_optionality(spec, a.optionality, b.optionality),
            connective_degree(spec, a.optionality, b.optionality, a.degree, b.degree)};
  }
  }
  throw InvalidArgument("unknown node kind");
}

Optionality optionality(const LogicRegistry& reg, const Formula& f) {
  switch (f.kind()) {
  case NodeKind::Atom:
  case NodeKind::Neg:
    return Optionality(1);
  case NodeKind::And:
  case NodeKind::Or:
    return std::max(optionality(reg, f.left()), optionality(reg, f.right()));
  case NodeKind::Choice:
    return connective_optionality(reg.at(f.name()), optionality(reg, f.left()),
                                  optionality(reg, f.right()));
  }
  throw InvalidArgument("unknown node kind");
}

Degree degree(const LogicRegistry& reg, const Interpretation& interp, const Formula& f) {
  return evaluate(reg, interp, f).degree;
}

// Evaluator

Evaluator::Evaluator(const LogicRegistry& reg, const Formula& f) {
  auto vars = vars_of(f);
  variables_.assign(vars.begin(), vars.end());
  std::vector<Optionality> opts;
  compile(reg, f, opts);
  optionality_ = opts.back();
}

std::uint32_t Evaluator::compile(const LogicRegistry& reg, const Formula& f,
                                 std::vector<Optionality>& opts) {
  Op op{f.kind()};
  Optionality opt(1);
  switch (f.kind()) {
  case NodeKind::Atom: {
    auto it = std::lower_bound(variables_.begin(), variables_.end(), f.name());
    op.var = static_cast<std::uint32_t>(it - variables_.begin());
    break;
  }
  case NodeKind::Neg:
    op.lhs = compile(reg, f.child(), opts);
    break;
  case NodeKind::And:
  case NodeKind::Or:
  case NodeKind::Choice: {
    if (f.kind() == NodeKind::Choice) {
      op.spec = &reg.at(f.name());
    }
    op.lhs = compile(reg, f.left(), opts);
    op.rhs = compile(reg, f.right(), opts);
    op.lhs_opt = opts[op.lhs];
    op.rhs_opt = opts[op.rhs];
    opt = op.spec ? connective_optionality(*op.spec, op.lhs_opt, op.rhs_opt)
                  : std::max(op.lhs_opt, op.rhs_opt);
    break;
  }
  }
  ops_.push_back(op);
  opts.push_back(opt);
  return static_cast<std::uint32_t>(ops_.size() - 1);
}

template <typename TruthOf>
Degree Evaluator::run(TruthOf&& truth) const {
  std::vector<Degree> slots(ops_.size());
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    switch (op.kind) {
    case NodeKind::Atom:
      slots[i] = truth(op.var) ? Degree::finite(1) : kInf;
      break;
    case NodeKind::Neg:
      slots[i] = negate(slots[op.lhs]);
      break;
    case NodeKind::And:
      slots[i] = std::max(slots[op.lhs], slots[op.rhs]);
      break;
    case NodeKind::Or:
      slots[i] = std::min(slots[op.lhs], slots[op.rhs]);
      break;
    case NodeKind::Choice:
      slots[i] = connective_degree(*op.spec, op.lhs_opt, op.rhs_opt, slots[op.lhs], slots[op.rhs]);
      break;
    }
  }
  return slots.back();
}

Degree Evaluator::degree(std::uint64_t mask) const {
  if (variables_.size() > 64) {
    throw InvalidArgument("bitmask evaluation supports at most 64 variables");
  }
  return run([mask](std::uint32_t var) { return ((mask >> var) & 1U) != 0; });
}

Degree Evaluator::degree(const Interpretation& interp) const {
  return run([&](std::uint32_t var) { return interp.contains(variables_[var]); });
}

std::uint64_t Evaluator::mask_of(const Interpretation& interp) const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < variables_.size() && i < 64; ++i) {
    if (interp.contains(variables_[i])) {
      mask |= std::uint64_t{1} << i;
    }
  }
  return mask;
}

Interpretation Evaluator::interpretation_of(std::uint64_t mask) const {
  VarSet atoms;
  for (std::size_t i = 0; i < variables_.size() && i < 64; ++i) {
    if (((mask >> i) & 1U) != 0) {
      atoms.insert(variables_[i]);
    }
  }
  return Interpretation(std::move(atoms));
}

} // namespace choicekit
