#include "choicekit/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "choicekit/semantics.hpp"
#include "choicekit/synthesis.hpp"

namespace choicekit {

void validate(const LexInstance& inst) {
  if (inst.order.empty()) {
    throw InvalidArgument("lexicographic order is empty");
  }
  if (!is_classical(inst.matrix)) {
    throw InvalidArgument("lexicographic matrix must be a classical formula");
  }
  auto vars = vars_of(inst.matrix);
  std::set<std::string> seen;
  for (const auto& x : inst.order) {
    if (!seen.insert(x).second) {
      throw InvalidArgument("order variable '" + x + "' is listed twice");
    }
    if (vars.count(x) == 0) {
      throw InvalidArgument("order variable '" + x + "' does not occur in the matrix");
    }
  }
}

bool within_log_bound(const LexInstance& inst) {
  std::size_t size = size_of(inst.matrix);
  std::size_t floor_log = 0;
  while ((std::size_t{2} << floor_log) <= size) {
    ++floor_log;
  }
  return inst.order.size() <= floor_log;
}

namespace {

void check_order_width(const std::vector<std::string>& order) {
  if (order.empty()) {
    throw InvalidArgument("lexicographic order is empty");
  }
  if (order.size() > 62) {
    throw InvalidArgument("lexicographic order longer than 62 variables");
  }
}

} // namespace

Interpretation lex_rank_interpretation(const std::vector<std::string>& order, std::uint64_t rank) {
  check_order_width(order);
  const std::uint64_t count = std::uint64_t{1} << order.size();
  if (rank == 0 || rank > count) {
    throw InvalidArgument("rank " + std::to_string(rank) + " outside 1.." + std::to_string(count));
  }
  // order[0] is the most significant bit of (2^n - rank).
  std::uint64_t value = count - rank;
  Interpretation out;
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (((value >> (order.size() - 1 - j)) & 1U) != 0) {
      out.insert(order[j]);
    }
  }
  return out;
}

std::uint64_t lex_rank_of(const std::vector<std::string>& order, const Interpretation& interp) {
  check_order_width(order);
  std::uint64_t value = 0;
  for (const auto& x : order) {
    value = (value << 1) | (interp.contains(x) ? 1U : 0U);
  }
  return (std::uint64_t{1} << order.size()) - value;
}

Formula lex_formula_lcl(const std::vector<std::string>& order) {
  check_order_width(order);
  std::vector<Formula> atoms;
  for (const auto& x : order) {
    atoms.push_back(Formula::atom(x));
  }
  return right_chain(lexicographic_choice().name, atoms);
}

Formula encode_lexmaxsat_lcl(const LexInstance& inst) {
  validate(inst);
  return Formula::conjunction(inst.matrix, lex_formula_lcl(inst.order));
}

LexTarget parse_lex_target(std::string_view name) {
  std::string lower;
  for (char c : name) {
    lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (auto t : {LexTarget::LCL, LexTarget::QCL, LexTarget::CCL, LexTarget::SCCL}) {
    if (lex_target_name(t) == lower) {
      return t;
    }
  }
  throw InvalidArgument("unknown reduction target '" + std::string(name) +
                        "' (expected lcl, qcl, ccl or sccl)");
}

std::string_view lex_target_name(LexTarget target) {
  switch (target) {
  case LexTarget::LCL:
    return "lcl";
  case LexTarget::QCL:
    return "qcl";
  case LexTarget::CCL:
    return "ccl";
  case LexTarget::SCCL:
    return "sccl";
  }
  return "?";
}

BuiltinLogic target_logic(LexTarget target) {
  switch (target) {
  case LexTarget::LCL:
    return BuiltinLogic::LCL;
  case LexTarget::QCL:
    return BuiltinLogic::QCL;
  case LexTarget::CCL:
    return BuiltinLogic::CCL;
  case LexTarget::SCCL:
    return BuiltinLogic::SCCL;
  }
  return BuiltinLogic::PL;
}

Formula rank_characteristic(const std::vector<std::string>& order, std::uint64_t rank) {
  // Literals follow the order rather than the sorted variable set.
  auto j = lex_rank_interpretation(order, rank);
  std::vector<Formula> literals;
  for (const auto& x : order) {
    auto atom = Formula::atom(x);
    literals.push_back(j.contains(x) ? atom : Formula::negation(atom));
  }
  return conjunction_of(literals);
}

Formula lex_chain(const std::vector<std::string>& order, LexTarget target) {
  check_order_width(order);
  if (target == LexTarget::LCL) {
    return lex_formula_lcl(order);
  }
  const std::uint64_t count = std::uint64_t{1} << order.size();
  std::vector<Formula> blocks;
  for (std::uint64_t i = 1; i <= count; ++i) {
    blocks.push_back(rank_characteristic(order, i));
  }
  if (target == LexTarget::QCL) {
    return right_chain(ordered_disjunction().name, blocks);
  }
  // C_i = A_1 | ... | A_{2^n - i + 1}
  std::vector<Formula> cumulative;
  for (std::uint64_t i = 1; i <= count; ++i) {
    std::vector<Formula> prefix(blocks.begin(),
                                blocks.begin() + static_cast<std::ptrdiff_t>(count - i + 1));
    cumulative.push_back(disjunction_of(prefix));
  }
  if (target == LexTarget::CCL) {
    return right_chain(ordered_conjunction().name, cumulative);
  }
  return left_chain(simple_conjunction().name, cumulative);
}

Formula encode_loglex(const LexInstance& inst, LexTarget target, bool allow_unbounded) {
  validate(inst);
  if (target != LexTarget::LCL && !allow_unbounded && !within_log_bound(inst)) {
    throw LogBoundViolation("order of " + std::to_string(inst.order.size()) +
                            " variables exceeds floor(log2(" +
                            std::to_string(size_of(inst.matrix)) + ")) for the " +
                            std::string(lex_target_name(target)) + " encoding");
  }
  return Formula::conjunction(inst.matrix, lex_chain(inst.order, target));
}

std::optional<LexSolution> lex_oracle(const LexInstance& inst, const SearchOptions& opts) {
  validate(inst);
  auto reg = builtin_registry(BuiltinLogic::PL);
  Evaluator eval(reg, inst.matrix);
  check_enumeration(eval.variables().size(), opts);
  std::optional<LexSolution> best;
  std::uint64_t best_rank = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << eval.variables().size()); ++mask) {
    if (eval.degree(mask).is_inf()) {
      continue;
    }
    auto model = eval.interpretation_of(mask);
    auto rank = lex_rank_of(inst.order, model);
    if (!best || rank < best_rank) {
      VarSet order_vars(inst.order.begin(), inst.order.end());
      best = LexSolution{model.restricted_to(order_vars), model};
      best_rank = rank;
    }
  }
  return best;
}

bool solve_via_encoding(const LexInstance& inst, LexTarget target, const SearchOptions& opts,
                        bool allow_unbounded) {
  auto encoded = target == LexTarget::LCL ? encode_lexmaxsat_lcl(inst)
                                          : encode_loglex(inst, target, allow_unbounded);
  auto reg = builtin_registry(target_logic(target));
  return pref_model_sat(reg, encoded, inst.query_var(), opts).has_value();
}

} // namespace choicekit
