#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "choicekit/connectives.hpp"
#include "choicekit/degree.hpp"
#include "choicekit/formula.hpp"

namespace choicekit {

struct Evaluation {
  Optionality optionality;
  Degree degree;
};

/// Optionality of `f` in the logic `reg`.
Optionality optionality(const LogicRegistry& reg, const Formula& f);

/// Satisfaction degree of `f` under `interp`.
Degree degree(const LogicRegistry& reg, const Interpretation& interp, const Formula& f);

/// Optionality and degree in one bottom-up pass.
Evaluation evaluate(const LogicRegistry& reg, const Interpretation& interp, const Formula& f);

/// A formula flattened to postorder with every node's optionality resolved
/// up front, for evaluating many interpretations of the same formula.
///
/// Variables are indexed in sorted order; bit i of a mask is variable i.
class Evaluator {
public:
  Evaluator(const LogicRegistry& reg, const Formula& f);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  Optionality optionality() const noexcept { return optionality_; }

  /// Requires variables().size() <= 64.
  Degree degree(std::uint64_t mask) const;
  Degree degree(const Interpretation& interp) const;

  std::uint64_t mask_of(const Interpretation& interp) const;
  Interpretation interpretation_of(std::uint64_t mask) const;

private:
  struct Op {
    NodeKind kind;
    std::uint32_t var = 0;  // Atom
    std::uint32_t lhs = 0;  // operand slots
    std::uint32_t rhs = 0;
    const ConnectiveSpec* spec = nullptr;
    Optionality lhs_opt{1};
    Optionality rhs_opt{1};
  };

  template <typename TruthOf>
  Degree run(TruthOf&& truth) const;

  std::uint32_t compile(const LogicRegistry& reg, const Formula& f, std::vector<Optionality>& opts);

  std::vector<std::string> variables_;
  std::vector<Op> ops_;
  Optionality optionality_{1};
};

} // namespace choicekit
