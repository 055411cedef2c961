#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "choicekit/degree.hpp"

namespace choicekit {

using OptionalityFn = std::function<Optionality(Optionality k, Optionality l)>;
using DegreeFn = std::function<Degree(Optionality k, Optionality l, Degree m, Degree n)>;

/// A binary choice connective.
///
/// `optionality` maps the operand optionalities (k, l) to the optionality of
/// the compound; `degree` maps (k, l) and the operand degrees (m, n) to the
/// compound's degree. Both must be pure. The evaluator enforces
/// opt <= (k+1)(l+1) and deg <= opt (or infinity) on every call.
///
/// The three flags are declarations. `opt_ignoring` can be tested with
/// check_opt_ignoring. `opt_differentiating` is a proof obligation on the
/// author: any logic containing this connective must admit, for every pair
/// of formulas with different optionalities, a context that separates their
/// degrees (for ordered disjunction: ((A & FALSE) |> a)).
struct ConnectiveSpec {
  std::string name;
  /// Operator text used by the parser and printer, e.g. "|>".
  std::string token;
  OptionalityFn optionality;
  DegreeFn degree;
  bool associative = false;
  bool opt_ignoring = false;
  bool opt_differentiating = false;
};

/// Largest optionality a connective may assign: (k+1)(l+1).
std::uint64_t optionality_cap(Optionality k, Optionality l);

/// Optionality of `spec` at (k, l); throws BoundViolation above the cap.
Optionality connective_optionality(const ConnectiveSpec& spec, Optionality k, Optionality l);

/// Degree of `spec`; throws BoundViolation when finite and above the
/// connective's optionality.
Degree connective_degree(const ConnectiveSpec& spec, Optionality k, Optionality l, Degree m,
                         Degree n);

// Built-in connectives.
ConnectiveSpec ordered_disjunction();   ///< QCL, token "|>"
ConnectiveSpec ordered_conjunction();   ///< CCL, token "&>"
ConnectiveSpec lexicographic_choice();  ///< LCL, token "@>"
ConnectiveSpec simple_conjunction();    ///< SCCL, token "*>"

enum class BuiltinLogic { PL, QCL, CCL, LCL, SCCL, QCCL };

/// Case-insensitive lookup of "pl", "qcl", ...; throws InvalidArgument.
BuiltinLogic parse_builtin_logic(std::string_view name);
std::string_view builtin_logic_name(BuiltinLogic logic);
std::vector<BuiltinLogic> all_builtin_logics();

/// Sealed set of choice connectives defining one choice logic.
class LogicRegistry {
public:
  class Builder {
  public:
    explicit Builder(std::string logic_name);

    /// Throws InvalidArgument on duplicate or reserved names/tokens.
    Builder& add(ConnectiveSpec spec);

    /// Overrides the logic-level classification derived from the
    /// connective flags.
    Builder& classify(std::optional<bool> opt_ignoring, std::optional<bool> opt_differentiating);

    LogicRegistry seal() const;

  private:
    std::string name_;
    std::vector<ConnectiveSpec> specs_;
    std::optional<bool> ignoring_;
    std::optional<bool> differentiating_;
  };

  const std::string& name() const noexcept;

  const ConnectiveSpec* find(std::string_view name) const noexcept;
  /// Throws UnknownConnective.
  const ConnectiveSpec& at(std::string_view name) const;
  const ConnectiveSpec* find_by_token(std::string_view token) const noexcept;

  /// Connectives in registration order.
  const std::vector<ConnectiveSpec>& connectives() const noexcept;
  bool empty() const noexcept { return connectives().empty(); }

  /// Every connective is declared optionality-ignoring (true for PL).
  bool optionality_ignoring() const noexcept;
  /// No connectives, or at least one declared optionality-differentiating.
  bool optionality_differentiating() const noexcept;

private:
  struct Data;
  explicit LogicRegistry(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

LogicRegistry builtin_registry(BuiltinLogic logic);
LogicRegistry builtin_registry(std::string_view logic_name);

/// Result of a bounded exhaustive check.
struct IgnoringWitness {
  Optionality k1, l1, k2, l2;
  Degree m, n;
  Degree degree1, degree2;
};

struct IgnoringCheck {
  bool confirmed = true;
  std::optional<IgnoringWitness> witness;
};

/// Tests whether the degree function is independent of (k, l) for all
/// k, l <= k_max and operand degrees m, n in {1..d_max, inf} that the
/// operands can actually take (m <= k, n <= l when finite).
IgnoringCheck check_opt_ignoring(const ConnectiveSpec& spec, std::uint64_t k_max,
                                 std::uint64_t d_max);

} // namespace choicekit
