#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "choicekit/connectives.hpp"
#include "choicekit/formula.hpp"

namespace choicekit {

struct ParseOptions {
  /// Accept atoms with the reserved "__" prefix (generated variables).
  bool allow_reserved = false;
};

struct ParseResult {
  Formula formula;
  std::vector<std::string> warnings;
};

/// Parses the text grammar.
///
///   formula := classical (CHOICE formula)?     all CHOICE tokens of one chain equal
///   classical := conj ('|' conj)*              left-nested
///   conj := unary ('&' unary)*                 left-nested
///   unary := '~' unary | ATOM | TRUE | FALSE | '(' formula ')'
///
/// Choice tokens come from `reg` (|>, &>, @>, *> for the built-ins) and
/// chains nest to the right. Chains of three or more operands over a
/// connective not declared associative produce a warning. Mixing different
/// choice connectives without parentheses is an error. '#' starts a line
/// comment. TRUE and FALSE expand to Formula::top() / Formula::bottom().
ParseResult parse_with_warnings(const LogicRegistry& reg, std::string_view text,
                                const ParseOptions& opts = {});

Formula parse(const LogicRegistry& reg, std::string_view text, const ParseOptions& opts = {});

/// Prints `f` with the fewest parentheses that parse back to the same tree.
/// Throws UnknownConnective if a choice node is not in `reg`.
std::string render(const LogicRegistry& reg, const Formula& f);

} // namespace choicekit
