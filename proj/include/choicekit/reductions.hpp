#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "choicekit/connectives.hpp"
#include "choicekit/formula.hpp"
#include "choicekit/models.hpp"

namespace choicekit {

/// A lexicographic maximization query: is the last order variable true in
/// the lexicographically largest assignment to `order` that extends to a
/// model of `matrix`? `order[0]` is the most significant variable.
struct LexInstance {
  Formula matrix;
  std::vector<std::string> order;

  const std::string& query_var() const { return order.back(); }
};

/// Throws InvalidArgument unless the matrix is classical and the order is a
/// nonempty list of distinct variables of the matrix.
void validate(const LexInstance& inst);

/// True iff |order| <= floor(log2(size_of(matrix))).
bool within_log_bound(const LexInstance& inst);

/// The i-th largest (1-based) assignment over `order`: i = 1 sets all
/// variables, i = 2^n sets none.
Interpretation lex_rank_interpretation(const std::vector<std::string>& order, std::uint64_t rank);

/// 1-based rank of interp's projection onto `order`.
std::uint64_t lex_rank_of(const std::vector<std::string>& order, const Interpretation& interp);

/// x1 @> (x2 @> (... @> xn)).
Formula lex_formula_lcl(const std::vector<std::string>& order);

/// matrix & lex_formula_lcl(order).
Formula encode_lexmaxsat_lcl(const LexInstance& inst);

enum class LexTarget { LCL, QCL, CCL, SCCL };

LexTarget parse_lex_target(std::string_view name);
std::string_view lex_target_name(LexTarget target);
BuiltinLogic target_logic(LexTarget target);

/// Characteristic formula A_i of the i-th largest assignment.
Formula rank_characteristic(const std::vector<std::string>& order, std::uint64_t rank);

/// The preference chain over all 2^n ranks, without the matrix:
/// QCL  A_1 |> ... |> A_{2^n} (right-nested)
/// CCL  C_1 &> ... &> C_{2^n} (right-nested), C_i = A_1 | ... | A_{2^n-i+1}
/// SCCL ((C_1 *> C_2) *> ...) *> C_{2^n} (left-nested)
/// LCL  lex_formula_lcl(order)
Formula lex_chain(const std::vector<std::string>& order, LexTarget target);

/// matrix & lex_chain(order, target). The QCL/CCL/SCCL encodings
/// materialize 2^n blocks and require the log bound unless
/// `allow_unbounded` is set; throws LogBoundViolation.
Formula encode_loglex(const LexInstance& inst, LexTarget target, bool allow_unbounded = false);

struct LexSolution {
  Interpretation projection;  ///< largest extendable assignment over the order
  Interpretation model;       ///< one model of the matrix extending it
};

/// Brute-force reference: enumerates all interpretations of the matrix.
std::optional<LexSolution> lex_oracle(const LexInstance& inst, const SearchOptions& opts = {});

/// Encodes for `target` and answers whether some preferred model of the
/// encoding contains the query variable.
bool solve_via_encoding(const LexInstance& inst, LexTarget target,
                        const SearchOptions& opts = {}, bool allow_unbounded = false);

} // namespace choicekit
