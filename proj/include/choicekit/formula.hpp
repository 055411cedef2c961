#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "choicekit/error.hpp"

namespace choicekit {

using VarSet = std::set<std::string, std::less<>>;

/// Atoms starting with this prefix are reserved for generated variables
/// (constants, fresh context variables) and rejected by the default parser.
inline constexpr std::string_view kReservedPrefix = "__";

/// Atom used by the TRUE/FALSE shorthands.
inline constexpr std::string_view kConstantAtom = "__c";

bool is_identifier(std::string_view name);
bool is_reserved(std::string_view name);

enum class NodeKind : std::uint8_t { Atom, Neg, And, Or, Choice };

/// Immutable formula tree. Copies share structure; rewriting always
/// produces a new tree.
class Formula {
public:
  static Formula atom(std::string name);
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula choice(std::string connective, Formula left, Formula right);

  /// (v | ~v) and (v & ~v) over the given atom.
  static Formula top(std::string_view atom = kConstantAtom);
  static Formula bottom(std::string_view atom = kConstantAtom);

  NodeKind kind() const noexcept;
  bool is_atom() const noexcept { return kind() == NodeKind::Atom; }
  bool is_binary() const noexcept;

  /// Atom name for atoms, connective name for choice nodes, empty otherwise.
  const std::string& name() const noexcept;

  /// Operand of a negation.
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

  /// True when both handles share the same node.
  bool same_node(const Formula& other) const noexcept { return node_ == other.node_; }

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Left-nested conjunction/disjunction of a nonempty list.
Formula conjunction_of(const std::vector<Formula>& parts);
Formula disjunction_of(const std::vector<Formula>& parts);

/// Right-nested chain f1 o (f2 o (... o fn)) and its left-nested mirror.
Formula right_chain(std::string_view connective, const std::vector<Formula>& parts);
Formula left_chain(std::string_view connective, const std::vector<Formula>& parts);

/// Atoms occurring in `f`.
VarSet vars_of(const Formula& f);

/// Number of atom occurrences, e.g. |x & x & y| = 3.
std::size_t size_of(const Formula& f);

/// True iff `f` contains no choice connective.
bool is_classical(const Formula& f);

/// Debug form with explicit parentheses and connective names.
std::string debug_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

/// A classical interpretation: the set of true atoms.
class Interpretation {
public:
  Interpretation() = default;
  Interpretation(std::initializer_list<std::string> atoms);
  explicit Interpretation(VarSet atoms) : atoms_(std::move(atoms)) {}

  /// Parses "a,b,c"; the empty string is the empty interpretation.
  static Interpretation parse(std::string_view text);

  bool contains(std::string_view atom) const { return atoms_.find(atom) != atoms_.end(); }
  void insert(std::string atom) { atoms_.insert(std::move(atom)); }
  void erase(std::string_view atom);

  const VarSet& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  Interpretation restricted_to(const VarSet& vars) const;
  Interpretation united_with(const Interpretation& other) const;
  bool subset_of(const VarSet& vars) const;

  /// Comma-joined atoms, "" for the empty set.
  std::string to_string() const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
  friend auto operator<=>(const Interpretation& a, const Interpretation& b) {
    return a.atoms_ <=> b.atoms_;
  }

private:
  VarSet atoms_;
};

std::ostream& operator<<(std::ostream& os, const Interpretation& i);

/// Selector for one step into a formula: Down enters a negation, Left/Right
/// enter the operands of a binary node.
enum class Step : std::uint8_t { Left, Right, Down };

/// Address of a single subformula occurrence. The empty path is the root.
struct OccurrencePath {
  std::vector<Step> steps;

  friend bool operator==(const OccurrencePath&, const OccurrencePath&) = default;
  std::string to_string() const;
};

/// Subformula at `path`; throws InvalidPath.
const Formula& subformula_at(const Formula& f, const OccurrencePath& path);

/// Copy of `f` with the occurrence at `path` replaced by `replacement`.
Formula substitute(const Formula& f, const OccurrencePath& path, const Formula& replacement);

/// All occurrence paths of `f` in preorder.
std::vector<OccurrencePath> all_paths(const Formula& f);

/// Paths at which a subformula structurally equal to `needle` occurs, preorder.
std::vector<OccurrencePath> find_occurrences(const Formula& f, const Formula& needle);

/// Replaces every atom `name` by `replacement`.
Formula replace_atom(const Formula& f, std::string_view name, const Formula& replacement);

/// Renames atoms according to `fn`, which receives the old name.
template <typename Fn>
Formula rename_atoms(const Formula& f, Fn&& fn);

struct Formula::Node {
  NodeKind kind;
  std::string name;
  std::vector<Formula> children;
};

inline NodeKind Formula::kind() const noexcept { return node_->kind; }

inline bool Formula::is_binary() const noexcept {
  auto k = kind();
  return k == NodeKind::And || k == NodeKind::Or || k == NodeKind::Choice;
}

inline const std::string& Formula::name() const noexcept { return node_->name; }

template <typename Fn>
Formula rename_atoms(const Formula& f, Fn&& fn) {
  switch (f.kind()) {
  case NodeKind::Atom:
    return Formula::atom(fn(f.name()));
  case NodeKind::Neg:
    return Formula::negation(rename_atoms(f.child(), fn));
  case NodeKind::And:
    return Formula::conjunction(rename_atoms(f.left(), fn), rename_atoms(f.right(), fn));
  case NodeKind::Or:
    return Formula::disjunction(rename_atoms(f.left(), fn), rename_atoms(f.right(), fn));
  case NodeKind::Choice:
    return Formula::choice(f.name(), rename_atoms(f.left(), fn), rename_atoms(f.right(), fn));
  }
  return f;
}

} // namespace choicekit
