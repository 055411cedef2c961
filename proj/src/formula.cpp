#include "choicekit/formula.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace choicekit {

bool is_identifier(std::string_view name) {
  if (name.empty()) {
    return false;
  }
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') {
    return false;
  }
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') {
      return false;
    }
  }
  return true;
}

bool is_reserved(std::string_view name) { return name.substr(0, kReservedPrefix.size()) == kReservedPrefix; }

Formula Formula::atom(std::string name) {
  if (!is_identifier(name)) {
    throw InvalidArgument("invalid atom name '" + name + "'");
  }
  return Formula(std::make_shared<const Node>(Node{NodeKind::Atom, std::move(name), {}}));
}

Formula Formula::negation(Formula child) {
  return Formula(std::make_shared<const Node>(Node{NodeKind::Neg, {}, {std::move(child)}}));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return Formula(
      std::make_shared<const Node>(Node{NodeKind::And, {}, {std::move(left), std::move(right)}}));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return Formula(
      std::make_shared<const Node>(Node{NodeKind::Or, {}, {std::move(left), std::move(right)}}));
}

Formula Formula::choice(std::string connective, Formula left, Formula right) {
  if (connective.empty()) {
    throw InvalidArgument("choice node needs a connective name");
  }
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Choice, std::move(connective), {std::move(left), std::move(right)}}));
}

Formula Formula::top(std::string_view atom) {
  auto v = Formula::atom(std::string(atom));
  return disjunction(v, negation(v));
}

Formula Formula::bottom(std::string_view atom) {
  auto v = Formula::atom(std::string(atom));
  return conjunction(v, negation(v));
}

const Formula& Formula::child() const {
  if (kind() != NodeKind::Neg) {
    throw InvalidPath("child() on a node that is not a negation");
  }
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (!is_binary()) {
    throw InvalidPath("left() on a node that is not binary");
  }
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (!is_binary()) {
    throw InvalidPath("right() on a node that is not binary");
  }
  return node_->children[1];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) {
    return true;
  }
  if (a.node_->kind != b.node_->kind || a.node_->name != b.node_->name) {
    return false;
  }
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!(ca[i] == cb[i])) {
      return false;
    }
  }
  return true;
}

Formula conjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) {
    throw InvalidArgument("empty conjunction");
  }
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out = Formula::conjunction(out, parts[i]);
  }
  return out;
}

Formula disjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) {
    throw InvalidArgument("empty disjunction");
  }
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out = Formula::disjunction(out, parts[i]);
  }
  return out;
}

Formula right_chain(std::string_view connective, const std::vector<Formula>& parts) {
  if (parts.empty()) {
    throw InvalidArgument("empty chain");
  }
  Formula out = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    out = Formula::choice(std::string(connective), parts[i], out);
  }
  return out;
}

Formula left_chain(std::string_view connective, const std::vector<Formula>& parts) {
  if (parts.empty()) {
    throw InvalidArgument("empty chain");
  }
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out = Formula::choice(std::string(connective), out, parts[i]);
  }
  return out;
}

namespace {

void collect_vars(const Formula& f, VarSet& out) {
  switch (f.kind()) {
  case NodeKind::Atom:
    out.insert(f.name());
    return;
  case NodeKind::Neg:
    collect_vars(f.child(), out);
    return;
  default:
    collect_vars(f.left(), out);
    collect_vars(f.right(), out);
  }
}

void write_debug(const Formula& f, std::ostream& os) {
  switch (f.kind()) {
  case NodeKind::Atom:
    os << f.name();
    return;
  case NodeKind::Neg:
    os << "~";
    write_debug(f.child(), os);
    return;
  case NodeKind::And:
  case NodeKind::Or:
  case NodeKind::Choice:
    os << "(";
    write_debug(f.left(), os);
    if (f.kind() == NodeKind::And) {
      os << " & ";
    } else if (f.kind() == NodeKind::Or) {
      os << " | ";
    } else {
      os << " [" << f.name() << "] ";
    }
    write_debug(f.right(), os);
    os << ")";
  }
}

} // namespace

VarSet vars_of(const Formula& f) {
  VarSet out;
  collect_vars(f, out);
  return out;
}

std::size_t size_of(const Formula& f) {
  switch (f.kind()) {
  case NodeKind::Atom:
    return 1;
  case NodeKind::Neg:
    return size_of(f.child());
  default:
    return size_of(f.left()) + size_of(f.right());
  }
}

bool is_classical(const Formula& f) {
  switch (f.kind()) {
  case NodeKind::Atom:
    return true;
  case NodeKind::Neg:
    return is_classical(f.child());
  case NodeKind::Choice:
    return false;
  default:
    return is_classical(f.left()) && is_classical(f.right());
  }
}

std::string debug_string(const Formula& f) {
  std::ostringstream os;
  write_debug(f, os);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  write_debug(f, os);
  return os;
}

// Interpretation

Interpretation::Interpretation(std::initializer_list<std::string> atoms) {
  for (const auto& a : atoms) {
    atoms_.insert(a);
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

} // namespace

Interpretation Interpretation::parse(std::string_view text) {
  Interpretation out;
  if (trim(text).empty()) {
    return out;
  }
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start));
    if (!is_identifier(piece)) {
      throw InvalidArgument("invalid atom name '" + std::string(piece) + "' in interpretation");
    }
    out.insert(std::string(piece));
    if (comma == std::string_view::npos) {
      return out;
    }
    start = comma + 1;
  }
}

void Interpretation::erase(std::string_view atom) {
  auto it = atoms_.find(atom);
  if (it != atoms_.end()) {
    atoms_.erase(it);
  }
}

Interpretation Interpretation::restricted_to(const VarSet& vars) const {
  VarSet out;
  for (const auto& a : atoms_) {
    if (vars.count(a) != 0) {
      out.insert(a);
    }
  }
  return Interpretation(std::move(out));
}

Interpretation Interpretation::united_with(const Interpretation& other) const {
  VarSet out = atoms_;
  out.insert(other.atoms_.begin(), other.atoms_.end());
  return Interpretation(std::move(out));
}

bool Interpretation::subset_of(const VarSet& vars) const {
  for (const auto& a : atoms_) {
    if (vars.count(a) == 0) {
      return false;
    }
  }
  return true;
}

std::string Interpretation::to_string() const {
  std::string out;
  for (const auto& a : atoms_) {
    if (!out.empty()) {
      out += ',';
    }
    out += a;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Interpretation& i) {
  return os << "{" << i.to_string() << "}";
}

// Occurrence paths

std::string OccurrencePath::to_string() const {
  std::string out;
  for (auto s : steps) {
    out += s == Step::Left ? 'L' : s == Step::Right ? 'R' : 'D';
  }
  return out;
}

namespace {

const Formula& step_into(const Formula& f, Step s) {
  switch (s) {
  case Step::Down:
    if (f.kind() != NodeKind::Neg) {
      throw InvalidPath("Down step at a node that is not a negation");
    }
    return f.child();
  case Step::Left:
    if (!f.is_binary()) {
      throw InvalidPath("Left step at a node that is not binary");
    }
    return f.left();
  case Step::Right:
    if (!f.is_binary()) {
      throw InvalidPath("Right step at a node that is not binary");
    }
    return f.right();
  }
  throw InvalidPath("unknown step");
}

Formula rebuild_binary(const Formula& f, Formula left, Formula right) {
  switch (f.kind()) {
  case NodeKind::And:
    return Formula::conjunction(std::move(left), std::move(right));
  case NodeKind::Or:
    return Formula::disjunction(std::move(left), std::move(right));
  default:
    return Formula::choice(f.name(), std::move(left), std::move(right));
  }
}

Formula substitute_from(const Formula& f, const std::vector<Step>& steps, std::size_t at,
                        const Formula& replacement) {
  if (at == steps.size()) {
    return replacement;
  }
  const Formula& next = step_into(f, steps[at]);
  Formula replaced = substitute_from(next, steps, at + 1, replacement);
  switch (steps[at]) {
  case Step::Down:
    return Formula::negation(std::move(replaced));
  case Step::Left:
    return rebuild_binary(f, std::move(replaced), f.right());
  case Step::Right:
    return rebuild_binary(f, f.left(), std::move(replaced));
  }
  throw InvalidPath("unknown step");
}

void collect_paths(const Formula& f, std::vector<Step>& prefix, std::vector<OccurrencePath>& out) {
  out.push_back(OccurrencePath{prefix});
  if (f.kind() == NodeKind::Neg) {
    prefix.push_back(Step::Down);
    collect_paths(f.child(), prefix, out);
    prefix.pop_back();
  } else if (f.is_binary()) {
    prefix.push_back(Step::Left);
    collect_paths(f.left(), prefix, out);
    prefix.back() = Step::Right;
    collect_paths(f.right(), prefix, out);
    prefix.pop_back();
  }
}

} // namespace

const Formula& subformula_at(const Formula& f, const OccurrencePath& path) {
  const Formula* cur = &f;
  for (auto s : path.steps) {
    cur = &step_into(*cur, s);
  }
  return *cur;
}

Formula substitute(const Formula& f, const OccurrencePath& path, const Formula& replacement) {
  return substitute_from(f, path.steps, 0, replacement);
}

std::vector<OccurrencePath> all_paths(const Formula& f) {
  std::vector<OccurrencePath> out;
  std::vector<Step> prefix;
  collect_paths(f, prefix, out);
  return out;
}

std::vector<OccurrencePath> find_occurrences(const Formula& f, const Formula& needle) {
  std::vector<OccurrencePath> out;
  for (auto& p : all_paths(f)) {
    if (subformula_at(f, p) == needle) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

Formula replace_atom(const Formula& f, std::string_view name, const Formula& replacement) {
  switch (f.kind()) {
  case NodeKind::Atom:
    return f.name() == name ? replacement : f;
  case NodeKind::Neg:
    return Formula::negation(replace_atom(f.child(), name, replacement));
  default:
    return rebuild_binary(f, replace_atom(f.left(), name, replacement),
                          replace_atom(f.right(), name, replacement));
  }
}

} // namespace choicekit
