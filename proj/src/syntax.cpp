#include "choicekit/syntax.hpp"

#include <cctype>
#include <optional>

namespace choicekit {

namespace {

enum class TokenKind { Atom, True, False, Not, And, Or, Choice, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
  const ConnectiveSpec* spec = nullptr;
};

bool operator_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return !std::isalnum(u) && !std::isspace(u) && u != '_' && u != '(' && u != ')' && u != '#' &&
         u < 0x80;
}

class Lexer {
public:
  Lexer(const LogicRegistry& reg, std::string_view text) : reg_(reg), text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      if (pos_ >= text_.size()) {
        out.push_back({TokenKind::End, "", pos_});
        return out;
      }
      out.push_back(next());
    }
  }

private:
  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          ++pos_;
        }
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  Token next() {
    std::size_t start = pos_;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string word(text_.substr(start, pos_ - start));
      if (word == "TRUE") {
        return {TokenKind::True, word, start};
      }
      if (word == "FALSE") {
        return {TokenKind::False, word, start};
      }
      return {TokenKind::Atom, word, start};
    }
    if (c == '(') {
      ++pos_;
      return {TokenKind::LParen, "(", start};
    }
    if (c == ')') {
      ++pos_;
      return {TokenKind::RParen, ")", start};
    }
    if (!operator_char(c)) {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
    }
    // Longest registered token wins, then the classical operators.
    std::size_t end = pos_;
    while (end < text_.size() && operator_char(text_[end])) {
      ++end;
    }
    for (std::size_t len = end - pos_; len > 0; --len) {
      auto candidate = text_.substr(pos_, len);
      if (const auto* spec = reg_.find_by_token(candidate)) {
        pos_ += len;
        return {TokenKind::Choice, std::string(candidate), start, spec};
      }
    }
    ++pos_;
    switch (c) {
    case '~':
      return {TokenKind::Not, "~", start};
    case '&':
      return {TokenKind::And, "&", start};
    case '|':
      return {TokenKind::Or, "|", start};
    default:
      break;
    }
    throw ParseError("unknown operator '" + std::string(text_.substr(start, end - start)) +
                         "' in logic '" + reg_.name() + "'",
                     start);
  }

  const LogicRegistry& reg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
public:
  Parser(std::vector<Token> tokens, const ParseOptions& opts)
      : tokens_(std::move(tokens)), opts_(opts) {}

  ParseResult run() {
    Formula f = formula();
    if (peek().kind != TokenKind::End) {
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }
    return {std::move(f), std::move(warnings_)};
  }

private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& take() { return tokens_[at_++]; }

  Formula formula() {
    std::vector<Formula> operands{classical()};
    const ConnectiveSpec* spec = nullptr;
    std::size_t chain_pos = 0;
    while (peek().kind == TokenKind::Choice) {
      const Token& tok = take();
      if (spec == nullptr) {
        spec = tok.spec;
        chain_pos = tok.pos;
      } else if (tok.spec != spec) {
        throw ParseError("mixing '" + spec->token + "' and '" + tok.text +
                             "' needs parentheses",
                         tok.pos);
      }
      operands.push_back(classical());
    }
    if (spec == nullptr) {
      return operands.front();
    }
    if (operands.size() > 2 && !spec->associative) {
      warnings_.push_back("connective '" + spec->token + "' is not associative; chain at offset " +
                          std::to_string(chain_pos) + " groups to the right");
    }
    return right_chain(spec->name, operands);
  }

  Formula classical() {
    Formula out = conjunction();
    while (peek().kind == TokenKind::Or) {
      take();
      out = Formula::disjunction(out, conjunction());
    }
    return out;
  }

  Formula conjunction() {
    Formula out = unary();
    while (peek().kind == TokenKind::And) {
      take();
      out = Formula::conjunction(out, unary());
    }
    return out;
  }

  Formula unary() {
    const Token& tok = take();
    switch (tok.kind) {
    case TokenKind::Not:
      return Formula::negation(unary());
    case TokenKind::True:
      return Formula::top();
    case TokenKind::False:
      return Formula::bottom();
    case TokenKind::Atom:
      if (is_reserved(tok.text) && !opts_.allow_reserved) {
        throw ParseError("atom '" + tok.text + "' uses the reserved prefix '__'", tok.pos);
      }
      return Formula::atom(tok.text);
    case TokenKind::LParen: {
      Formula inner = formula();
      if (peek().kind != TokenKind::RParen) {
        throw ParseError("expected ')'", peek().pos);
      }
      take();
      return inner;
    }
    case TokenKind::End:
      throw ParseError("unexpected end of input", tok.pos);
    default:
      throw ParseError("unexpected '" + tok.text + "'", tok.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  ParseOptions opts_;
  std::vector<std::string> warnings_;
};

// Printer precedence: larger binds tighter.
constexpr int kChoicePrec = 1;
constexpr int kOrPrec = 2;
constexpr int kAndPrec = 3;
constexpr int kUnaryPrec = 4;

std::optional<std::string> constant_text(const Formula& f) {
  if (!f.is_binary() || f.kind() == NodeKind::Choice) {
    return std::nullopt;
  }
  const Formula& l = f.left();
  const Formula& r = f.right();
  if (!l.is_atom() || l.name() != kConstantAtom || r.kind() != NodeKind::Neg ||
      !(r.child() == l)) {
    return std::nullopt;
  }
  return f.kind() == NodeKind::Or ? std::string("TRUE") : std::string("FALSE");
}

int precedence(const Formula& f) {
  if (constant_text(f)) {
    return kUnaryPrec;
  }
  switch (f.kind()) {
  case NodeKind::Atom:
  case NodeKind::Neg:
    return kUnaryPrec;
  case NodeKind::And:
    return kAndPrec;
  case NodeKind::Or:
    return kOrPrec;
  case NodeKind::Choice:
    return kChoicePrec;
  }
  return kUnaryPrec;
}

void write(const LogicRegistry& reg, const Formula& f, std::string& out);

void write_operand(const LogicRegistry& reg, const Formula& f, bool parens, std::string& out) {
  if (parens) {
    out += '(';
  }
  write(reg, f, out);
  if (parens) {
    out += ')';
  }
}

void write(const LogicRegistry& reg, const Formula& f, std::string& out) {
  if (auto text = constant_text(f)) {
    out += *text;
    return;
  }
  switch (f.kind()) {
  case NodeKind::Atom:
    out += f.name();
    return;
  case NodeKind::Neg:
    out += '~';
    write_operand(reg, f.child(), precedence(f.child()) < kUnaryPrec, out);
    return;
  case NodeKind::And:
  case NodeKind::Or: {
    int prec = precedence(f);
    write_operand(reg, f.left(), precedence(f.left()) < prec, out);
    out += f.kind() == NodeKind::And ? " & " : " | ";
    write_operand(reg, f.right(), precedence(f.right()) <= prec, out);
    return;
  }
  case NodeKind::Choice: {
    const auto& spec = reg.at(f.name());
    write_operand(reg, f.left(), precedence(f.left()) <= kChoicePrec, out);
    out += ' ';
    out += spec.token;
    out += ' ';
    bool same_chain = f.right().kind() == NodeKind::Choice && f.right().name() == f.name() &&
                      !constant_text(f.right());
    write_operand(reg, f.right(), precedence(f.right()) <= kChoicePrec && !same_chain, out);
    return;
  }
  }
}

} // namespace

ParseResult parse_with_warnings(const LogicRegistry& reg, std::string_view text,
                                const ParseOptions& opts) {
  Parser parser(Lexer(reg, text).run(), opts);
  return parser.run();
}

Formula parse(const LogicRegistry& reg, std::string_view text, const ParseOptions& opts) {
  return parse_with_warnings(reg, text, opts).formula;
}

std::string render(const LogicRegistry& reg, const Formula& f) {
  std::string out;
  write(reg, f, out);
  return out;
}

} // namespace choicekit
