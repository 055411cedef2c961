#include <doctest.h>

#include <random>

#include "choicekit/generate.hpp"
#include "choicekit/syntax.hpp"

using namespace choicekit;

namespace {

Formula A(const char* n) { return Formula::atom(n); }
Formula Q(Formula l, Formula r) { return Formula::choice("ordered_disjunction", l, r); }
Formula S(Formula l, Formula r) { return Formula::choice("simple_conjunction", l, r); }

} // namespace

TEST_CASE("precedence and associativity") {
  auto qcl = builtin_registry("qcl");
  CHECK(parse(qcl, "a |> b & c") == Q(A("a"), Formula::conjunction(A("b"), A("c"))));
  CHECK(parse(qcl, "a | b & c") == Formula::disjunction(A("a"), Formula::conjunction(A("b"), A("c"))));
  CHECK(parse(qcl, "a & b & c") == Formula::conjunction(Formula::conjunction(A("a"), A("b")), A("c")));
  CHECK(parse(qcl, "~a & b") == Formula::conjunction(Formula::negation(A("a")), A("b")));
  CHECK(parse(qcl, "a |> b |> c") == Q(A("a"), Q(A("b"), A("c"))));

  auto lcl = builtin_registry("lcl");
  auto r = parse_with_warnings(lcl, "a @> b @> c");
  CHECK(r.formula ==
        Formula::choice("lexicographic_choice", A("a"), Formula::choice("lexicographic_choice", A("b"), A("c"))));
  CHECK(r.warnings.size() == 1);

  auto sccl = builtin_registry("sccl");
  auto s = parse_with_warnings(sccl, "a *> b *> c");
  CHECK(s.formula == S(A("a"), S(A("b"), A("c"))));
  REQUIRE(s.warnings.size() == 1);
  CHECK(s.warnings[0].find("*>") != std::string::npos);

  CHECK(parse_with_warnings(qcl, "a |> b |> c").warnings.empty());
  CHECK(parse_with_warnings(sccl, "a *> (b *> c)").warnings.empty());
}

TEST_CASE("constants, comments and whitespace") {
  auto qcl = builtin_registry("qcl");
  CHECK(parse(qcl, "TRUE") == Formula::top());
  CHECK(parse(qcl, "FALSE |> a") == Q(Formula::bottom(), A("a")));
  CHECK(parse(qcl, "# preference\n a |> # inline\n b") == Q(A("a"), A("b")));
  CHECK(parse(qcl, "a|>b") == Q(A("a"), A("b")));
}

TEST_CASE("parse errors") {
  auto qcl = builtin_registry("qcl");
  auto qccl = builtin_registry("qccl");
  CHECK_THROWS_AS(parse(qcl, ""), ParseError);
  CHECK_THROWS_AS(parse(qcl, "a &"), ParseError);
  CHECK_THROWS_AS(parse(qcl, "(a"), ParseError);
  CHECK_THROWS_AS(parse(qcl, "a)"), ParseError);
  CHECK_THROWS_AS(parse(qcl, "a $ b"), ParseError);
  CHECK_THROWS_AS(parse(qcl, "a @> b"), ParseError);
  CHECK_THROWS_AS(parse(qccl, "a |> b &> c"), ParseError);
  CHECK_NOTHROW(parse(qccl, "a |> (b &> c)"));
  CHECK_THROWS_AS(parse(qcl, "__c"), ParseError);
  CHECK(parse(qcl, "__c", {true}) == A("__c"));
  try {
    parse(qcl, "a & & b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("render examples") {
  auto qcl = builtin_registry("qcl");
  auto sccl = builtin_registry("sccl");
  CHECK(render(qcl, Formula::conjunction(A("a"), Formula::disjunction(A("b"), A("c")))) == "a & (b | c)");
  CHECK(render(sccl, S(S(A("a"), A("b")), A("c"))) == "(a *> b) *> c");
  CHECK(render(sccl, S(A("a"), S(A("b"), A("c")))) == "a *> b *> c");
  CHECK(render(qcl, Formula::negation(Q(A("a"), A("b")))) == "~(a |> b)");
  CHECK(render(qcl, Formula::negation(Formula::negation(A("a")))) == "~~a");
  CHECK(render(qcl, Q(Formula::bottom(), Formula::top())) == "FALSE |> TRUE");
  CHECK(render(qcl, Formula::disjunction(A("a"), Formula::disjunction(A("b"), A("c")))) == "a | (b | c)");
  CHECK_THROWS_AS(render(sccl, Q(A("a"), A("b"))), UnknownConnective);
}

TEST_CASE("round trip and print stability") {
  std::mt19937_64 rng(2);
  for (auto logic : all_builtin_logics()) {
    auto reg = builtin_registry(logic);
    for (int trial = 0; trial < 300; ++trial) {
      auto f = random_formula(rng, reg, {30, 6, true});
      auto text = render(reg, f);
      CAPTURE(text);
      auto back = parse(reg, text);
      CHECK(back == f);
      CHECK(render(reg, back) == text);
    }
  }
}
