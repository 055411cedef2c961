#include <doctest.h>

#include <limits>

#include "choicekit/degree.hpp"
#include "choicekit/formula.hpp"

using namespace choicekit;

namespace {

Formula A(const char* n) { return Formula::atom(n); }
const std::string kQ = "ordered_disjunction";

} // namespace

TEST_CASE("degree order and saturation") {
  auto one = Degree::finite(1);
  auto two = Degree::finite(2);
  CHECK(one < two);
  CHECK(two < kInf);
  CHECK(Degree::finite(1'000'000) < kInf);
  CHECK(one + two == Degree::finite(3));
  CHECK(two * Degree::finite(3) == Degree::finite(6));
  CHECK((two + kInf).is_inf());
  CHECK((kInf * two).is_inf());
  CHECK(std::min(two, kInf) == two);
  CHECK(std::max(two, kInf) == kInf);
  CHECK(Degree().is_inf());
  CHECK(kInf.to_string() == "inf");
  CHECK(two.to_string() == "2");
}

TEST_CASE("degree rejects zero and traps overflow") {
  CHECK_THROWS_AS(Degree::finite(0), InvalidArgument);
  CHECK_THROWS_AS(Optionality(0), InvalidArgument);
  CHECK_THROWS_AS(kInf.value(), InvalidArgument);
  auto big = Degree::finite(std::numeric_limits<std::uint64_t>::max());
  CHECK_THROWS_AS(big + Degree::finite(1), ArithmeticOverflow);
  CHECK_THROWS_AS(big * Degree::finite(2), ArithmeticOverflow);
}

TEST_CASE("vars_of and size_of") {
  auto f = Formula::choice(kQ, A("a"), Formula::conjunction(A("b"), A("a")));
  CHECK(vars_of(f) == VarSet{"a", "b"});
  CHECK(vars_of(Formula::negation(A("a"))) == VarSet{"a"});
  CHECK(vars_of(Formula::conjunction(A("a"), Formula::negation(A("a")))) == VarSet{"a"});

  CHECK(size_of(conjunction_of({A("x"), A("x"), A("y")})) == 3);
  CHECK(size_of(A("a")) == 1);
  CHECK(size_of(Formula::negation(Formula::choice(kQ, A("a"), A("b")))) == 2);
}

TEST_CASE("atoms must be identifiers") {
  CHECK_THROWS_AS(Formula::atom(""), InvalidArgument);
  CHECK_THROWS_AS(Formula::atom("1a"), InvalidArgument);
  CHECK_THROWS_AS(Formula::atom("a-b"), InvalidArgument);
  CHECK_NOTHROW(Formula::atom("_x9"));
  CHECK(is_reserved("__g"));
  CHECK_FALSE(is_reserved("_g"));
}

TEST_CASE("accessors check the node kind") {
  CHECK_THROWS_AS(A("a").left(), InvalidPath);
  CHECK_THROWS_AS(A("a").child(), InvalidPath);
  CHECK_THROWS_AS(Formula::negation(A("a")).right(), InvalidPath);
}

TEST_CASE("substitute") {
  auto ab = Formula::choice(kQ, A("a"), A("b"));
  CHECK(substitute(ab, {{Step::Left}}, A("c")) == Formula::choice(kQ, A("c"), A("b")));

  auto bc = Formula::choice(kQ, A("b"), A("c"));
  CHECK(substitute(A("a"), {}, bc) == bc);

  // ((a |> b) | (c |> d)) & ~a & ~c with the first a replaced by a |> a.
  auto ctx = conjunction_of({Formula::disjunction(ab, Formula::choice(kQ, A("c"), A("d"))),
                             Formula::negation(A("a")), Formula::negation(A("c"))});
  auto first_a = find_occurrences(ctx, A("a")).front();
  CHECK(first_a.to_string() == "LLLL");
  auto aa = Formula::choice(kQ, A("a"), A("a"));
  auto want = conjunction_of(
      {Formula::disjunction(Formula::choice(kQ, aa, A("b")), Formula::choice(kQ, A("c"), A("d"))),
       Formula::negation(A("a")), Formula::negation(A("c"))});
  auto got = substitute(ctx, first_a, aa);
  CHECK(got == want);
  CHECK(subformula_at(got, first_a) == aa);
  // The source is untouched.
  CHECK(subformula_at(ctx, first_a) == A("a"));

  CHECK_THROWS_AS(substitute(ab, {{Step::Down}}, A("c")), InvalidPath);
  CHECK_THROWS_AS(subformula_at(A("a"), {{Step::Left}}), InvalidPath);
}

TEST_CASE("substitute leaves every other occurrence alone") {
  auto f = Formula::disjunction(Formula::negation(Formula::choice(kQ, A("a"), A("b"))),
                                Formula::conjunction(A("a"), A("c")));
  auto paths = all_paths(f);
  CHECK(paths.size() == 8);
  for (const auto& p : paths) {
    auto g = substitute(f, p, A("z"));
    CHECK(subformula_at(g, p) == A("z"));
    for (const auto& q : all_paths(f)) {
      bool below_or_at = q.steps.size() >= p.steps.size() &&
                         std::equal(p.steps.begin(), p.steps.end(), q.steps.begin());
      bool above = p.steps.size() > q.steps.size() &&
                   std::equal(q.steps.begin(), q.steps.end(), p.steps.begin());
      if (!below_or_at && !above) {
        CHECK(subformula_at(g, q) == subformula_at(f, q));
      }
    }
  }
}

TEST_CASE("interpretation parsing and set operations") {
  CHECK(Interpretation::parse("").empty());
  CHECK(Interpretation::parse("  ").empty());
  auto i = Interpretation::parse("b, a,b");
  CHECK(i.size() == 2);
  CHECK(i.to_string() == "a,b");
  CHECK_THROWS_AS(Interpretation::parse("a,,b"), InvalidArgument);
  CHECK_THROWS_AS(Interpretation::parse("a b"), InvalidArgument);
  CHECK(i.restricted_to({"a", "c"}) == Interpretation{"a"});
  CHECK(i.united_with(Interpretation{"c"}) == Interpretation{"a", "b", "c"});
  CHECK(i.subset_of({"a", "b", "c"}));
  CHECK_FALSE(i.subset_of({"a"}));
}

TEST_CASE("chains nest as declared") {
  auto r = right_chain(kQ, {A("a"), A("b"), A("c")});
  CHECK(r == Formula::choice(kQ, A("a"), Formula::choice(kQ, A("b"), A("c"))));
  auto l = left_chain(kQ, {A("a"), A("b"), A("c")});
  CHECK(l == Formula::choice(kQ, Formula::choice(kQ, A("a"), A("b")), A("c")));
  CHECK(right_chain(kQ, {A("a")}) == A("a"));
}

TEST_CASE("top and bottom") {
  CHECK(Formula::top() == Formula::disjunction(A("__c"), Formula::negation(A("__c"))));
  CHECK(Formula::bottom("q") == Formula::conjunction(A("q"), Formula::negation(A("q"))));
  CHECK(is_classical(Formula::top()));
  CHECK_FALSE(is_classical(Formula::choice(kQ, A("a"), A("b"))));
}
