#include <doctest.h>

#include <cmath>
#include <random>

#include "choicekit/generate.hpp"
#include "choicekit/reductions.hpp"
#include "choicekit/semantics.hpp"
#include "choicekit/syntax.hpp"
#include "support/helpers.hpp"
#include "support/lex_gen.hpp"

using namespace choicekit;

namespace {

Degree d(std::uint64_t v) { return Degree::finite(v); }

LexInstance inst(const char* matrix, std::vector<std::string> order) {
  return {parse(builtin_registry("pl"), matrix), std::move(order)};
}

std::vector<std::string> xs(std::size_t n) { return testing::order_vars(n); }

using testing::random_matrix;

} // namespace

TEST_CASE("validation and log bound") {
  CHECK_THROWS_AS(validate(inst("x1 | x2", {})), InvalidArgument);
  CHECK_THROWS_AS(validate(inst("x1 | x2", {"x1", "x1"})), InvalidArgument);
  CHECK_THROWS_AS(validate(inst("x1 | x2", {"x3"})), InvalidArgument);
  auto qcl = builtin_registry("qcl");
  CHECK_THROWS_AS(validate({parse(qcl, "x1 |> x2"), {"x1"}}), InvalidArgument);

  CHECK(within_log_bound(inst("x1 | x2", {"x1"})));
  CHECK_FALSE(within_log_bound(inst("x1 | x2", {"x1", "x2"})));
  CHECK(within_log_bound(inst("x1 | x2 | x1 | x2", {"x1", "x2"})));
  CHECK_THROWS_AS(encode_loglex(inst("x1 | x2", {"x1", "x2"}), LexTarget::QCL), LogBoundViolation);
  CHECK_NOTHROW(encode_loglex(inst("x1 | x2", {"x1", "x2"}), LexTarget::QCL, true));
  CHECK_NOTHROW(encode_loglex(inst("x1 | x2", {"x1", "x2"}), LexTarget::LCL));
}

TEST_CASE("lex ranks") {
  auto order = xs(3);
  CHECK(lex_rank_interpretation(order, 1) == Interpretation{"x1", "x2", "x3"});
  CHECK(lex_rank_interpretation(order, 2) == Interpretation{"x1", "x2"});
  CHECK(lex_rank_interpretation(order, 8) == Interpretation{});
  for (std::uint64_t r = 1; r <= 8; ++r) {
    CHECK(lex_rank_of(order, lex_rank_interpretation(order, r)) == r);
  }
  CHECK_THROWS_AS(lex_rank_interpretation(order, 0), InvalidArgument);
  CHECK_THROWS_AS(lex_rank_interpretation(order, 9), InvalidArgument);
}

TEST_CASE("F_n formula") {
  auto lcl = builtin_registry("lcl");
  CHECK(lex_formula_lcl({"x1"}) == Formula::atom("x1"));
  CHECK(lex_formula_lcl(xs(2)) == parse(lcl, "x1 @> x2"));
  CHECK(lex_formula_lcl(xs(3)) == parse(lcl, "x1 @> (x2 @> x3)"));
  CHECK_THROWS_AS(lex_formula_lcl({}), InvalidArgument);

  for (std::size_t n = 1; n <= 4; ++n) {
    auto order = xs(n);
    auto f = lex_formula_lcl(order);
    std::uint64_t total = 1ULL << n;
    CHECK(optionality(lcl, f).value() == total - 1);
    for (std::uint64_t k = 1; k <= total; ++k) {
      auto dg = degree(lcl, lex_rank_interpretation(order, k), f);
      CHECK(dg == (k < total ? d(k) : kInf));
    }
  }
}

TEST_CASE("chain degree laws") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto order = xs(n);
    std::uint64_t total = 1ULL << n;
    for (auto target : {LexTarget::QCL, LexTarget::CCL, LexTarget::SCCL}) {
      auto reg = builtin_registry(target_logic(target));
      auto chain = lex_chain(order, target);
      for (std::uint64_t k = 1; k <= total; ++k) {
        CAPTURE(lex_target_name(target));
        CHECK(degree(reg, lex_rank_interpretation(order, k), chain) == d(k));
      }
    }
  }
}

TEST_CASE("one-variable encodings") {
  auto i = inst("x1 | y", {"x1"});
  auto qcl = encode_loglex(i, LexTarget::QCL);
  auto x1 = Formula::atom("x1");
  CHECK(qcl == Formula::conjunction(i.matrix, Formula::choice("ordered_disjunction", x1, Formula::negation(x1))));
  auto ccl = encode_loglex(i, LexTarget::CCL);
  auto c1 = Formula::disjunction(x1, Formula::negation(x1));
  CHECK(ccl == Formula::conjunction(i.matrix, Formula::choice("ordered_conjunction", c1, x1)));
}

TEST_CASE("LCL encoding examples") {
  auto lcl = builtin_registry("lcl");
  auto f = encode_lexmaxsat_lcl(inst("x1 | x2", xs(2)));
  CHECK(f == parse(lcl, "(x1 | x2) & (x1 @> x2)"));
  CHECK(preferred_models(lcl, f) == std::vector<Interpretation>{{"x1", "x2"}});

  auto g = encode_lexmaxsat_lcl(inst("~x1 & (x1 | x2)", xs(2)));
  CHECK(preferred_models(lcl, g) == std::vector<Interpretation>{{"x2"}});

  auto h = encode_lexmaxsat_lcl(inst("x1 & ~x1 & x2", xs(2)));
  CHECK(preferred_models(lcl, h).empty());
}

TEST_CASE("oracle examples") {
  auto a = lex_oracle(inst("x1 | x2", xs(2)));
  REQUIRE(a);
  CHECK(a->projection == Interpretation{"x1", "x2"});
  auto b = lex_oracle(inst("~x1 & (x1 | x2)", xs(2)));
  REQUIRE(b);
  CHECK(b->projection == Interpretation{"x2"});
  CHECK_FALSE(lex_oracle(inst("x1 & ~x1", {"x1"})));

  CHECK(solve_via_encoding(inst("x1 | x2", xs(2)), LexTarget::LCL));
  CHECK_FALSE(solve_via_encoding(inst("~x2 & (x1 | x2)", xs(2)), LexTarget::LCL));
  CHECK_FALSE(solve_via_encoding(inst("x1 & ~x1 & x2", xs(2)), LexTarget::LCL));
}

TEST_CASE("encodings agree with the reference oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + rng() % 4;
    std::size_t m = rng() % 5;
    auto matrix = random_matrix(rng, n, m, 1ULL << n);
    LexInstance li{matrix, xs(n)};
    REQUIRE(within_log_bound(li));
    auto best = ref::best_projection(matrix, li.order);
    auto lib = lex_oracle(li);
    REQUIRE(best.has_value() == lib.has_value());
    bool want = best && best->count(li.query_var()) != 0;
    if (best) {
      CHECK(testing::atoms(lib->projection) == *best);
      CHECK(ref::holds(matrix, testing::atoms(lib->model)));
    }
    for (auto target : {LexTarget::LCL, LexTarget::QCL, LexTarget::CCL, LexTarget::SCCL}) {
      CAPTURE(lex_target_name(target));
      CHECK(solve_via_encoding(li, target) == want);
    }
    // Preferred LCL models are the lexicographically best models.
    if (best && !best->empty()) {
      auto lcl = builtin_registry("lcl");
      for (const auto& p : preferred_models(lcl, encode_lexmaxsat_lcl(li))) {
        CHECK(testing::atoms(p.restricted_to(VarSet(li.order.begin(), li.order.end()))) == *best);
      }
    }
  }
}

TEST_CASE("CCL encoding size bound") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 3;
    auto matrix = random_matrix(rng, n, rng() % 4, 1ULL << n);
    LexInstance li{matrix, xs(n)};
    double s = static_cast<double>(size_of(matrix));
    auto f = encode_loglex(li, LexTarget::CCL);
    CHECK(static_cast<double>(size_of(f)) <= s + std::log2(s) * s * s);
  }
}

TEST_CASE("target names") {
  for (auto t : {LexTarget::LCL, LexTarget::QCL, LexTarget::CCL, LexTarget::SCCL}) {
    CHECK(parse_lex_target(lex_target_name(t)) == t);
  }
  CHECK_THROWS_AS(parse_lex_target("pl"), InvalidArgument);
}
