#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "choicekit/cli.hpp"
#include "choicekit/json_io.hpp"
#include "choicekit/syntax.hpp"

using namespace choicekit;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  auto path = fs::temp_directory_path() / ("choicekit_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

} // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "--logic", "qcl", "-i", "b", "a |> b"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"degree\":2,\"optionality\":2}\n");
  auto inf = run({"eval", "--logic", "ccl", "-i", "b", "a &> b"});
  CHECK(inf.json()["degree"] == "inf");
  auto text = run({"--format", "text", "eval", "-i", "a", "a |> b"});
  CHECK(text.out == "degree 1\noptionality 2\n");
}

TEST_CASE("preferred and models") {
  auto r = run({"preferred", "--logic", "qcl", "a |> b"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"min_degree\":1,\"models\":[[\"a\"],[\"a\",\"b\"]]}\n");

  auto m = run({"models", "--logic", "lcl", "a @> (b @> c)"});
  auto j = m.json();
  CHECK(j["optionality"] == 7);
  CHECK(j["profile"].size() == 8);
  CHECK(j["profile"][0]["interpretation"] == Json::array());
  CHECK(j["profile"][0]["degree"] == "inf");
}

TEST_CASE("equiv") {
  auto r = run({"equiv", "--logic", "sccl", "--kind", "strong", "a", "a *> a"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"status\":\"equivalent\",\"method\":\"degree-route\"}\n");

  auto s = run({"equiv", "--logic", "qcl", "--kind", "strong", "--strict", "a", "a |> a"});
  CHECK(s.code == 1);
  CHECK(s.json()["witness"]["kind"] == "optionality");

  auto d = run({"equiv", "--logic", "qcl", "--kind", "degree", "--context", "a", "a |> b"});
  CHECK(d.code == 0);
  auto j = d.json();
  CHECK(j["status"] == "inequivalent");
  CHECK(j["witness"]["interpretation"] == Json::array({"b"}));
  CHECK(j["context"]["kind"] == "context");
  // The context is printable and parses back with reserved atoms allowed.
  auto reg = builtin_registry("qcl");
  CHECK_NOTHROW(parse(reg, j["context"]["context"].get<std::string>(), {true}));
}

TEST_CASE("synth") {
  auto path = write_temp("table.json",
                         R"J({"variables":["a"],"table":{"":2,"a":1}})J");
  auto r = run({"synth", "--logic", "qcl", path});
  CHECK(r.code == 0);
  auto reg = builtin_registry("qcl");
  auto f = parse(reg, r.json()["formula"].get<std::string>(), {true});
  CHECK(degree(reg, {}, f) == Degree::finite(2));
  CHECK(degree(reg, {"a"}, f) == Degree::finite(1));

  auto pl = run({"synth", "--logic", "pl", path});
  CHECK(pl.code == 1);
  auto bad = write_temp("bad_table.json", R"J({"variables":["a"],"table":{"":2}})J");
  CHECK(run({"synth", bad}).code == 2);
}

TEST_CASE("reduce and lexsolve") {
  auto path = write_temp("inst.json", R"J({"matrix":"x1 | x2","order":["x1","x2"],"query":"x2"})J");
  auto r = run({"lexsolve", path, "--target", "lcl", "--check"});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["answer"] == true);
  CHECK(j["oracle_agrees"] == true);

  auto e = run({"reduce", "--target", "lcl", path});
  CHECK(e.json()["formula"] == "(x1 | x2) & (x1 @> x2)");

  CHECK(run({"reduce", "--target", "qcl", path}).code == 2);
  auto u = run({"lexsolve", path, "--target", "qcl", "--unbounded", "--check"});
  CHECK(u.code == 0);
  CHECK(u.json()["oracle_agrees"] == true);

  auto neg = write_temp("neg.json", R"J({"matrix":"~x2 & (x1 | x2)","order":["x1","x2"]})J");
  CHECK(run({"lexsolve", neg}).json()["answer"] == false);
  auto wrong = write_temp("wrong.json", R"J({"matrix":"x1 | x2","order":["x1","x2"],"query":"x1"})J");
  CHECK(run({"lexsolve", wrong}).code == 2);
}

TEST_CASE("classify") {
  auto r = run({"classify", "--logic", "sccl", "--bound", "2"});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["optionality_ignoring"] == true);
  CHECK(j["connectives"][0]["opt_ignoring_check"]["confirmed"] == true);
  CHECK(j["connectives"][0]["associativity_check"]["confirmed"] == false);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "a |>"}).code == 2);
  CHECK(run({"eval", "--logic", "nope", "a"}).code == 2);
  CHECK(run({"equiv", "--kind", "weird", "a", "b"}).code == 2);
  CHECK(run({"synth", "/nonexistent/table.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  auto big = run({"--var-cap", "2", "preferred", "a |> b |> c"});
  CHECK(big.code == 3);
  CHECK(big.err.find("error") != std::string::npos);

  setenv("CHOICEKIT_VAR_CAP", "2", 1);
  CHECK(run({"preferred", "a |> b |> c"}).code == 3);
  CHECK(run({"--var-cap", "3", "preferred", "a |> b |> c"}).code == 0);
  unsetenv("CHOICEKIT_VAR_CAP");
}

TEST_CASE("warnings go to the error stream") {
  auto r = run({"eval", "--logic", "sccl", "a *> b *> c"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"random", "--seed", "5", "--count", "4"},
           {"preferred", "--logic", "lcl", "(a | b) @> c"},
           {"classify", "--logic", "qccl", "--bound", "2"}}) {
    CHECK(run(args).out == run(args).out);
  }
  CHECK(run({"random", "--seed", "5"}).out != run({"random", "--seed", "6"}).out);
}

TEST_CASE("json round trips") {
  auto reg = builtin_registry("qccl");
  auto formulas = run({"random", "--logic", "qccl", "--seed", "9", "--count", "20", "--size", "12"}).json();
  for (const auto& text : formulas["formulas"]) {
    auto f = parse(reg, text.get<std::string>());
    CHECK(render(reg, f) == text.get<std::string>());
  }

  auto profile = run({"models", "--logic", "qcl", "a |> b"}).json();
  for (const auto& row : profile["profile"]) {
    auto i = interpretation_from_json(row["interpretation"]);
    CHECK(interpretation_to_json(i) == row["interpretation"]);
    CHECK(degree_to_json(degree_from_json(row["degree"])) == row["degree"]);
  }

  DegreeAssignment a({"a", "b"}, {{Interpretation{}, kInf},
                                  {Interpretation{"a"}, Degree::finite(1)},
                                  {Interpretation{"b"}, Degree::finite(2)},
                                  {Interpretation{"a", "b"}, Degree::finite(1)}});
  auto j = assignment_to_json(a);
  CHECK(j.dump() == R"J({"variables":["a","b"],"table":{"":"inf","a":1,"a,b":1,"b":2}})J");
  auto back = assignment_from_json(j);
  CHECK(back.table() == a.table());

  LexInstance li{parse(builtin_registry("pl"), "x1 | ~x2"), {"x1", "x2"}};
  auto lj = lex_instance_to_json(li);
  CHECK(lj.dump() == R"J({"matrix":"x1 | ~x2","order":["x1","x2"],"query":"x2"})J");
  auto lb = lex_instance_from_json(lj);
  CHECK(lb.matrix == li.matrix);
  CHECK(lb.order == li.order);

  CHECK_THROWS_AS(degree_from_json(Json(0)), InvalidArgument);
  CHECK_THROWS_AS(degree_from_json(Json("INF")), InvalidArgument);
}
