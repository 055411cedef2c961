#include "choicekit/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "choicekit/connectives.hpp"
#include "choicekit/equivalence.hpp"
#include "choicekit/generate.hpp"
#include "choicekit/json_io.hpp"
#include "choicekit/models.hpp"
#include "choicekit/reductions.hpp"
#include "choicekit/semantics.hpp"
#include "choicekit/synthesis.hpp"
#include "choicekit/syntax.hpp"

namespace choicekit::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidArgument("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "@path" reads the formula from a file.
std::string formula_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    return read_file(arg.substr(1));
  }
  return arg;
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
  }
}

Json models_json(const std::vector<Interpretation>& models) {
  Json out = Json::array();
  for (const auto& m : models) {
    out.push_back(interpretation_to_json(m));
  }
  return out;
}

Json witness_json(const LogicRegistry& reg, const EquivWitness& w) {
  return std::visit(
      [&](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, InterpretationWitness>) {
          return Json{{"kind", "interpretation"},
                      {"interpretation", interpretation_to_json(v.interpretation)},
                      {"left", degree_to_json(v.left)},
                      {"right", degree_to_json(v.right)}};
        } else if constexpr (std::is_same_v<T, OptionalityWitness>) {
          return Json{{"kind", "optionality"},
                      {"left", v.left.value()},
                      {"right", v.right.value()}};
        } else if constexpr (std::is_same_v<T, ContextWitness>) {
          return Json{{"kind", "context"},
                      {"context", render(reg, v.context)},
                      {"path", v.path.to_string()}};
        } else {
          return nullptr;
        }
      },
      w);
}

// Flat text form: one "key value" line per top-level field.
void print_text(std::ostream& out, const Json& j) {
  for (const auto& [key, value] : j.items()) {
    out << key << ' ';
    if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
    out << '\n';
  }
}

class Runner {
public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int main(const std::vector<std::string>& args);

private:
  void emit(const Json& j) {
    if (config_.format == "text") {
      print_text(out_, j);
    } else {
      out_ << j.dump() << '\n';
    }
  }

  LogicRegistry registry() const { return builtin_registry(config_.logic); }
  SearchOptions search() const { return SearchOptions{config_.var_cap}; }

  Formula read_formula(const LogicRegistry& reg, const std::string& arg) {
    auto result = parse_with_warnings(reg, formula_text(arg));
    for (const auto& w : result.warnings) {
      err_ << "warning: " << w << '\n';
    }
    return result.formula;
  }

  int eval_cmd();
  int models_cmd();
  int preferred_cmd();
  int equiv_cmd();
  int synth_cmd();
  int reduce_cmd();
  int lexsolve_cmd();
  int classify_cmd();
  int random_cmd();

  std::ostream& out_;
  std::ostream& err_;
  CliConfig config_;

  std::string formula_arg_;
  std::string other_arg_;
  std::string interp_arg_;
  std::string kind_ = "strong";
  std::string target_ = "lcl";
  std::string path_arg_;
  bool strict_ = false;
  bool context_ = false;
  bool check_ = false;
  bool unbounded_ = false;
  std::size_t rounds_ = 3;
  std::size_t bound_ = 3;
  std::size_t count_ = 1;
  std::size_t size_ = 8;
  std::size_t vars_ = 3;
};

int Runner::eval_cmd() {
  auto reg = registry();
  auto f = read_formula(reg, formula_arg_);
  auto e = evaluate(reg, Interpretation::parse(interp_arg_), f);
  emit(Json{{"degree", degree_to_json(e.degree)}, {"optionality", e.optionality.value()}});
  return kOk;
}

int Runner::models_cmd() {
  auto reg = registry();
  auto f = read_formula(reg, formula_arg_);
  auto profile = DegreeProfile::build(reg, f, search());
  Json vars = Json::array();
  for (const auto& v : profile.variables()) {
    vars.push_back(v);
  }
  Json rows = Json::array();
  for (const auto& [interp, d] : profile.entries()) {
    rows.push_back(
        Json{{"interpretation", interpretation_to_json(interp)}, {"degree", degree_to_json(d)}});
  }
  emit(Json{{"variables", vars},
            {"optionality", profile.optionality().value()},
            {"min_degree", degree_to_json(profile.min_degree())},
            {"profile", rows}});
  return kOk;
}

int Runner::preferred_cmd() {
  auto reg = registry();
  auto f = read_formula(reg, formula_arg_);
  auto models = preferred_models(reg, f, search());
  emit(Json{{"min_degree", degree_to_json(min_degree(reg, f, search()))},
            {"models", models_json(models)}});
  return kOk;
}

int Runner::equiv_cmd() {
  auto reg = registry();
  auto a = read_formula(reg, formula_arg_);
  auto b = read_formula(reg, other_arg_);
  EquivVerdict v;
  if (kind_ == "degree") {
    v = degree_equivalent(reg, a, b, search());
  } else if (kind_ == "full") {
    v = fully_equivalent(reg, a, b, search());
  } else if (kind_ == "strong") {
    v = strongly_equivalent(reg, a, b, search());
  } else {
    throw InvalidArgument("unknown equivalence kind '" + kind_ + "'");
  }
  Json j{{"status", to_string(v.status)}, {"method", v.method}};
  if (!std::holds_alternative<std::monostate>(v.witness)) {
    j["witness"] = witness_json(reg, v.witness);
  }
  if (context_) {
    if (const auto* w = std::get_if<InterpretationWitness>(&v.witness)) {
      auto ctx = inequivalence_context(reg, a, b, w->interpretation, search());
      j["context"] = witness_json(reg, ctx);
    }
  }
  emit(j);
  return strict_ && v.status != EquivStatus::Equivalent ? kNegative : kOk;
}

int Runner::synth_cmd() {
  auto reg = registry();
  auto assignment = assignment_from_json(parse_json_file(path_arg_));
  auto f = synthesize(reg, assignment, reachable_degrees(reg, rounds_));
  emit(Json{{"formula", render(reg, f)}, {"size", size_of(f)}});
  return kOk;
}

int Runner::reduce_cmd() {
  auto target = parse_lex_target(target_);
  auto inst = lex_instance_from_json(parse_json_file(path_arg_));
  auto f = encode_loglex(inst, target, unbounded_);
  auto reg = builtin_registry(target_logic(target));
  emit(Json{{"target", lex_target_name(target)},
            {"logic", reg.name()},
            {"formula", render(reg, f)},
            {"size", size_of(f)}});
  return kOk;
}

int Runner::lexsolve_cmd() {
  auto target = parse_lex_target(target_);
  auto inst = lex_instance_from_json(parse_json_file(path_arg_));
  bool answer = solve_via_encoding(inst, target, search(), unbounded_);
  Json j{{"answer", answer}};
  int code = kOk;
  if (check_) {
    auto oracle = lex_oracle(inst, search());
    bool expected = oracle && oracle->projection.contains(inst.query_var());
    j["oracle_agrees"] = expected == answer;
    j["oracle_answer"] = expected;
    if (oracle) {
      j["projection"] = interpretation_to_json(oracle->projection);
    }
    if (expected != answer) {
      code = kNegative;
    }
  }
  j["target"] = lex_target_name(target);
  emit(j);
  return code;
}

int Runner::classify_cmd() {
  auto reg = registry();
  Json conns = Json::array();
  for (const auto& spec : reg.connectives()) {
    auto ign = check_opt_ignoring(spec, bound_, bound_);
    Json ign_j{{"confirmed", ign.confirmed}};
    if (ign.witness) {
      const auto& w = *ign.witness;
      ign_j["witness"] = Json{{"k1", w.k1.value()},
                              {"l1", w.l1.value()},
                              {"k2", w.k2.value()},
                              {"l2", w.l2.value()},
                              {"m", degree_to_json(w.m)},
                              {"n", degree_to_json(w.n)},
                              {"degree1", degree_to_json(w.degree1)},
                              {"degree2", degree_to_json(w.degree2)}};
    }
    auto assoc = check_associative(reg, spec.name, bound_);
    Json assoc_j{{"confirmed", assoc.confirmed}, {"triples", assoc.triples}};
    if (assoc.witness) {
      const auto& w = *assoc.witness;
      assoc_j["witness"] = Json{{"x", render(reg, w.x)},
                                {"y", render(reg, w.y)},
                                {"z", render(reg, w.z)},
                                {"detail", witness_json(reg, w.verdict.witness)}};
    }
    conns.push_back(Json{{"name", spec.name},
                         {"token", spec.token},
                         {"declared_associative", spec.associative},
                         {"declared_opt_ignoring", spec.opt_ignoring},
                         {"declared_opt_differentiating", spec.opt_differentiating},
                         {"opt_ignoring_check", ign_j},
                         {"associativity_check", assoc_j}});
  }
  emit(Json{{"logic", reg.name()},
            {"optionality_ignoring", reg.optionality_ignoring()},
            {"optionality_differentiating", reg.optionality_differentiating()},
            {"bound", bound_},
            {"connectives", conns}});
  return kOk;
}

int Runner::random_cmd() {
  auto reg = registry();
  std::mt19937_64 rng(config_.seed);
  Json out = Json::array();
  for (std::size_t i = 0; i < count_; ++i) {
    out.push_back(render(reg, random_formula(rng, reg, FormulaShape{size_, vars_, true})));
  }
  emit(Json{{"seed", config_.seed}, {"formulas", out}});
  return kOk;
}

int Runner::main(const std::vector<std::string>& args) {
  if (const char* env = std::getenv("CHOICEKIT_VAR_CAP")) {
    try {
      config_.var_cap = std::stoul(env);
    } catch (const std::exception&) {
      err_ << "error: CHOICEKIT_VAR_CAP must be a positive integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Choice-logic toolkit: degrees, preferred models, equivalence, synthesis, reductions",
               "choicekit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--logic", config_.logic, "pl|qcl|ccl|lcl|sccl|qccl")->capture_default_str();
  app.add_option("--format", config_.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--var-cap", config_.var_cap, "Largest variable count enumerated")
      ->check(CLI::Range(std::size_t{1}, std::size_t{62}));
  app.add_option("--seed", config_.seed, "Seed for generated formulas")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Degree and optionality under an interpretation");
  eval->add_option("-i,--interpretation", interp_arg_, "Comma-separated true atoms");
  eval->add_option("formula", formula_arg_)->required();

  auto* models = app.add_subcommand("models", "Degree of every interpretation");
  models->add_option("formula", formula_arg_)->required();

  auto* preferred = app.add_subcommand("preferred", "Preferred models and minimum degree");
  preferred->add_option("formula", formula_arg_)->required();

  auto* equiv = app.add_subcommand("equiv", "Compare two formulas");
  equiv->add_option("--kind", kind_, "degree|full|strong")
      ->check(CLI::IsMember({"degree", "full", "strong"}))
      ->capture_default_str();
  equiv->add_flag("--strict", strict_, "Exit 1 unless equivalent");
  equiv->add_flag("--context", context_, "Build a separating context for degree witnesses");
  equiv->add_option("left", formula_arg_)->required();
  equiv->add_option("right", other_arg_)->required();

  auto* synth = app.add_subcommand("synth", "Formula realizing a degree table");
  synth->add_option("--rounds", rounds_, "Closure rounds for reachable degrees")
      ->capture_default_str();
  synth->add_option("table", path_arg_, "DegreeAssignment JSON file")->required();

  auto* reduce = app.add_subcommand("reduce", "Encode a lexicographic instance");
  reduce->add_option("--target", target_, "lcl|qcl|ccl|sccl")->capture_default_str();
  reduce->add_flag("--unbounded", unbounded_, "Allow more order variables than log2(size)");
  reduce->add_option("instance", path_arg_, "LexInstance JSON file")->required();

  auto* lexsolve = app.add_subcommand("lexsolve", "Answer a lexicographic instance");
  lexsolve->add_option("--target", target_, "lcl|qcl|ccl|sccl")->capture_default_str();
  lexsolve->add_flag("--check", check_, "Compare with brute force");
  lexsolve->add_flag("--unbounded", unbounded_, "Allow more order variables than log2(size)");
  lexsolve->add_option("instance", path_arg_, "LexInstance JSON file")->required();

  auto* classify = app.add_subcommand("classify", "Connective flags and bounded checks");
  classify->add_option("--bound", bound_, "Bound for the exhaustive checks")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4}))
      ->capture_default_str();

  auto* random = app.add_subcommand("random", "Random formulas from --seed");
  random->add_option("--count", count_)->capture_default_str();
  random->add_option("--size", size_)->check(CLI::PositiveNumber)->capture_default_str();
  random->add_option("--vars", vars_)->check(CLI::PositiveNumber)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (eval->parsed()) return eval_cmd();
    if (models->parsed()) return models_cmd();
    if (preferred->parsed()) return preferred_cmd();
    if (equiv->parsed()) return equiv_cmd();
    if (synth->parsed()) return synth_cmd();
    if (reduce->parsed()) return reduce_cmd();
    if (lexsolve->parsed()) return lexsolve_cmd();
    if (classify->parsed()) return classify_cmd();
    if (random->parsed()) return random_cmd();
  } catch (const EnumerationLimit& e) {
    err_ << "error: " << e.what() << '\n';
    return kResource;
  } catch (const ArithmeticOverflow& e) {
    err_ << "error: " << e.what() << '\n';
    return kResource;
  } catch (const LogBoundViolation& e) {
    err_ << "error: " << e.what() << " (pass --unbounded to encode anyway)\n";
    return kUsage;
  } catch (const UnobtainableDegree& e) {
    err_ << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const Error& e) {
    err_ << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    err_ << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.main(args);
}

} // namespace choicekit::cli
