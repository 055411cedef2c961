#include "choicekit/connectives.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "choicekit/formula.hpp"

namespace choicekit {

using detail::checked_add;
using detail::checked_mul;

std::uint64_t optionality_cap(Optionality k, Optionality l) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t k1 = 0;
  std::uint64_t l1 = 0;
  std::uint64_t cap = 0;
  if (__builtin_add_overflow(k.value(), 1ULL, &k1) || __builtin_add_overflow(l.value(), 1ULL, &l1) ||
      __builtin_mul_overflow(k1, l1, &cap)) {
    return kMax;
  }
  return cap;
}

Optionality connective_optionality(const ConnectiveSpec& spec, Optionality k, Optionality l) {
  Optionality out = spec.optionality(k, l);
  if (out.value() > optionality_cap(k, l)) {
    throw BoundViolation("connective '" + spec.name + "' returned optionality " +
                         std::to_string(out.value()) + " for (" + std::to_string(k.value()) +
                         ", " + std::to_string(l.value()) + "), above the cap (k+1)(l+1)");
  }
  return out;
}

Degree connective_degree(const ConnectiveSpec& spec, Optionality k, Optionality l, Degree m,
                         Degree n) {
  Optionality cap = connective_optionality(spec, k, l);
  Degree out = spec.degree(k, l, m, n);
  if (!within(out, cap)) {
    throw BoundViolation("connective '" + spec.name + "' returned degree " + out.to_string() +
                         " above its optionality " + std::to_string(cap.value()));
  }
  return out;
}

ConnectiveSpec ordered_disjunction() {
  ConnectiveSpec spec;
  spec.name = "ordered_disjunction";
  spec.token = "|>";
  spec.optionality = [](Optionality k, Optionality l) {
    return Optionality(checked_add(k.value(), l.value()));
  };
  spec.degree = [](Optionality k, Optionality, Degree m, Degree n) {
    if (m.is_finite()) {
      return m;
    }
    if (n.is_finite()) {
      return n + k.as_degree();
    }
    return kInf;
  };
  spec.associative = true;
  spec.opt_differentiating = true;
  return spec;
}

ConnectiveSpec ordered_conjunction() {
  ConnectiveSpec spec;
  spec.name = "ordered_conjunction";
  spec.token = "&>";
  spec.optionality = [](Optionality k, Optionality l) {
    return Optionality(checked_add(k.value(), l.value()));
  };
  spec.degree = [](Optionality, Optionality l, Degree m, Degree n) {
    if (m.is_inf()) {
      return kInf;
    }
    if (m.value() == 1 && n.is_finite()) {
      return n;
    }
    return m + l.as_degree();
  };
  spec.associative = true;
  spec.opt_differentiating = true;
  return spec;
}

ConnectiveSpec lexicographic_choice() {
  ConnectiveSpec spec;
  spec.name = "lexicographic_choice";
  spec.token = "@>";
  spec.optionality = [](Optionality k, Optionality l) {
    return Optionality(
        checked_mul(checked_add(k.value(), 1), checked_add(l.value(), 1)) - 1);
  };
  spec.degree = [](Optionality k, Optionality l, Degree m, Degree n) {
    std::uint64_t kv = k.value();
    std::uint64_t lv = l.value();
    if (m.is_finite() && n.is_finite()) {
      return Degree::finite(checked_add(checked_mul(m.value() - 1, lv), n.value()));
    }
    if (m.is_finite()) {
      return Degree::finite(checked_add(checked_mul(kv, lv), m.value()));
    }
    if (n.is_finite()) {
      return Degree::finite(checked_add(checked_add(checked_mul(kv, lv), kv), n.value()));
    }
    return kInf;
  };
  spec.opt_differentiating = true;
  return spec;
}

ConnectiveSpec simple_conjunction() {
  ConnectiveSpec spec;
  spec.name = "simple_conjunction";
  spec.token = "*>";
  spec.optionality = [](Optionality k, Optionality) {
    return Optionality(checked_add(k.value(), 1));
  };
  spec.degree = [](Optionality, Optionality, Degree m, Degree n) {
    if (m.is_inf()) {
      return kInf;
    }
    return n.is_finite() ? m : m + Degree::finite(1);
  };
  spec.opt_ignoring = true;
  return spec;
}

BuiltinLogic parse_builtin_logic(std::string_view name) {
  std::string lower;
  for (char c : name) {
    lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (auto logic : all_builtin_logics()) {
    if (builtin_logic_name(logic) == lower) {
      return logic;
    }
  }
  throw InvalidArgument("unknown logic '" + std::string(name) +
                        "' (expected pl, qcl, ccl, lcl, sccl or qccl)");
}

std::string_view builtin_logic_name(BuiltinLogic logic) {
  switch (logic) {
  case BuiltinLogic::PL:
    return "pl";
  case BuiltinLogic::QCL:
    return "qcl";
  case BuiltinLogic::CCL:
    return "ccl";
  case BuiltinLogic::LCL:
    return "lcl";
  case BuiltinLogic::SCCL:
    return "sccl";
  case BuiltinLogic::QCCL:
    return "qccl";
  }
  return "?";
}

std::vector<BuiltinLogic> all_builtin_logics() {
  return {BuiltinLogic::PL,  BuiltinLogic::QCL,  BuiltinLogic::CCL,
          BuiltinLogic::LCL, BuiltinLogic::SCCL, BuiltinLogic::QCCL};
}

// Registry

struct LogicRegistry::Data {
  std::string name;
  std::vector<ConnectiveSpec> specs;
  bool ignoring = false;
  bool differentiating = false;
};

LogicRegistry::Builder::Builder(std::string logic_name) : name_(std::move(logic_name)) {}

namespace {

bool is_token(std::string_view token) {
  if (token.empty()) {
    return false;
  }
  for (char c : token) {
    auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || std::isspace(u) || u == '_' || u == '(' || u == ')' || u == '#' ||
        u == ',') {
      return false;
    }
  }
  // Single-character classical operators are not available as tokens.
  return token != "~" && token != "&" && token != "|";
}

} // namespace

LogicRegistry::Builder& LogicRegistry::Builder::add(ConnectiveSpec spec) {
  if (!is_identifier(spec.name) || spec.name == "not" || spec.name == "and" ||
      spec.name == "or") {
    throw InvalidArgument("connective name '" + spec.name + "' is not an identifier or is classical");
  }
  if (!is_token(spec.token)) {
    throw InvalidArgument("connective token '" + spec.token + "' is not a valid operator token");
  }
  if (!spec.optionality || !spec.degree) {
    throw InvalidArgument("connective '" + spec.name + "' lacks an optionality or degree function");
  }
  for (const auto& other : specs_) {
    if (other.name == spec.name) {
      throw InvalidArgument("duplicate connective name '" + spec.name + "'");
    }
    if (other.token == spec.token) {
      throw InvalidArgument("duplicate connective token '" + spec.token + "'");
    }
  }
  specs_.push_back(std::move(spec));
  return *this;
}

LogicRegistry::Builder& LogicRegistry::Builder::classify(std::optional<bool> opt_ignoring,
                                                         std::optional<bool> opt_differentiating) {
  ignoring_ = opt_ignoring;
  differentiating_ = opt_differentiating;
  return *this;
}

LogicRegistry LogicRegistry::Builder::seal() const {
  auto data = std::make_shared<Data>();
  data->name = name_;
  data->specs = specs_;
  bool all_ignoring = std::all_of(data->specs.begin(), data->specs.end(),
                                  [](const ConnectiveSpec& s) { return s.opt_ignoring; });
  bool any_differentiating =
      data->specs.empty() ||
      std::any_of(data->specs.begin(), data->specs.end(),
                  [](const ConnectiveSpec& s) { return s.opt_differentiating; });
  data->ignoring = ignoring_.value_or(all_ignoring);
  data->differentiating = differentiating_.value_or(any_differentiating);
  return LogicRegistry(std::move(data));
}

const std::string& LogicRegistry::name() const noexcept { return data_->name; }

const ConnectiveSpec* LogicRegistry::find(std::string_view name) const noexcept {
  for (const auto& s : data_->specs) {
    if (s.name == name) {
      return &s;
    }
  }
  return nullptr;
}

const ConnectiveSpec& LogicRegistry::at(std::string_view name) const {
  if (const auto* s = find(name)) {
    return *s;
  }
  throw UnknownConnective("connective '" + std::string(name) + "' is not part of logic '" +
                          data_->name + "'");
}

const ConnectiveSpec* LogicRegistry::find_by_token(std::string_view token) const noexcept {
  for (const auto& s : data_->specs) {
    if (s.token == token) {
      return &s;
    }
  }
  return nullptr;
}

const std::vector<ConnectiveSpec>& LogicRegistry::connectives() const noexcept {
  return data_->specs;
}

bool LogicRegistry::optionality_ignoring() const noexcept { return data_->ignoring; }
bool LogicRegistry::optionality_differentiating() const noexcept { return data_->differentiating; }

LogicRegistry builtin_registry(BuiltinLogic logic) {
  LogicRegistry::Builder builder{std::string(builtin_logic_name(logic))};
  switch (logic) {
  case BuiltinLogic::PL:
    break;
  case BuiltinLogic::QCL:
    builder.add(ordered_disjunction());
    break;
  case BuiltinLogic::CCL:
    builder.add(ordered_conjunction());
    break;
  case BuiltinLogic::LCL:
    builder.add(lexicographic_choice());
    break;
  case BuiltinLogic::SCCL:
    builder.add(simple_conjunction());
    break;
  case BuiltinLogic::QCCL:
    builder.add(ordered_disjunction());
    builder.add(ordered_conjunction());
    break;
  }
  return builder.seal();
}

LogicRegistry builtin_registry(std::string_view logic_name) {
  return builtin_registry(parse_builtin_logic(logic_name));
}

IgnoringCheck check_opt_ignoring(const ConnectiveSpec& spec, std::uint64_t k_max,
                                 std::uint64_t d_max) {
  if (k_max == 0 || d_max == 0) {
    throw InvalidArgument("check_opt_ignoring bounds must be at least 1");
  }
  std::vector<Degree> degrees;
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    degrees.push_back(Degree::finite(d));
  }
  degrees.push_back(kInf);

  IgnoringCheck result;
  for (const auto& m : degrees) {
    for (const auto& n : degrees) {
      std::optional<std::pair<Optionality, Optionality>> base_args;
      Degree base;
      for (std::uint64_t k = 1; k <= k_max; ++k) {
        for (std::uint64_t l = 1; l <= k_max; ++l) {
          Optionality ko(k);
          Optionality lo(l);
          if (!within(m, ko) || !within(n, lo)) {
            continue;
          }
          Degree d = spec.degree(ko, lo, m, n);
          if (!base_args) {
            base_args.emplace(ko, lo);
            base = d;
          } else if (d != base) {
            result.confirmed = false;
            result.witness = IgnoringWitness{base_args->first, base_args->second, ko, lo, m, n,
                                             base, d};
            return result;
          }
        }
      }
    }
  }
  return result;
}

} // namespace choicekit
