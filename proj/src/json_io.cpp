#include "choicekit/json_io.hpp"

#include "choicekit/connectives.hpp"
#include "choicekit/syntax.hpp"

namespace choicekit {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing JSON field '") + key + "'");
  }
  return j.at(key);
}

} // namespace

Json degree_to_json(const Degree& d) {
  if (d.is_inf()) {
    return "inf";
  }
  return d.value();
}

Degree degree_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") {
    return Degree::inf();
  }
  if (j.is_number_unsigned()) {
    return Degree::finite(j.get<std::uint64_t>());
  }
  if (j.is_number_integer() && j.get<std::int64_t>() > 0) {
    return Degree::finite(static_cast<std::uint64_t>(j.get<std::int64_t>()));
  }
  throw InvalidArgument("degree must be a positive integer or \"inf\", got " + j.dump());
}

Json interpretation_to_json(const Interpretation& i) {
  Json out = Json::array();
  for (const auto& a : i.atoms()) {
    out.push_back(a);
  }
  return out;
}

Interpretation interpretation_from_json(const Json& j) {
  if (!j.is_array()) {
    throw InvalidArgument("interpretation must be an array of atom names");
  }
  Interpretation out;
  for (const auto& a : j) {
    if (!a.is_string() || !is_identifier(a.get<std::string>())) {
      throw InvalidArgument("invalid atom in interpretation: " + a.dump());
    }
    out.insert(a.get<std::string>());
  }
  return out;
}

Json assignment_to_json(const DegreeAssignment& a) {
  Json vars = Json::array();
  for (const auto& v : a.variables()) {
    vars.push_back(v);
  }
  Json table = Json::object();
  for (const auto& [interp, d] : a.table()) {
    table[interp.to_string()] = degree_to_json(d);
  }
  return Json{{"variables", vars}, {"table", table}};
}

DegreeAssignment assignment_from_json(const Json& j) {
  const auto& vars_json = member(j, "variables");
  const auto& table_json = member(j, "table");
  if (!vars_json.is_array() || !table_json.is_object()) {
    throw InvalidArgument("assignment needs a variables array and a table object");
  }
  VarSet vars;
  for (const auto& v : vars_json) {
    if (!v.is_string() || !is_identifier(v.get<std::string>())) {
      throw InvalidArgument("invalid variable: " + v.dump());
    }
    vars.insert(v.get<std::string>());
  }
  std::map<Interpretation, Degree> table;
  for (const auto& [key, value] : table_json.items()) {
    auto interp = Interpretation::parse(key);
    if (!table.emplace(interp, degree_from_json(value)).second) {
      throw InvalidArgument("duplicate table key '" + key + "'");
    }
  }
  return DegreeAssignment(std::move(vars), std::move(table));
}

Json lex_instance_to_json(const LexInstance& inst) {
  return Json{{"matrix", render(builtin_registry(BuiltinLogic::PL), inst.matrix)},
              {"order", inst.order},
              {"query", inst.query_var()}};
}

LexInstance lex_instance_from_json(const Json& j) {
  const auto& matrix = member(j, "matrix");
  const auto& order = member(j, "order");
  if (!matrix.is_string() || !order.is_array()) {
    throw InvalidArgument("instance needs a matrix string and an order array");
  }
  LexInstance inst{parse(builtin_registry(BuiltinLogic::PL), matrix.get<std::string>()), {}};
  for (const auto& v : order) {
    if (!v.is_string()) {
      throw InvalidArgument("order entries must be strings");
    }
    inst.order.push_back(v.get<std::string>());
  }
  validate(inst);
  if (j.contains("query") && j.at("query") != Json(inst.query_var())) {
    throw InvalidArgument("query must be the last order variable");
  }
  return inst;
}

} // namespace choicekit
