#include "fuzzopt/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fuzzopt::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json mf_to_json(const fuzzy::MembershipFunction& mf) {
  json out = json::array();
  for (const auto& v : mf.vertices()) out.push_back(json::array({v.x, v.mu}));
  return out;
}

fuzzy::MembershipFunction mf_from_json(const json& j) {
  std::vector<fuzzy::Vertex> vertices;
  for (const auto& v : j) vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
  return fuzzy::MembershipFunction(std::move(vertices));
}

json variable_to_json(const fuzzy::LinguisticVariable& v) {
  json terms = json::object();
  for (const auto& [name, mf] : v.terms) terms[name] = mf_to_json(mf);
  return {{"name", v.name}, {"universe", json::array({v.lo, v.hi})}, {"terms", terms}};
}

fuzzy::LinguisticVariable variable_from_json(const json& j) {
  fuzzy::LinguisticVariable v;
  v.name = j.at("name").get<std::string>();
  v.lo = j.at("universe").at(0).get<double>();
  v.hi = j.at("universe").at(1).get<double>();
  for (const auto& [name, mf] : j.at("terms").items()) v.terms.emplace(name, mf_from_json(mf));
  v.validate();
  return v;
}

json operator_set_to_json(const fuzzy::OperatorSet& ops) {
  return {{"and", to_string(ops.and_op)},
          {"or", to_string(ops.or_op)},
          {"aggregation", to_string(ops.aggregation)},
          {"defuzzify", to_string(ops.defuzz)},
          {"weighing", to_string(ops.weighing)}};
}

fuzzy::OperatorSet operator_set_from_json(const json& j) {
  fuzzy::OperatorSet ops;
  if (j.contains("and")) ops.and_op = fuzzy::and_op_from_string(j.at("and").get<std::string>());
  if (j.contains("or")) ops.or_op = fuzzy::or_op_from_string(j.at("or").get<std::string>());
  if (j.contains("aggregation"))
    ops.aggregation = fuzzy::aggregation_from_string(j.at("aggregation").get<std::string>());
  if (j.contains("defuzzify"))
    ops.defuzz = fuzzy::defuzz_from_string(j.at("defuzzify").get<std::string>());
  if (j.contains("weighing"))
    ops.weighing = fuzzy::weighing_from_string(j.at("weighing").get<std::string>());
  return ops;
}

json ruleset_to_json(const fuzzy::RuleSet& rs) {
  json rules = json::array();
  for (const auto& r : rs.rules) {
    json ants = json::array();
    for (const auto& a : r.antecedents) ants.push_back({{"variable", a.variable}, {"is", a.term}});
    rules.push_back({{"if", ants},
                     {"connective", r.connective == fuzzy::Connective::And ? "and" : "or"},
                     {"then", {{"variable", r.output_variable}, {"is", r.output_term}}}});
  }
  return rules;
}

fuzzy::RuleSet ruleset_from_json(const json& j) {
  fuzzy::RuleSet rs;
  for (const auto& jr : j) {
    fuzzy::Rule r;
    for (const auto& ja : jr.at("if")) {
      r.antecedents.push_back(
          {ja.at("variable").get<std::string>(), ja.at("is").get<std::string>()});
    }
    if (jr.value("connective", "and") == std::string("or")) r.connective = fuzzy::Connective::Or;
    r.output_variable = jr.at("then").at("variable").get<std::string>();
    r.output_term = jr.at("then").at("is").get<std::string>();
    rs.rules.push_back(std::move(r));
  }
  return rs;
}

json compare_to_json(const constraints::CompareConstraint& c) {
  json out = {{"name", c.name},
              {"importance", c.importance},
              {"dilatation", to_string(c.dilatation)},
              {"variable", c.variable},
              {"op", to_string(c.op)},
              {"compare_value", c.compare_value},
              {"ramp_width", c.ramp_width},
              {"tuned", c.tuned}};
  if (!c.comment.empty()) out["comment"] = c.comment;
  if (c.curve != constraints::Curve::Pipeline) out["curve"] = to_string(c.curve);
  return out;
}

constraints::CompareConstraint compare_from_json(const json& j) {
  constraints::CompareConstraint c;
  c.name = j.at("name").get<std::string>();
  c.importance = j.value("importance", 1.0);
  c.dilatation = constraints::dilatation_from_string(j.value("dilatation", "fuzzy"));
  c.comment = j.value("comment", "");
  c.variable = j.at("variable").get<std::string>();
  c.op = constraints::compare_op_from_string(j.at("op").get<std::string>());
  c.compare_value = j.at("compare_value").get<double>();
  c.ramp_width = j.contains("ramp_width") ? j.at("ramp_width").get<double>()
                                          : constraints::default_ramp_width(c.compare_value);
  c.tuned = j.value("tuned", false);
  c.curve = constraints::curve_from_string(j.value("curve", "pipeline"));
  return c;
}

json node_to_json(const constraints::ConstraintNode& n) {
  if (n.is_compare()) return {{"compare", compare_to_json(n.compare())}};
  const auto& c = n.concat();
  json out = {{"name", c.name},
              {"importance", c.importance},
              {"dilatation", to_string(c.dilatation)},
              {"op", to_string(c.op)},
              {"left", node_to_json(*c.left)},
              {"right", node_to_json(*c.right)}};
  if (!c.comment.empty()) out["comment"] = c.comment;
  return {{"concat", out}};
}

constraints::NodePtr node_from_json(const json& j) {
  if (j.contains("compare")) return constraints::make_node(compare_from_json(j.at("compare")));
  if (!j.contains("concat")) throw ParseError("constraint node needs 'compare' or 'concat'");
  const json& jc = j.at("concat");
  constraints::ConcatConstraint c;
  c.name = jc.at("name").get<std::string>();
  c.importance = jc.value("importance", 1.0);
  c.dilatation = constraints::dilatation_from_string(jc.value("dilatation", "fuzzy"));
  c.comment = jc.value("comment", "");
  c.op = constraints::concat_op_from_string(jc.at("op").get<std::string>());
  c.left = node_from_json(jc.at("left"));
  c.right = node_from_json(jc.at("right"));
  return constraints::make_node(std::move(c));
}

json expr_to_json(const dyneval::Expr& e) {
  using Kind = dyneval::Expr::Kind;
  switch (e.kind) {
    case Kind::Attr: return {{"attr", e.attr}};
    case Kind::Const: return {{"const", e.constant}};
    case Kind::Sub: return {{"sub", json::array({expr_to_json(e.args[0]), expr_to_json(e.args[1])})}};
    case Kind::Add: {
      json args = json::array();
      for (const auto& a : e.args) args.push_back(expr_to_json(a));
      return {{"add", args}};
    }
    case Kind::Agg: {
      const char* kind = e.agg_kind == dyneval::Expr::AggKind::Sum     ? "sum"
                         : e.agg_kind == dyneval::Expr::AggKind::Count ? "count"
                         : e.agg_kind == dyneval::Expr::AggKind::Min   ? "min"
                                                                       : "max";
      return {{"agg", {{"kind", kind}, {"attr", e.attr}}}};
    }
  }
  throw ParseError("unknown expression kind");
}

dyneval::Expr expr_from_json(const json& j) {
  using Expr = dyneval::Expr;
  if (j.contains("attr")) return Expr::attribute(j.at("attr").get<std::string>());
  if (j.contains("const")) return Expr::constant_value(j.at("const").get<double>());
  if (j.contains("sub"))
    return Expr::sub(expr_from_json(j.at("sub").at(0)), expr_from_json(j.at("sub").at(1)));
  if (j.contains("add")) {
    std::vector<Expr> args;
    for (const auto& a : j.at("add")) args.push_back(expr_from_json(a));
    return Expr::add(std::move(args));
  }
  if (j.contains("agg")) {
    const std::string kind = j.at("agg").at("kind").get<std::string>();
    Expr::AggKind k = kind == "sum"     ? Expr::AggKind::Sum
                      : kind == "count" ? Expr::AggKind::Count
                      : kind == "min"   ? Expr::AggKind::Min
                      : kind == "max"   ? Expr::AggKind::Max
                                        : throw ParseError("unknown aggregation kind '" + kind + "'");
    return Expr::aggregate(k, j.at("agg").at("attr").get<std::string>());
  }
  throw ParseError("expression needs one of attr/const/sub/add/agg");
}

const char* scope_name(dyneval::RuleScope s) {
  switch (s) {
    case dyneval::RuleScope::Unit: return "unit";
    case dyneval::RuleScope::Object: return "object";
    case dyneval::RuleScope::AdjacentPair: return "adjacent_pair";
    case dyneval::RuleScope::Run: return "run";
  }
  return "?";
}

dyneval::RuleScope scope_from_name(const std::string& s) {
  if (s == "unit") return dyneval::RuleScope::Unit;
  if (s == "object") return dyneval::RuleScope::Object;
  if (s == "adjacent_pair") return dyneval::RuleScope::AdjacentPair;
  if (s == "run") return dyneval::RuleScope::Run;
  throw ParseError("unknown rule scope '" + s + "'");
}

json rule_to_json(const dyneval::GenerationRule& r) {
  json out = {{"name", r.name}, {"scope", scope_name(r.scope)}, {"template", r.template_name}};
  if (!r.unit_kind.empty()) out["unit_kind"] = r.unit_kind;
  if (!r.requires_attrs.empty()) out["requires"] = r.requires_attrs;
  if (!r.excludes_attrs.empty()) out["excludes"] = r.excludes_attrs;
  if (!r.run_break_attr.empty()) out["run_break"] = r.run_break_attr;
  if (r.importance_override >= 0.0) out["importance"] = r.importance_override;
  return out;
}

dyneval::GenerationRule rule_from_json(const json& j) {
  dyneval::GenerationRule r;
  r.name = j.at("name").get<std::string>();
  r.scope = scope_from_name(j.at("scope").get<std::string>());
  r.template_name = j.at("template").get<std::string>();
  r.unit_kind = j.value("unit_kind", "");
  if (j.contains("requires")) r.requires_attrs = j.at("requires").get<std::vector<std::string>>();
  if (j.contains("excludes")) r.excludes_attrs = j.at("excludes").get<std::vector<std::string>>();
  r.run_break_attr = j.value("run_break", "");
  r.importance_override = j.value("importance", -1.0);
  return r;
}

json kb_to_json_value(const KnowledgeBase& kb) {
  json variables = json::array();
  for (const auto& v : kb.variables) variables.push_back(variable_to_json(v));
  json templates = json::array();
  for (const auto& t : kb.templates) {
    json jt = compare_to_json(t.base);
    jt["specialization"] = expr_to_json(t.specialization);
    templates.push_back(jt);
  }
  json rules = json::array();
  for (const auto& r : kb.rules) rules.push_back(rule_to_json(r));
  json out = {{"name", kb.name},
              {"operator_set", operator_set_to_json(kb.operator_set)},
              {"violation_threshold", kb.violation_threshold},
              {"variables", variables},
              {"templates", templates},
              {"rules", rules}};
  if (!kb.constraint_sets.empty()) {
    json sets = json::array();
    for (const auto& cs : kb.constraint_sets) {
      json roots = json::array();
      for (const auto& n : cs.roots) roots.push_back(node_to_json(*n));
      json vars = json::array();
      for (const auto& v : cs.parameter_set) vars.push_back(variable_to_json(v));
      sets.push_back({{"name", cs.name},
                      {"operator_set", operator_set_to_json(cs.operator_set)},
                      {"ruleset", ruleset_to_json(cs.ruleset)},
                      {"parameter_set", vars},
                      {"constraints", roots}});
    }
    out["constraint_sets"] = sets;
  }
  return out;
}

KnowledgeBase kb_from_json_value(const json& j) {
  KnowledgeBase kb;
  kb.name = j.at("name").get<std::string>();
  if (j.contains("operator_set")) kb.operator_set = operator_set_from_json(j.at("operator_set"));
  kb.violation_threshold = j.value("violation_threshold", 0.9);
  for (const auto& jv : j.value("variables", json::array()))
    kb.variables.push_back(variable_from_json(jv));
  for (const auto& jt : j.value("templates", json::array())) {
    dyneval::TemplateConstraint t;
    t.base = compare_from_json(jt);
    t.specialization = jt.contains("specialization")
                           ? expr_from_json(jt.at("specialization"))
                           : dyneval::Expr::attribute(t.base.variable);
    kb.templates.push_back(std::move(t));
  }
  for (const auto& jr : j.value("rules", json::array())) kb.rules.push_back(rule_from_json(jr));
  for (const auto& js : j.value("constraint_sets", json::array())) {
    constraints::SetOfConstraints cs;
    cs.name = js.at("name").get<std::string>();
    if (js.contains("operator_set")) cs.operator_set = operator_set_from_json(js.at("operator_set"));
    if (js.contains("ruleset")) cs.ruleset = ruleset_from_json(js.at("ruleset"));
    for (const auto& jv : js.value("parameter_set", json::array()))
      cs.parameter_set.push_back(variable_from_json(jv));
    for (const auto& jn : js.at("constraints")) cs.roots.push_back(node_from_json(jn));
    cs.validate();
    kb.constraint_sets.push_back(std::move(cs));
  }
  return kb;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

std::string kb_to_json(const KnowledgeBase& kb) { return kb_to_json_value(kb).dump(2) + "\n"; }

KnowledgeBase kb_from_json(const std::string& text) {
  return guarded([&] { return kb_from_json_value(parse(text)); });
}

std::string kb_canonical(const KnowledgeBase& kb) { return kb_to_json_value(kb).dump(); }

std::string plan_to_json(const shift::OperationPlan& p) {
  json days = json::array();
  for (int d = 0; d < p.cycle_days; ++d) {
    json reqs = json::array();
    for (const auto& r : p.days[static_cast<std::size_t>(d)]) {
      reqs.push_back({{"shift", to_string(r.shift)}, {"unit", to_string(r.unit)},
                      {"count", r.count}});
    }
    days.push_back({{"day", d}, {"label", shift::day_label(d)}, {"requirements", reqs}});
  }
  json out = {{"cycle_days", p.cycle_days},
              {"nominal_weekly_hours", p.nominal_weekly_hours},
              {"hour_tolerance", p.hour_tolerance},
              {"days", days}};
  return out.dump(2) + "\n";
}

shift::OperationPlan plan_from_json(const std::string& text) {
  return guarded([&] {
    const json j = parse(text);
    shift::OperationPlan p;
    p.cycle_days = j.value("cycle_days", shift::kCycleDays);
    p.nominal_weekly_hours = j.value("nominal_weekly_hours", 38.5);
    p.hour_tolerance = j.value("hour_tolerance", 1.5);
    for (const auto& jd : j.at("days")) {
      const int d = jd.at("day").get<int>();
      if (d < 0 || d >= shift::kCycleDays) throw ParseError("day index out of range");
      auto& reqs = p.days[static_cast<std::size_t>(d)];
      for (const auto& jr : jd.at("requirements")) {
        reqs.push_back({shift::shift_code_from_string(jr.at("shift").get<std::string>()),
                        shift::unit_kind_from_string(jr.at("unit").get<std::string>()),
                        jr.at("count").get<int>()});
      }
    }
    return p;
  });
}

namespace {

json attrs_to_json(const dyneval::Attrs& attrs) {
  json out = json::object();
  for (const auto& [name, av] : attrs) {
    json targets = json::array();
    for (const auto& t : av.targets) targets.push_back(json::array({t.unit, t.slot}));
    out[name] = {{"value", av.value}, {"targets", targets}};
  }
  return out;
}

dyneval::Attrs attrs_from_json(const json& j) {
  dyneval::Attrs out;
  for (const auto& [name, jv] : j.items()) {
    dyneval::AttrValue av;
    av.value = jv.at("value").get<double>();
    for (const auto& jt : jv.value("targets", json::array()))
      av.targets.push_back({jt.at(0).get<int>(), jt.at(1).get<int>()});
    out.emplace(name, std::move(av));
  }
  return out;
}

}  // namespace

std::string instantiation_to_json(const dyneval::Instantiation& inst) {
  json units = json::array();
  for (const auto& u : inst.units) {
    json footprint = json::array();
    for (const auto& p : u.footprint) footprint.push_back(json::array({p.unit, p.slot}));
    json objects = json::array();
    for (const auto& o : u.objects) {
      objects.push_back({{"name", o.name},
                         {"pos", json::array({o.pos.unit, o.pos.slot})},
                         {"attrs", attrs_to_json(o.attrs)}});
    }
    units.push_back({{"name", u.name},
                     {"kind", u.kind},
                     {"footprint", footprint},
                     {"attrs", attrs_to_json(u.attrs)},
                     {"objects", objects}});
  }
  return json{{"name", inst.name}, {"units", units}}.dump(2) + "\n";
}

dyneval::Instantiation instantiation_from_json(const std::string& text) {
  return guarded([&] {
    const json j = parse(text);
    dyneval::Instantiation inst;
    inst.name = j.value("name", "");
    for (const auto& ju : j.at("units")) {
      dyneval::UnitData u;
      u.name = ju.at("name").get<std::string>();
      u.kind = ju.value("kind", "");
      for (const auto& jp : ju.value("footprint", json::array()))
        u.footprint.push_back({jp.at(0).get<int>(), jp.at(1).get<int>()});
      u.attrs = attrs_from_json(ju.value("attrs", json::object()));
      for (const auto& jo : ju.value("objects", json::array())) {
        dyneval::ObjectData o;
        o.name = jo.at("name").get<std::string>();
        o.pos = {jo.at("pos").at(0).get<int>(), jo.at("pos").at(1).get<int>()};
        o.attrs = attrs_from_json(jo.value("attrs", json::object()));
        u.objects.push_back(std::move(o));
      }
      inst.units.push_back(std::move(u));
    }
    return inst;
  });
}

namespace {

json snapshot_to_json(const consist::Snapshot& s) {
  return {{"label", s.label},
          {"instantiation", parse(instantiation_to_json(s.instantiation))},
          {"original_score", s.original_score},
          {"config_digest", s.config_digest}};
}

consist::Snapshot snapshot_from_json(const json& j) {
  consist::Snapshot s;
  s.label = j.value("label", "");
  s.instantiation = instantiation_from_json(j.at("instantiation").dump());
  s.original_score = j.at("original_score").get<double>();
  s.config_digest = j.value("config_digest", "");
  return s;
}

}  // namespace

std::string pair_store_to_json(const consist::PairStore& store) {
  json dbs = json::array();
  for (const auto& [name, db] : store.dbs) {
    json pairs = json::array();
    for (const auto& p : db.pairs) {
      pairs.push_back({{"id", p.id},
                       {"first", snapshot_to_json(p.first)},
                       {"second", snapshot_to_json(p.second)},
                       {"created_digest", p.created_digest},
                       {"created_at", p.created_at}});
    }
    dbs.push_back({{"name", name},
                   {"configuration", kb_to_json_value(db.config.kb)},
                   {"next_id", db.next_id},
                   {"pairs", pairs}});
  }
  return json{{"databases", dbs}}.dump(2) + "\n";
}

consist::PairStore pair_store_from_json(const std::string& text) {
  return guarded([&] {
    const json j = parse(text);
    consist::PairStore store;
    for (const auto& jd : j.at("databases")) {
      consist::PairDb db;
      db.name = jd.at("name").get<std::string>();
      db.config.kb = kb_from_json_value(jd.at("configuration"));
      db.next_id = jd.value("next_id", 1);
      for (const auto& jp : jd.at("pairs")) {
        consist::RankingPair p;
        p.id = jp.at("id").get<std::string>();
        p.first = snapshot_from_json(jp.at("first"));
        p.second = snapshot_from_json(jp.at("second"));
        p.created_digest = jp.value("created_digest", "");
        p.created_at = jp.value("created_at", "");
        db.pairs.push_back(std::move(p));
      }
      store.dbs.emplace(db.name, std::move(db));
    }
    return store;
  });
}

consist::ConfigDelta config_delta_from_json(const std::string& text) {
  return guarded([&] {
    const json j = parse(text);
    consist::ConfigDelta delta;
    for (const auto& [name, v] : j.value("importance", json::object()).items())
      delta.importance[name] = v.get<double>();
    for (const auto& [name, v] : j.value("ramp_width", json::object()).items())
      delta.ramp_width[name] = v.get<double>();
    if (j.contains("operator_set"))
      delta.operator_set = operator_set_from_json(j.at("operator_set"));
    if (j.contains("violation_threshold"))
      delta.violation_threshold = j.at("violation_threshold").get<double>();
    return delta;
  });
}

namespace {

json check_to_json(const consist::PairCheck& c) {
  return {{"pair", c.pair_id},
          {"old_first", c.old_first},
          {"old_second", c.old_second},
          {"new_first", c.new_first},
          {"new_second", c.new_second}};
}

json report_to_json_value(const consist::ConsistencyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(check_to_json(c));
  json violations = json::array();
  for (const auto& c : report.violations) violations.push_back(check_to_json(c));
  return {{"consistent", report.consistent}, {"checks", checks}, {"violations", violations}};
}

}  // namespace

std::string consistency_report_to_json(const consist::ConsistencyReport& report) {
  return report_to_json_value(report).dump(2) + "\n";
}

std::string what_if_report_to_json(const consist::WhatIfReport& report) {
  json candidates = json::array();
  for (const auto& c : report.candidates) {
    json deltas = json::object();
    for (const auto& [name, d] : c.leaf_deltas) deltas[name] = d;
    candidates.push_back({{"label", c.label},
                          {"old_score", c.old_score},
                          {"new_score", c.new_score},
                          {"old_rank", c.old_rank},
                          {"new_rank", c.new_rank},
                          {"leaf_deltas", deltas}});
  }
  return json{{"consistency", report_to_json_value(report.consistency)},
              {"candidates", candidates}}
             .dump(2) +
         "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace fuzzopt::io
