#include "fuzzopt/dyneval/generation.hpp"

#include <algorithm>
#include <limits>

namespace fuzzopt::dyneval {

Expr Expr::attribute(std::string name) {
  Expr e;
  e.kind = Kind::Attr;
  e.attr = std::move(name);
  return e;
}

Expr Expr::constant_value(double v) {
  Expr e;
  e.kind = Kind::Const;
  e.constant = v;
  return e;
}

Expr Expr::sub(Expr a, Expr b) {
  Expr e;
  e.kind = Kind::Sub;
  e.args = {std::move(a), std::move(b)};
  return e;
}

Expr Expr::add(std::vector<Expr> args) {
  Expr e;
  e.kind = Kind::Add;
  e.args = std::move(args);
  return e;
}

Expr Expr::aggregate(AggKind kind, std::string attr) {
  Expr e;
  e.kind = Kind::Agg;
  e.agg_kind = kind;
  e.attr = std::move(attr);
  return e;
}

double eval_expr(const Expr& e, const AttrContext& ctx) {
  switch (e.kind) {
    case Expr::Kind::Const: return e.constant;
    case Expr::Kind::Attr: {
      auto it = ctx.values.find(e.attr);
      if (it == ctx.values.end()) throw MissingAttribute("attribute '" + e.attr + "' not bound");
      return it->second;
    }
    case Expr::Kind::Sub:
      if (e.args.size() != 2) throw Error("sub expression needs exactly 2 arguments");
      return eval_expr(e.args[0], ctx) - eval_expr(e.args[1], ctx);
    case Expr::Kind::Add: {
      if (e.args.empty()) throw Error("add expression needs arguments");
      double s = 0.0;
      for (const auto& a : e.args) s += eval_expr(a, ctx);
      return s;
    }
    case Expr::Kind::Agg: {
      // empty ranges yield the neutral element for sum/count
      if (e.agg_kind == Expr::AggKind::Count) return static_cast<double>(ctx.range.size());
      double acc = e.agg_kind == Expr::AggKind::Sum ? 0.0
                   : e.agg_kind == Expr::AggKind::Min ? std::numeric_limits<double>::infinity()
                                                      : -std::numeric_limits<double>::infinity();
      for (const ObjectData* obj : ctx.range) {
        auto it = obj->attrs.find(e.attr);
        if (it == obj->attrs.end())
          throw MissingAttribute("object '" + obj->name + "' lacks attribute '" + e.attr + "'");
        const double v = it->second.value;
        switch (e.agg_kind) {
          case Expr::AggKind::Sum: acc += v; break;
          case Expr::AggKind::Min: acc = std::min(acc, v); break;
          case Expr::AggKind::Max: acc = std::max(acc, v); break;
          case Expr::AggKind::Count: break;
        }
      }
      return acc;
    }
  }
  return 0.0;
}

SpecializedConstraint specialize(const TemplateConstraint& t, const AttrContext& ctx) {
  SpecializedConstraint out;
  out.constraint = t.base;
  out.value = eval_expr(t.specialization, ctx);
  return out;
}

namespace {

bool attrs_match(const Attrs& attrs, const GenerationRule& rule) {
  for (const auto& a : rule.requires_attrs) {
    if (!attrs.count(a)) return false;
  }
  for (const auto& a : rule.excludes_attrs) {
    if (attrs.count(a)) return false;
  }
  return true;
}

void collect_targets(const Attrs& attrs, const Expr& expr, std::vector<Position>& out) {
  if (expr.kind == Expr::Kind::Attr) {
    if (auto it = attrs.find(expr.attr); it != attrs.end()) {
      out.insert(out.end(), it->second.targets.begin(), it->second.targets.end());
    }
  }
  for (const auto& a : expr.args) collect_targets(attrs, a, out);
}

AttrContext context_from(const Attrs& attrs, const std::string& prefix = "") {
  AttrContext ctx;
  for (const auto& [k, v] : attrs) ctx.values[prefix + k] = v.value;
  return ctx;
}

bool uses_minmax(const Expr& e) {
  if (e.kind == Expr::Kind::Agg &&
      (e.agg_kind == Expr::AggKind::Min || e.agg_kind == Expr::AggKind::Max))
    return true;
  for (const auto& a : e.args) {
    if (uses_minmax(a)) return true;
  }
  return false;
}

const TemplateConstraint& find_template(const std::vector<TemplateConstraint>& templates,
                                        const std::string& name) {
  for (const auto& t : templates) {
    if (t.base.name == name) return t;
  }
  throw SchemaMismatch("generation rule references unknown template '" + name + "'");
}

void emit(std::vector<ConstraintInstance>& out, const GenerationRule& rule,
          const TemplateConstraint& tpl, const AttrContext& ctx, std::string instance_name,
          std::vector<Position> footprint, std::vector<Position> targets, std::size_t unit_index) {
  SpecializedConstraint sc = specialize(tpl, ctx);
  sc.constraint.name = instance_name;
  if (rule.importance_override >= 0.0) sc.constraint.importance = rule.importance_override;
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  out.push_back({tpl.base.name, std::move(instance_name), std::move(sc.constraint), sc.value,
                 std::move(footprint), std::move(targets), unit_index});
}

void generate_unit(std::vector<ConstraintInstance>& out, const GenerationRule& rule,
                   const TemplateConstraint& tpl, const Instantiation& inst, std::size_t ui) {
  const UnitData& unit = inst.units[ui];
  if (!rule.unit_kind.empty() && unit.kind != rule.unit_kind) return;

  switch (rule.scope) {
    case RuleScope::Unit: {
      if (!attrs_match(unit.attrs, rule)) return;
      AttrContext ctx = context_from(unit.attrs);
      std::vector<Position> targets;
      collect_targets(unit.attrs, tpl.specialization, targets);
      if (targets.empty()) targets = unit.footprint;
      emit(out, rule, tpl, ctx, rule.name + ":" + unit.name, unit.footprint, std::move(targets), ui);
      break;
    }
    case RuleScope::Object: {
      for (const ObjectData& obj : unit.objects) {
        if (!attrs_match(obj.attrs, rule)) continue;
        AttrContext ctx = context_from(obj.attrs);
        emit(out, rule, tpl, ctx, rule.name + ":" + unit.name + ":" + obj.name, {obj.pos},
             {obj.pos}, ui);
      }
      break;
    }
    case RuleScope::AdjacentPair: {
      for (std::size_t i = 0; i + 1 < unit.objects.size(); ++i) {
        const ObjectData& a = unit.objects[i];
        const ObjectData& b = unit.objects[i + 1];
        if (!attrs_match(a.attrs, rule) || !attrs_match(b.attrs, rule)) continue;
        AttrContext ctx = context_from(a.attrs, "first.");
        for (const auto& [k, v] : b.attrs) ctx.values["second." + k] = v.value;
        emit(out, rule, tpl, ctx, rule.name + ":" + unit.name + ":" + a.name + "+" + b.name,
             {a.pos, b.pos}, {a.pos, b.pos}, ui);
      }
      break;
    }
    case RuleScope::Run: {
      std::vector<const ObjectData*> run;
      std::vector<Position> run_positions;
      int run_no = 0;
      auto flush = [&]() {
        // sum/count have a neutral element on an empty range; min/max do not,
        // so those rules are skipped there
        const bool skip = run.empty() && uses_minmax(tpl.specialization);
        if (!skip) {
          AttrContext ctx = context_from(unit.attrs);
          ctx.range = run;
          emit(out, rule, tpl, ctx,
               rule.name + ":" + unit.name + ":run" + std::to_string(run_no), run_positions,
               run_positions, ui);
        }
        ++run_no;
        run.clear();
        run_positions.clear();
      };
      for (const ObjectData& obj : unit.objects) {
        const bool is_break = !rule.run_break_attr.empty() && obj.has(rule.run_break_attr);
        if (is_break) {
          flush();
          continue;
        }
        if (!attrs_match(obj.attrs, rule)) continue;
        run.push_back(&obj);
        run_positions.push_back(obj.pos);
      }
      flush();
      break;
    }
  }
}

}  // namespace

std::vector<ConstraintInstance> generate_for_unit(const std::vector<GenerationRule>& rules,
                                                  const std::vector<TemplateConstraint>& templates,
                                                  const Instantiation& inst,
                                                  std::size_t unit_index) {
  if (unit_index >= inst.units.size()) throw SchemaMismatch("unit index out of range");
  std::vector<ConstraintInstance> out;
  for (const auto& rule : rules) {
    const TemplateConstraint& tpl = find_template(templates, rule.template_name);
    generate_unit(out, rule, tpl, inst, unit_index);
  }
  return out;
}

std::vector<ConstraintInstance> generate_constraints(
    const std::vector<GenerationRule>& rules, const std::vector<TemplateConstraint>& templates,
    const Instantiation& inst) {
  std::vector<ConstraintInstance> out;
  for (std::size_t ui = 0; ui < inst.units.size(); ++ui) {
    for (const auto& rule : rules) {
      const TemplateConstraint& tpl = find_template(templates, rule.template_name);
      generate_unit(out, rule, tpl, inst, ui);
    }
  }
  return out;
}

}  // namespace fuzzopt::dyneval
