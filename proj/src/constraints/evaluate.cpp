#include "fuzzopt/constraints/evaluate.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzopt/constraints/defaults.hpp"

namespace fuzzopt::constraints {

using fuzzy::FuzzyValue;
using fuzzy::MembershipFunction;
using fuzzy::OperatorSet;

namespace {

bool crisp_satisfied(CompareOp op, double value, double compare_value) {
  switch (op) {
    case CompareOp::Le: return value <= compare_value;
    case CompareOp::Lt: return value < compare_value;
    case CompareOp::Ge: return value >= compare_value;
    case CompareOp::Gt: return value > compare_value;
    case CompareOp::Eq: return value == compare_value;
  }
  return false;
}

double oriented_violation(CompareOp op, double deviation) {
  switch (op) {
    case CompareOp::Le:
    case CompareOp::Lt: return deviation;
    case CompareOp::Ge:
    case CompareOp::Gt: return -deviation;
    case CompareOp::Eq: return std::abs(deviation);
  }
  return deviation;
}

/// Defuzzified value of a fully fired term, used to calibrate pipeline
/// scores onto [0, 1].
double anchor(const char* term, fuzzy::Defuzz method) {
  return fuzzy::defuzzify(satisfaction_variable().terms.at(term), method);
}

}  // namespace

double evaluate_compare(const CompareConstraint& c, const FuzzyValue& binding,
                        const OperatorSet& ops) {
  return evaluate_compare(c, binding, ops, make_default_ruleset(c.op));
}

double evaluate_compare(const CompareConstraint& c, const FuzzyValue& binding,
                        const OperatorSet& ops, const fuzzy::RuleSet& rules) {
  if (c.ramp_width <= 0.0) throw Error("constraint '" + c.name + "' has non-positive ramp width");

  if (c.dilatation == Dilatation::Crisp) {
    const double v = binding.representative();
    return crisp_satisfied(c.op, v, c.compare_value) ? 1.0 : 0.0;
  }

  if (c.curve == Curve::Linear) {
    const double d = (binding.representative() - c.compare_value) / c.ramp_width;
    return 1.0 - std::clamp(oriented_violation(c.op, d), 0.0, 1.0);
  }

  const fuzzy::LinguisticVariable& dev_var = deviation_variable(c.op);
  fuzzy::TermDegrees degrees;
  if (binding.is_crisp()) {
    const double d = (binding.crisp_value() - c.compare_value) / c.ramp_width;
    degrees = fuzzy::fuzzify(dev_var, FuzzyValue::crisp(std::clamp(d, dev_var.lo, dev_var.hi)));
  } else {
    MembershipFunction d = binding.dist().x_mapped(1.0 / c.ramp_width,
                                                   -c.compare_value / c.ramp_width);
    degrees = fuzzy::fuzzify(dev_var, FuzzyValue::distribution(d.truncated(dev_var.lo, dev_var.hi)));
  }

  const MembershipFunction out =
      fuzzy::apply_rules(rules, {{"deviation", degrees}}, satisfaction_variable(), ops);
  const double raw = fuzzy::defuzzify(out, ops.defuzz);

  const double best = anchor("very_good", ops.defuzz);
  const double worst = anchor("very_bad", ops.defuzz);
  return std::clamp((raw - worst) / (best - worst), 0.0, 1.0);
}

namespace {

double combine_children(const ConcatConstraint& c, double ls, double rs, const OperatorSet& ops) {
  const double lw = c.left->importance();
  const double rw = c.right->importance();
  const double max_w = std::max(lw, rw);
  if (max_w == 0.0) {
    // weightless pair: fall back to the unweighted operator
    return c.op == ConcatOp::And ? fuzzy::apply_and(ops.and_op, ls, rs)
                                 : fuzzy::apply_or(ops.or_op, ls, rs);
  }
  const double le = ops.weighing == fuzzy::Weighing::Normalized ? lw / max_w : lw;
  const double re = ops.weighing == fuzzy::Weighing::Normalized ? rw / max_w : rw;
  if (c.op == ConcatOp::And) {
    // raise scores of unimportant children toward 1 before combining
    const double a = le == 0.0 ? 1.0 : std::pow(ls, le);
    const double b = re == 0.0 ? 1.0 : std::pow(rs, re);
    return fuzzy::apply_and(ops.and_op, a, b);
  }
  // lower scores of unimportant children toward 0 before combining
  const double a = std::clamp(le * ls, 0.0, 1.0);
  const double b = std::clamp(re * rs, 0.0, 1.0);
  return fuzzy::apply_or(ops.or_op, a, b);
}

EvaluatedConstraint evaluate_node(const SetOfConstraints& s, const ConstraintNode& n,
                                  const Bindings& bindings, bool& any_hard) {
  EvaluatedConstraint out;
  out.name = n.name();
  out.importance = n.importance();
  if (n.is_compare()) {
    const auto& c = n.compare();
    auto it = bindings.find(c.variable);
    if (it == bindings.end())
      throw UnboundVariable("no binding for variable '" + c.variable + "'");
    if (const auto* var = s.find_variable(c.variable); var && it->second.is_crisp()) {
      const double x = it->second.crisp_value();
      if (x < var->lo || x > var->hi)
        throw fuzzy::OutOfUniverse("binding for '" + c.variable + "' outside universe");
    }
    out.score = s.ruleset.rules.empty()
                    ? evaluate_compare(c, it->second, s.operator_set)
                    : evaluate_compare(c, it->second, s.operator_set, s.ruleset);
    out.hard_violation = out.score == 0.0 && c.importance > 0.0;
    any_hard = any_hard || out.hard_violation;
    return out;
  }
  const auto& c = n.concat();
  out.children.push_back(evaluate_node(s, *c.left, bindings, any_hard));
  out.children.push_back(evaluate_node(s, *c.right, bindings, any_hard));
  out.score = combine_children(c, out.children[0].score, out.children[1].score, s.operator_set);
  out.hard_violation = out.children[0].hard_violation || out.children[1].hard_violation;
  return out;
}

}  // namespace

SetOfEvalConstraints evaluate_set(const SetOfConstraints& s, const Bindings& bindings) {
  SetOfEvalConstraints result;
  bool any_hard = false;
  std::vector<fuzzy::Scored> scored;
  for (const auto& root : s.roots) {
    result.roots.push_back(evaluate_node(s, *root, bindings, any_hard));
    scored.push_back({result.roots.back().score, root->importance()});
  }
  result.score = scored.empty() ? 1.0 : fuzzy::aggregate(s.operator_set, scored);
  result.valid = !any_hard;
  return result;
}

}  // namespace fuzzopt::constraints
