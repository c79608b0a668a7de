#include "fuzzopt/constraints/model.hpp"

#include <set>

namespace fuzzopt::constraints {

std::string to_string(Dilatation d) {
  switch (d) {
    case Dilatation::Crisp: return "crisp";
    case Dilatation::Fuzzy: return "fuzzy";
    case Dilatation::Mixed: return "mixed";
  }
  return "?";
}

std::string to_string(CompareOp op) {
  switch (op) {
    case CompareOp::Le: return "<=";
    case CompareOp::Lt: return "<";
    case CompareOp::Ge: return ">=";
    case CompareOp::Gt: return ">";
    case CompareOp::Eq: return "=";
  }
  return "?";
}

std::string to_string(ConcatOp op) { return op == ConcatOp::And ? "and" : "or"; }
std::string to_string(Curve c) { return c == Curve::Pipeline ? "pipeline" : "linear"; }

Dilatation dilatation_from_string(const std::string& s) {
  if (s == "crisp") return Dilatation::Crisp;
  if (s == "fuzzy") return Dilatation::Fuzzy;
  if (s == "mixed") return Dilatation::Mixed;
  throw Error("unknown dilatation: '" + s + "'");
}

CompareOp compare_op_from_string(const std::string& s) {
  if (s == "<=") return CompareOp::Le;
  if (s == "<") return CompareOp::Lt;
  if (s == ">=") return CompareOp::Ge;
  if (s == ">") return CompareOp::Gt;
  if (s == "=" || s == "==") return CompareOp::Eq;
  throw Error("unknown compare operator: '" + s + "'");
}

ConcatOp concat_op_from_string(const std::string& s) {
  if (s == "and") return ConcatOp::And;
  if (s == "or") return ConcatOp::Or;
  throw Error("unknown concat operator: '" + s + "'");
}

Curve curve_from_string(const std::string& s) {
  if (s == "pipeline") return Curve::Pipeline;
  if (s == "linear") return Curve::Linear;
  throw Error("unknown curve: '" + s + "'");
}

double default_ramp_width(double compare_value) {
  const double w = std::abs(compare_value) * 0.5;
  return w > 0.0 ? w : 1e-6;
}

const std::string& ConstraintNode::name() const {
  return is_compare() ? compare().name : concat().name;
}

double ConstraintNode::importance() const {
  return is_compare() ? compare().importance : concat().importance;
}

NodePtr make_node(CompareConstraint c) {
  return std::make_shared<const ConstraintNode>(ConstraintNode{std::move(c)});
}

NodePtr make_node(ConcatConstraint c) {
  if (!c.left || !c.right) throw Error("concat constraint '" + c.name + "' needs two children");
  return std::make_shared<const ConstraintNode>(ConstraintNode{std::move(c)});
}

const fuzzy::LinguisticVariable* SetOfConstraints::find_variable(const std::string& vname) const {
  for (const auto& v : parameter_set) {
    if (v.name == vname) return &v;
  }
  return nullptr;
}

namespace {

void validate_node(const SetOfConstraints& s, const ConstraintNode& n, std::set<std::string>& names) {
  if (!names.insert(n.name()).second)
    throw Error("duplicate constraint name '" + n.name() + "' in set '" + s.name + "'");
  if (n.importance() < 0.0) throw Error("negative importance on '" + n.name() + "'");
  if (n.is_compare()) {
    const auto& c = n.compare();
    if (c.ramp_width <= 0.0) throw Error("non-positive ramp width on '" + c.name + "'");
    if (!s.find_variable(c.variable))
      throw Error("constraint '" + c.name + "' references unknown variable '" + c.variable + "'");
  } else {
    validate_node(s, *n.concat().left, names);
    validate_node(s, *n.concat().right, names);
  }
}

NodePtr scale_untuned(const ConstraintNode& n, double factor) {
  if (n.is_compare()) {
    CompareConstraint c = n.compare();
    if (!c.tuned) c.ramp_width *= factor;
    return make_node(std::move(c));
  }
  ConcatConstraint c = n.concat();
  c.left = scale_untuned(*c.left, factor);
  c.right = scale_untuned(*c.right, factor);
  return make_node(std::move(c));
}

}  // namespace

void SetOfConstraints::validate() const {
  for (const auto& v : parameter_set) v.validate();
  std::set<std::string> names;
  for (const auto& root : roots) {
    if (!root) throw Error("null constraint root in set '" + name + "'");
    validate_node(*this, *root, names);
  }
}

SetOfConstraints soften_harden(const SetOfConstraints& s, double factor) {
  if (!(factor > 0.0)) throw NonPositiveFactor("soften/harden factor must be positive");
  SetOfConstraints out = s;
  out.roots.clear();
  for (const auto& root : s.roots) out.roots.push_back(scale_untuned(*root, factor));
  return out;
}

}  // namespace fuzzopt::constraints
