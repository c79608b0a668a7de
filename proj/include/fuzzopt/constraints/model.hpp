#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fuzzopt/fuzzy/rules.hpp"

namespace fuzzopt::constraints {

struct UnboundVariable : Error {
  using Error::Error;
};
struct NonPositiveFactor : Error {
  using Error::Error;
};

enum class Dilatation { Crisp, Fuzzy, Mixed };
enum class CompareOp { Le, Lt, Ge, Gt, Eq };
enum class ConcatOp { And, Or };

/// How satisfaction decays on the violating side. Pipeline runs the full
/// fuzzify/rules/defuzzify machinery; Linear is a plain 1 - clamp(d, 0, 1)
/// ramp for constraints whose score must be exactly proportional.
enum class Curve { Pipeline, Linear };

std::string to_string(Dilatation);
std::string to_string(CompareOp);
std::string to_string(ConcatOp);
std::string to_string(Curve);
Dilatation dilatation_from_string(const std::string&);
CompareOp compare_op_from_string(const std::string&);
ConcatOp concat_op_from_string(const std::string&);
Curve curve_from_string(const std::string&);

/// Default violation ramp: half the magnitude of the compare value, with a
/// tiny floor for constraints tuned around zero.
double default_ramp_width(double compare_value);

/// Elementary constraint "variable <op> compare_value" with a fuzzy margin.
/// importance 0 removes the constraint from hard-barrier checks; ramp_width
/// is the violation magnitude at which satisfaction reaches zero.
struct CompareConstraint {
  std::string name;
  double importance = 1.0;
  Dilatation dilatation = Dilatation::Fuzzy;
  std::string comment;
  std::string variable;
  CompareOp op = CompareOp::Le;
  double compare_value = 0.0;
  double ramp_width = 1.0;
  bool tuned = false;  // individually fine-tuned; exempt from soften/harden
  Curve curve = Curve::Pipeline;

  friend bool operator==(const CompareConstraint&, const CompareConstraint&) = default;
};

struct ConstraintNode;
using NodePtr = std::shared_ptr<const ConstraintNode>;

struct ConcatConstraint {
  std::string name;
  double importance = 1.0;
  Dilatation dilatation = Dilatation::Fuzzy;
  std::string comment;
  ConcatOp op = ConcatOp::And;
  NodePtr left;
  NodePtr right;
};

struct ConstraintNode {
  std::variant<CompareConstraint, ConcatConstraint> node;

  bool is_compare() const { return std::holds_alternative<CompareConstraint>(node); }
  const CompareConstraint& compare() const { return std::get<CompareConstraint>(node); }
  const ConcatConstraint& concat() const { return std::get<ConcatConstraint>(node); }
  const std::string& name() const;
  double importance() const;
};

NodePtr make_node(CompareConstraint c);
NodePtr make_node(ConcatConstraint c);

/// A named tree (or forest) of constraints together with the vocabulary and
/// operators needed to evaluate it.
struct SetOfConstraints {
  std::string name;
  std::vector<NodePtr> roots;
  fuzzy::RuleSet ruleset;  // deviation/satisfaction rules shared by default-evaluated compares
  fuzzy::OperatorSet operator_set;
  std::vector<fuzzy::LinguisticVariable> parameter_set;

  const fuzzy::LinguisticVariable* find_variable(const std::string& name) const;
  void validate() const;
};

struct EvaluatedConstraint {
  std::string name;
  double score = 0.0;
  double importance = 0.0;
  bool hard_violation = false;
  std::vector<EvaluatedConstraint> children;
};

struct SetOfEvalConstraints {
  std::vector<EvaluatedConstraint> roots;
  double score = 0.0;
  bool valid = true;
};

/// Multiplies the ramp width of every compare constraint not yet tuned on an
/// individual basis by `factor` (> 1 softens, < 1 hardens, 1 is identity).
SetOfConstraints soften_harden(const SetOfConstraints& s, double factor);

}  // namespace fuzzopt::constraints
