#pragma once

#include <optional>

#include "fuzzopt/constraints/evaluate.hpp"
#include "fuzzopt/dyneval/instantiation.hpp"

namespace fuzzopt::dyneval {

struct MissingAttribute : Error {
  using Error::Error;
};
struct SchemaMismatch : Error {
  using Error::Error;
};

/// Value expression evaluated on the attributes bound by a generation rule.
/// Kept declarative (pure data) so rules stay portable and testable.
struct Expr {
  enum class Kind { Attr, Const, Sub, Add, Agg };
  enum class AggKind { Sum, Count, Min, Max };

  Kind kind = Kind::Const;
  std::string attr;               // Attr / Agg
  double constant = 0.0;          // Const
  std::vector<Expr> args;         // Sub (2) / Add (>= 1)
  AggKind agg_kind = AggKind::Sum;

  static Expr attribute(std::string name);
  static Expr constant_value(double v);
  static Expr sub(Expr a, Expr b);
  static Expr add(std::vector<Expr> args);
  static Expr aggregate(AggKind kind, std::string attr);
};

/// Evaluation context a rule match binds: scalar attributes plus, for run
/// scoped rules, the objects the aggregation ranges over.
struct AttrContext {
  std::map<std::string, double> values;
  std::vector<const ObjectData*> range;
};

double eval_expr(const Expr& e, const AttrContext& ctx);

/// Compare constraint tuned at a reference value (usually zero) plus the
/// expression producing the actual left-hand value at evaluation time.
struct TemplateConstraint {
  constraints::CompareConstraint base;
  Expr specialization;
};

/// Produces a compare-constraint instance whose variable value is the
/// specialization expression evaluated on `ctx`. The template is unchanged.
/// Throws MissingAttribute when the context lacks a referenced attribute.
struct SpecializedConstraint {
  constraints::CompareConstraint constraint;
  double value = 0.0;
};
SpecializedConstraint specialize(const TemplateConstraint& t, const AttrContext& ctx);

enum class RuleScope { Unit, Object, AdjacentPair, Run };

/// When and how a template constraint is instantiated over the current
/// problem instantiation. The condition is a conjunction of declarative
/// predicates (kind filters, attribute presence/absence).
struct GenerationRule {
  std::string name;
  RuleScope scope = RuleScope::Unit;
  std::string unit_kind;                       // empty = any unit
  std::vector<std::string> requires_attrs;     // all must be present
  std::vector<std::string> excludes_attrs;     // none may be present
  std::string run_break_attr;                  // Run scope: objects carrying it split runs
  std::string template_name;
  double importance_override = -1.0;           // < 0: keep template importance
};

/// A generated constraint instance: where it came from, the value it
/// evaluates, and the positions it watches / would repair.
struct ConstraintInstance {
  std::string type_id;      // template name
  std::string name;         // unique within the instantiation
  constraints::CompareConstraint constraint;
  double value = 0.0;
  std::vector<Position> footprint;
  std::vector<Position> targets;
  std::size_t unit_index = 0;
};

/// Instantiates every rule against every matching scope of `inst`, in
/// deterministic order (units, then rules, then objects). The instance count
/// is a pure function of the instantiation.
std::vector<ConstraintInstance> generate_constraints(
    const std::vector<GenerationRule>& rules, const std::vector<TemplateConstraint>& templates,
    const Instantiation& inst);

/// Same, restricted to one unit (incremental regeneration).
std::vector<ConstraintInstance> generate_for_unit(
    const std::vector<GenerationRule>& rules, const std::vector<TemplateConstraint>& templates,
    const Instantiation& inst, std::size_t unit_index);

}  // namespace fuzzopt::dyneval
