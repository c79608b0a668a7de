#pragma once

#include <span>

#include "fuzzopt/dyneval/instantiation.hpp"
#include "fuzzopt/kb.hpp"
#include "fuzzopt/shift/evaluators.hpp"

namespace fuzzopt::shift {

/// Knowledge base bundled with the shift domain: the two subgroup templates
/// plus the rules instantiating them once per subgroup.
KnowledgeBase reference_kb();

/// Bridges schedules into the generic evaluation machinery. Every subgroup
/// becomes one unit whose derived attributes (worst week gap, free-weekend
/// deficit) feed the generated constraint instances.
class ShiftAdapter {
 public:
  explicit ShiftAdapter(OperationPlan plan) : plan_(std::move(plan)) {}

  const OperationPlan& plan() const { return plan_; }

  dyneval::Instantiation make_instantiation(const Schedule& s) const;

  /// Refreshes the derived attributes of every unit touched by `changed`.
  void update_instantiation(dyneval::Instantiation& inst, const Schedule& s,
                            std::span<const Position> changed) const;

 private:
  void fill_unit(dyneval::UnitData& unit, const Schedule& s, int subgroup) const;
  OperationPlan plan_;
};

}  // namespace fuzzopt::shift
