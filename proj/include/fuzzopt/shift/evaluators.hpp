#pragma once

#include "fuzzopt/constraints/evaluate.hpp"
#include "fuzzopt/position.hpp"
#include "fuzzopt/shift/schedule.hpp"

namespace fuzzopt::shift {

/// Constraint templates of the shift domain.
///
/// even_distribution scores the largest difference in working hours between
/// consecutive weeks through the fuzzy pipeline; full dissatisfaction is
/// reached at a 12 h gap. free_weekends counts completely free weekends
/// (neither Saturday nor Sunday assigned) and maps the deficit linearly:
/// 0 free -> 0, 1 -> 1/3, 2 -> 2/3, 3 -> 1.
const constraints::CompareConstraint& even_distribution_template();
const constraints::CompareConstraint& free_weekends_template();

constexpr double kEvenDistributionRamp = 12.0;

struct SubgroupEval {
  double score = 1.0;
  double value = 0.0;  // week-gap hours, or free-weekend deficit
  std::vector<Position> targets;
};

/// Derived values only (no scoring): the worst consecutive week-hour gap and
/// the free-weekend deficit, each with its repair target positions.
SubgroupEval compute_week_gap(const Schedule& s, int subgroup);
SubgroupEval compute_weekend_deficit(const Schedule& s, int subgroup);

/// Largest |hours(week w) - hours(week w+1)| for a subgroup, scored through
/// the even_distribution template. Targets are the assigned slots of the
/// worst week pair (the repair entry points).
SubgroupEval eval_even_distribution(const Schedule& s, int subgroup,
                                    const fuzzy::OperatorSet& ops);

/// Free-weekend count scored through the free_weekends template. Targets are
/// the assigned weekend slots of the non-free weekends.
SubgroupEval eval_free_weekends(const Schedule& s, int subgroup, const fuzzy::OperatorSet& ops);

bool weekend_free(const Schedule& s, int subgroup, int week);

}  // namespace fuzzopt::shift
