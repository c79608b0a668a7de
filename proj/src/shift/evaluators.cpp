#include "fuzzopt/shift/evaluators.hpp"

#include <cmath>

namespace fuzzopt::shift {

using constraints::CompareConstraint;

const CompareConstraint& even_distribution_template() {
  static const CompareConstraint c = [] {
    CompareConstraint t;
    t.name = "even_distribution";
    t.comment = "difference in working hours between consecutive weeks stays small";
    t.variable = "week_gap_max";
    t.op = constraints::CompareOp::Le;
    t.compare_value = 0.0;
    t.ramp_width = kEvenDistributionRamp;
    t.tuned = true;
    return t;
  }();
  return c;
}

const CompareConstraint& free_weekends_template() {
  static const CompareConstraint c = [] {
    CompareConstraint t;
    t.name = "free_weekends";
    t.comment = "the more completely free weekends, the better";
    t.variable = "free_weekend_deficit";
    t.op = constraints::CompareOp::Le;
    t.compare_value = 0.0;
    t.ramp_width = static_cast<double>(kWeeks);
    t.tuned = true;
    t.curve = constraints::Curve::Linear;
    return t;
  }();
  return c;
}

SubgroupEval compute_week_gap(const Schedule& s, int subgroup) {
  SubgroupEval out;
  double worst = -1.0;
  int worst_pair = 0;
  for (int w = 0; w + 1 < kWeeks; ++w) {
    const double gap = std::abs(s.week_hours(subgroup, w) - s.week_hours(subgroup, w + 1));
    if (gap > worst) {
      worst = gap;
      worst_pair = w;
    }
  }
  out.value = worst;
  for (int d = worst_pair * kDaysPerWeek; d < (worst_pair + 2) * kDaysPerWeek; ++d) {
    if (s.at(d, subgroup)) out.targets.push_back({subgroup, d});
  }
  return out;
}

bool weekend_free(const Schedule& s, int subgroup, int week) {
  const int sat = week * kDaysPerWeek + 5;
  return !s.at(sat, subgroup) && !s.at(sat + 1, subgroup);
}

SubgroupEval compute_weekend_deficit(const Schedule& s, int subgroup) {
  SubgroupEval out;
  int free = 0;
  for (int w = 0; w < kWeeks; ++w) {
    if (weekend_free(s, subgroup, w)) {
      ++free;
      continue;
    }
    const int sat = w * kDaysPerWeek + 5;
    for (int d : {sat, sat + 1}) {
      if (s.at(d, subgroup)) out.targets.push_back({subgroup, d});
    }
  }
  out.value = static_cast<double>(kWeeks - free);
  return out;
}

SubgroupEval eval_even_distribution(const Schedule& s, int subgroup,
                                    const fuzzy::OperatorSet& ops) {
  SubgroupEval out = compute_week_gap(s, subgroup);
  out.score = constraints::evaluate_compare(even_distribution_template(),
                                            fuzzy::FuzzyValue::crisp(out.value), ops);
  return out;
}

SubgroupEval eval_free_weekends(const Schedule& s, int subgroup, const fuzzy::OperatorSet& ops) {
  SubgroupEval out = compute_weekend_deficit(s, subgroup);
  out.score = constraints::evaluate_compare(free_weekends_template(),
                                            fuzzy::FuzzyValue::crisp(out.value), ops);
  return out;
}

}  // namespace fuzzopt::shift
