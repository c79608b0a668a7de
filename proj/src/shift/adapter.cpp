#include "fuzzopt/shift/adapter.hpp"

#include <set>

namespace fuzzopt::shift {

KnowledgeBase reference_kb() {
  KnowledgeBase kb;
  kb.name = "shift-reference";
  kb.operator_set = {};  // min/max, weighted-mean, centroid, normalized
  kb.violation_threshold = 0.9;

  fuzzy::LinguisticVariable week_gap;
  week_gap.name = "week_gap_max";
  week_gap.lo = 0.0;
  week_gap.hi = 120.0;
  week_gap.terms.emplace("any", fuzzy::MembershipFunction::plateau(0.0, 120.0, 1.0));
  kb.variables.push_back(week_gap);

  fuzzy::LinguisticVariable deficit;
  deficit.name = "free_weekend_deficit";
  deficit.lo = 0.0;
  deficit.hi = static_cast<double>(kWeeks);
  deficit.terms.emplace("any", fuzzy::MembershipFunction::plateau(0.0, deficit.hi, 1.0));
  kb.variables.push_back(deficit);

  kb.templates.push_back(
      {even_distribution_template(), dyneval::Expr::attribute("week_gap_max")});
  kb.templates.push_back(
      {free_weekends_template(), dyneval::Expr::attribute("free_weekend_deficit")});

  dyneval::GenerationRule even;
  even.name = "even_distribution_per_subgroup";
  even.scope = dyneval::RuleScope::Unit;
  even.unit_kind = "subgroup";
  even.template_name = "even_distribution";
  kb.rules.push_back(even);

  dyneval::GenerationRule weekends;
  weekends.name = "free_weekends_per_subgroup";
  weekends.scope = dyneval::RuleScope::Unit;
  weekends.unit_kind = "subgroup";
  weekends.template_name = "free_weekends";
  kb.rules.push_back(weekends);

  return kb;
}

void ShiftAdapter::fill_unit(dyneval::UnitData& unit, const Schedule& s, int subgroup) const {
  const SubgroupEval even = compute_week_gap(s, subgroup);
  const SubgroupEval weekends = compute_weekend_deficit(s, subgroup);
  unit.attrs["week_gap_max"] = {even.value, even.targets};
  unit.attrs["free_weekend_deficit"] = {weekends.value, weekends.targets};
}

dyneval::Instantiation ShiftAdapter::make_instantiation(const Schedule& s) const {
  dyneval::Instantiation inst;
  inst.name = "shift-schedule";
  inst.units.resize(kSubgroups);
  for (int g = 0; g < kSubgroups; ++g) {
    dyneval::UnitData& unit = inst.units[static_cast<std::size_t>(g)];
    unit.name = Schedule::subgroup_name(g);
    unit.kind = "subgroup";
    unit.footprint.clear();
    for (int d = 0; d < kCycleDays; ++d) unit.footprint.push_back({g, d});
    fill_unit(unit, s, g);
  }
  return inst;
}

void ShiftAdapter::update_instantiation(dyneval::Instantiation& inst, const Schedule& s,
                                        std::span<const Position> changed) const {
  std::set<int> subgroups;
  for (const Position& p : changed) subgroups.insert(p.unit);
  for (int g : subgroups) {
    if (g < 0 || g >= kSubgroups) throw Error("changed position names an unknown subgroup");
    fill_unit(inst.units[static_cast<std::size_t>(g)], s, g);
  }
}

}  // namespace fuzzopt::shift
