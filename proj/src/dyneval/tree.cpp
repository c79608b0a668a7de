#include "fuzzopt/dyneval/tree.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzopt::dyneval {

namespace {

bool violation_less(const Violation& a, const Violation& b) {
  if (a.weighted != b.weighted) return a.weighted < b.weighted;
  if (a.name != b.name) return a.name < b.name;
  const Position pa = a.targets.empty() ? Position{-1, -1} : a.targets.front();
  const Position pb = b.targets.empty() ? Position{-1, -1} : b.targets.front();
  return pa < pb;
}

double weighted_score(double score, double importance, double max_importance) {
  const double e = max_importance > 0.0 ? importance / max_importance : 0.0;
  if (e == 0.0) return 1.0;
  if (score == 0.0) return 0.0;
  return std::pow(score, e);
}

}  // namespace

std::vector<Violation> worst_conflicts(const ViolationList& v, std::size_t k,
                                       const std::set<std::string>& repairable) {
  std::vector<Violation> out;
  for (const auto& item : v.items) {
    if (!repairable.count(item.type_id)) continue;
    out.push_back(item);
    if (out.size() == k) break;
  }
  return out;
}

EvaluationTree::EvaluationTree(const KnowledgeBase& kb) : kb_(&kb) {
  max_importance_ = 0.0;
  for (const auto& t : kb.templates) max_importance_ = std::max(max_importance_, t.base.importance);
  for (const auto& r : kb.rules)
    max_importance_ = std::max(max_importance_, r.importance_override);
  if (max_importance_ <= 0.0) max_importance_ = 1.0;
}

void EvaluationTree::rescore_unit(const Instantiation& inst, std::size_t ui, UnitCache& cache,
                                  std::size_t& recomputed) const {
  cache.instances = generate_for_unit(kb_->rules, kb_->templates, inst, ui);
  cache.scores.resize(cache.instances.size());
  cache.hard.resize(cache.instances.size());
  for (std::size_t i = 0; i < cache.instances.size(); ++i) {
    const ConstraintInstance& ci = cache.instances[i];
    cache.scores[i] = constraints::evaluate_compare(
        ci.constraint, fuzzy::FuzzyValue::crisp(ci.value), kb_->operator_set);
    cache.hard[i] = cache.scores[i] == 0.0 && ci.constraint.importance > 0.0;
    ++recomputed;
  }
  cache.dirty = false;
}

EvalResult EvaluationTree::assemble(std::size_t recomputed) const {
  EvalResult res;
  res.leaves_recomputed = recomputed;

  // per-unit aggregation, then the root over the units; the grouping is
  // weight-compatible with a flat aggregation over all leaves
  std::vector<fuzzy::Scored> unit_scores;
  for (const auto& cache : units_) {
    if (cache.instances.empty()) continue;
    std::vector<fuzzy::Scored> leaf_scores;
    double unit_weight = 0.0;
    for (std::size_t i = 0; i < cache.instances.size(); ++i) {
      const auto& ci = cache.instances[i];
      const double w =
          kb_->operator_set.aggregation == fuzzy::Aggregation::ExponentWeightedMin
              ? weighted_score(cache.scores[i], ci.constraint.importance, max_importance_)
              : cache.scores[i];
      leaf_scores.push_back({w, ci.constraint.importance});
      unit_weight += ci.constraint.importance;
      res.leaf_count++;
      res.valid = res.valid && !cache.hard[i];

      const double weighted = weighted_score(cache.scores[i], ci.constraint.importance,
                                             max_importance_);
      res.leaf_scores.push_back({ci.name, ci.type_id, cache.scores[i], weighted});
      if (weighted < kb_->violation_threshold) {
        res.violations.items.push_back({ci.type_id, ci.name, weighted, cache.scores[i],
                                        ci.targets});
      }
    }
    double unit_score = 0.0;
    switch (kb_->operator_set.aggregation) {
      case fuzzy::Aggregation::Min:
      case fuzzy::Aggregation::Max:
      case fuzzy::Aggregation::WeightedMean: {
        unit_score = fuzzy::aggregate(kb_->operator_set, leaf_scores);
        break;
      }
      case fuzzy::Aggregation::ExponentWeightedMin: {
        // leaves already weighted; the node is a plain conjunction
        unit_score = 1.0;
        for (const auto& s : leaf_scores) unit_score = std::min(unit_score, s.score);
        break;
      }
    }
    unit_scores.push_back({unit_score, unit_weight});
  }

  if (unit_scores.empty()) {
    res.root = 1.0;
  } else if (kb_->operator_set.aggregation == fuzzy::Aggregation::ExponentWeightedMin) {
    res.root = 1.0;
    for (const auto& s : unit_scores) res.root = std::min(res.root, s.score);
  } else {
    res.root = fuzzy::aggregate(kb_->operator_set, unit_scores);
  }

  std::sort(res.violations.items.begin(), res.violations.items.end(), violation_less);
  return res;
}

EvalResult EvaluationTree::build(const Instantiation& inst) {
  units_.assign(inst.units.size(), {});
  std::size_t recomputed = 0;
  for (std::size_t ui = 0; ui < units_.size(); ++ui) {
    rescore_unit(inst, ui, units_[ui], recomputed);
  }
  last_ = assemble(recomputed);
  return last_;
}

std::vector<std::size_t> EvaluationTree::affected_units(const Instantiation& inst,
                                                        std::span<const Position> changed) const {
  std::vector<std::size_t> out;
  for (const Position& p : changed) {
    bool known = false;
    for (std::size_t ui = 0; ui < inst.units.size(); ++ui) {
      const auto& fp = inst.units[ui].footprint;
      if (std::find(fp.begin(), fp.end(), p) != fp.end()) {
        known = true;
        if (std::find(out.begin(), out.end(), ui) == out.end()) out.push_back(ui);
      }
    }
    if (!known)
      throw UnknownPosition("position (" + std::to_string(p.unit) + "," + std::to_string(p.slot) +
                            ") not part of the instantiation");
  }
  std::sort(out.begin(), out.end());
  return out;
}

EvalResult EvaluationTree::update(const Instantiation& inst, std::span<const Position> changed) {
  if (units_.size() != inst.units.size())
    throw Error("evaluation tree not built for this instantiation");
  std::size_t recomputed = 0;
  for (std::size_t ui : affected_units(inst, changed)) {
    rescore_unit(inst, ui, units_[ui], recomputed);
  }
  last_ = assemble(recomputed);
  return last_;
}

double EvaluationTree::preview(const Instantiation& inst, std::span<const Position> changed) const {
  if (units_.size() != inst.units.size())
    throw Error("evaluation tree not built for this instantiation");
  std::vector<std::size_t> affected = affected_units(inst, changed);
  std::vector<UnitCache> scratch;
  scratch.reserve(affected.size());

  // const_cast-free: copy the few affected caches, rescore the copies
  std::size_t recomputed = 0;
  std::vector<const UnitCache*> view(units_.size());
  for (std::size_t ui = 0; ui < units_.size(); ++ui) view[ui] = &units_[ui];
  for (std::size_t ui : affected) {
    scratch.emplace_back();
    rescore_unit(inst, ui, scratch.back(), recomputed);
    view[ui] = &scratch.back();
  }

  // same arithmetic as assemble(), restricted to the root score
  std::vector<fuzzy::Scored> unit_scores;
  for (const UnitCache* cache : view) {
    if (cache->instances.empty()) continue;
    std::vector<fuzzy::Scored> leaf_scores;
    double unit_weight = 0.0;
    for (std::size_t i = 0; i < cache->instances.size(); ++i) {
      const auto& ci = cache->instances[i];
      const double w =
          kb_->operator_set.aggregation == fuzzy::Aggregation::ExponentWeightedMin
              ? weighted_score(cache->scores[i], ci.constraint.importance, max_importance_)
              : cache->scores[i];
      leaf_scores.push_back({w, ci.constraint.importance});
      unit_weight += ci.constraint.importance;
    }
    double unit_score = 0.0;
    if (kb_->operator_set.aggregation == fuzzy::Aggregation::ExponentWeightedMin) {
      unit_score = 1.0;
      for (const auto& s : leaf_scores) unit_score = std::min(unit_score, s.score);
    } else {
      unit_score = fuzzy::aggregate(kb_->operator_set, leaf_scores);
    }
    unit_scores.push_back({unit_score, unit_weight});
  }
  if (unit_scores.empty()) return 1.0;
  if (kb_->operator_set.aggregation == fuzzy::Aggregation::ExponentWeightedMin) {
    double root = 1.0;
    for (const auto& s : unit_scores) root = std::min(root, s.score);
    return root;
  }
  return fuzzy::aggregate(kb_->operator_set, unit_scores);
}

EvalResult evaluate_once(const KnowledgeBase& kb, const Instantiation& inst) {
  EvaluationTree tree(kb);
  return tree.build(inst);
}

}  // namespace fuzzopt::dyneval
