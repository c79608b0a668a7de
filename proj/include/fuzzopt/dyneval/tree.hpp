#pragma once

#include <set>
#include <span>

#include "fuzzopt/dyneval/instantiation.hpp"
#include "fuzzopt/dyneval/generation.hpp"
#include "fuzzopt/kb.hpp"

namespace fuzzopt::dyneval {

struct UnknownPosition : Error {
  using Error::Error;
};

struct Violation {
  std::string type_id;
  std::string name;
  double weighted = 0.0;  // score after importance weighting
  double score = 0.0;     // raw leaf score
  std::vector<Position> targets;
};

/// Violations sorted ascending by weighted score; ties break by constraint
/// name, then first target, so the order is fully deterministic.
struct ViolationList {
  std::vector<Violation> items;
};

/// The k worst violations whose type has a registered repair, ascending.
std::vector<Violation> worst_conflicts(const ViolationList& v, std::size_t k,
                                       const std::set<std::string>& repairable);

struct EvalResult {
  double root = 0.0;
  bool valid = true;
  ViolationList violations;
  std::size_t leaves_recomputed = 0;
  std::size_t leaf_count = 0;

  struct LeafScore {
    std::string name;
    std::string type_id;
    double score;
    double weighted;
  };
  std::vector<LeafScore> leaf_scores;
};

/// Position-indexed, incrementally recomputable constraint-instance tree.
///
/// The tree mirrors the instantiation hierarchy: one node per unit, one leaf
/// per generated constraint instance. After a local change only the units
/// whose footprint touches a changed position are regenerated and rescored;
/// everything else is served from cache, so an incremental update is
/// guaranteed to reproduce the from-scratch result.
class EvaluationTree {
 public:
  explicit EvaluationTree(const KnowledgeBase& kb);

  /// Full build; resets all caches.
  EvalResult build(const Instantiation& inst);

  /// Incremental re-evaluation after `changed` positions; commits caches.
  EvalResult update(const Instantiation& inst, std::span<const Position> changed);

  /// Like update, but leaves the caches untouched (candidate screening).
  double preview(const Instantiation& inst, std::span<const Position> changed) const;

  const EvalResult& last() const { return last_; }

 private:
  struct UnitCache {
    std::vector<ConstraintInstance> instances;
    std::vector<double> scores;
    std::vector<bool> hard;
    bool dirty = true;
  };

  void rescore_unit(const Instantiation& inst, std::size_t ui, UnitCache& cache,
                    std::size_t& recomputed) const;
  EvalResult assemble(std::size_t recomputed) const;
  std::vector<std::size_t> affected_units(const Instantiation& inst,
                                          std::span<const Position> changed) const;

  const KnowledgeBase* kb_;
  double max_importance_ = 1.0;  // exponent normalization anchor, from the template layer
  std::vector<UnitCache> units_;
  EvalResult last_;
};

/// One-shot evaluation without retained state (population-style scoring).
EvalResult evaluate_once(const KnowledgeBase& kb, const Instantiation& inst);

}  // namespace fuzzopt::dyneval
