#pragma once

#include <map>
#include <optional>
#include <span>

#include "fuzzopt/dyneval/tree.hpp"
#include "fuzzopt/kb.hpp"

namespace fuzzopt::consist {

struct IncompatibleStructure : Error {
  using Error::Error;
};
struct RefusedInconsistent : Error {
  using Error::Error;
};
struct RefusedNotImproving : Error {
  using Error::Error;
};
struct UnknownPair : Error {
  using Error::Error;
};

/// Everything that shapes the decision function: operator choices,
/// importances, ramps and the constraint structure, wrapped so changes can
/// be detected by digest.
struct Configuration {
  KnowledgeBase kb;

  /// Stable content hash of the decision-relevant parameters.
  std::string digest() const;
};

/// A stored instantiation with enough data to re-evaluate it under any
/// structurally compatible configuration.
struct Snapshot {
  std::string label;
  dyneval::Instantiation instantiation;
  double original_score = 0.0;  // score under the configuration at creation
  std::string config_digest;
};

/// Root score of an instantiation under a configuration. Evaluation failures
/// (missing attributes, empty trees) surface as IncompatibleStructure.
double score_under(const Configuration& config, const dyneval::Instantiation& inst);

Snapshot make_snapshot(const Configuration& config, dyneval::Instantiation inst,
                       std::string label);

/// Ordered pair of snapshots: under the configuration current at creation,
/// `first` scored strictly higher than `second`, and any accepted future
/// configuration must keep that order.
struct RankingPair {
  std::string id;
  Snapshot first;
  Snapshot second;
  std::string created_digest;
  std::string created_at;
};

struct PairDb {
  std::string name;
  Configuration config;  // last adopted configuration
  std::vector<RankingPair> pairs;
  long long next_id = 1;
};

/// Several named databases (decision profiles) live side by side in one
/// store; there is no single "best" configuration.
struct PairStore {
  std::map<std::string, PairDb> dbs;
};

struct PairCheck {
  std::string pair_id;
  double old_first = 0.0;
  double old_second = 0.0;
  double new_first = 0.0;
  double new_second = 0.0;
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<PairCheck> checks;      // every pair, in db order
  std::vector<PairCheck> violations;  // pairs whose order flipped or tied
};

/// Re-scores both members of every reference pair under `new_config`.
/// Consistent iff score(first) > score(second) holds for all of them; ties
/// count as inconsistent (the order is no longer preserved). Pure: neither
/// the db nor the configuration is modified, and the verdict is independent
/// of pair order.
ConsistencyReport consistency_check(const Configuration& new_config, const PairDb& db);

/// Adopts `new_config`: requires a consistent check and that `best_after`
/// outranks `best_before` under the new configuration, then appends the pair
/// (first = best_after) and makes `new_config` the db's configuration.
PairDb adopt_config(const Configuration& new_config, const Snapshot& best_before,
                    const Snapshot& best_after, const PairDb& db);

PairDb remove_pair(const PairDb& db, const std::string& pair_id);

/// Partial configuration change: importance / ramp overrides by template
/// name, and optional operator-set replacement.
struct ConfigDelta {
  std::map<std::string, double> importance;
  std::map<std::string, double> ramp_width;
  std::optional<fuzzy::OperatorSet> operator_set;
  std::optional<double> violation_threshold;

  bool empty() const {
    return importance.empty() && ramp_width.empty() && !operator_set && !violation_threshold;
  }
};

/// Applies a delta to a configuration; unknown template names are an
/// IncompatibleStructure error.
Configuration apply_delta(const Configuration& config, const ConfigDelta& delta);

struct CandidateRank {
  std::string label;
  double old_score = 0.0;
  double new_score = 0.0;
  int old_rank = 0;  // 1 = best
  int new_rank = 0;
  std::map<std::string, double> leaf_deltas;  // per-constraint score changes (rank changes only)
};

struct WhatIfReport {
  ConsistencyReport consistency;
  std::vector<CandidateRank> candidates;  // in input order
};

/// Read-only preview of a configuration change: the consistency verdict plus
/// the full re-ranking of the candidates under old vs new configuration,
/// with per-constraint score deltas wherever ranks changed.
WhatIfReport what_if(const ConfigDelta& delta, const PairDb& db,
                     std::span<const Snapshot> candidates);

}  // namespace fuzzopt::consist
