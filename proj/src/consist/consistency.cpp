#include "fuzzopt/consist/consistency.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "fuzzopt/io/json_io.hpp"
#include "fuzzopt/util/fnv.hpp"

namespace fuzzopt::consist {

std::string Configuration::digest() const { return fnv1a64_hex(io::kb_canonical(kb)); }

double score_under(const Configuration& config, const dyneval::Instantiation& inst) {
  try {
    const dyneval::EvalResult res = dyneval::evaluate_once(config.kb, inst);
    if (res.leaf_count == 0)
      throw IncompatibleStructure("configuration generates no constraints for the snapshot");
    return res.root;
  } catch (const dyneval::MissingAttribute& e) {
    throw IncompatibleStructure(std::string("snapshot cannot be re-evaluated: ") + e.what());
  } catch (const dyneval::SchemaMismatch& e) {
    throw IncompatibleStructure(std::string("snapshot cannot be re-evaluated: ") + e.what());
  }
}

Snapshot make_snapshot(const Configuration& config, dyneval::Instantiation inst,
                       std::string label) {
  Snapshot s;
  s.label = std::move(label);
  s.instantiation = std::move(inst);
  s.original_score = score_under(config, s.instantiation);
  s.config_digest = config.digest();
  return s;
}

ConsistencyReport consistency_check(const Configuration& new_config, const PairDb& db) {
  ConsistencyReport report;
  for (const RankingPair& pair : db.pairs) {
    PairCheck check;
    check.pair_id = pair.id;
    check.old_first = pair.first.original_score;
    check.old_second = pair.second.original_score;
    check.new_first = score_under(new_config, pair.first.instantiation);
    check.new_second = score_under(new_config, pair.second.instantiation);
    report.checks.push_back(check);
    if (!(check.new_first > check.new_second)) {
      report.consistent = false;
      report.violations.push_back(check);
    }
  }
  return report;
}

namespace {

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

}  // namespace

PairDb adopt_config(const Configuration& new_config, const Snapshot& best_before,
                    const Snapshot& best_after, const PairDb& db) {
  const ConsistencyReport report = consistency_check(new_config, db);
  if (!report.consistent)
    throw RefusedInconsistent("configuration flips " + std::to_string(report.violations.size()) +
                              " reference pair(s)");
  const double before = score_under(new_config, best_before.instantiation);
  const double after = score_under(new_config, best_after.instantiation);
  if (!(after > before))
    throw RefusedNotImproving("best-after does not outrank best-before under the new configuration");

  PairDb out = db;
  RankingPair pair;
  pair.id = "pair-" + std::to_string(out.next_id++);
  pair.created_digest = new_config.digest();
  pair.created_at = timestamp_now();
  pair.first = best_after;
  pair.first.original_score = after;
  pair.first.config_digest = pair.created_digest;
  pair.second = best_before;
  pair.second.original_score = before;
  pair.second.config_digest = pair.created_digest;
  out.pairs.push_back(std::move(pair));
  out.config = new_config;
  return out;
}

PairDb remove_pair(const PairDb& db, const std::string& pair_id) {
  PairDb out = db;
  const auto it = std::find_if(out.pairs.begin(), out.pairs.end(),
                               [&](const RankingPair& p) { return p.id == pair_id; });
  if (it == out.pairs.end()) throw UnknownPair("no reference pair '" + pair_id + "'");
  out.pairs.erase(it);
  return out;
}

Configuration apply_delta(const Configuration& config, const ConfigDelta& delta) {
  Configuration out = config;
  auto mutable_template = [&out](const std::string& name) -> dyneval::TemplateConstraint* {
    for (auto& t : out.kb.templates) {
      if (t.base.name == name) return &t;
    }
    return nullptr;
  };
  for (const auto& [name, value] : delta.importance) {
    auto* tpl = mutable_template(name);
    if (!tpl) throw IncompatibleStructure("importance delta names unknown template '" + name + "'");
    tpl->base.importance = value;
  }
  for (const auto& [name, value] : delta.ramp_width) {
    auto* tpl = mutable_template(name);
    if (!tpl) throw IncompatibleStructure("ramp delta names unknown template '" + name + "'");
    if (value <= 0.0) throw Error("ramp width must stay positive");
    tpl->base.ramp_width = value;
  }
  if (delta.operator_set) out.kb.operator_set = *delta.operator_set;
  if (delta.violation_threshold) out.kb.violation_threshold = *delta.violation_threshold;
  return out;
}

namespace {

std::vector<int> ranks_of(const std::vector<double>& scores) {
  // 1 = best; stable toward the earlier candidate on ties
  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::vector<int> ranks(scores.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r) + 1;
  return ranks;
}

std::map<std::string, double> leaf_scores_of(const Configuration& config,
                                             const dyneval::Instantiation& inst) {
  std::map<std::string, double> out;
  for (const auto& leaf : dyneval::evaluate_once(config.kb, inst).leaf_scores) {
    out[leaf.name] = leaf.score;
  }
  return out;
}

}  // namespace

WhatIfReport what_if(const ConfigDelta& delta, const PairDb& db,
                     std::span<const Snapshot> candidates) {
  const Configuration new_config = apply_delta(db.config, delta);
  WhatIfReport report;
  report.consistency = consistency_check(new_config, db);

  std::vector<double> old_scores, new_scores;
  for (const Snapshot& c : candidates) {
    old_scores.push_back(score_under(db.config, c.instantiation));
    new_scores.push_back(score_under(new_config, c.instantiation));
  }
  const std::vector<int> old_ranks = ranks_of(old_scores);
  const std::vector<int> new_ranks = ranks_of(new_scores);

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    CandidateRank cr;
    cr.label = candidates[i].label;
    cr.old_score = old_scores[i];
    cr.new_score = new_scores[i];
    cr.old_rank = old_ranks[i];
    cr.new_rank = new_ranks[i];
    if (cr.old_rank != cr.new_rank) {
      const auto before = leaf_scores_of(db.config, candidates[i].instantiation);
      const auto after = leaf_scores_of(new_config, candidates[i].instantiation);
      for (const auto& [name, score] : after) {
        const auto it = before.find(name);
        cr.leaf_deltas[name] = score - (it != before.end() ? it->second : 0.0);
      }
    }
    report.candidates.push_back(std::move(cr));
  }
  return report;
}

}  // namespace fuzzopt::consist
