#pragma once

#include <optional>
#include <set>

#include "fuzzopt/dyneval/tree.hpp"
#include "fuzzopt/optim/config.hpp"
#include "fuzzopt/queens/queens.hpp"
#include "fuzzopt/shift/adapter.hpp"
#include "fuzzopt/shift/repairs.hpp"
#include "fuzzopt/util/rng.hpp"

namespace fuzzopt::optim {

template <typename StateT>
struct Candidate {
  StateT state;
  std::vector<Position> changed;
  std::string key;
};

struct Evaluation {
  double score = 0.0;
  bool valid = true;  // no hard barrier crossed
  dyneval::ViolationList violations;
};

/// Shift scheduling as a repair problem. Holds the evaluation tree for the
/// incumbent schedule; candidate neighbors are scored incrementally against
/// it and committed when adopted. One instance drives exactly one run.
class ShiftProblem {
 public:
  using State = shift::Schedule;
  using Cand = Candidate<State>;

  ShiftProblem(shift::OperationPlan plan, KnowledgeBase kb);
  ShiftProblem(const ShiftProblem&) = delete;
  ShiftProblem& operator=(const ShiftProblem&) = delete;

  void reset(const State& initial);  // throws InvalidInitial on hard violations
  const State& current() const { return current_; }
  double current_score() const { return result_.root; }
  bool current_valid() const { return result_.valid; }
  const dyneval::ViolationList& current_violations() const { return result_.violations; }
  const std::set<std::string>& repairable_types() const { return repairable_; }

  std::optional<Cand> propose(const dyneval::Violation& v, Rng& rng);
  std::optional<Cand> random_candidate(Rng& rng) const;
  std::optional<Cand> random_candidate_for(const State& s, Rng& rng) const;

  double preview(const Cand& c) const;
  void commit(const Cand& c);

  Evaluation evaluate_full(const State& s) const;
  bool hard_valid(const State& s) const { return shift::validate_hard(s, plan_).empty(); }

  /// Week-boundary splice of two parents followed by duration re-tuning.
  /// Sets `feasible` to false when the child cannot be made hard-valid.
  State crossover(const State& a, const State& b, Rng& rng, bool& feasible) const;

  const shift::OperationPlan& plan() const { return plan_; }
  const KnowledgeBase& kb() const { return kb_; }

 private:
  std::optional<Cand> candidate_at(const State& s, Position pos, Rng& rng) const;

  shift::OperationPlan plan_;
  KnowledgeBase kb_;
  shift::ShiftAdapter adapter_;
  dyneval::EvaluationTree tree_;
  State current_;
  dyneval::Instantiation inst_;
  dyneval::EvalResult result_;
  std::set<std::string> repairable_;
};

/// n-queens as a repair problem: violations are attacked columns, the repair
/// is the min-conflicts move of the column's queen.
class QueensProblem {
 public:
  using State = queens::QueensBoard;
  using Cand = Candidate<State>;

  explicit QueensProblem(int n);

  void reset(const State& initial);
  const State& current() const { return current_; }
  double current_score() const { return score_of(current_); }
  bool current_valid() const { return true; }
  const dyneval::ViolationList& current_violations() const { return violations_; }
  const std::set<std::string>& repairable_types() const { return repairable_; }

  std::optional<Cand> propose(const dyneval::Violation& v, Rng& rng);
  std::optional<Cand> random_candidate(Rng& rng) const;
  std::optional<Cand> random_candidate_for(const State& s, Rng& rng) const;

  double preview(const Cand& c) const { return score_of(c.state); }
  void commit(const Cand& c);

  Evaluation evaluate_full(const State& s) const;
  bool hard_valid(const State&) const { return true; }

  State crossover(const State& a, const State& b, Rng& rng, bool& feasible) const;

  double score_of(const State& s) const;

 private:
  void refresh_violations();

  int n_;
  State current_;
  dyneval::ViolationList violations_;
  std::set<std::string> repairable_{"queen_conflicts"};
};

}  // namespace fuzzopt::optim
