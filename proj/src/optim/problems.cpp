#include "fuzzopt/optim/problems.hpp"

#include <algorithm>

namespace fuzzopt::optim {

using shift::RepairOp;
using shift::RepairStart;

ShiftProblem::ShiftProblem(shift::OperationPlan plan, KnowledgeBase kb)
    : plan_(std::move(plan)), kb_(std::move(kb)), adapter_(plan_), tree_(kb_) {
  kb_.validate();
  plan_.validate();
  for (const auto& t : kb_.templates) repairable_.insert(t.base.name);
  inst_ = adapter_.make_instantiation(current_);  // empty grid until reset()
  result_ = tree_.build(inst_);
}

void ShiftProblem::reset(const State& initial) {
  const auto violations = shift::validate_hard(initial, plan_);
  if (!violations.empty())
    throw InvalidInitial("initial schedule violates hard requirements: " + violations.front().detail);
  current_ = initial;
  inst_ = adapter_.make_instantiation(current_);
  result_ = tree_.build(inst_);
}

std::optional<ShiftProblem::Cand> ShiftProblem::candidate_at(const State& s, Position pos,
                                                             Rng& rng) const {
  const auto ops = shift::repair_ops_for(s, pos);
  if (ops.empty()) return std::nullopt;
  const RepairOp op = ops[rng.below(static_cast<std::uint32_t>(ops.size()))];
  const RepairStart start{rng.below_int(shift::kCycleDays), rng.below_int(shift::kSubgroups),
                          rng.below_int(shift::kCycleDays)};
  auto outcome = shift::apply_repair(s, plan_, op, pos, start);
  if (!outcome) return std::nullopt;
  return Cand{std::move(outcome->schedule), std::move(outcome->changed),
              std::move(outcome->move_key)};
}

std::optional<ShiftProblem::Cand> ShiftProblem::propose(const dyneval::Violation& v, Rng& rng) {
  if (v.targets.empty()) return std::nullopt;
  const Position pos = v.targets[rng.below(static_cast<std::uint32_t>(v.targets.size()))];
  return candidate_at(current_, pos, rng);
}

std::optional<ShiftProblem::Cand> ShiftProblem::random_candidate_for(const State& s,
                                                                     Rng& rng) const {
  // uniformly random assigned cell, then a random applicable repair
  std::vector<Position> assigned;
  for (int d = 0; d < shift::kCycleDays; ++d) {
    for (int g = 0; g < shift::kSubgroups; ++g) {
      if (s.at(d, g)) assigned.push_back({g, d});
    }
  }
  if (assigned.empty()) return std::nullopt;
  const Position pos = assigned[rng.below(static_cast<std::uint32_t>(assigned.size()))];
  return candidate_at(s, pos, rng);
}

std::optional<ShiftProblem::Cand> ShiftProblem::random_candidate(Rng& rng) const {
  return random_candidate_for(current_, rng);
}

double ShiftProblem::preview(const Cand& c) const {
  dyneval::Instantiation scratch = inst_;
  adapter_.update_instantiation(scratch, c.state, c.changed);
  return tree_.preview(scratch, c.changed);
}

void ShiftProblem::commit(const Cand& c) {
  adapter_.update_instantiation(inst_, c.state, c.changed);
  result_ = tree_.update(inst_, c.changed);
  current_ = c.state;
}

Evaluation ShiftProblem::evaluate_full(const State& s) const {
  const dyneval::EvalResult res = dyneval::evaluate_once(kb_, adapter_.make_instantiation(s));
  return {res.root, res.valid, res.violations};
}

ShiftProblem::State ShiftProblem::crossover(const State& a, const State& b, Rng& rng,
                                            bool& feasible) const {
  // splice on a week boundary so per-day coverage survives; only the
  // subgroup hours need repair afterwards
  const int cut = (1 + rng.below_int(shift::kWeeks - 1)) * shift::kDaysPerWeek;
  State child = b;
  for (int d = 0; d < cut; ++d) {
    for (int g = 0; g < shift::kSubgroups; ++g) {
      if (const auto& src = a.at(d, g)) {
        child.set(d, g, *src);
      } else {
        child.clear(d, g);
      }
    }
  }
  feasible = shift::retune_td_durations(child, plan_) && hard_valid(child);
  return child;
}

QueensProblem::QueensProblem(int n) : n_(n), current_(n) { refresh_violations(); }

void QueensProblem::reset(const State& initial) {
  current_ = initial;
  n_ = initial.size();
  refresh_violations();
}

double QueensProblem::score_of(const State& s) const {
  const double max_pairs = static_cast<double>(s.size()) * (s.size() - 1) / 2.0;
  return 1.0 - static_cast<double>(s.conflicts()) / max_pairs;
}

void QueensProblem::refresh_violations() {
  violations_.items.clear();
  for (int c = 0; c < n_; ++c) {
    const int attacks = current_.column_attacks(c);
    if (attacks == 0) continue;
    dyneval::Violation v;
    v.type_id = "queen_conflicts";
    char buf[16];
    std::snprintf(buf, sizeof buf, "col%05d", c);
    v.name = buf;
    v.score = 1.0 - static_cast<double>(attacks) / (n_ - 1);
    v.weighted = v.score;
    v.targets = {{c, current_.row(c)}};
    violations_.items.push_back(std::move(v));
  }
  std::sort(violations_.items.begin(), violations_.items.end(),
            [](const dyneval::Violation& a, const dyneval::Violation& b) {
              return a.weighted != b.weighted ? a.weighted < b.weighted : a.name < b.name;
            });
}

std::optional<QueensProblem::Cand> QueensProblem::propose(const dyneval::Violation& v, Rng& rng) {
  (void)rng;
  if (v.targets.empty()) return std::nullopt;
  const int col = v.targets.front().unit;
  State next = queens::queens_repair(current_, col);
  if (next.row(col) == current_.row(col)) return std::nullopt;
  return Cand{std::move(next), {{col, 0}},
              "q:" + std::to_string(col) + ":" + std::to_string(next.row(col))};
}

std::optional<QueensProblem::Cand> QueensProblem::random_candidate_for(const State& s,
                                                                       Rng& rng) const {
  const int col = rng.below_int(s.size());
  int row = rng.below_int(s.size() - 1);
  if (row >= s.row(col)) ++row;  // any row but the current one
  State next = s;
  next.move(col, row);
  return Cand{std::move(next), {{col, 0}}, "q:" + std::to_string(col) + ":" + std::to_string(row)};
}

std::optional<QueensProblem::Cand> QueensProblem::random_candidate(Rng& rng) const {
  return random_candidate_for(current_, rng);
}

void QueensProblem::commit(const Cand& c) {
  current_ = c.state;
  refresh_violations();
}

Evaluation QueensProblem::evaluate_full(const State& s) const {
  return {score_of(s), true, {}};
}

QueensProblem::State QueensProblem::crossover(const State& a, const State& b, Rng& rng,
                                              bool& feasible) const {
  const int cut = 1 + rng.below_int(a.size() - 1);
  State child = a;
  for (int c = cut; c < a.size(); ++c) child.move(c, b.row(c));
  feasible = true;
  return child;
}

}  // namespace fuzzopt::optim
