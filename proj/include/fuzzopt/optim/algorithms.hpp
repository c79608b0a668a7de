#pragma once

#include <deque>
#include <optional>

#include "fuzzopt/optim/problems.hpp"

namespace fuzzopt::optim {

/// Conflict-guided candidate selection with a random fall-back.
///
/// A violation is drawn uniformly from the worst_k repairable violations and
/// handed to the domain, which picks the repair operator, the position and
/// the scan offsets. When the violation list is empty or every guided
/// attempt is a no-op, a uniformly random (repair, position) pair is tried
/// instead. Returns nullopt only when the neighborhood is exhausted.
template <typename P>
std::optional<typename P::Cand> select_conflict_and_repair(P& problem, const OptimizerConfig& cfg,
                                                           Rng& rng) {
  constexpr int kGuidedAttempts = 8;
  constexpr int kRandomAttempts = 16;
  const auto worst = dyneval::worst_conflicts(problem.current_violations(),
                                              static_cast<std::size_t>(cfg.worst_k),
                                              problem.repairable_types());
  if (!worst.empty()) {
    for (int i = 0; i < kGuidedAttempts; ++i) {
      const auto& v = worst[rng.below(static_cast<std::uint32_t>(worst.size()))];
      if (auto c = problem.propose(v, rng)) return c;
    }
  }
  for (int i = 0; i < kRandomAttempts; ++i) {
    if (auto c = problem.random_candidate(rng)) return c;
  }
  return std::nullopt;
}

namespace detail {

template <typename P>
RunResult<typename P::State> run_step_search(P& problem, const typename P::State& initial,
                                             const OptimizerConfig& cfg, int tenure) {
  using State = typename P::State;
  cfg.validate();
  problem.reset(initial);
  Rng rng(cfg.seed);

  RunResult<State> r(initial);
  r.best_score = problem.current_score();

  std::deque<std::string> tabu_fifo;
  std::set<std::string> tabu;

  long long evals = 0;
  while (evals < cfg.max_evaluations) {
    std::optional<typename P::Cand> step_best;
    double step_best_score = 0.0;
    for (int t = 0; t < cfg.tries_per_step && evals < cfg.max_evaluations; ++t) {
      auto c = select_conflict_and_repair(problem, cfg, rng);
      if (!c) continue;
      const double sc = problem.preview(*c);
      ++evals;
      // a tabu move is only admissible when it beats the best seen so far
      const bool admissible = !tabu.count(c->key) || sc > r.best_score;
      if (admissible && sc > r.best_score) {
        r.best_score = sc;
        r.best_state = c->state;
      }
      r.trace.push_back({evals, sc, r.best_score});
      if (admissible && (!step_best || sc > step_best_score)) {
        step_best_score = sc;
        step_best = std::move(c);
      }
    }
    if (!step_best) {
      if (evals >= cfg.max_evaluations) break;
      continue;  // all candidates tabu or no-ops; try another round
    }
    // the best candidate of the step survives, even when it is worse than
    // the incumbent
    if (tenure > 0) {
      tabu.insert(step_best->key);
      tabu_fifo.push_back(step_best->key);
      while (static_cast<int>(tabu_fifo.size()) > tenure) {
        tabu.erase(tabu_fifo.front());
        tabu_fifo.pop_front();
      }
    }
    problem.commit(*step_best);
  }
  r.evaluations = evals;
  r.best_valid = problem.evaluate_full(r.best_state).valid;
  return r;
}

}  // namespace detail

/// Depth-1 search: per step, tries_per_step candidate modifications are
/// generated around the worst violations and the best candidate becomes the
/// new incumbent, worse or not; the best schedule seen overall is tracked
/// separately.
template <typename P>
RunResult<typename P::State> run_deepening1(P& problem, const typename P::State& initial,
                                            const OptimizerConfig& cfg) {
  return detail::run_step_search(problem, initial, cfg, 0);
}

/// Same step structure plus a FIFO tabu list over move keys. Tabu candidates
/// are only admissible when they beat the global best (aspiration). Tenure 0
/// degenerates to run_deepening1.
template <typename P>
RunResult<typename P::State> run_tabu(P& problem, const typename P::State& initial,
                                      const OptimizerConfig& cfg) {
  return detail::run_step_search(problem, initial, cfg, cfg.tabu_tenure);
}

/// Strict hill climbing: a candidate is adopted only when strictly better
/// than the incumbent. After tries_per_step consecutive rejections one
/// forced random repair is applied as a perturbation (the global best is
/// kept).
template <typename P>
RunResult<typename P::State> run_random_hill(P& problem, const typename P::State& initial,
                                             const OptimizerConfig& cfg) {
  using State = typename P::State;
  cfg.validate();
  problem.reset(initial);
  Rng rng(cfg.seed);

  RunResult<State> r(initial);
  r.best_score = problem.current_score();

  double current = problem.current_score();
  int rejections = 0;
  long long evals = 0;
  while (evals < cfg.max_evaluations) {
    auto c = select_conflict_and_repair(problem, cfg, rng);
    if (!c) break;
    const double sc = problem.preview(*c);
    ++evals;
    if (sc > r.best_score) {
      r.best_score = sc;
      r.best_state = c->state;
    }
    r.trace.push_back({evals, sc, r.best_score});
    if (sc > current) {
      problem.commit(*c);
      current = sc;
      rejections = 0;
    } else {
      ++rejections;
    }
    if (rejections >= cfg.tries_per_step && evals < cfg.max_evaluations) {
      if (auto kick = problem.random_candidate(rng)) {
        const double ks = problem.preview(*kick);
        ++evals;
        if (ks > r.best_score) {
          r.best_score = ks;
          r.best_state = kick->state;
        }
        r.trace.push_back({evals, ks, r.best_score});
        problem.commit(*kick);
        current = ks;
      }
      rejections = 0;
    }
  }
  r.evaluations = evals;
  r.best_valid = problem.evaluate_full(r.best_state).valid;
  return r;
}

/// Repair-based genetic search. The population is seeded with randomly
/// repaired copies of the initial solution; parents are picked by binary
/// tournament, offspring are spliced at week boundaries and repaired back to
/// feasibility (an infeasible child is replaced by its first parent and
/// counted), mutated by one random repair, and the best individual survives
/// each generation when the population holds more than one.
template <typename P>
RunResult<typename P::State> run_genetic(P& problem, const typename P::State& initial,
                                         const OptimizerConfig& cfg) {
  using State = typename P::State;
  cfg.validate();
  problem.reset(initial);
  Rng rng(cfg.seed);

  RunResult<State> r(initial);
  r.best_score = problem.evaluate_full(initial).score;

  const std::size_t pop_size = static_cast<std::size_t>(cfg.population_size);
  std::vector<State> pop;
  std::vector<double> fitness;
  pop.reserve(pop_size);
  fitness.reserve(pop_size);

  long long evals = 0;
  auto score_and_trace = [&](const State& s) {
    const double sc = problem.evaluate_full(s).score;
    ++evals;
    if (sc > r.best_score) {
      r.best_score = sc;
      r.best_state = s;
    }
    r.trace.push_back({evals, sc, r.best_score});
    return sc;
  };

  for (std::size_t i = 0; i < pop_size && evals < cfg.max_evaluations; ++i) {
    State s = initial;
    for (std::size_t k = 0; k < i; ++k) {
      if (auto m = problem.random_candidate_for(s, rng)) s = m->state;
    }
    fitness.push_back(score_and_trace(s));
    pop.push_back(std::move(s));
  }

  auto tournament = [&]() {
    const std::size_t a = rng.below(static_cast<std::uint32_t>(pop.size()));
    const std::size_t b = rng.below(static_cast<std::uint32_t>(pop.size()));
    return fitness[a] >= fitness[b] ? a : b;
  };

  while (evals < cfg.max_evaluations) {
    std::size_t elite = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
      if (fitness[i] > fitness[elite]) elite = i;
    }
    State elite_state = pop[elite];
    const double elite_fitness = fitness[elite];

    std::vector<State> next;
    std::vector<double> next_fitness;
    for (std::size_t i = 0; i < pop.size() && evals < cfg.max_evaluations; ++i) {
      const std::size_t pa = tournament();
      const std::size_t pb = tournament();
      State child = pop[pa];
      if (rng.unit() < cfg.crossover_rate) {
        bool feasible = true;
        State crossed = problem.crossover(pop[pa], pop[pb], rng, feasible);
        if (feasible) {
          child = std::move(crossed);
        } else {
          ++r.infeasible_offspring;  // child replaced by a parent clone
        }
      }
      if (rng.unit() < cfg.mutation_rate) {
        if (auto m = problem.random_candidate_for(child, rng)) child = m->state;
      }
      next_fitness.push_back(score_and_trace(child));
      next.push_back(std::move(child));
    }
    if (next.empty()) break;
    if (next.size() >= 2) {
      std::size_t worst = 0;
      for (std::size_t i = 1; i < next.size(); ++i) {
        if (next_fitness[i] < next_fitness[worst]) worst = i;
      }
      next[worst] = std::move(elite_state);
      next_fitness[worst] = elite_fitness;
    }
    pop = std::move(next);
    fitness = std::move(next_fitness);
  }
  r.evaluations = evals;
  r.best_valid = problem.evaluate_full(r.best_state).valid;
  return r;
}

/// Dispatch on cfg.algorithm.
template <typename P>
RunResult<typename P::State> run(P& problem, const typename P::State& initial,
                                 const OptimizerConfig& cfg) {
  switch (cfg.algorithm) {
    case Algorithm::Deepening1: return run_deepening1(problem, initial, cfg);
    case Algorithm::Tabu: return run_tabu(problem, initial, cfg);
    case Algorithm::RandomHill: return run_random_hill(problem, initial, cfg);
    case Algorithm::Genetic: return run_genetic(problem, initial, cfg);
  }
  throw Error("unknown algorithm");
}

}  // namespace fuzzopt::optim
