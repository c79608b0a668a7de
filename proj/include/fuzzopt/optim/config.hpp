#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fuzzopt/error.hpp"

namespace fuzzopt::optim {

struct InvalidInitial : Error {
  using Error::Error;
};

enum class Algorithm { Deepening1, Tabu, RandomHill, Genetic };

std::string to_string(Algorithm);
Algorithm algorithm_from_string(const std::string&);

struct OptimizerConfig {
  Algorithm algorithm = Algorithm::Deepening1;
  int tries_per_step = 10;    // candidate modifications tried per step
  int worst_k = 3;            // violations eligible for conflict selection
  long long max_evaluations = 2000;
  std::uint64_t seed = 1;
  int tabu_tenure = 7;
  int population_size = 20;
  double crossover_rate = 0.9;
  double mutation_rate = 0.3;
  double violation_threshold = 0.9;

  void validate() const;
};

struct TracePoint {
  long long eval_index;  // 1-based count of full evaluations
  double current;        // score of the evaluation
  double best;           // global best after this evaluation
};

template <typename StateT>
struct RunResult {
  explicit RunResult(StateT initial_best) : best_state(std::move(initial_best)) {}

  StateT best_state;
  double best_score = 0.0;
  bool best_valid = true;
  std::vector<TracePoint> trace;
  long long evaluations = 0;
  long long infeasible_offspring = 0;  // genetic runs only
};

}  // namespace fuzzopt::optim
