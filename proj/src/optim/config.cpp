#include "fuzzopt/optim/config.hpp"

namespace fuzzopt::optim {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Deepening1: return "deepening1";
    case Algorithm::Tabu: return "tabu";
    case Algorithm::RandomHill: return "random_hill";
    case Algorithm::Genetic: return "genetic";
  }
  return "?";
}

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "deepening1") return Algorithm::Deepening1;
  if (s == "tabu") return Algorithm::Tabu;
  if (s == "random_hill") return Algorithm::RandomHill;
  if (s == "genetic") return Algorithm::Genetic;
  throw Error("unknown algorithm: '" + s + "'");
}

void OptimizerConfig::validate() const {
  if (tries_per_step < 1) throw Error("tries_per_step must be >= 1");
  if (worst_k < 1) throw Error("worst_k must be >= 1");
  if (max_evaluations < 1) throw Error("max_evaluations must be >= 1");
  if (tabu_tenure < 0) throw Error("tabu_tenure must be >= 0");
  if (population_size < 1) throw Error("population_size must be >= 1");
  if (crossover_rate < 0.0 || crossover_rate > 1.0) throw Error("crossover_rate must be in [0,1]");
  if (mutation_rate < 0.0 || mutation_rate > 1.0) throw Error("mutation_rate must be in [0,1]");
  if (violation_threshold < 0.0 || violation_threshold > 1.0)
    throw Error("violation_threshold must be in [0,1]");
}

}  // namespace fuzzopt::optim
