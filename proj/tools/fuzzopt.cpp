// Command-line front end: knowledge-base handling, schedule evaluation, the
// repair-based optimizers, the benchmark harness and the configuration
// consistency checker. Payload goes to stdout (or --out), diagnostics to
// stderr. Exit codes: 0 ok, 1 input error, 2 hard-invalid schedule.
#include <future>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzopt/io/json_io.hpp"
#include "fuzzopt/io/schedule_csv.hpp"
#include "fuzzopt/optim/algorithms.hpp"

using nlohmann::json;
using namespace fuzzopt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitHardInvalid = 2;

KnowledgeBase load_kb(const std::string& path) {
  if (path.empty()) return shift::reference_kb();
  return io::kb_from_json(io::read_file(path));
}

shift::OperationPlan load_plan(const std::string& path) {
  if (path.empty()) return shift::default_reference_plan();
  return io::plan_from_json(io::read_file(path));
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    io::write_file(out_path, payload);
  }
}

json violations_json(const dyneval::ViolationList& violations, std::size_t top) {
  json out = json::array();
  for (const auto& v : violations.items) {
    if (out.size() == top) break;
    json targets = json::array();
    for (const auto& t : v.targets) {
      targets.push_back({{"subgroup", shift::Schedule::subgroup_name(t.unit)},
                         {"day", shift::day_label(t.slot)}});
    }
    out.push_back({{"constraint", v.name},
                   {"type", v.type_id},
                   {"weighted_score", v.weighted},
                   {"score", v.score},
                   {"positions", targets}});
  }
  return out;
}

int cmd_evaluate(const std::string& kb_path, const std::string& plan_path,
                 const std::string& schedule_path, std::size_t top, const std::string& out_path) {
  const KnowledgeBase kb = load_kb(kb_path);
  const shift::OperationPlan plan = load_plan(plan_path);
  const shift::Schedule schedule = io::schedule_from_csv(io::read_file(schedule_path));

  const auto hard = shift::validate_hard(schedule, plan);
  const shift::ShiftAdapter adapter(plan);
  const dyneval::EvalResult res = dyneval::evaluate_once(kb, adapter.make_instantiation(schedule));

  json hard_json = json::array();
  for (const auto& h : hard) hard_json.push_back({{"kind", to_string(h.kind)}, {"detail", h.detail}});
  const bool hard_valid = hard.empty() && res.valid;
  json report = {{"score", res.root},
                 {"valid", hard_valid},
                 {"hard_violations", hard_json},
                 {"violations", violations_json(res.violations, top)}};
  emit(report.dump(2) + "\n", out_path);
  return hard_valid ? kExitOk : kExitHardInvalid;
}

shift::Schedule load_or_generate_initial(const std::string& initial_path,
                                         const shift::OperationPlan& plan,
                                         std::uint64_t initial_seed) {
  if (!initial_path.empty()) return io::schedule_from_csv(io::read_file(initial_path));
  return shift::initial_solution(plan, initial_seed);
}

int cmd_optimize(const optim::OptimizerConfig& cfg, const std::string& kb_path,
                 const std::string& plan_path, const std::string& initial_path,
                 std::uint64_t initial_seed, const std::string& out_path,
                 const std::string& trace_path) {
  const shift::OperationPlan plan = load_plan(plan_path);
  const shift::Schedule initial = load_or_generate_initial(initial_path, plan, initial_seed);

  optim::ShiftProblem problem(plan, load_kb(kb_path));
  const double initial_score = problem.evaluate_full(initial).score;
  const auto result = optim::run(problem, initial, cfg);

  if (!out_path.empty()) io::write_file(out_path, io::schedule_to_csv(result.best_state));
  if (!trace_path.empty()) io::write_file(trace_path, io::trace_to_csv(result.trace));
  json summary = {{"algorithm", to_string(cfg.algorithm)},
                  {"seed", cfg.seed},
                  {"evaluations", result.evaluations},
                  {"initial_score", initial_score},
                  {"best_score", result.best_score},
                  {"best_valid", result.best_valid}};
  std::cout << summary.dump(2) << "\n";
  return kExitOk;
}

int cmd_initial(const std::string& plan_path, std::uint64_t seed, const std::string& out_path) {
  const shift::OperationPlan plan = load_plan(plan_path);
  emit(io::schedule_to_csv(shift::initial_solution(plan, seed)), out_path);
  return kExitOk;
}

int cmd_bench(const optim::OptimizerConfig& base_cfg, const std::string& kb_path,
              const std::string& plan_path, const std::string& initial_path,
              std::uint64_t initial_seed, std::vector<std::uint64_t> seeds, int batches,
              const std::string& out_dir) {
  const shift::OperationPlan plan = load_plan(plan_path);
  const KnowledgeBase kb = load_kb(kb_path);
  const shift::Schedule initial = load_or_generate_initial(initial_path, plan, initial_seed);

  while (static_cast<int>(seeds.size()) < batches) {
    seeds.push_back(seeds.empty() ? 1 : seeds.back() + 1);
  }
  seeds.resize(static_cast<std::size_t>(batches));

  struct BatchOutcome {
    optim::RunResult<shift::Schedule> result;
    double initial_score = 0.0;
    double wall_seconds = 0.0;
  };
  // every batch starts from the identical initial solution, isolated state
  auto run_batch = [&](std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();
    optim::ShiftProblem problem(plan, kb);
    optim::OptimizerConfig cfg = base_cfg;
    cfg.seed = seed;
    const double initial_score = problem.evaluate_full(initial).score;
    BatchOutcome outcome{optim::run(problem, initial, cfg), initial_score, 0.0};
    outcome.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return outcome;
  };

  std::vector<std::future<BatchOutcome>> futures;
  for (int b = 0; b < batches; ++b) {
    futures.push_back(std::async(std::launch::async, run_batch, seeds[static_cast<std::size_t>(b)]));
  }

  std::ostringstream summary;
  summary << "batch,seed,evaluations,initial_score,final_best,wall_seconds\n";
  json report = json::array();
  for (int b = 0; b < batches; ++b) {
    const BatchOutcome outcome = futures[static_cast<std::size_t>(b)].get();
    const std::string curve_path = out_dir + "/batch" + std::to_string(b + 1) + ".csv";
    io::write_file(curve_path, io::trace_to_csv(outcome.result.trace));
    summary << b + 1 << ',' << seeds[static_cast<std::size_t>(b)] << ','
            << outcome.result.evaluations << ',' << outcome.initial_score << ','
            << outcome.result.best_score << ',' << outcome.wall_seconds << '\n';
    report.push_back({{"batch", b + 1},
                      {"seed", seeds[static_cast<std::size_t>(b)]},
                      {"evaluations", outcome.result.evaluations},
                      {"initial_score", outcome.initial_score},
                      {"final_best", outcome.result.best_score},
                      {"wall_seconds", outcome.wall_seconds}});
  }
  io::write_file(out_dir + "/summary.csv", summary.str());
  std::cout << report.dump(2) << "\n";
  return kExitOk;
}

int cmd_kb_validate(const std::string& kb_path) {
  const KnowledgeBase kb = load_kb(kb_path);
  const auto diags = kb.validate(true);
  for (const auto& d : diags) std::cerr << "kb: " << d << "\n";
  std::cout << json{{"name", kb.name}, {"diagnostics", diags}}.dump(2) << "\n";
  return diags.empty() ? kExitOk : kExitError;
}

int cmd_kb_dump(const std::string& out_path) {
  emit(io::kb_to_json(shift::reference_kb()), out_path);
  return kExitOk;
}

int cmd_queens(int n, const optim::OptimizerConfig& cfg, const std::string& out_path) {
  optim::QueensProblem problem(n);
  Rng init_rng(cfg.seed);
  const queens::QueensBoard initial = queens::QueensBoard::random(n, init_rng);
  const auto result = optim::run(problem, initial, cfg);

  json board = json::array();
  for (int c = 0; c < n; ++c) board.push_back(result.best_state.row(c));
  json report = {{"n", n},
                 {"algorithm", to_string(cfg.algorithm)},
                 {"seed", cfg.seed},
                 {"steps", result.evaluations},
                 {"conflicts", result.best_state.conflicts()},
                 {"solved", result.best_state.conflicts() == 0},
                 {"board", board}};
  emit(report.dump(2) + "\n", out_path);
  return kExitOk;
}

struct CheckConfigArgs {
  std::string store_path;
  std::string db_name;
  std::string kb_new_path;
  std::string delta_path;
  bool adopt = false;
  std::string best_before_path;
  std::string best_after_path;
  std::string plan_path;
  std::string what_if_out;
  std::vector<std::string> candidate_paths;
  std::string out_path;
};

consist::Snapshot snapshot_from_schedule(const consist::Configuration& config,
                                         const shift::OperationPlan& plan,
                                         const std::string& csv_path) {
  const shift::ShiftAdapter adapter(plan);
  const shift::Schedule s = io::schedule_from_csv(io::read_file(csv_path));
  return consist::make_snapshot(config, adapter.make_instantiation(s), csv_path);
}

int cmd_check_config(const CheckConfigArgs& args) {
  consist::PairStore store = io::pair_store_from_json(io::read_file(args.store_path));
  auto it = store.dbs.find(args.db_name);
  if (it == store.dbs.end()) throw Error("store has no database '" + args.db_name + "'");
  consist::PairDb& db = it->second;

  if (!args.what_if_out.empty()) {
    const consist::ConfigDelta delta =
        args.delta_path.empty() ? consist::ConfigDelta{}
                                : io::config_delta_from_json(io::read_file(args.delta_path));
    const shift::OperationPlan plan = load_plan(args.plan_path);
    std::vector<consist::Snapshot> candidates;
    for (const auto& path : args.candidate_paths) {
      candidates.push_back(snapshot_from_schedule(db.config, plan, path));
    }
    const consist::WhatIfReport report = consist::what_if(delta, db, candidates);
    io::write_file(args.what_if_out, io::what_if_report_to_json(report));
    std::cout << json{{"consistent", report.consistency.consistent},
                      {"candidates", report.candidates.size()}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }

  consist::Configuration new_config;
  if (!args.kb_new_path.empty()) {
    new_config.kb = io::kb_from_json(io::read_file(args.kb_new_path));
  } else if (!args.delta_path.empty()) {
    new_config =
        consist::apply_delta(db.config, io::config_delta_from_json(io::read_file(args.delta_path)));
  } else {
    throw Error("check-config needs --kb-new or --delta");
  }

  const consist::ConsistencyReport report = consist::consistency_check(new_config, db);
  emit(io::consistency_report_to_json(report), args.out_path);

  if (args.adopt) {
    if (!report.consistent) {
      std::cerr << "adoption refused: configuration is inconsistent with the reference pairs\n";
      return kExitError;
    }
    const shift::OperationPlan plan = load_plan(args.plan_path);
    const consist::Snapshot before =
        snapshot_from_schedule(new_config, plan, args.best_before_path);
    const consist::Snapshot after = snapshot_from_schedule(new_config, plan, args.best_after_path);
    db = consist::adopt_config(new_config, before, after, db);
    io::write_file(args.store_path, io::pair_store_to_json(store));
    std::cerr << "configuration adopted; store updated\n";
  }
  return report.consistent ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy-constraint optimization toolkit"};
  app.require_subcommand(1);

  std::string kb_path, plan_path, out_path;
  std::uint64_t seed = 1;

  optim::OptimizerConfig cfg;
  auto add_optimizer_flags = [&](CLI::App* cmd) {
    cmd->add_option("--algo", [&](const std::vector<std::string>& v) {
         cfg.algorithm = optim::algorithm_from_string(v.front());
         return true;
       }, "deepening1 | tabu | random_hill | genetic");
    cmd->add_option("--max-evals", cfg.max_evaluations, "evaluation budget");
    cmd->add_option("--tries", cfg.tries_per_step, "candidates per step");
    cmd->add_option("--worst-k", cfg.worst_k, "violations eligible for selection");
    cmd->add_option("--tenure", cfg.tabu_tenure, "tabu tenure");
    cmd->add_option("--population", cfg.population_size, "population size (genetic)");
    cmd->add_option("--crossover-rate", cfg.crossover_rate, "crossover rate (genetic)");
    cmd->add_option("--mutation-rate", cfg.mutation_rate, "mutation rate (genetic)");
  };

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "score a schedule against a knowledge base");
  std::string schedule_path;
  std::size_t top_k = 10;
  evaluate->add_option("--kb", kb_path, "knowledge base JSON (default: built-in)");
  evaluate->add_option("--plan", plan_path, "operation plan JSON (default: built-in)");
  evaluate->add_option("--schedule", schedule_path, "schedule CSV")->required();
  evaluate->add_option("--top", top_k, "violations to report");
  evaluate->add_option("--out", out_path, "write the report here instead of stdout");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "improve a schedule with a repair heuristic");
  std::string initial_path, trace_path;
  std::uint64_t initial_seed = 42;
  optimize->add_option("--kb", kb_path, "knowledge base JSON");
  optimize->add_option("--plan", plan_path, "operation plan JSON");
  optimize->add_option("--initial", initial_path, "initial schedule CSV (default: generated)");
  optimize->add_option("--initial-seed", initial_seed, "seed for the generated initial solution");
  optimize->add_option("--seed", seed, "run seed");
  optimize->add_option("--out", out_path, "write the best schedule CSV here");
  optimize->add_option("--trace", trace_path, "write the evaluation trace CSV here");
  add_optimizer_flags(optimize);

  // initial
  auto* initial = app.add_subcommand("initial", "generate a feasible starting schedule");
  initial->add_option("--plan", plan_path, "operation plan JSON");
  initial->add_option("--seed", seed, "generator seed");
  initial->add_option("--out", out_path, "write the schedule CSV here instead of stdout");

  // bench
  auto* bench = app.add_subcommand("bench", "optimization curves over several batches");
  int batches = 4;
  std::vector<std::uint64_t> batch_seeds;
  std::string out_dir = ".";
  bench->add_option("--kb", kb_path, "knowledge base JSON");
  bench->add_option("--plan", plan_path, "operation plan JSON");
  bench->add_option("--initial", initial_path, "shared initial schedule CSV");
  bench->add_option("--initial-seed", initial_seed, "seed for the shared initial solution");
  bench->add_option("--batches", batches, "number of batches");
  bench->add_option("--seeds", batch_seeds, "per-batch seeds (default 1..batches)");
  bench->add_option("--out-dir", out_dir, "directory for batchN.csv and summary.csv");
  add_optimizer_flags(bench);

  // check-config
  auto* check = app.add_subcommand("check-config", "consistency test for configuration changes");
  CheckConfigArgs cc;
  check->add_option("--store", cc.store_path, "reference-pair store JSON")->required();
  check->add_option("--db", cc.db_name, "database name inside the store")->required();
  check->add_option("--kb-new", cc.kb_new_path, "candidate knowledge base JSON");
  check->add_option("--delta", cc.delta_path, "configuration delta JSON");
  check->add_flag("--adopt", cc.adopt, "adopt the configuration when consistent");
  check->add_option("--best-before", cc.best_before_path, "best schedule before the change (CSV)");
  check->add_option("--best-after", cc.best_after_path, "best schedule after the change (CSV)");
  check->add_option("--plan", cc.plan_path, "operation plan JSON");
  check->add_option("--what-if", cc.what_if_out, "write a what-if report here (read-only)");
  check->add_option("--candidates", cc.candidate_paths, "candidate schedules for the what-if ranking");
  check->add_option("--out", cc.out_path, "write the consistency report here");

  // kb validate / dump
  auto* kb = app.add_subcommand("kb", "knowledge base utilities");
  kb->require_subcommand(1);
  auto* kb_validate = kb->add_subcommand("validate", "check every invariant of a knowledge base");
  kb_validate->add_option("--kb", kb_path, "knowledge base JSON (default: built-in)");
  auto* kb_dump = kb->add_subcommand("dump", "write the built-in reference knowledge base");
  kb_dump->add_option("--out", out_path, "output path (default: stdout)");

  // queens
  auto* queens_cmd = app.add_subcommand("queens", "n-queens smoke domain");
  int queens_n = 100;
  queens_cmd->add_option("--n", queens_n, "board size");
  queens_cmd->add_option("--seed", seed, "run seed");
  queens_cmd->add_option("--out", out_path, "write the report here instead of stdout");
  add_optimizer_flags(queens_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (evaluate->parsed()) return cmd_evaluate(kb_path, plan_path, schedule_path, top_k, out_path);
    if (optimize->parsed()) {
      cfg.seed = seed;
      return cmd_optimize(cfg, kb_path, plan_path, initial_path, initial_seed, out_path, trace_path);
    }
    if (initial->parsed()) return cmd_initial(plan_path, seed, out_path);
    if (bench->parsed())
      return cmd_bench(cfg, kb_path, plan_path, initial_path, initial_seed, batch_seeds, batches,
                       out_dir);
    if (check->parsed()) return cmd_check_config(cc);
    if (kb->parsed()) {
      if (kb_validate->parsed()) return cmd_kb_validate(kb_path);
      if (kb_dump->parsed()) return cmd_kb_dump(out_path);
    }
    if (queens_cmd->parsed()) {
      cfg.seed = seed;
      if (cfg.algorithm == optim::Algorithm::Deepening1 && queens_cmd->count("--algo") == 0)
        cfg.algorithm = optim::Algorithm::RandomHill;
      if (queens_cmd->count("--max-evals") == 0) cfg.max_evaluations = 10000;
      return cmd_queens(queens_n, cfg, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
