#include <iostream>
#include <memory>
#include <thread>

#include "common.hpp"
#include "tg/errors.hpp"

namespace tgim {

nlohmann::json result_json(const tg::ProblemInstance& inst,
                           const tg::SolveResult& res, bool with_answer) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["method"] = res.method;
  j["objective"] = tg::to_string(inst.objective);
  j["source"] = inst.source;
  j["delta"] = inst.delta;
  j["budget"] = inst.budget;
  j["constraint"] = tg::to_string(inst.constraint);
  j["dynamics"] = tg::to_string(inst.dynamics);
  j["schedule"] = res.schedule;
  j["value_incl"] = res.value.incl_source;
  j["value_excl"] = res.value.excl_source;
  j["feasible"] = res.value.feasible;
  j["explored"] = res.explored;
  j["wall_ms"] = res.wall_ms;
  if (res.value.witness_time) j["witness_time"] = *res.value.witness_time;
  if (!res.value.witness_vertices.empty())
    j["witness_vertices"] = res.value.witness_vertices;
  if (inst.t_star) j["t_star"] = *inst.t_star;
  if (inst.d_gap) j["d_gap"] = *inst.d_gap;
  if (res.covered >= 0) j["covered"] = res.covered;
  if (res.greedy_tstar) j["tstar_chosen"] = *res.greedy_tstar;
  if (res.method == "greedy") j["target_unreachable"] = res.target_unreachable;
  if (!res.any_feasible) j["any_feasible"] = false;
  if (with_answer) {
    j["k"] = inst.target_k.value_or(0);
    j["answer"] = res.answer.value_or(false);
  }
  return j;
}

}  // namespace tgim

namespace {

struct SolveArgs {
  std::string graph;
  int source = 0;
  int delta = 1;
  std::string objective;
  int budget = 0;
  long long k = -1;
  int tstep = 0;
  int dgap = 0;
  std::string window;
  std::string method = "exact";
  std::string dynamics = "renewal";
  int threads = 0;  // 0: use all available cores
  long long cap = 10'000'000;
};

void run_solve(const SolveArgs& args) {
  tg::ProblemInstance inst;
  inst.graph = tg::load_tgft(args.graph);
  inst.source = args.source;
  inst.delta = args.delta;
  inst.budget = args.budget;
  inst.constraint = tgim::parse_constraint(args.window);
  if (args.k >= 0) inst.target_k = args.k;

  if (args.objective == "max-spread") {
    inst.objective = tg::Objective::MaxSpread;
  } else if (args.objective == "max-viral") {
    inst.objective = tg::Objective::MaxViral;
  } else if (args.objective == "max-viral-tstep") {
    inst.objective = tg::Objective::MaxViralTstep;
    if (args.tstep < 1)
      throw tg::ValidationError("max-viral-tstep needs --tstep");
    inst.t_star = args.tstep;
  } else if (args.objective == "min-non-viral-time") {
    inst.objective = tg::Objective::MinNonViralTime;
    if (args.dgap < 1)
      throw tg::ValidationError("min-non-viral-time needs --dgap");
    inst.d_gap = args.dgap;
  } else {
    throw tg::ValidationError("unknown objective: " + args.objective);
  }

  if (args.dynamics == "renewal") {
    inst.dynamics = tg::DynamicsKind::Renewal;
  } else if (args.dynamics == "sis") {
    inst.dynamics = tg::DynamicsKind::ClassicSis;
  } else {
    throw tg::ValidationError("unknown dynamics: " + args.dynamics);
  }

  tg::Method method;
  if (args.method == "exact") {
    method = tg::Method::Exact;
  } else if (args.method == "greedy") {
    method = tg::Method::Greedy;
  } else if (args.method == "periodic-fpt") {
    method = tg::Method::PeriodicFpt;
  } else {
    throw tg::ValidationError("unknown method: " + args.method);
  }

  tg::SolveOptions opts;
  opts.candidate_cap = args.cap;
  opts.threads = args.threads > 0
                     ? args.threads
                     : std::max(1u, std::thread::hardware_concurrency());

  tg::SolveResult res = tg::solve(inst, method, opts);
  std::cout << tgim::result_json(inst, res, args.k >= 0).dump(2) << '\n';
}

}  // namespace

void setup_solve(CLI::App& app) {
  auto args = std::make_shared<SolveArgs>();
  CLI::App* cmd = app.add_subcommand("solve", "Optimize a transmission schedule");
  cmd->add_option("--graph", args->graph, "TGF-T file")->required();
  cmd->add_option("--source", args->source, "source vertex id")->required();
  cmd->add_option("--delta", args->delta, "counter value")->required();
  cmd->add_option("--objective", args->objective,
                  "max-spread|max-viral|max-viral-tstep|min-non-viral-time")
      ->required();
  cmd->add_option("--budget", args->budget, "transmission budget")->required();
  cmd->add_option("--k", args->k, "decision target (source excluded)");
  cmd->add_option("--tstep", args->tstep, "t* for max-viral-tstep");
  cmd->add_option("--dgap", args->dgap, "d for min-non-viral-time");
  cmd->add_option("--window", args->window, "fixed:W or shifting:X,Y");
  cmd->add_option("--method", args->method, "exact|greedy|periodic-fpt");
  cmd->add_option("--dynamics", args->dynamics, "renewal|sis");
  cmd->add_option("--threads", args->threads, "worker threads (default: all cores)");
  cmd->add_option("--cap", args->cap, "candidate enumeration cap");
  cmd->callback([args]() { run_solve(*args); });
}
