#include <iostream>
#include <memory>
#include <thread>

#include "common.hpp"
#include "tg/verification.hpp"

namespace {

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  int trials = 100;
  int threads = 0;
  bool inject_fault = false;
};

void run_verify(const VerifyArgs& args) {
  tg::SuiteOptions opts;
  opts.seed = args.seed;
  opts.trials = args.trials;
  opts.threads = args.threads > 0
                     ? args.threads
                     : std::max(1u, std::thread::hardware_concurrency());
  opts.inject_fault = args.inject_fault;

  bool all_ok = true;
  for (const auto& rep : tg::run_suites(args.suite, opts)) {
    std::cout << "suite " << rep.name << ": " << rep.passed << "/"
              << (rep.passed + rep.failed) << " passed\n";
    for (const auto& f : rep.failures) std::cout << "  FAIL " << f << "\n";
    all_ok = all_ok && rep.ok();
  }
  if (!all_ok) throw CheckFailed{};
}

}  // namespace

void setup_verify(CLI::App& app) {
  auto args = std::make_shared<VerifyArgs>();
  CLI::App* cmd = app.add_subcommand(
      "verify", "Run the randomized property suites against the implementation");
  cmd->add_option("--suite", args->suite,
                  "union|horizon|walk-oracle|reductions|all");
  cmd->add_option("--seed", args->seed, "PRNG seed");
  cmd->add_option("--trials", args->trials, "trials per suite");
  cmd->add_option("--threads", args->threads, "trial workers (default: all cores)");
  cmd->add_flag("--inject-fault", args->inject_fault,
                "use a broken renewal rule; the union suite must then fail");
  cmd->callback([args]() { run_verify(*args); });
}
