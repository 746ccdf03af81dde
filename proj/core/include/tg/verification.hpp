#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tg/temporal_graph.hpp"
#include "tg/types.hpp"

namespace tg {

/// Seeded random-instance helpers shared by the property suites, the test
/// binaries and the bench harness.
struct RandomGraphSpec {
  int min_n = 2;
  int max_n = 10;
  int max_t_max = 8;
  bool periodic = false;
  double min_density = 0.15;
  double max_density = 0.6;
};

TemporalGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec);
Schedule random_schedule(std::mt19937_64& rng, int t_max, int max_size);

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 100;
  int threads = 1;  // trial-level parallelism; results independent of it
  /// Sanity knob for the harness itself: evaluates combined schedules with a
  /// broken renewal rule so the union suite must fail.
  bool inject_fault = false;
};

struct SuiteReport {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few diagnostics

  bool ok() const { return failed == 0; }
  void record(bool pass, const std::string& what) {
    if (pass) {
      ++passed;
    } else {
      ++failed;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

/// active_t(T) equals the union over tau in T of active_t({tau}), at every
/// time step, for renewal dynamics.
SuiteReport run_union_suite(const SuiteOptions& opts);

/// Periodic spread settles: simulating (|V|+1)*t_max*delta steps past the
/// last transmission fixes the ever-activated set, and transmissions outside
/// the first period are phase-shifts of ones inside it.
SuiteReport run_horizon_suite(const SuiteOptions& opts);

/// The restless-walk oracle matches the simulator on every single-transmission
/// schedule and time step.
SuiteReport run_walk_oracle_suite(const SuiteOptions& opts);

/// Generator certificates agree with exhaustive search, both directions.
SuiteReport run_reductions_suite(const SuiteOptions& opts);

std::vector<SuiteReport> run_suites(const std::string& which,
                                    const SuiteOptions& opts);

}  // namespace tg
