#pragma once

#include <optional>
#include <string>

#include "tg/coverage.hpp"
#include "tg/objectives.hpp"
#include "tg/temporal_graph.hpp"

namespace tg {

enum class Method { Exact, Greedy, PeriodicFpt };

struct SolveOptions {
  long long candidate_cap = 10'000'000;  // exhaustive-search guard
  int threads = 1;
  /// Union-bound pruning for exhaustive max-spread / max-viral-tstep search.
  /// Sound only for renewal dynamics; kept off where exact_solve serves as
  /// the independent oracle.
  bool prune = false;
  int periodic_tmax_cap = 22;  // 2^t_max enumeration guard
};

struct SolveResult {
  std::string method;
  Schedule schedule;
  ObjectiveValue value;
  long long explored = 0;  // candidate schedules evaluated
  double wall_ms = 0.0;
  /// value.excl_source >= target_k; present when the instance carries a target.
  std::optional<bool> answer;
  /// Greedy extras.
  long long covered = -1;
  std::optional<int> greedy_tstar;
  bool target_unreachable = false;
  /// MinNonViralTime: whether any enumerated schedule was gap-feasible.
  bool any_feasible = true;
};

/// Enumerates every constraint-valid schedule of size <= budget and keeps the
/// best by (source-free value, lexicographically smallest schedule). For
/// MinNonViralTime only gap-feasible schedules compete. Candidate times are
/// [1, t_max]; on periodic graphs [1, t_max] for MaxSpread (transmitting
/// later is equivalent to transmitting one period earlier) and [1, t_star]
/// for MaxViralTstep. Throws CapacityError past opts.candidate_cap.
SolveResult exact_solve(const ProblemInstance& inst, const SolveOptions& opts = {});

/// Exact periodic MaxSpread: all size-min(budget, t_max) subsets of the first
/// period, each simulated (|V|+1)*t_max*delta steps past its last
/// transmission, after which no first activation can occur.
SolveResult periodic_fpt_maxspread(const ProblemInstance& inst,
                                   const SolveOptions& opts = {});

/// Dispatch by method; greedy routes through the coverage pipeline.
SolveResult solve(const ProblemInstance& inst, Method method,
                  const SolveOptions& opts = {});

const char* to_string(Method m);

}  // namespace tg
