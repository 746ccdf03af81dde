#pragma once

#include <optional>
#include <vector>

#include "tg/bitset.hpp"
#include "tg/objectives.hpp"
#include "tg/temporal_graph.hpp"

namespace tg {

/// Maximum-coverage view of an instance: one candidate set per transmission
/// time, over the universe of vertices other than the source (re-indexed to
/// 0..|V|-2). Covering with b sets is exactly scheduling b transmissions.
struct CoverageInstance {
  int universe_size = 0;
  std::vector<int> times;           // candidate transmission times, ascending
  std::vector<DynamicBitset> sets;  // parallel to times
  int budget = 0;
  long long target = 0;
};

/// Universe re-indexing helpers (source removed).
inline int to_universe(Vertex v, Vertex source) { return v < source ? v : v - 1; }
inline Vertex from_universe(int idx, Vertex source) {
  return idx < source ? idx : idx + 1;
}

/// S_tau = vertices (other than the source) ever activated when transmitting
/// only at tau. Candidates are the first period for periodic graphs, where a
/// singleton run is simulated far enough that no first activation can follow.
CoverageInstance build_spread_coverage(const TemporalGraph& g, Vertex source,
                                       int delta, int budget, long long target);

/// S_tau = vertices (other than the source) active at t_star when
/// transmitting only at tau. For non-periodic graphs candidates are
/// [1, t_max] and t_star may reach t_max + delta (the last step anything can
/// be active); for periodic graphs candidates are [1, t_star].
CoverageInstance build_tstep_coverage(const TemporalGraph& g, Vertex source,
                                      int delta, int t_star, int budget,
                                      long long target);

struct GreedyResult {
  std::vector<int> chosen_times;  // ascending; a valid Schedule
  long long covered = 0;
};

/// Picks sets by maximal marginal gain (ties: smallest time) until the budget
/// is spent or no set adds coverage. When the result covers fewer than
/// (1-1/e)*target elements, no b sets can cover the target.
GreedyResult greedy_max_coverage(const CoverageInstance& cov);

/// covered >= (1 - 1/e) * target, the greedy decision threshold.
bool meets_greedy_threshold(long long covered, long long target);

struct ApproxResult {
  Schedule schedule;
  ObjectiveValue value;  // simulated value of `schedule`
  long long covered = 0; // greedy covered count (coverage space)
  std::optional<int> chosen_tstar;  // max-viral sweep winner
  /// Set when a target k was given and greedy certifies it unreachable.
  bool target_unreachable = false;
};

/// Greedy (1-1/e) pipeline for the three maximization objectives under
/// unconstrained schedules and renewal dynamics. MaxViral runs the t_star
/// pipeline for every t_star in [1, t_max + delta] and keeps the best;
/// periodic max-viral has no bounded sweep and is rejected.
ApproxResult approx_solve(const ProblemInstance& inst);

}  // namespace tg
