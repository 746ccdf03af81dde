#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tg/dynamics.hpp"
#include "tg/temporal_graph.hpp"
#include "tg/types.hpp"

namespace tg {

/// Result of evaluating one (schedule, instance) pair. Counts are reported
/// both with and without the source; solver comparisons and targets use the
/// source-free count throughout.
struct ObjectiveValue {
  long long incl_source = 0;
  long long excl_source = 0;
  /// Smallest time step attaining the source-free count (peak objectives).
  std::optional<int> witness_time;
  /// Ever-activated vertices (spread objectives).
  std::vector<Vertex> witness_vertices;
  /// Gap constraint satisfied (always true outside min-non-viral-time).
  bool feasible = true;
};

ObjectiveValue eval_max_spread(const TemporalGraph& g, Vertex source, int delta,
                               const Schedule& schedule,
                               DynamicsKind kind = DynamicsKind::Renewal);

ObjectiveValue eval_max_viral(const TemporalGraph& g, Vertex source, int delta,
                              const Schedule& schedule,
                              DynamicsKind kind = DynamicsKind::Renewal);

ObjectiveValue eval_max_viral_tstep(const TemporalGraph& g, Vertex source,
                                    int delta, const Schedule& schedule,
                                    int t_star,
                                    DynamicsKind kind = DynamicsKind::Renewal);

/// Value counts every ever-activated vertex; `feasible` reports whether no
/// vertex other than the source, once activated, ever sits inactive for more
/// than d_gap consecutive steps between two of its active steps. Trailing
/// inactivity after the last activation is not constrained.
ObjectiveValue eval_min_non_viral_time(const TemporalGraph& g, Vertex source,
                                       int delta, const Schedule& schedule,
                                       int d_gap,
                                       DynamicsKind kind = DynamicsKind::Renewal);

/// Dispatches on instance.objective.
ObjectiveValue eval_objective(const ProblemInstance& inst, const Schedule& schedule);

/// Consecutive-pair gap rule used by min-non-viral-time: active steps
/// a_{i+1} - a_i <= d_gap + 1, i.e. at most d_gap inactive steps in between.
bool gaps_within(const std::vector<int>& active_steps, int d_gap);

struct ConstraintCheck {
  bool ok = true;
  std::string violation;  // empty when ok
};

/// fixed_window(w): exactly one transmission in each width-w block of
/// [1, t_max]. shifting_window(x, y): consecutive transmissions between x and
/// y steps apart. All regimes also enforce |schedule| <= budget.
ConstraintCheck check_schedule_constraint(const Schedule& schedule,
                                          const ScheduleConstraint& constraint,
                                          int t_max, int budget);

}  // namespace tg
