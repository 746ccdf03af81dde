#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tg/bitset.hpp"
#include "tg/temporal_graph.hpp"
#include "tg/types.hpp"

namespace tg {

/// Per-vertex counters at one time step. A vertex is active iff its counter
/// is positive; counters live in [0, delta].
struct CounterState {
  std::vector<int> counters;
  int time = 1;

  bool active(Vertex v) const { return counters[v] > 0; }
};

/// Runs one deterministic spreading process over a shared immutable graph.
/// Each Simulator instance owns scratch buffers, so use one per thread.
class Simulator {
 public:
  Simulator(const TemporalGraph& g, Vertex source, int delta,
            DynamicsKind kind = DynamicsKind::Renewal)
      : g_(&g), source_(source), delta_(delta), kind_(kind) {}

  /// State at time step 1 under the given schedule.
  CounterState initial(const Schedule& schedule) const;

  /// Advances `state` from its current time step t to t+1 using the edge set
  /// E_t. `transmit_next` says whether the source transmits at t+1.
  void step(CounterState& state, bool transmit_next) const;

  /// Streams states at t = 1..horizon into `visit(t, state)`. Stops early if
  /// `visit` returns false.
  void run(const Schedule& schedule, int horizon,
           const std::function<bool(int, const CounterState&)>& visit) const;

  const TemporalGraph& graph() const { return *g_; }
  Vertex source() const { return source_; }
  int delta() const { return delta_; }
  DynamicsKind kind() const { return kind_; }

 private:
  const TemporalGraph* g_;
  Vertex source_;
  int delta_;
  DynamicsKind kind_;
  mutable std::vector<char> renew_;  // scratch
};

/// Full per-step record of one run.
struct SimulationTrace {
  int horizon = 0;
  std::vector<DynamicBitset> active;               // index t-1 -> active set
  std::vector<std::vector<int>> activation_lists;  // A_v: ordered active steps

  bool active_at(int t, Vertex v) const { return active[t - 1].test(v); }
};

/// Simulates time steps 1..horizon and materializes the whole trace.
/// Non-periodic graphs have empty edge sets past t_max, so any horizon up to
/// t_max + delta is meaningful; beyond that every counter is already zero.
SimulationTrace simulate(const TemporalGraph& g, Vertex source, int delta,
                         const Schedule& schedule, int horizon,
                         DynamicsKind kind = DynamicsKind::Renewal);

/// Largest time step at which anything can still be active on a non-periodic
/// graph: the last edge set is at t_max and a vertex activated by it stays
/// active through t_max + delta.
inline int quiet_horizon(const TemporalGraph& g, int delta) {
  return g.t_max() + delta;
}

/// Eventually-periodic decomposition of a run on a periodic graph: states at
/// times >= cycle_start repeat with period cycle_length. The prefix trace
/// covers [1, cycle_start + cycle_length - 1], enough to answer any per-step
/// query by index arithmetic.
struct PeriodicRun {
  SimulationTrace prefix;
  int cycle_start = 0;
  int cycle_length = 0;

  /// Maps an arbitrary time step onto the materialized prefix.
  int fold_time(long long t) const {
    if (t < cycle_start) return static_cast<int>(t);
    return cycle_start + static_cast<int>((t - cycle_start) % cycle_length);
  }
};

struct CycleOptions {
  std::size_t max_states = 1u << 20;  // stored (counter vector, phase) pairs
};

/// Runs a schedule on a periodic graph until the first repeated
/// (counter vector, phase) pair after the last transmission, where the phase
/// is (t-1) mod t_max. Throws CapacityError when the state hash outgrows the
/// configured cap.
PeriodicRun simulate_periodic(const TemporalGraph& g, Vertex source, int delta,
                              const Schedule& schedule,
                              DynamicsKind kind = DynamicsKind::Renewal,
                              const CycleOptions& opts = {});

/// Independent reachability oracle for single-transmission schedules.
/// Returns the set of vertices active at time step t when the source
/// transmits only at tau: a vertex (other than the source) is active at t iff
/// some temporal walk from the source reaches it whose first edge label lies
/// in [tau, tau+delta-1], consecutive labels increase by 1..delta, and whose
/// activation time (last label + 1) lies in (t-delta, t]. Computed by a
/// label-graph BFS that never steps through the simulator.
DynamicBitset restless_walk_active(const TemporalGraph& g, Vertex source,
                                   int delta, int tau, int t);

}  // namespace tg
