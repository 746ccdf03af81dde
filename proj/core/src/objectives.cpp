#include "tg/objectives.hpp"

#include <algorithm>

#include "tg/errors.hpp"

namespace tg {

namespace {

// Streams active sets over [1, horizon] without materializing a trace.
template <class Visit>
void fold_active(const TemporalGraph& g, Vertex source, int delta,
                 const Schedule& schedule, int horizon, DynamicsKind kind,
                 Visit&& visit) {
  validate_schedule(schedule, g);
  Simulator sim(g, source, delta, kind);
  sim.run(schedule, horizon, [&](int t, const CounterState& s) {
    visit(t, s);
    return true;
  });
}

int nonperiodic_horizon(const TemporalGraph& g, int delta) {
  return quiet_horizon(g, delta);
}

}  // namespace

ObjectiveValue eval_max_spread(const TemporalGraph& g, Vertex source, int delta,
                               const Schedule& schedule, DynamicsKind kind) {
  DynamicBitset ever(g.num_vertices());
  if (g.periodic()) {
    PeriodicRun run = simulate_periodic(g, source, delta, schedule, kind);
    for (const auto& bits : run.prefix.active) ever |= bits;
  } else {
    fold_active(g, source, delta, schedule, nonperiodic_horizon(g, delta), kind,
                [&](int, const CounterState& s) {
                  for (Vertex v = 0; v < g.num_vertices(); ++v)
                    if (s.counters[v] > 0) ever.set(v);
                });
  }
  ObjectiveValue out;
  out.incl_source = static_cast<long long>(ever.count());
  out.excl_source = out.incl_source - (ever.test(source) ? 1 : 0);
  out.witness_vertices = ever.to_vector();
  return out;
}

ObjectiveValue eval_max_viral(const TemporalGraph& g, Vertex source, int delta,
                              const Schedule& schedule, DynamicsKind kind) {
  ObjectiveValue out;
  auto consider = [&](int t, long long incl, long long excl) {
    if (excl > out.excl_source) {
      out.excl_source = excl;
      out.witness_time = t;
    }
    out.incl_source = std::max(out.incl_source, incl);
  };
  if (g.periodic()) {
    PeriodicRun run = simulate_periodic(g, source, delta, schedule, kind);
    for (int t = 1; t <= run.prefix.horizon; ++t) {
      long long incl = static_cast<long long>(run.prefix.active[t - 1].count());
      consider(t, incl, incl - (run.prefix.active[t - 1].test(source) ? 1 : 0));
    }
  } else {
    fold_active(g, source, delta, schedule, nonperiodic_horizon(g, delta), kind,
                [&](int t, const CounterState& s) {
                  long long incl = 0;
                  bool src = false;
                  for (Vertex v = 0; v < g.num_vertices(); ++v)
                    if (s.counters[v] > 0) {
                      ++incl;
                      if (v == source) src = true;
                    }
                  consider(t, incl, incl - (src ? 1 : 0));
                });
  }
  if (!out.witness_time) out.witness_time = 1;  // all-empty run
  return out;
}

ObjectiveValue eval_max_viral_tstep(const TemporalGraph& g, Vertex source,
                                    int delta, const Schedule& schedule,
                                    int t_star, DynamicsKind kind) {
  if (t_star < 1) throw ValidationError("t_star must be >= 1");
  if (!g.periodic() && t_star > g.t_max())
    throw ValidationError("t_star past lifetime of a non-periodic graph");

  ObjectiveValue out;
  out.witness_time = t_star;
  if (g.periodic()) {
    // Transmissions after t_star cannot matter; drop them before the cycle
    // search so the run closes early.
    Schedule trimmed;
    for (int tau : schedule)
      if (tau <= t_star) trimmed.push_back(tau);
    PeriodicRun run = simulate_periodic(g, source, delta, trimmed, kind);
    int t = t_star <= run.prefix.horizon ? t_star : run.fold_time(t_star);
    const auto& bits = run.prefix.active[t - 1];
    out.incl_source = static_cast<long long>(bits.count());
    out.excl_source = out.incl_source - (bits.test(source) ? 1 : 0);
  } else {
    fold_active(g, source, delta, schedule, t_star, kind,
                [&](int t, const CounterState& s) {
                  if (t != t_star) return;
                  for (Vertex v = 0; v < g.num_vertices(); ++v)
                    if (s.counters[v] > 0) {
                      ++out.incl_source;
                      if (v != source) ++out.excl_source;
                    }
                });
  }
  return out;
}

bool gaps_within(const std::vector<int>& active_steps, int d_gap) {
  for (std::size_t i = 1; i < active_steps.size(); ++i)
    if (active_steps[i] - active_steps[i - 1] > d_gap + 1) return false;
  return true;
}

ObjectiveValue eval_min_non_viral_time(const TemporalGraph& g, Vertex source,
                                       int delta, const Schedule& schedule,
                                       int d_gap, DynamicsKind kind) {
  if (d_gap < 1) throw ValidationError("d_gap must be >= 1");
  ObjectiveValue out;
  DynamicBitset ever(g.num_vertices());

  if (g.periodic()) {
    PeriodicRun run = simulate_periodic(g, source, delta, schedule, kind);
    for (const auto& bits : run.prefix.active) ever |= bits;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (v == source) continue;
      const auto& steps = run.prefix.activation_lists[v];
      if (steps.empty()) continue;
      if (!gaps_within(steps, d_gap)) {
        out.feasible = false;
        break;
      }
      // A vertex active inside the cycle repeats forever; the gap that wraps
      // from one period into the next must also fit.
      auto first_in_cycle =
          std::lower_bound(steps.begin(), steps.end(), run.cycle_start);
      if (first_in_cycle != steps.end()) {
        int wrap = *first_in_cycle + run.cycle_length - steps.back();
        if (wrap > d_gap + 1) {
          out.feasible = false;
          break;
        }
      }
    }
  } else {
    const int horizon = nonperiodic_horizon(g, delta);
    std::vector<int> last_active(g.num_vertices(), 0);
    bool ok = true;
    fold_active(g, source, delta, schedule, horizon, kind,
                [&](int t, const CounterState& s) {
                  for (Vertex v = 0; v < g.num_vertices(); ++v) {
                    if (s.counters[v] <= 0) continue;
                    ever.set(v);
                    if (v != source && last_active[v] != 0 &&
                        t - last_active[v] > d_gap + 1)
                      ok = false;
                    last_active[v] = t;
                  }
                });
    out.feasible = ok;
  }

  out.incl_source = static_cast<long long>(ever.count());
  out.excl_source = out.incl_source - (ever.test(source) ? 1 : 0);
  out.witness_vertices = ever.to_vector();
  return out;
}

ObjectiveValue eval_objective(const ProblemInstance& inst, const Schedule& schedule) {
  switch (inst.objective) {
    case Objective::MaxSpread:
      return eval_max_spread(inst.graph, inst.source, inst.delta, schedule,
                             inst.dynamics);
    case Objective::MaxViral:
      return eval_max_viral(inst.graph, inst.source, inst.delta, schedule,
                            inst.dynamics);
    case Objective::MaxViralTstep:
      return eval_max_viral_tstep(inst.graph, inst.source, inst.delta, schedule,
                                  inst.t_star.value(), inst.dynamics);
    case Objective::MinNonViralTime:
      return eval_min_non_viral_time(inst.graph, inst.source, inst.delta,
                                     schedule, inst.d_gap.value(), inst.dynamics);
  }
  throw Error("unknown objective");
}

ConstraintCheck check_schedule_constraint(const Schedule& schedule,
                                          const ScheduleConstraint& constraint,
                                          int t_max, int budget) {
  if (static_cast<int>(schedule.size()) > budget)
    return {false, "schedule uses " + std::to_string(schedule.size()) +
                       " transmissions, budget is " + std::to_string(budget)};

  switch (constraint.kind) {
    case ScheduleConstraint::Kind::Unconstrained:
      return {};
    case ScheduleConstraint::Kind::FixedWindow: {
      const int w = constraint.w;
      const int windows = (t_max + w - 1) / w;
      if (windows > budget)
        return {false, "fixed windows need " + std::to_string(windows) +
                           " transmissions, budget is " + std::to_string(budget)};
      std::vector<int> per_window(windows, 0);
      for (int tau : schedule) {
        if (tau < 1 || tau > t_max)
          return {false, "transmission " + std::to_string(tau) + " outside [1," +
                             std::to_string(t_max) + "]"};
        ++per_window[(tau - 1) / w];
      }
      for (int i = 0; i < windows; ++i)
        if (per_window[i] != 1)
          return {false, "window [" + std::to_string(i * w + 1) + "," +
                             std::to_string(std::min((i + 1) * w, t_max)) +
                             "] has " + std::to_string(per_window[i]) +
                             " transmissions, needs exactly 1"};
      return {};
    }
    case ScheduleConstraint::Kind::ShiftingWindow: {
      for (std::size_t i = 1; i < schedule.size(); ++i) {
        int gap = schedule[i] - schedule[i - 1];
        if (gap < constraint.x || gap > constraint.y)
          return {false, "gap " + std::to_string(gap) + " between " +
                             std::to_string(schedule[i - 1]) + " and " +
                             std::to_string(schedule[i]) + " outside [" +
                             std::to_string(constraint.x) + "," +
                             std::to_string(constraint.y) + "]"};
      }
      return {};
    }
  }
  return {};
}

}  // namespace tg
