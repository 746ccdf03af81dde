#include "tg/coverage.hpp"

#include <algorithm>
#include <cmath>

#include "tg/errors.hpp"

namespace tg {

namespace {

constexpr std::size_t kPeriodicSweepCap = 20000;

// Ever-activated set (source excluded, universe-indexed) of a singleton run.
DynamicBitset singleton_spread(const TemporalGraph& g, Vertex source, int delta,
                               int tau) {
  const int horizon = g.periodic()
                          ? tau + (g.num_vertices() + 1) * g.t_max() * delta
                          : quiet_horizon(g, delta);
  DynamicBitset out(g.num_vertices() - 1);
  Simulator sim(g, source, delta, DynamicsKind::Renewal);
  sim.run({tau}, horizon, [&](int, const CounterState& s) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (v != source && s.counters[v] > 0) out.set(to_universe(v, source));
    return true;
  });
  return out;
}

}  // namespace

CoverageInstance build_spread_coverage(const TemporalGraph& g, Vertex source,
                                       int delta, int budget, long long target) {
  CoverageInstance cov;
  cov.universe_size = g.num_vertices() - 1;
  cov.budget = budget;
  cov.target = target;
  for (int tau = 1; tau <= g.t_max(); ++tau) {
    cov.times.push_back(tau);
    cov.sets.push_back(singleton_spread(g, source, delta, tau));
  }
  return cov;
}

CoverageInstance build_tstep_coverage(const TemporalGraph& g, Vertex source,
                                      int delta, int t_star, int budget,
                                      long long target) {
  if (t_star < 1) throw ValidationError("t_star must be >= 1");
  if (!g.periodic() && t_star > quiet_horizon(g, delta))
    throw ValidationError("t_star past t_max + delta on a non-periodic graph");

  CoverageInstance cov;
  cov.universe_size = g.num_vertices() - 1;
  cov.budget = budget;
  cov.target = target;

  const int last_candidate = g.periodic() ? t_star : g.t_max();
  if (g.periodic() && static_cast<std::size_t>(t_star) > kPeriodicSweepCap)
    throw CapacityError("periodic t_star sweep too large");

  Simulator sim(g, source, delta, DynamicsKind::Renewal);
  for (int tau = 1; tau <= last_candidate; ++tau) {
    DynamicBitset at_t(g.num_vertices() - 1);
    if (tau <= t_star) {
      sim.run({tau}, t_star, [&](int t, const CounterState& s) {
        if (t != t_star) return true;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
          if (v != source && s.counters[v] > 0) at_t.set(to_universe(v, source));
        return true;
      });
    }
    cov.times.push_back(tau);
    cov.sets.push_back(std::move(at_t));
  }
  return cov;
}

GreedyResult greedy_max_coverage(const CoverageInstance& cov) {
  GreedyResult res;
  DynamicBitset covered(cov.universe_size);
  std::vector<char> used(cov.sets.size(), 0);
  const int picks = std::min<std::size_t>(cov.budget, cov.sets.size());
  for (int round = 0; round < picks; ++round) {
    long long best_gain = 0;
    int best = -1;
    for (std::size_t i = 0; i < cov.sets.size(); ++i) {
      if (used[i]) continue;
      long long gain =
          static_cast<long long>(cov.sets[i].count_and_not(covered));
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;  // nothing left adds coverage
    used[best] = 1;
    covered |= cov.sets[best];
    res.chosen_times.push_back(cov.times[best]);
  }
  std::sort(res.chosen_times.begin(), res.chosen_times.end());
  res.covered = static_cast<long long>(covered.count());
  return res;
}

bool meets_greedy_threshold(long long covered, long long target) {
  // covered >= (1 - 1/e) * target, kept in long double to dodge rounding on
  // the integer boundary.
  constexpr long double kFactor = 1.0L - 0.36787944117144232159L;
  return static_cast<long double>(covered) + 1e-9L >=
         kFactor * static_cast<long double>(target);
}

ApproxResult approx_solve(const ProblemInstance& inst) {
  inst.validate();
  if (inst.dynamics != DynamicsKind::Renewal)
    throw UnsupportedError("greedy pipeline needs renewal dynamics");
  if (inst.constraint.kind != ScheduleConstraint::Kind::Unconstrained)
    throw UnsupportedError("greedy pipeline supports unconstrained schedules only");

  const TemporalGraph& g = inst.graph;
  ApproxResult out;

  switch (inst.objective) {
    case Objective::MaxSpread: {
      auto cov = build_spread_coverage(g, inst.source, inst.delta, inst.budget,
                                       inst.target_k.value_or(0));
      auto greedy = greedy_max_coverage(cov);
      out.schedule = greedy.chosen_times;
      out.covered = greedy.covered;
      out.value = eval_max_spread(g, inst.source, inst.delta, out.schedule);
      break;
    }
    case Objective::MaxViralTstep: {
      auto cov = build_tstep_coverage(g, inst.source, inst.delta,
                                      inst.t_star.value(), inst.budget,
                                      inst.target_k.value_or(0));
      auto greedy = greedy_max_coverage(cov);
      out.schedule = greedy.chosen_times;
      out.covered = greedy.covered;
      out.value = eval_max_viral_tstep(g, inst.source, inst.delta, out.schedule,
                                       inst.t_star.value());
      break;
    }
    case Objective::MaxViral: {
      if (g.periodic())
        throw UnsupportedError(
            "periodic max-viral has no bounded t_star sweep; use max-viral-tstep");
      // One singleton simulation per candidate time; every sweep step reads
      // its per-t set out of these traces.
      const int horizon = quiet_horizon(g, inst.delta);
      std::vector<std::vector<DynamicBitset>> at(g.t_max() + 1);
      Simulator sim(g, inst.source, inst.delta, DynamicsKind::Renewal);
      for (int tau = 1; tau <= g.t_max(); ++tau) {
        at[tau].assign(horizon, DynamicBitset(g.num_vertices() - 1));
        sim.run({tau}, horizon, [&](int t, const CounterState& s) {
          for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (v != inst.source && s.counters[v] > 0)
              at[tau][t - 1].set(to_universe(v, inst.source));
          return true;
        });
      }
      GreedyResult best;
      int best_t = 1;
      for (int t_star = 1; t_star <= horizon; ++t_star) {
        CoverageInstance cov;
        cov.universe_size = g.num_vertices() - 1;
        cov.budget = inst.budget;
        cov.target = inst.target_k.value_or(0);
        for (int tau = 1; tau <= g.t_max(); ++tau) {
          cov.times.push_back(tau);
          cov.sets.push_back(at[tau][t_star - 1]);
        }
        auto greedy = greedy_max_coverage(cov);
        if (greedy.covered > best.covered) {
          best = std::move(greedy);
          best_t = t_star;
        }
      }
      out.schedule = best.chosen_times;
      out.covered = best.covered;
      out.chosen_tstar = best_t;
      out.value = eval_max_viral(g, inst.source, inst.delta, out.schedule);
      break;
    }
    case Objective::MinNonViralTime:
      throw UnsupportedError(
          "min-non-viral-time has no coverage approximation; use exact");
  }

  if (inst.target_k && !meets_greedy_threshold(out.covered, *inst.target_k))
    out.target_unreachable = true;
  return out;
}

}  // namespace tg
