#include "tg/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>

#include "tg/errors.hpp"

namespace tg {

const char* to_string(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::Greedy: return "greedy";
    case Method::PeriodicFpt: return "periodic-fpt";
  }
  return "?";
}

namespace {

struct Lite {
  long long excl = -1;
  bool feasible = true;
};

// Per-candidate evaluation without trace materialization. One instance per
// thread; buffers are reused across candidates.
class LiteEvaluator {
 public:
  explicit LiteEvaluator(const ProblemInstance& inst)
      : inst_(inst),
        sim_(inst.graph, inst.source, inst.delta, inst.dynamics),
        ever_(inst.graph.num_vertices(), 0),
        last_active_(inst.graph.num_vertices(), 0) {}

  Lite eval(const Schedule& s) {
    switch (inst_.objective) {
      case Objective::MaxSpread: return eval_spread(s);
      case Objective::MaxViral: return eval_viral(s);
      case Objective::MaxViralTstep: return eval_tstep(s);
      case Objective::MinNonViralTime: return eval_mnvt(s);
    }
    throw Error("unknown objective");
  }

 private:
  int horizon_for(const Schedule& s) const {
    const TemporalGraph& g = inst_.graph;
    if (!g.periodic()) return quiet_horizon(g, inst_.delta);
    // Periodic MaxSpread: no first activation past this bound.
    int last = s.empty() ? 1 : s.back();
    return last + (g.num_vertices() + 1) * g.t_max() * inst_.delta;
  }

  Lite eval_spread(const Schedule& s) {
    std::fill(ever_.begin(), ever_.end(), 0);
    long long count = 0;
    sim_.run(s, horizon_for(s), [&](int, const CounterState& st) {
      for (Vertex v = 0; v < inst_.graph.num_vertices(); ++v)
        if (st.counters[v] > 0 && !ever_[v]) {
          ever_[v] = 1;
          if (v != inst_.source) ++count;
        }
      return true;
    });
    return {count, true};
  }

  Lite eval_viral(const Schedule& s) {
    long long best = 0;
    sim_.run(s, horizon_for(s), [&](int, const CounterState& st) {
      long long here = 0;
      for (Vertex v = 0; v < inst_.graph.num_vertices(); ++v)
        if (st.counters[v] > 0 && v != inst_.source) ++here;
      best = std::max(best, here);
      return true;
    });
    return {best, true};
  }

  Lite eval_tstep(const Schedule& s) {
    const int t_star = inst_.t_star.value();
    long long count = 0;
    sim_.run(s, t_star, [&](int t, const CounterState& st) {
      if (t != t_star) return true;
      for (Vertex v = 0; v < inst_.graph.num_vertices(); ++v)
        if (st.counters[v] > 0 && v != inst_.source) ++count;
      return true;
    });
    return {count, true};
  }

  Lite eval_mnvt(const Schedule& s) {
    const int d = inst_.d_gap.value();
    std::fill(ever_.begin(), ever_.end(), 0);
    std::fill(last_active_.begin(), last_active_.end(), 0);
    long long count = 0;
    bool ok = true;
    sim_.run(s, horizon_for(s), [&](int t, const CounterState& st) {
      for (Vertex v = 0; v < inst_.graph.num_vertices(); ++v) {
        if (st.counters[v] <= 0) continue;
        if (!ever_[v]) {
          ever_[v] = 1;
          if (v != inst_.source) ++count;
        }
        if (v != inst_.source) {
          if (last_active_[v] != 0 && t - last_active_[v] > d + 1) ok = false;
          last_active_[v] = t;
        }
      }
      return true;
    });
    return {count, ok};
  }

  const ProblemInstance& inst_;
  Simulator sim_;
  std::vector<char> ever_;
  std::vector<int> last_active_;
};

struct Best {
  long long value = -1;
  bool have = false;
  Schedule schedule;

  // Lexicographic tie-break keeps results reproducible.
  void offer(long long v, const Schedule& s) {
    if (!have || v > value || (v == value && s < schedule)) {
      have = true;
      value = v;
      schedule = s;
    }
  }
  void merge(const Best& o) {
    if (o.have) offer(o.value, o.schedule);
  }
};

long long binomial_sum_capped(int n, int b, long long cap) {
  long long total = 0, term = 1;
  for (int i = 0; i <= b; ++i) {
    total += term;
    if (total > cap) return cap + 1;
    if (i < b) {
      if (term > (cap + 1) / std::max(1, n - i) + 1) return cap + 1;
      term = term * (n - i) / (i + 1);
    }
  }
  return total;
}

// Candidate transmission times for exhaustive search.
std::vector<int> candidate_times(const ProblemInstance& inst) {
  const TemporalGraph& g = inst.graph;
  int hi = g.t_max();
  if (g.periodic()) {
    if (inst.objective == Objective::MaxSpread) {
      hi = g.t_max();  // transmitting later repeats an earlier phase
    } else if (inst.objective == Objective::MaxViralTstep) {
      hi = inst.t_star.value();  // later transmissions cannot reach t_star
    } else {
      throw UnsupportedError(
          "exhaustive search on periodic graphs supports max-spread and "
          "max-viral-tstep only");
    }
  }
  std::vector<int> times(hi);
  for (int i = 0; i < hi; ++i) times[i] = i + 1;
  return times;
}

// Enumerates unconstrained subsets (sizes 0..budget) of `universe` in
// lexicographic order, each extension of `prefix` starting at `from`.
template <class F>
void dfs_subsets(const std::vector<int>& universe, int budget, Schedule& prefix,
                 std::size_t from, F&& f) {
  f(prefix);
  if (static_cast<int>(prefix.size()) == budget) return;
  for (std::size_t i = from; i < universe.size(); ++i) {
    prefix.push_back(universe[i]);
    dfs_subsets(universe, budget, prefix, i + 1, f);
    prefix.pop_back();
  }
}

template <class F>
void dfs_shifting(int t_max, int budget, int x, int y, Schedule& prefix, F&& f) {
  f(prefix);
  if (static_cast<int>(prefix.size()) == budget) return;
  int lo = prefix.empty() ? 1 : prefix.back() + x;
  int hi = prefix.empty() ? t_max : std::min(prefix.back() + y, t_max);
  for (int tau = lo; tau <= hi; ++tau) {
    prefix.push_back(tau);
    dfs_shifting(t_max, budget, x, y, prefix, f);
    prefix.pop_back();
  }
}

template <class F>
void dfs_windows(const std::vector<std::pair<int, int>>& windows,
                 std::size_t idx, Schedule& prefix, F&& f) {
  if (idx == windows.size()) {
    f(prefix);
    return;
  }
  for (int tau = windows[idx].first; tau <= windows[idx].second; ++tau) {
    prefix.push_back(tau);
    dfs_windows(windows, idx + 1, prefix, f);
    prefix.pop_back();
  }
}

long long count_shifting_capped(int t_max, int budget, int x, int y,
                                long long cap) {
  long long count = 0;
  Schedule prefix;
  bool over = false;
  struct Abort {};
  try {
    dfs_shifting(t_max, budget, x, y, prefix, [&](const Schedule&) {
      if (++count > cap) throw Abort{};
    });
  } catch (const Abort&) {
    over = true;
  }
  return over ? cap + 1 : count;
}

}  // namespace

SolveResult exact_solve(const ProblemInstance& inst, const SolveOptions& opts) {
  inst.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const TemporalGraph& g = inst.graph;

  if (g.periodic() && inst.constraint.kind != ScheduleConstraint::Kind::Unconstrained)
    throw UnsupportedError("window constraints need a finite lifetime");

  SolveResult res;
  res.method = "exact";

  // Enumeration setup per constraint regime, with a counting pass first so
  // oversized instances fail before any work happens.
  std::vector<int> universe;
  std::vector<std::pair<int, int>> windows;
  long long candidates = 0;

  switch (inst.constraint.kind) {
    case ScheduleConstraint::Kind::Unconstrained: {
      universe = candidate_times(inst);
      candidates = binomial_sum_capped(static_cast<int>(universe.size()),
                                       std::min<int>(inst.budget, universe.size()),
                                       opts.candidate_cap);
      break;
    }
    case ScheduleConstraint::Kind::FixedWindow: {
      const int w = inst.constraint.w;
      const int n_windows = (g.t_max() + w - 1) / w;
      if (n_windows > inst.budget)
        throw ValidationError("fixed windows need " + std::to_string(n_windows) +
                              " transmissions, budget is " +
                              std::to_string(inst.budget));
      candidates = 1;
      for (int i = 0; i < n_windows; ++i) {
        int lo = i * w + 1, hi = std::min((i + 1) * w, g.t_max());
        windows.emplace_back(lo, hi);
        candidates *= (hi - lo + 1);
        if (candidates > opts.candidate_cap) break;
      }
      break;
    }
    case ScheduleConstraint::Kind::ShiftingWindow: {
      candidates = count_shifting_capped(g.t_max(), inst.budget,
                                         inst.constraint.x, inst.constraint.y,
                                         opts.candidate_cap);
      break;
    }
  }
  if (candidates > opts.candidate_cap)
    throw CapacityError("schedule enumeration exceeds cap of " +
                        std::to_string(opts.candidate_cap) + " candidates");

  const bool want_feasible = inst.objective == Objective::MinNonViralTime;
  bool any_feasible = false;
  Best best;
  long long explored = 0;

  LiteEvaluator evaluator(inst);

  // Optional union-bound pruning for the coverage-shaped objectives: the
  // value of any extension is at most |covered so far| plus the union of all
  // remaining singleton sets. Only valid under renewal dynamics.
  const bool prunable = opts.prune &&
                        inst.dynamics == DynamicsKind::Renewal &&
                        inst.constraint.kind == ScheduleConstraint::Kind::Unconstrained &&
                        (inst.objective == Objective::MaxSpread ||
                         inst.objective == Objective::MaxViralTstep);
  std::vector<DynamicBitset> singleton, suffix_union;
  if (prunable) {
    CoverageInstance cov =
        inst.objective == Objective::MaxSpread
            ? build_spread_coverage(g, inst.source, inst.delta, inst.budget, 0)
            : build_tstep_coverage(g, inst.source, inst.delta,
                                   inst.t_star.value(), inst.budget, 0);
    singleton = cov.sets;
    suffix_union.assign(universe.size() + 1,
                        DynamicBitset(g.num_vertices() - 1));
    for (int i = static_cast<int>(universe.size()) - 1; i >= 0; --i) {
      suffix_union[i] = suffix_union[i + 1];
      suffix_union[i] |= singleton[i];
    }
  }

  auto consider = [&](const Schedule& s) {
    Lite lite = evaluator.eval(s);
    ++explored;
    if (want_feasible) {
      if (!lite.feasible) return;
      any_feasible = true;
    }
    best.offer(lite.excl, s);
  };

  switch (inst.constraint.kind) {
    case ScheduleConstraint::Kind::Unconstrained: {
      if (prunable) {
        // DFS with the running union; prune when even all remaining sets
        // cannot beat the incumbent.
        DynamicBitset covered(g.num_vertices() - 1);
        Schedule prefix;
        auto rec = [&](auto&& self, std::size_t from) -> void {
          ++explored;
          long long val = static_cast<long long>(covered.count());
          best.offer(val, prefix);
          if (static_cast<int>(prefix.size()) ==
              std::min<int>(inst.budget, universe.size()))
            return;
          for (std::size_t i = from; i < universe.size(); ++i) {
            if (covered.count() + suffix_union[i].count_and_not(covered) <=
                static_cast<std::size_t>(std::max<long long>(best.value, 0)))
              break;  // suffix unions shrink as i grows
            DynamicBitset saved = covered;
            covered |= singleton[i];
            prefix.push_back(universe[i]);
            self(self, i + 1);
            prefix.pop_back();
            covered = saved;
          }
        };
        rec(rec, 0);
        any_feasible = true;
        break;
      }
      const int b = std::min<int>(inst.budget, universe.size());
      if (opts.threads > 1 && universe.size() > 1) {
        // Deterministic parallel split on the first transmission time.
        Schedule empty;
        consider(empty);
        std::vector<std::future<std::pair<Best, long long>>> futs;
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
          Best local;
          long long local_explored = 0;
          LiteEvaluator ev(inst);
          for (std::size_t i = next.fetch_add(1); i < universe.size();
               i = next.fetch_add(1)) {
            Schedule prefix{universe[i]};
            dfs_subsets(universe, b, prefix, i + 1, [&](const Schedule& s) {
              Lite lite = ev.eval(s);
              ++local_explored;
              if (want_feasible && !lite.feasible) return;
              local.offer(lite.excl, s);
            });
          }
          return std::make_pair(local, local_explored);
        };
        for (int w = 0; w < opts.threads; ++w)
          futs.push_back(std::async(std::launch::async, worker));
        bool saw_feasible = false;
        for (auto& f : futs) {
          auto [local, cnt] = f.get();
          explored += cnt;
          if (local.have) saw_feasible = true;
          best.merge(local);
        }
        any_feasible = any_feasible || saw_feasible;
      } else {
        Schedule prefix;
        dfs_subsets(universe, b, prefix, 0, consider);
      }
      break;
    }
    case ScheduleConstraint::Kind::FixedWindow: {
      Schedule prefix;
      dfs_windows(windows, 0, prefix, consider);
      if (explored == 0)
        throw ValidationError("fixed-window constraint admits no schedule");
      break;
    }
    case ScheduleConstraint::Kind::ShiftingWindow: {
      Schedule prefix;
      dfs_shifting(g.t_max(), inst.budget, inst.constraint.x, inst.constraint.y,
                   prefix, consider);
      break;
    }
  }

  res.explored = explored;
  res.any_feasible = want_feasible ? any_feasible : true;
  if (best.have) {
    res.schedule = best.schedule;
    res.value = eval_objective(inst, res.schedule);
  } else {
    res.value = ObjectiveValue{};
    res.value.feasible = false;
  }
  if (inst.target_k)
    res.answer = best.have && res.value.excl_source >= *inst.target_k &&
                 (!want_feasible || res.value.feasible);
  res.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return res;
}

SolveResult periodic_fpt_maxspread(const ProblemInstance& inst,
                                   const SolveOptions& opts) {
  inst.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const TemporalGraph& g = inst.graph;
  if (!g.periodic()) throw ValidationError("periodic-fpt needs a periodic graph");
  if (inst.objective != Objective::MaxSpread)
    throw UnsupportedError("periodic-fpt solves max-spread only");
  if (inst.dynamics != DynamicsKind::Renewal)
    throw UnsupportedError("periodic-fpt relies on renewal dynamics");
  if (inst.constraint.kind != ScheduleConstraint::Kind::Unconstrained)
    throw UnsupportedError("periodic-fpt supports unconstrained schedules only");
  if (g.t_max() > opts.periodic_tmax_cap)
    throw CapacityError("period " + std::to_string(g.t_max()) +
                        " exceeds the enumeration cap of " +
                        std::to_string(opts.periodic_tmax_cap));

  SolveResult res;
  res.method = "periodic-fpt";
  LiteEvaluator evaluator(inst);
  Best best;
  long long explored = 0;

  if (inst.budget >= g.t_max()) {
    // Transmitting at every step of one period dominates everything.
    Schedule all(g.t_max());
    for (int i = 0; i < g.t_max(); ++i) all[i] = i + 1;
    best.offer(evaluator.eval(all).excl, all);
    explored = 1;
  } else {
    std::vector<int> universe(g.t_max());
    for (int i = 0; i < g.t_max(); ++i) universe[i] = i + 1;
    Schedule prefix;
    dfs_subsets(universe, inst.budget, prefix, 0, [&](const Schedule& s) {
      if (static_cast<int>(s.size()) != inst.budget) return;  // maximal only
      best.offer(evaluator.eval(s).excl, s);
      ++explored;
    });
  }

  res.explored = explored;
  res.schedule = best.schedule;
  res.value = eval_max_spread(g, inst.source, inst.delta, res.schedule);
  if (inst.target_k) res.answer = res.value.excl_source >= *inst.target_k;
  res.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return res;
}

SolveResult solve(const ProblemInstance& inst, Method method,
                  const SolveOptions& opts) {
  switch (method) {
    case Method::Exact:
      return exact_solve(inst, opts);
    case Method::PeriodicFpt:
      return periodic_fpt_maxspread(inst, opts);
    case Method::Greedy: {
      const auto t0 = std::chrono::steady_clock::now();
      ApproxResult a = approx_solve(inst);
      SolveResult res;
      res.method = "greedy";
      res.schedule = a.schedule;
      res.value = a.value;
      res.covered = a.covered;
      res.greedy_tstar = a.chosen_tstar;
      res.target_unreachable = a.target_unreachable;
      res.explored = 1;
      if (inst.target_k)
        res.answer = res.value.excl_source >= *inst.target_k;
      res.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
      return res;
    }
  }
  throw Error("unknown method");
}

}  // namespace tg
