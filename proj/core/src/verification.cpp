#include "tg/verification.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "tg/dynamics.hpp"
#include "tg/errors.hpp"
#include "tg/objectives.hpp"
#include "tg/reductions.hpp"
#include "tg/rng.hpp"
#include "tg/solvers.hpp"

namespace tg {

TemporalGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec) {
  std::uniform_int_distribution<int> n_dist(spec.min_n, spec.max_n);
  std::uniform_int_distribution<int> t_dist(1, spec.max_t_max);
  std::uniform_real_distribution<double> d_dist(spec.min_density, spec.max_density);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  const int n = n_dist(rng);
  const int t_max = t_dist(rng);
  const double p = d_dist(rng);
  std::vector<std::tuple<int, int, int>> labeled;
  for (int t = 1; t <= t_max; ++t)
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) labeled.emplace_back(u, v, t);
  return TemporalGraph::build(n, t_max, spec.periodic, labeled);
}

Schedule random_schedule(std::mt19937_64& rng, int t_max, int max_size) {
  std::uniform_int_distribution<int> size_dist(0, max_size);
  int size = size_dist(rng);
  std::vector<int> pool(t_max);
  for (int i = 0; i < t_max; ++i) pool[i] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  Schedule s(pool.begin(), pool.begin() + std::min<std::size_t>(size, pool.size()));
  std::sort(s.begin(), s.end());
  return s;
}

SuiteReport run_union_suite(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.name = "union";
  auto rng = make_stream(opts.seed, "union");
  std::uniform_int_distribution<int> delta_dist(1, 3);
  std::uniform_int_distribution<int> src_dist(0, 1 << 20);

  for (int trial = 0; trial < opts.trials; ++trial) {
    TemporalGraph g = trial == 0 ? sis_comparison_path()
                                 : random_graph(rng, RandomGraphSpec{});
    const int delta = trial == 0 ? 2 : delta_dist(rng);
    const Vertex source = trial == 0 ? 0 : src_dist(rng) % g.num_vertices();
    Schedule schedule = trial == 0 ? Schedule{1, 3}
                                   : random_schedule(rng, g.t_max(), 4);
    const int horizon = quiet_horizon(g, delta);

    // The fault knob swaps in the no-renewal decrement rule for the combined
    // run; the union identity then has to break.
    auto combined = simulate(g, source, delta, schedule, horizon,
                             opts.inject_fault ? DynamicsKind::ClassicSis
                                               : DynamicsKind::Renewal);
    std::vector<DynamicBitset> unions(horizon, DynamicBitset(g.num_vertices()));
    for (int tau : schedule) {
      auto single = simulate(g, source, delta, {tau}, horizon);
      for (int t = 1; t <= horizon; ++t) unions[t - 1] |= single.active[t - 1];
    }
    bool pass = true;
    for (int t = 1; t <= horizon && pass; ++t)
      pass = combined.active[t - 1] == unions[t - 1];
    rep.record(pass, "trial " + std::to_string(trial) +
                         ": combined active set differs from singleton union");
  }
  return rep;
}

SuiteReport run_horizon_suite(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.name = "horizon";
  auto rng = make_stream(opts.seed, "horizon");
  std::uniform_int_distribution<int> delta_dist(1, 3);

  RandomGraphSpec spec;
  spec.max_n = 8;
  spec.max_t_max = 4;
  spec.periodic = true;

  for (int trial = 0; trial < opts.trials; ++trial) {
    TemporalGraph g = random_graph(rng, spec);
    const int delta = delta_dist(rng);
    const Vertex source =
        std::uniform_int_distribution<int>(0, g.num_vertices() - 1)(rng);
    Schedule schedule = random_schedule(rng, g.t_max(), 3);

    const int last = schedule.empty() ? 1 : schedule.back();
    const int settle = last + (g.num_vertices() + 1) * g.t_max() * delta;
    const int extended = settle + 3 * g.t_max() * delta;

    auto ever_at = [&](int horizon) {
      DynamicBitset ever(g.num_vertices());
      Simulator sim(g, source, delta, DynamicsKind::Renewal);
      sim.run(schedule, horizon, [&](int, const CounterState& s) {
        for (Vertex v = 0; v < g.num_vertices(); ++v)
          if (s.counters[v] > 0) ever.set(v);
        return true;
      });
      return ever;
    };
    bool pass = ever_at(settle) == ever_at(extended);
    rep.record(pass, "trial " + std::to_string(trial) +
                         ": new activation past the settle horizon");

    // A transmission outside the first period is a phase-shift of one inside.
    int tau = std::uniform_int_distribution<int>(1, g.t_max())(rng);
    int shift = std::uniform_int_distribution<int>(1, 3)(rng);
    int tau_late = tau + shift * g.t_max();
    auto ever_single = [&](int when) {
      DynamicBitset ever(g.num_vertices());
      Simulator sim(g, source, delta, DynamicsKind::Renewal);
      sim.run({when}, when + (g.num_vertices() + 1) * g.t_max() * delta,
              [&](int, const CounterState& s) {
                for (Vertex v = 0; v < g.num_vertices(); ++v)
                  if (s.counters[v] > 0) ever.set(v);
                return true;
              });
      return ever;
    };
    rep.record(ever_single(tau) == ever_single(tau_late),
               "trial " + std::to_string(trial) +
                   ": late transmission not equivalent to its first-period phase");
  }
  return rep;
}

SuiteReport run_walk_oracle_suite(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.name = "walk-oracle";
  auto rng = make_stream(opts.seed, "walk-oracle");
  std::uniform_int_distribution<int> delta_dist(1, 3);

  RandomGraphSpec spec;
  spec.max_n = 8;
  spec.max_t_max = 6;

  for (int trial = 0; trial < opts.trials; ++trial) {
    TemporalGraph g = random_graph(rng, spec);
    const int delta = delta_dist(rng);
    const Vertex source =
        std::uniform_int_distribution<int>(0, g.num_vertices() - 1)(rng);
    const int horizon = quiet_horizon(g, delta);
    bool pass = true;
    for (int tau = 1; tau <= g.t_max() && pass; ++tau) {
      auto trace = simulate(g, source, delta, {tau}, horizon);
      for (int t = 1; t <= horizon && pass; ++t)
        pass = restless_walk_active(g, source, delta, tau, t) ==
               trace.active[t - 1];
    }
    rep.record(pass, "trial " + std::to_string(trial) +
                         ": oracle set differs from simulated active set");
  }
  return rep;
}

namespace {

std::vector<std::vector<int>> random_sets(std::mt19937_64& rng, int n, int m) {
  std::uniform_int_distribution<int> elem(1, n);
  std::vector<std::vector<int>> sets(m);
  for (auto& s : sets) {
    int size = std::uniform_int_distribution<int>(1, n)(rng);
    for (int i = 0; i < size; ++i) s.push_back(elem(rng));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return sets;
}

VertexCoverInstance random_vc(std::mt19937_64& rng, int n, int budget) {
  VertexCoverInstance vc;
  vc.n = n;
  vc.budget = budget;
  std::vector<int> deg(n + 1, 0);
  int attempts = 3 * n;
  std::uniform_int_distribution<int> pick(1, n);
  while (attempts-- > 0) {
    int u = pick(rng), v = pick(rng);
    if (u == v || deg[u] >= 3 || deg[v] >= 3) continue;
    bool dup = false;
    for (auto [a, b] : vc.edges)
      if ((a == std::min(u, v)) && (b == std::max(u, v))) dup = true;
    if (dup) continue;
    vc.edges.emplace_back(std::min(u, v), std::max(u, v));
    ++deg[u];
    ++deg[v];
  }
  return vc;
}

}  // namespace

namespace {

// One trial, fully determined by (seed, trial); lets the suite shard trials
// across threads without changing its verdicts.
std::pair<bool, std::string> reductions_trial(std::uint64_t seed, int trial) {
  auto rng = make_stream(splitmix64(seed ^ (0x9e3779b97f4a7c15ull *
                                            (static_cast<std::uint64_t>(trial) + 1))),
                         "reductions");
  const int kind = trial % 5;
  std::uniform_int_distribution<int> delta_dist(1, 3);
  const int delta = delta_dist(rng);
  try {
    GeneratedInstance gi;
    switch (kind) {
      case 0: {
        SetCoverInstance sc;
        sc.n = std::uniform_int_distribution<int>(2, 8)(rng);
        sc.sets = random_sets(rng, sc.n, std::uniform_int_distribution<int>(1, 5)(rng));
        sc.budget = std::uniform_int_distribution<int>(1, 3)(rng);
        gi = gen_spread_tree(sc, delta);
        break;
      }
      case 1: {
        SetCoverInstance sc;
        sc.n = std::uniform_int_distribution<int>(2, 4)(rng);
        sc.sets = random_sets(rng, sc.n, std::uniform_int_distribution<int>(1, 3)(rng));
        sc.budget = std::uniform_int_distribution<int>(1, 2)(rng);
        gi = gen_viral_tree(sc, delta, trial % 2 == 0
                                           ? Objective::MaxViral
                                           : Objective::MaxViralTstep);
        break;
      }
      case 2: {
        SetCoverInstance sc;
        sc.n = std::uniform_int_distribution<int>(1, 3)(rng);
        sc.sets = random_sets(rng, sc.n, std::uniform_int_distribution<int>(1, 3)(rng));
        sc.budget = std::uniform_int_distribution<int>(1, 2)(rng);
        gi = gen_minnonviral_tree(sc, delta);
        break;
      }
      case 3: {
        VertexCoverInstance vc = random_vc(
            rng, std::uniform_int_distribution<int>(2, 5)(rng),
            std::uniform_int_distribution<int>(1, 3)(rng));
        if (vc.edges.empty()) vc.edges.emplace_back(1, 2);
        gi = gen_window_star(vc, delta,
                             trial % 2 == 0 ? WindowRegime::Fixed
                                            : WindowRegime::Shifting);
        break;
      }
      default: {
        SetCoverInstance sc;
        sc.n = std::uniform_int_distribution<int>(2, 5)(rng);
        sc.sets = random_sets(rng, sc.n, std::uniform_int_distribution<int>(1, 3)(rng));
        int t_max = std::uniform_int_distribution<int>(2, 4)(rng);
        int d = std::min(delta, t_max - 1);
        sc.budget = std::uniform_int_distribution<int>(
            1, static_cast<int>(sc.sets.size()))(rng);
        gi = gen_periodic_path(sc, d, t_max);
        break;
      }
    }

    // Forward direction: witness schedules were already simulated against
    // the target when the instance was generated. Backward direction:
    // exhaustive search must agree with the certificate.
    SolveOptions sopts;
    SolveResult exact = exact_solve(gi.problem, sopts);
    bool pass = exact.answer.has_value() && *exact.answer == gi.cert.answer;
    return {pass, "trial " + std::to_string(trial) + " (" + gi.reduction +
                      "): certificate " + (gi.cert.answer ? "yes" : "no") +
                      " but exhaustive search says " +
                      (exact.answer && *exact.answer ? "yes" : "no")};
  } catch (const Error& e) {
    return {false,
            "trial " + std::to_string(trial) + ": " + std::string(e.what())};
  }
}

}  // namespace

SuiteReport run_reductions_suite(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.name = "reductions";
  std::vector<std::pair<bool, std::string>> results(opts.trials);
  if (opts.threads > 1) {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (int t = next.fetch_add(1); t < opts.trials; t = next.fetch_add(1))
        results[t] = reductions_trial(opts.seed, t);
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < opts.threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  } else {
    for (int t = 0; t < opts.trials; ++t)
      results[t] = reductions_trial(opts.seed, t);
  }
  for (const auto& [pass, what] : results) rep.record(pass, what);
  return rep;
}

std::vector<SuiteReport> run_suites(const std::string& which,
                                    const SuiteOptions& opts) {
  std::vector<SuiteReport> out;
  if (which == "union" || which == "all") out.push_back(run_union_suite(opts));
  if (which == "horizon" || which == "all") out.push_back(run_horizon_suite(opts));
  if (which == "walk-oracle" || which == "all")
    out.push_back(run_walk_oracle_suite(opts));
  if (which == "reductions" || which == "all")
    out.push_back(run_reductions_suite(opts));
  if (out.empty()) throw ValidationError("unknown suite: " + which);
  return out;
}

}  // namespace tg
