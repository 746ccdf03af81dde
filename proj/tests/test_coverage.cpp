#include <doctest.h>

#include "tg/coverage.hpp"
#include "tg/reductions.hpp"
#include "tg/rng.hpp"
#include "tg/solvers.hpp"
#include "tg/verification.hpp"

using namespace tg;

namespace {

CoverageInstance toy_instance(std::vector<std::vector<int>> sets, int budget) {
  CoverageInstance cov;
  cov.universe_size = 0;
  for (const auto& s : sets)
    for (int e : s) cov.universe_size = std::max(cov.universe_size, e + 1);
  cov.budget = budget;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    cov.times.push_back(static_cast<int>(i + 1));
    DynamicBitset bits(cov.universe_size);
    for (int e : sets[i]) bits.set(e);
    cov.sets.push_back(std::move(bits));
  }
  return cov;
}

long long brute_force_coverage(const CoverageInstance& cov) {
  long long best = 0;
  const int m = static_cast<int>(cov.sets.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (__builtin_popcount(mask) > cov.budget) continue;
    DynamicBitset u(cov.universe_size);
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) u |= cov.sets[i];
    best = std::max(best, static_cast<long long>(u.count()));
  }
  return best;
}

}  // namespace

TEST_CASE("greedy on empty sets covers nothing") {
  auto cov = toy_instance({{}, {}, {}}, 2);
  auto res = greedy_max_coverage(cov);
  CHECK(res.covered == 0);
  CHECK(res.chosen_times.empty());
}

TEST_CASE("greedy picks the classic example") {
  auto cov = toy_instance({{1, 2, 3}, {3, 4}, {4, 5}}, 2);
  auto res = greedy_max_coverage(cov);
  CHECK(res.covered == 5);
  CHECK(res.chosen_times == std::vector<int>{1, 3});
  CHECK(brute_force_coverage(cov) == 5);
}

TEST_CASE("greedy with a spare budget covers the whole union") {
  auto cov = toy_instance({{1, 2}, {2, 3}, {1}}, 5);
  auto res = greedy_max_coverage(cov);
  CHECK(res.covered == 3);
}

TEST_CASE("greedy is deterministic") {
  auto cov = toy_instance({{1, 2}, {3, 4}, {1, 3}}, 2);
  auto a = greedy_max_coverage(cov);
  auto b = greedy_max_coverage(cov);
  CHECK(a.chosen_times == b.chosen_times);
  CHECK(a.chosen_times == std::vector<int>{1, 2});  // smallest time on ties
}

TEST_CASE("spread sets: edgeless graph and one-label star") {
  auto edgeless = parse_tgft("tgf 1\n4 3\n");
  auto cov = build_spread_coverage(edgeless, 0, 2, 2, 0);
  for (const auto& s : cov.sets) CHECK(s.count() == 0);

  auto star = parse_tgft("tgf 1\n4 3\ne 0 1 1\ne 0 2 1\ne 0 3 1\n");
  auto scov = build_spread_coverage(star, 0, 2, 2, 0);
  CHECK(scov.sets[0].count() == 3);
  CHECK(scov.sets[1].count() == 0);  // no edge is live while s is active
  CHECK(scov.sets[2].count() == 0);
}

TEST_CASE("spread sets mirror the set family on generated trees") {
  SetCoverInstance sc{8, {{1, 2, 3}, {3, 7, 8}, {4, 5, 6}}, 3};
  auto gi = gen_spread_tree(sc, 3);
  const auto& g = gi.problem.graph;
  auto cov = build_spread_coverage(g, 0, 3, 3, 0);
  for (int j = 1; j <= 3; ++j) {
    const int wave = (j - 1) * 4 + 1;
    const auto& set = cov.sets[wave - 1];
    for (int i = 1; i <= 8; ++i) {
      // Pendant leaf ids sit after the 15 tree vertices.
      int y = 15 + i - 1;
      bool member = std::find(sc.sets[j - 1].begin(), sc.sets[j - 1].end(),
                              i) != sc.sets[j - 1].end();
      CHECK(set.test(to_universe(y, 0)) == member);
    }
  }
}

TEST_CASE("edgeless instances solve to an empty-effect schedule") {
  ProblemInstance inst;
  inst.graph = parse_tgft("tgf 1\n5 4\n");
  inst.source = 2;
  inst.delta = 2;
  inst.budget = 2;
  for (Objective obj :
       {Objective::MaxSpread, Objective::MaxViral, Objective::MaxViralTstep}) {
    inst.objective = obj;
    inst.t_star = obj == Objective::MaxViralTstep ? std::optional<int>(2)
                                                  : std::nullopt;
    auto res = approx_solve(inst);
    CHECK(res.value.excl_source == 0);
    CHECK(res.covered == 0);
    CHECK(res.schedule.empty());
  }
}

TEST_CASE("tstep sets: nothing can be active at step one") {
  auto g = parse_tgft("tgf 1\n3 4\ne 0 1 2\n");
  auto cov = build_tstep_coverage(g, 0, 2, 1, 2, 0);
  for (const auto& s : cov.sets) CHECK(s.count() == 0);

  auto one = build_tstep_coverage(g, 0, 2, 3, 2, 0);
  CHECK(one.sets[2 - 1].test(to_universe(1, 0)));  // transmit at 2, alive at 3
}

TEST_CASE("coverage unions equal simulated values") {
  auto rng = make_stream(77, "coverage-consistency");
  RandomGraphSpec spec;
  spec.max_n = 8;
  spec.max_t_max = 6;
  for (int trial = 0; trial < 30; ++trial) {
    TemporalGraph g = random_graph(rng, spec);
    int delta = 1 + static_cast<int>(rng() % 3);
    Vertex source = static_cast<Vertex>(rng() % g.num_vertices());
    auto cov = build_spread_coverage(g, source, delta, 4, 0);
    int t_star = 1 + static_cast<int>(rng() % g.t_max());
    auto tcov = build_tstep_coverage(g, source, delta, t_star, 4, 0);

    Schedule sched = random_schedule(rng, g.t_max(), 4);
    DynamicBitset u(g.num_vertices() - 1), tu(g.num_vertices() - 1);
    for (int tau : sched) {
      u |= cov.sets[tau - 1];
      tu |= tcov.sets[tau - 1];
    }
    CHECK(static_cast<long long>(u.count()) ==
          eval_max_spread(g, source, delta, sched).excl_source);
    CHECK(static_cast<long long>(tu.count()) ==
          eval_max_viral_tstep(g, source, delta, sched, t_star).excl_source);
  }
}

TEST_CASE("approx pipeline returns schedules worth their covered count") {
  auto rng = make_stream(78, "approx-pipeline");
  RandomGraphSpec spec;
  spec.max_n = 8;
  spec.max_t_max = 6;
  for (int trial = 0; trial < 25; ++trial) {
    ProblemInstance inst;
    inst.graph = random_graph(rng, spec);
    inst.source = static_cast<Vertex>(rng() % inst.graph.num_vertices());
    inst.delta = 1 + static_cast<int>(rng() % 3);
    inst.budget = 1 + static_cast<int>(rng() % 3);

    inst.objective = Objective::MaxSpread;
    auto spread = approx_solve(inst);
    CHECK(spread.value.excl_source == spread.covered);

    inst.objective = Objective::MaxViralTstep;
    inst.t_star = 1 + static_cast<int>(rng() % inst.graph.t_max());
    auto tstep = approx_solve(inst);
    CHECK(tstep.value.excl_source == tstep.covered);
    inst.t_star.reset();

    inst.objective = Objective::MaxViral;
    auto viral = approx_solve(inst);
    CHECK(viral.value.excl_source >= viral.covered);
    REQUIRE(viral.chosen_tstar.has_value());
    // At the chosen step (which may fall in the decay tail past t_max) the
    // union identity is exact.
    auto trace = simulate(inst.graph, inst.source, inst.delta, viral.schedule,
                          quiet_horizon(inst.graph, inst.delta));
    const auto& at = trace.active[*viral.chosen_tstar - 1];
    long long count =
        static_cast<long long>(at.count()) - (at.test(inst.source) ? 1 : 0);
    CHECK(count == viral.covered);
  }
}

TEST_CASE("greedy stays within (1-1/e) of brute force coverage") {
  auto rng = make_stream(79, "greedy-ratio");
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<int>> sets(3 + rng() % 4);
    for (auto& s : sets) {
      int len = 1 + static_cast<int>(rng() % 5);
      for (int i = 0; i < len; ++i) s.push_back(static_cast<int>(rng() % 10));
    }
    auto cov = toy_instance(sets, 1 + static_cast<int>(rng() % 3));
    auto greedy = greedy_max_coverage(cov);
    long long opt = brute_force_coverage(cov);
    CHECK(static_cast<double>(greedy.covered) >= 0.632 * static_cast<double>(opt) - 1e-9);
  }
}

TEST_CASE("greedy pipeline rejects what it cannot certify") {
  ProblemInstance inst;
  inst.graph = parse_tgft("tgf 1\n3 3\ne 0 1 1\n");
  inst.source = 0;
  inst.delta = 1;
  inst.budget = 1;
  inst.dynamics = DynamicsKind::ClassicSis;
  inst.objective = Objective::MaxSpread;
  CHECK_THROWS_AS(approx_solve(inst), UnsupportedError);

  inst.dynamics = DynamicsKind::Renewal;
  inst.constraint = ScheduleConstraint::fixed_window(2);
  CHECK_THROWS_AS(approx_solve(inst), UnsupportedError);

  inst.constraint = ScheduleConstraint::unconstrained();
  auto ok = approx_solve(inst);
  CHECK(ok.value.excl_source == 1);

  // Unreachable target: only one vertex can ever be influenced.
  inst.target_k = 2;
  CHECK(approx_solve(inst).target_unreachable);
}
