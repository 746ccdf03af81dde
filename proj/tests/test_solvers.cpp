#include <doctest.h>

#include "tg/reductions.hpp"
#include "tg/rng.hpp"
#include "tg/solvers.hpp"
#include "tg/verification.hpp"

using namespace tg;

namespace {

ProblemInstance basic(TemporalGraph g, Objective obj, int delta, int budget) {
  ProblemInstance inst;
  inst.graph = std::move(g);
  inst.source = 0;
  inst.delta = delta;
  inst.budget = budget;
  inst.objective = obj;
  return inst;
}

// Explicitly repeats a periodic graph into a finite one covering `horizon`
// steps; the test-side oracle for the periodic solver.
TemporalGraph unroll(const TemporalGraph& g, int horizon) {
  std::vector<std::tuple<int, int, int>> labeled;
  for (const auto& e : g.edges())
    for (int L : e.labels)
      for (int t = L; t <= horizon; t += g.t_max())
        labeled.emplace_back(e.u, e.v, t);
  return TemporalGraph::build(g.num_vertices(), horizon, false, labeled);
}

}  // namespace

TEST_CASE("zero budget yields the empty schedule") {
  auto inst = basic(parse_tgft("tgf 1\n3 3\ne 0 1 1\n"), Objective::MaxSpread, 2, 0);
  auto res = exact_solve(inst);
  CHECK(res.schedule.empty());
  CHECK(res.value.excl_source == 0);
  CHECK(res.explored == 1);
}

TEST_CASE("single useful time step") {
  auto inst = basic(parse_tgft("tgf 1\n2 4\ne 0 1 3\n"), Objective::MaxSpread, 1, 1);
  auto res = exact_solve(inst);
  CHECK(res.value.excl_source == 1);
  CHECK(res.schedule == Schedule{3});
}

TEST_CASE("lexicographically smallest argmax wins") {
  // Transmitting anywhere in [1,3] reaches x; the tie breaks to time 1.
  auto inst = basic(parse_tgft("tgf 1\n2 4\ne 0 1 3\n"), Objective::MaxSpread, 3, 2);
  auto res = exact_solve(inst);
  CHECK(res.schedule == Schedule{1});
}

TEST_CASE("window-star over a triangle, fixed windows") {
  VertexCoverInstance tri{3, {{1, 2}, {2, 3}, {1, 3}}, 2};
  auto gi = gen_window_star(tri, 2, WindowRegime::Fixed);
  auto res = exact_solve(gi.problem);
  CHECK(res.value.excl_source == 4);  // n + m - 2 with a cover of two vertices
  REQUIRE(res.answer.has_value());
  CHECK(*res.answer == true);

  VertexCoverInstance impossible{3, {{1, 2}, {2, 3}, {1, 3}}, 1};
  auto no = gen_window_star(impossible, 2, WindowRegime::Fixed);
  CHECK_FALSE(no.cert.answer);
  auto res_no = exact_solve(no.problem);
  CHECK(res_no.value.excl_source == 4);  // best reachable stays one short
  CHECK(*res_no.answer == false);
}

TEST_CASE("min-non-viral-time prefers feasible schedules") {
  // Transmitting at both steps re-activates x late and violates d=1; the
  // solver must settle for the single early transmission.
  auto g = parse_tgft("tgf 1\n3 6\ne 0 1 1 5\ne 1 2 5\n");
  auto inst = basic(g, Objective::MinNonViralTime, 1, 2);
  inst.d_gap = 1;
  auto res = exact_solve(inst);
  CHECK(res.value.feasible);
  CHECK(res.any_feasible);
  CHECK(res.value.excl_source == 1);
  CHECK(res.schedule == Schedule{1});
}

TEST_CASE("periodic graph with no edges") {
  auto inst = basic(parse_tgft("tgf 1\n4 3 periodic\n"), Objective::MaxSpread, 2, 2);
  auto res = periodic_fpt_maxspread(inst);
  CHECK(res.value.excl_source == 0);
}

TEST_CASE("budget above the period transmits everywhere") {
  auto g = parse_tgft("tgf 1\n4 3 periodic\ne 0 1 1\ne 1 2 2\ne 2 3 3\n");
  auto inst = basic(g, Objective::MaxSpread, 2, 5);
  auto res = periodic_fpt_maxspread(inst);
  CHECK(res.schedule == Schedule{1, 2, 3});
  CHECK(res.explored == 1);

  // Monotonicity: every smaller schedule is no better.
  auto rng = make_stream(5, "fpt-monotone");
  for (int i = 0; i < 10; ++i) {
    Schedule s = random_schedule(rng, g.t_max(), 2);
    auto v = eval_max_spread(g, 0, 2, s);
    CHECK(v.excl_source <= res.value.excl_source);
  }
}

TEST_CASE("periodic solver matches the unrolled brute force") {
  SetCoverInstance sc{4, {{1, 2}, {3, 4}}, 2};
  auto gi = gen_periodic_path(sc, 1, 2);
  auto inst = gi.problem;
  inst.objective = Objective::MaxSpread;
  inst.t_star.reset();
  inst.budget = 2;

  auto fpt = periodic_fpt_maxspread(inst);

  const int horizon =
      inst.graph.t_max() +
      (inst.graph.num_vertices() + 1) * inst.graph.t_max() * inst.delta;
  auto flat = basic(unroll(inst.graph, horizon), Objective::MaxSpread,
                    inst.delta, inst.budget);
  auto brute = exact_solve(flat);
  CHECK(fpt.value.excl_source == brute.value.excl_source);
}

TEST_CASE("exact, greedy and the approximation bound") {
  auto rng = make_stream(6, "sandwich");
  RandomGraphSpec spec;
  spec.max_n = 8;
  spec.max_t_max = 6;
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = basic(random_graph(rng, spec), Objective::MaxSpread,
                      1 + static_cast<int>(rng() % 3),
                      1 + static_cast<int>(rng() % 3));
    auto exact = exact_solve(inst);
    auto greedy = solve(inst, Method::Greedy);
    CHECK(exact.value.excl_source >= greedy.value.excl_source);
    CHECK(static_cast<double>(greedy.value.excl_source) >=
          0.632 * static_cast<double>(exact.value.excl_source) - 1e-9);
  }
}

TEST_CASE("pruned search returns the unpruned optimum") {
  auto rng = make_stream(8, "prune");
  RandomGraphSpec spec;
  spec.max_n = 7;
  spec.max_t_max = 6;
  for (int trial = 0; trial < 15; ++trial) {
    auto inst = basic(random_graph(rng, spec), Objective::MaxSpread, 2, 2);
    SolveOptions pruned;
    pruned.prune = true;
    CHECK(exact_solve(inst, pruned).value.excl_source ==
          exact_solve(inst).value.excl_source);
  }
}

TEST_CASE("thread count does not change the result") {
  auto rng = make_stream(10, "threads");
  RandomGraphSpec spec;
  spec.max_n = 7;
  spec.max_t_max = 6;
  for (int trial = 0; trial < 5; ++trial) {
    auto inst = basic(random_graph(rng, spec), Objective::MaxViral, 2, 3);
    SolveOptions seq, par;
    par.threads = 4;
    auto a = exact_solve(inst, seq);
    auto b = exact_solve(inst, par);
    CHECK(a.value.excl_source == b.value.excl_source);
    CHECK(a.schedule == b.schedule);
    CHECK(a.explored == b.explored);
  }
}

TEST_CASE("caps and unsupported combinations") {
  auto g = parse_tgft("tgf 1\n4 8\ne 0 1 1\ne 1 2 3\ne 2 3 5\n");
  auto inst = basic(g, Objective::MaxSpread, 2, 4);
  SolveOptions tiny;
  tiny.candidate_cap = 10;
  CHECK_THROWS_AS(exact_solve(inst, tiny), CapacityError);

  inst.constraint = ScheduleConstraint::fixed_window(2);
  inst.budget = 2;  // four windows cannot fit in two transmissions
  CHECK_THROWS_AS(exact_solve(inst), ValidationError);

  auto periodic = basic(parse_tgft("tgf 1\n3 2 periodic\ne 0 1 1\n"),
                        Objective::MaxViral, 1, 1);
  CHECK_THROWS_AS(exact_solve(periodic), UnsupportedError);
  CHECK_THROWS_AS(solve(periodic, Method::PeriodicFpt), UnsupportedError);

  auto fpt_cap = basic(parse_tgft("tgf 1\n2 30 periodic\ne 0 1 1\n"),
                       Objective::MaxSpread, 1, 2);
  CHECK_THROWS_AS(periodic_fpt_maxspread(fpt_cap), CapacityError);
}

TEST_CASE("classic SIS search has no monotonicity to lean on") {
  // On the bundled comparison path the exact SIS optimum with budget 2 is a
  // single well-placed transmission; adding the early one only hurts.
  auto inst = basic(sis_comparison_path(), Objective::MaxSpread, 2, 2);
  inst.dynamics = DynamicsKind::ClassicSis;
  auto res = exact_solve(inst);
  CHECK(res.value.excl_source == 2);
  CHECK(res.schedule == Schedule{2});
  CHECK(eval_max_spread(inst.graph, 0, 2, {1, 3}, DynamicsKind::ClassicSis)
            .excl_source == 1);
}
