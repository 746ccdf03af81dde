#include "tg/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "tg/errors.hpp"

namespace tg {

CounterState Simulator::initial(const Schedule& schedule) const {
  CounterState s;
  s.counters.assign(g_->num_vertices(), 0);
  s.time = 1;
  if (!schedule.empty() && schedule.front() == 1) s.counters[source_] = delta_;
  return s;
}

void Simulator::step(CounterState& state, bool transmit_next) const {
  const int n = g_->num_vertices();
  auto& c = state.counters;
  renew_.assign(n, 0);

  // Mark vertices adjacent to an active endpoint at the current step. Under
  // classic SIS only inactive vertices are eligible.
  for (const auto& [u, v] : g_->edges_at(state.time)) {
    if (c[u] > 0 && (kind_ == DynamicsKind::Renewal || c[v] == 0)) renew_[v] = 1;
    if (c[v] > 0 && (kind_ == DynamicsKind::Renewal || c[u] == 0)) renew_[u] = 1;
  }

  for (Vertex v = 0; v < n; ++v) {
    if (v == source_) continue;
    c[v] = renew_[v] ? delta_ : std::max(c[v] - 1, 0);
  }
  // The source is set by transmissions only; neighbors never renew it.
  c[source_] = transmit_next ? delta_ : std::max(c[source_] - 1, 0);
  ++state.time;
}

void Simulator::run(const Schedule& schedule, int horizon,
                    const std::function<bool(int, const CounterState&)>& visit) const {
  CounterState state = initial(schedule);
  std::size_t next_tx = schedule.empty() || schedule.front() != 1 ? 0 : 1;
  if (!visit(1, state)) return;
  for (int t = 1; t < horizon; ++t) {
    bool transmit = next_tx < schedule.size() && schedule[next_tx] == t + 1;
    if (transmit) ++next_tx;
    step(state, transmit);
    if (!visit(t + 1, state)) return;
  }
}

SimulationTrace simulate(const TemporalGraph& g, Vertex source, int delta,
                         const Schedule& schedule, int horizon, DynamicsKind kind) {
  validate_schedule(schedule, g);
  if (horizon < 1) throw ValidationError("horizon must be >= 1");
  if (!g.periodic() && horizon > quiet_horizon(g, delta))
    throw ValidationError("horizon " + std::to_string(horizon) +
                          " past t_max + delta on a non-periodic graph");

  SimulationTrace trace;
  trace.horizon = horizon;
  trace.active.reserve(horizon);
  trace.activation_lists.assign(g.num_vertices(), {});

  Simulator sim(g, source, delta, kind);
  sim.run(schedule, horizon, [&](int t, const CounterState& s) {
    DynamicBitset bits(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (s.counters[v] > 0) {
        bits.set(v);
        trace.activation_lists[v].push_back(t);
      }
    trace.active.push_back(std::move(bits));
    return true;
  });
  return trace;
}

namespace {

struct StateKey {
  std::vector<int> counters;
  int phase;
  bool operator==(const StateKey& o) const {
    return phase == o.phase && counters == o.counters;
  }
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(k.phase);
    for (int c : k.counters) {
      h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

}  // namespace

PeriodicRun simulate_periodic(const TemporalGraph& g, Vertex source, int delta,
                              const Schedule& schedule, DynamicsKind kind,
                              const CycleOptions& opts) {
  if (!g.periodic()) throw ValidationError("cycle detection needs a periodic graph");
  validate_schedule(schedule, g);

  const int record_from = schedule.empty() ? 1 : schedule.back();
  Simulator sim(g, source, delta, kind);
  CounterState state = sim.initial(schedule);
  std::size_t next_tx = schedule.empty() || schedule.front() != 1 ? 0 : 1;

  PeriodicRun run;
  run.prefix.activation_lists.assign(g.num_vertices(), {});
  std::unordered_map<StateKey, int, StateKeyHash> seen;

  auto record = [&](int t, const CounterState& s) {
    DynamicBitset bits(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (s.counters[v] > 0) {
        bits.set(v);
        run.prefix.activation_lists[v].push_back(t);
      }
    run.prefix.active.push_back(std::move(bits));
  };

  int t = 1;
  record(1, state);
  while (true) {
    if (t >= record_from) {
      StateKey key{state.counters, (t - 1) % g.t_max()};
      auto [it, inserted] = seen.try_emplace(std::move(key), t);
      if (!inserted) {
        run.cycle_start = it->second;
        run.cycle_length = t - it->second;
        // Drop the duplicated step so the prefix ends one before the repeat.
        run.prefix.active.pop_back();
        for (auto& lst : run.prefix.activation_lists)
          if (!lst.empty() && lst.back() == t) lst.pop_back();
        run.prefix.horizon = t - 1;
        return run;
      }
      if (seen.size() > opts.max_states)
        throw CapacityError("cycle detection exceeded the state cap (" +
                            std::to_string(opts.max_states) + " states)");
    }
    bool transmit = next_tx < schedule.size() && schedule[next_tx] == t + 1;
    if (transmit) ++next_tx;
    sim.step(state, transmit);
    ++t;
    record(t, state);
  }
}

DynamicBitset restless_walk_active(const TemporalGraph& g, Vertex source,
                                   int delta, int tau, int t) {
  const int n = g.num_vertices();
  DynamicBitset result(n);
  if (tau >= 1 && tau <= t && t <= tau + delta - 1) result.set(source);
  if (t < 2) return result;

  // Adjacency with labels for the walk search.
  std::vector<std::vector<std::pair<Vertex, const std::vector<int>*>>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].emplace_back(e.v, &e.labels);
    adj[e.v].emplace_back(e.u, &e.labels);
  }

  // BFS over (vertex, activation time) pairs. A walk that has activated v at
  // time a may continue over an edge labeled within [a, a+delta-1]; the
  // source's only activation is the transmission itself. Walks never pass
  // through the source, whose counter ignores neighbors.
  auto effective_labels = [&](const std::vector<int>* labels, int lo, int hi,
                              auto&& emit) {
    if (!g.periodic()) {
      for (int L : *labels)
        if (L >= lo && L <= hi) emit(L);
      return;
    }
    // A periodic label L occurs at L, L+t_max, L+2*t_max, ...
    for (int L : *labels) {
      long long occ = L;
      if (occ < lo) occ += (lo - occ + g.t_max() - 1) / g.t_max() * static_cast<long long>(g.t_max());
      for (; occ <= hi; occ += g.t_max()) emit(static_cast<int>(occ));
    }
  };

  std::vector<std::vector<char>> seen(n, std::vector<char>(t + 2, 0));
  std::deque<std::pair<Vertex, int>> queue;  // (vertex, activation time)

  // Expand from the source directly: first edge labeled within the source's
  // own active window.
  for (auto [w, labels] : adj[source]) {
    effective_labels(labels, tau, std::min(tau + delta - 1, t - 1), [&](int L) {
      if (w != source && !seen[w][L + 1]) {
        seen[w][L + 1] = 1;
        queue.emplace_back(w, L + 1);
      }
    });
  }

  while (!queue.empty()) {
    auto [v, a] = queue.front();
    queue.pop_front();
    if (a > t - delta && a <= t) result.set(v);
    for (auto [w, labels] : adj[v]) {
      if (w == source) continue;
      effective_labels(labels, a, std::min(a + delta - 1, t - 1), [&](int L) {
        if (!seen[w][L + 1]) {
          seen[w][L + 1] = 1;
          queue.emplace_back(w, L + 1);
        }
      });
    }
  }
  return result;
}

}  // namespace tg
