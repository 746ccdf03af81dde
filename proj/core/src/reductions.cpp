#include "tg/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

#include "json.hpp"

#include "tg/errors.hpp"
#include "tg/objectives.hpp"

namespace tg {

void SetCoverInstance::validate() const {
  if (n < 1) throw ValidationError("set cover needs at least one element");
  if (sets.empty()) throw ValidationError("set cover needs at least one set");
  if (budget < 0) throw ValidationError("cover budget must be >= 0");
  for (const auto& s : sets) {
    if (s.empty()) throw ValidationError("empty set in set cover instance");
    for (int e : s)
      if (e < 1 || e > n)
        throw ValidationError("element " + std::to_string(e) + " outside [1," +
                              std::to_string(n) + "]");
  }
}

void VertexCoverInstance::validate() const {
  if (n < 1) throw ValidationError("vertex cover needs at least one vertex");
  if (budget < 0) throw ValidationError("cover budget must be >= 0");
  std::vector<int> deg(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n || u == v)
      throw ValidationError("bad edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
    ++deg[u];
    ++deg[v];
  }
  for (int i = 1; i <= n; ++i)
    if (deg[i] > 3)
      throw ValidationError("vertex " + std::to_string(i) +
                            " has degree above 3");
}

namespace {

std::vector<std::string> read_tokens(std::istream& in, int& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    return toks;
  }
  return {};
}

int to_int(const std::string& tok, int line_no) {
  try {
    std::size_t pos;
    int v = std::stoi(tok, &pos);
    if (pos == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line_no, "expected integer, got '" + tok + "'");
}

}  // namespace

SetCoverInstance parse_setcover(std::istream& in) {
  int line_no = 0;
  auto head = read_tokens(in, line_no);
  if (head.size() != 4 || head[0] != "sc")
    throw ParseError(line_no, "expected header 'sc <n> <m> <b>'");
  SetCoverInstance sc;
  sc.n = to_int(head[1], line_no);
  int m = to_int(head[2], line_no);
  sc.budget = to_int(head[3], line_no);
  for (int j = 0; j < m; ++j) {
    auto toks = read_tokens(in, line_no);
    if (toks.empty())
      throw ParseError(line_no, "expected " + std::to_string(m) + " set lines");
    std::vector<int> set;
    for (const auto& t : toks) set.push_back(to_int(t, line_no));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    sc.sets.push_back(std::move(set));
  }
  sc.validate();
  return sc;
}

VertexCoverInstance parse_vertexcover(std::istream& in) {
  int line_no = 0;
  auto head = read_tokens(in, line_no);
  if (head.size() != 4 || head[0] != "vc")
    throw ParseError(line_no, "expected header 'vc <n> <m> <l>'");
  VertexCoverInstance vc;
  vc.n = to_int(head[1], line_no);
  int m = to_int(head[2], line_no);
  vc.budget = to_int(head[3], line_no);
  for (int j = 0; j < m; ++j) {
    auto toks = read_tokens(in, line_no);
    if (toks.size() != 2)
      throw ParseError(line_no, "expected edge line 'u v'");
    vc.edges.emplace_back(to_int(toks[0], line_no), to_int(toks[1], line_no));
  }
  vc.validate();
  return vc;
}

CoverSolution solve_setcover_exact(const SetCoverInstance& sc) {
  sc.validate();
  if (sc.n > 20) throw CapacityError("exact set cover capped at 20 elements");
  const int full = (1 << sc.n) - 1;
  std::vector<int> set_mask(sc.sets.size(), 0);
  for (std::size_t j = 0; j < sc.sets.size(); ++j)
    for (int e : sc.sets[j]) set_mask[j] |= 1 << (e - 1);

  std::vector<int> dist(full + 1, -1), prev(full + 1, -1), choice(full + 1, -1);
  dist[0] = 0;
  for (int mask = 0; mask <= full; ++mask) {
    if (dist[mask] < 0) continue;
    for (std::size_t j = 0; j < set_mask.size(); ++j) {
      int nm = mask | set_mask[j];
      if (nm == mask) continue;
      if (dist[nm] < 0 || dist[nm] > dist[mask] + 1) {
        dist[nm] = dist[mask] + 1;
        prev[nm] = mask;
        choice[nm] = static_cast<int>(j);
      }
    }
  }
  CoverSolution sol;
  if (dist[full] < 0) return sol;
  sol.size = dist[full];
  for (int mask = full; mask != 0; mask = prev[mask])
    sol.chosen.push_back(choice[mask] + 1);
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

namespace {

void vc_branch(const std::vector<std::pair<int, int>>& edges,
               std::vector<char>& in_cover, int depth, CoverSolution& best) {
  if (best.size >= 0 && depth >= best.size) return;  // cannot improve
  // First uncovered edge.
  const std::pair<int, int>* open = nullptr;
  for (const auto& e : edges)
    if (!in_cover[e.first] && !in_cover[e.second]) {
      open = &e;
      break;
    }
  if (!open) {
    best.size = depth;
    best.chosen.clear();
    for (std::size_t v = 1; v < in_cover.size(); ++v)
      if (in_cover[v]) best.chosen.push_back(static_cast<int>(v));
    return;
  }
  for (int v : {open->first, open->second}) {
    in_cover[v] = 1;
    vc_branch(edges, in_cover, depth + 1, best);
    in_cover[v] = 0;
  }
}

}  // namespace

CoverSolution solve_vertexcover_exact(const VertexCoverInstance& vc) {
  vc.validate();
  if (vc.n > 20) throw CapacityError("exact vertex cover capped at 20 vertices");
  CoverSolution best;
  std::vector<char> in_cover(vc.n + 1, 0);
  vc_branch(vc.edges, in_cover, 0, best);
  return best;
}

namespace {

constexpr int kMaxPaddedElements = 4096;

int floor_log2(int x) {
  int l = 0;
  while ((1 << (l + 1)) <= x) ++l;
  return l;
}

struct PaddedCover {
  std::vector<std::vector<int>> sets;
  int n = 0;       // padded element count
  int budget = 0;  // padded cover budget
  std::vector<int> dummy_elements;
  std::optional<int> dummy_set_index;
};

// Pads the element universe up to `target_n` elements with one extra set
// holding exactly the new elements; the cover budget grows by one since any
// cover must take that set.
PaddedCover pad_universe(const SetCoverInstance& sc, int target_n) {
  if (target_n > kMaxPaddedElements)
    throw CapacityError("padded universe exceeds " +
                        std::to_string(kMaxPaddedElements) + " elements");
  PaddedCover out;
  out.sets = sc.sets;
  out.n = target_n;
  out.budget = sc.budget;
  if (target_n > sc.n) {
    std::vector<int> pad;
    for (int e = sc.n + 1; e <= target_n; ++e) {
      pad.push_back(e);
      out.dummy_elements.push_back(e);
    }
    out.sets.push_back(std::move(pad));
    out.dummy_set_index = static_cast<int>(out.sets.size());
    out.budget += 1;
  }
  return out;
}

// Optimal cover of the padded instance: the dummy elements sit in the dummy
// set alone, so it extends an optimal cover of the original instance.
CoverSolution solve_padded_cover(const SetCoverInstance& original,
                                 const PaddedCover& pad) {
  CoverSolution cover = solve_setcover_exact(original);
  if (cover.exists() && pad.dummy_set_index) {
    cover.chosen.push_back(*pad.dummy_set_index);
    cover.size += 1;
  }
  return cover;
}

// Heap-indexed perfect binary tree with `leaves` = 2^depth leaves. Vertex id
// of heap node k (1-based) is k-1, so the root is vertex 0.
struct HeapTree {
  int depth;   // edges on a root-to-leaf path
  int leaves;  // 2^depth
  int nodes;   // 2*leaves - 1

  int leaf_id(int i) const { return leaves + i - 2; }  // i in [1, leaves]
  static int parent_level(int heap_k) { return floor_log2(heap_k); }
};

void add_tree_edges(const HeapTree& tree,
                    std::vector<std::tuple<int, int, int>>& out,
                    const std::vector<int>& wave_offsets, int delta) {
  // Edge into heap node k sits between levels l and l+1 where
  // l = floor(log2(k)); it carries (l-1)*delta + t for every wave start t.
  for (int k = 2; k <= tree.nodes; ++k) {
    int l = HeapTree::parent_level(k);
    for (int t : wave_offsets) out.emplace_back(k / 2 - 1, k - 1, (l - 1) * delta + t);
  }
}

void name_tree(const HeapTree& tree, std::vector<std::string>& names) {
  names[0] = "s";
  for (int k = 2; k <= tree.nodes; ++k) names[k - 1] = "v" + std::to_string(k);
  for (int i = 1; i <= tree.leaves; ++i)
    names[tree.leaf_id(i)] = "x" + std::to_string(i);
}

void verify_certificate(const GeneratedInstance& gi) {
  if (!gi.cert.answer) return;
  if (static_cast<int>(gi.cert.witness.size()) > gi.problem.budget)
    throw Error("generated witness exceeds the budget");
  auto check = check_schedule_constraint(gi.cert.witness, gi.problem.constraint,
                                         gi.problem.graph.t_max(),
                                         gi.problem.budget);
  if (!check.ok)
    throw Error("generated witness violates its constraint: " + check.violation);
  ObjectiveValue val = eval_objective(gi.problem, gi.cert.witness);
  if (val.excl_source < gi.cert.k || !val.feasible)
    throw Error("generated witness reaches " + std::to_string(val.excl_source) +
                " of target " + std::to_string(gi.cert.k) + " (" +
                gi.reduction + ")");
}

}  // namespace

GeneratedInstance gen_spread_tree(const SetCoverInstance& sc, int delta) {
  sc.validate();
  if (delta < 1) throw ValidationError("delta must be >= 1");

  int nn = 2;
  while (nn < sc.n) nn <<= 1;
  PaddedCover pad = pad_universe(sc, nn);
  const int m = static_cast<int>(pad.sets.size());
  HeapTree tree{floor_log2(nn), nn, 2 * nn - 1};
  const int D = tree.depth;

  auto wave = [&](int j) { return (j - 1) * (delta + 1) + 1; };  // j in [1, m]
  std::vector<int> waves;
  for (int j = 1; j <= m; ++j) waves.push_back(wave(j));

  const int total = tree.nodes + nn;
  const int t_max = D * delta + wave(m);
  std::vector<std::tuple<int, int, int>> labeled;
  add_tree_edges(tree, labeled, waves, delta);
  auto y_id = [&](int i) { return tree.nodes + i - 1; };
  for (int j = 1; j <= m; ++j)
    for (int e : pad.sets[j - 1])
      labeled.emplace_back(tree.leaf_id(e), y_id(e), D * delta + wave(j));

  GeneratedInstance gi;
  gi.reduction = "spread-tree";
  gi.names.assign(total, "");
  name_tree(tree, gi.names);
  for (int i = 1; i <= nn; ++i) gi.names[y_id(i)] = "y" + std::to_string(i);
  gi.dummy_elements = pad.dummy_elements;
  gi.dummy_set_index = pad.dummy_set_index;

  gi.problem.graph = TemporalGraph::build(total, t_max, false, labeled);
  gi.problem.source = 0;
  gi.problem.delta = delta;
  gi.problem.budget = pad.budget;
  gi.problem.objective = Objective::MaxSpread;
  gi.problem.target_k = total - 1;

  CoverSolution cover = solve_padded_cover(sc, pad);
  gi.cert.cover_optimum = cover.size;
  gi.cert.k = *gi.problem.target_k;
  gi.cert.answer = cover.exists() && cover.size <= pad.budget;
  if (gi.cert.answer) {
    for (int j : cover.chosen) gi.cert.witness.push_back(wave(j));
    std::sort(gi.cert.witness.begin(), gi.cert.witness.end());
  }
  verify_certificate(gi);
  return gi;
}

namespace {

// Evolves an isolated keep-alive pair (edge present at times congruent to 1
// or 2 mod delta+1) after one endpoint is set to delta at time `lit`, and
// reports how many of the two are active at time `probe`.
int pair_coactivity(int delta, int lit, int probe) {
  int cy = delta, cz = 0;
  for (int t = lit; t < probe; ++t) {
    bool tick = (t - 1) % (delta + 1) <= 1;
    int ny = (tick && cz > 0) ? delta : std::max(cy - 1, 0);
    int nz = (tick && cy > 0) ? delta : std::max(cz - 1, 0);
    cy = ny;
    cz = nz;
  }
  return (cy > 0 ? 1 : 0) + (cz > 0 ? 1 : 0);
}

}  // namespace

GeneratedInstance gen_viral_tree(const SetCoverInstance& sc, int delta,
                                 Objective objective) {
  sc.validate();
  if (delta < 1) throw ValidationError("delta must be >= 1");
  if (objective != Objective::MaxViral && objective != Objective::MaxViralTstep)
    throw ValidationError("viral-tree generates max-viral or max-viral-tstep");

  int nn = 2;
  while (nn < sc.n) nn <<= 1;
  // The delta=2 keep-alive pattern has both pair members active only at time
  // steps congruent to 0 mod 3; depths congruent to 2 mod 3 would put the
  // synchronization window off that phase, so pad one level further.
  while (delta == 2 && floor_log2(nn) % 3 == 2) nn <<= 1;
  PaddedCover pad = pad_universe(sc, nn);
  const int m = static_cast<int>(pad.sets.size());
  HeapTree tree{floor_log2(nn), nn, 2 * nn - 1};
  const int D = tree.depth;
  const int spacing = (D + 1) * (delta + 1);

  auto wave = [&](int j) { return spacing * (j - 1) + 1; };  // j in [1, m+1]
  std::vector<int> waves;
  for (int j = 1; j <= m + 1; ++j) waves.push_back(wave(j));

  const int total = tree.nodes + 2 * nn;
  const int t_max = D * delta + wave(m + 1) + 2;
  auto y_id = [&](int i) { return tree.nodes + i - 1; };
  auto z_id = [&](int i) { return tree.nodes + nn + i - 1; };

  std::vector<std::tuple<int, int, int>> labeled;
  add_tree_edges(tree, labeled, waves, delta);
  for (int j = 1; j <= m; ++j)
    for (int e : pad.sets[j - 1])
      labeled.emplace_back(tree.leaf_id(e), y_id(e), D * delta + wave(j));
  for (int i = 1; i <= nn; ++i)
    for (int q = 1; q <= (D + 1) * (m + 1); ++q)
      for (int off : {1, 2}) {
        int t = (q - 1) * (delta + 1) + off;
        if (t <= t_max) labeled.emplace_back(y_id(i), z_id(i), t);
      }

  // Synchronization step: within the window where the final wave holds every
  // leaf active, pick the step maximizing guaranteed pair co-activity over
  // all possible lighting times.
  const int window_lo = (D - 1) * delta + wave(m + 1) + 1;
  const int window_hi = D * delta + wave(m + 1);
  int best_w = window_lo, best_c = -1;
  for (int w = window_lo; w <= window_hi; ++w) {
    int c = 2;
    for (int j = 1; j <= m; ++j)
      c = std::min(c, pair_coactivity(delta, D * delta + wave(j) + 1, w));
    if (c > best_c) {
      best_c = c;
      best_w = w;
    }
  }
  if ((delta == 1 && best_c != 1) || (delta >= 2 && best_c != 2))
    throw Error("keep-alive phase analysis failed (depth " + std::to_string(D) +
                ", delta " + std::to_string(delta) + ")");

  GeneratedInstance gi;
  gi.reduction = "viral-tree";
  gi.names.assign(total, "");
  name_tree(tree, gi.names);
  for (int i = 1; i <= nn; ++i) {
    gi.names[y_id(i)] = "y" + std::to_string(i);
    gi.names[z_id(i)] = "z" + std::to_string(i);
  }
  gi.dummy_elements = pad.dummy_elements;
  gi.dummy_set_index = pad.dummy_set_index;

  gi.problem.graph = TemporalGraph::build(total, t_max, false, labeled);
  gi.problem.source = 0;
  gi.problem.delta = delta;
  gi.problem.budget = pad.budget + 1;  // cover waves plus the final wave
  gi.problem.objective = objective;
  gi.problem.target_k = static_cast<long long>(nn) * (1 + best_c);
  if (objective == Objective::MaxViralTstep) gi.problem.t_star = best_w;

  CoverSolution cover = solve_padded_cover(sc, pad);
  gi.cert.cover_optimum = cover.size;
  gi.cert.k = *gi.problem.target_k;
  gi.cert.t_star = best_w;
  gi.cert.answer = cover.exists() && cover.size <= pad.budget;
  if (gi.cert.answer) {
    for (int j : cover.chosen) gi.cert.witness.push_back(wave(j));
    gi.cert.witness.push_back(wave(m + 1));
    std::sort(gi.cert.witness.begin(), gi.cert.witness.end());
  }
  verify_certificate(gi);
  return gi;
}

GeneratedInstance gen_minnonviral_tree(const SetCoverInstance& sc, int delta) {
  sc.validate();
  if (delta < 1) throw ValidationError("delta must be >= 1");

  int nn = 1;
  while (nn < sc.n) nn = nn * 2 + 1;  // 2^k - 1 shape
  PaddedCover pad = pad_universe(sc, nn);
  const int m = static_cast<int>(pad.sets.size());
  HeapTree tree{floor_log2(nn + 1), nn + 1, 2 * (nn + 1) - 1};
  const int D = tree.depth;
  const int t_max = D + 2 * m * (delta + 1) + 1;

  // Ids: tree nodes, then y row, then w row, then z/z' pairs per tree node.
  const int y_base = tree.nodes;
  const int w_base = y_base + nn + 1;
  const int z_base = w_base + nn + 1;
  const int total = z_base + 2 * tree.nodes;
  auto y_id = [&](int i) { return y_base + i - 1; };   // i in [1, nn+1]
  auto w_id = [&](int i) { return w_base + i - 1; };
  auto zk = [&](int k) { return z_base + 2 * (k - 1); };  // heap node k

  auto wave = [&](int j) { return 2 * j * (delta + 1); };  // j in [1, m]
  std::vector<int> offsets{1};
  for (int j = 1; j <= m; ++j) offsets.push_back(wave(j));

  std::vector<std::tuple<int, int, int>> labeled;
  // Tree edges carry label l plus (l-1) + every wave offset.
  for (int k = 2; k <= tree.nodes; ++k) {
    int l = HeapTree::parent_level(k);
    labeled.emplace_back(k / 2 - 1, k - 1, l);
    for (int j = 1; j <= m; ++j)
      labeled.emplace_back(k / 2 - 1, k - 1, (l - 1) + wave(j));
  }
  // Pendants: element leaves by membership, the extra leaf only at D+1.
  for (int j = 1; j <= m; ++j)
    for (int e : pad.sets[j - 1])
      labeled.emplace_back(tree.leaf_id(e), y_id(e), D + wave(j));
  labeled.emplace_back(tree.leaf_id(nn + 1), y_id(nn + 1), D + 1);
  for (int i = 1; i <= nn + 1; ++i)
    for (int t = D + 2; t <= t_max; ++t)
      labeled.emplace_back(y_id(i), w_id(i), t);
  // Keep-alive gadgets on every tree vertex.
  for (int k = 1; k <= tree.nodes; ++k) {
    int l = HeapTree::parent_level(k) + 1;  // level of node k itself
    labeled.emplace_back(k - 1, zk(k), l);
    for (int t = (l - 1) + (delta + 1); t <= t_max; t += delta + 1)
      labeled.emplace_back(k - 1, zk(k), t);
    for (int t = l + 1; t <= t_max; ++t)
      labeled.emplace_back(zk(k), zk(k) + 1, t);
  }

  GeneratedInstance gi;
  gi.reduction = "minnonviral-tree";
  gi.names.assign(total, "");
  name_tree(tree, gi.names);
  gi.names[tree.leaf_id(nn + 1)] = "xa";
  for (int i = 1; i <= nn; ++i) {
    gi.names[y_id(i)] = "y" + std::to_string(i);
    gi.names[w_id(i)] = "w" + std::to_string(i);
  }
  gi.names[y_id(nn + 1)] = "ya";
  gi.names[w_id(nn + 1)] = "wa";
  for (int k = 1; k <= tree.nodes; ++k) {
    gi.names[zk(k)] = "z" + std::to_string(k);
    gi.names[zk(k) + 1] = "zz" + std::to_string(k);
  }
  gi.dummy_elements = pad.dummy_elements;
  gi.dummy_set_index = pad.dummy_set_index;

  gi.problem.graph = TemporalGraph::build(total, t_max, false, labeled);
  gi.problem.source = 0;
  gi.problem.delta = delta;
  gi.problem.budget = pad.budget + 1;  // mandatory first-step transmission
  gi.problem.objective = Objective::MinNonViralTime;
  gi.problem.d_gap = 1;
  gi.problem.target_k = total - 1;

  CoverSolution cover = solve_padded_cover(sc, pad);
  gi.cert.cover_optimum = cover.size;
  gi.cert.k = *gi.problem.target_k;
  gi.cert.d_gap = 1;
  gi.cert.answer = cover.exists() && cover.size <= pad.budget;
  if (gi.cert.answer) {
    gi.cert.witness.push_back(1);
    for (int j : cover.chosen) gi.cert.witness.push_back(wave(j));
    std::sort(gi.cert.witness.begin(), gi.cert.witness.end());
  }
  verify_certificate(gi);
  return gi;
}

GeneratedInstance gen_window_star(const VertexCoverInstance& vc, int delta,
                                  WindowRegime regime) {
  vc.validate();
  if (delta < 1) throw ValidationError("delta must be >= 1");

  const int n = vc.n;
  const int m = static_cast<int>(vc.edges.size());
  const int stride = regime == WindowRegime::Fixed ? 2 * delta : 3 * delta;
  const int t_max = regime == WindowRegime::Fixed
                        ? 2 * delta * (n + 1)
                        : 3 * delta * n + 2 * delta;

  // Star: source 0, one leaf per graph edge, one leaf per graph vertex.
  const int total = 1 + m + n;
  auto edge_leaf = [&](int j) { return j; };          // j in [1, m]
  auto vertex_leaf = [&](int i) { return m + i; };    // i in [1, n]

  std::vector<std::tuple<int, int, int>> labeled;
  for (int j = 1; j <= m; ++j) {
    auto [a, b] = vc.edges[j - 1];
    for (int i : {a, b})
      labeled.emplace_back(0, edge_leaf(j), stride * (i - 1) + 1);
  }
  for (int i = 1; i <= n; ++i)
    labeled.emplace_back(0, vertex_leaf(i), stride * (i - 1) + delta + 1);

  GeneratedInstance gi;
  gi.reduction = "window-star";
  gi.names.assign(total, "");
  gi.names[0] = "s";
  for (int j = 1; j <= m; ++j) gi.names[edge_leaf(j)] = "e" + std::to_string(j);
  for (int i = 1; i <= n; ++i) gi.names[vertex_leaf(i)] = "u" + std::to_string(i);

  gi.problem.graph = TemporalGraph::build(total, t_max, false, labeled);
  gi.problem.source = 0;
  gi.problem.delta = delta;
  gi.problem.budget = n + 1;
  gi.problem.objective = Objective::MaxSpread;
  gi.problem.target_k = n + m - vc.budget;
  gi.problem.constraint = regime == WindowRegime::Fixed
                              ? ScheduleConstraint::fixed_window(2 * delta)
                              : ScheduleConstraint::shifting_window(2 * delta,
                                                                    4 * delta);

  CoverSolution cover = solve_vertexcover_exact(vc);
  gi.cert.cover_optimum = cover.size;
  gi.cert.k = *gi.problem.target_k;
  gi.cert.answer = cover.exists() && cover.size <= vc.budget;
  if (gi.cert.answer) {
    std::vector<char> in_cover(n + 1, 0);
    for (int v : cover.chosen) in_cover[v] = 1;
    for (int i = 1; i <= n; ++i)
      gi.cert.witness.push_back(in_cover[i] ? stride * (i - 1) + 1
                                            : stride * (i - 1) + delta + 1);
    gi.cert.witness.push_back(stride * n + 1);  // final edge-free window
  }
  verify_certificate(gi);
  return gi;
}

GeneratedInstance gen_periodic_path(const SetCoverInstance& sc, int delta,
                                    int t_max, Objective objective) {
  sc.validate();
  if (delta < 1) throw ValidationError("delta must be >= 1");
  if (t_max < 2) throw ValidationError("period must be >= 2");
  if (delta >= t_max) throw ValidationError("needs delta < t_max");
  if (objective != Objective::MaxViral && objective != Objective::MaxViralTstep)
    throw ValidationError("periodic-path generates max-viral or max-viral-tstep");
  const int m = static_cast<int>(sc.sets.size());
  if (sc.budget > m)
    throw ValidationError("budget above the set count makes the target unreachable");

  const int q = m * t_max;
  const int total = 1 + q + sc.n;
  auto path_v = [&](int i) { return i; };        // i in [1, q]
  auto elem_u = [&](int i) { return q + i; };    // i in [1, n]

  std::vector<std::tuple<int, int, int>> labeled;
  labeled.emplace_back(0, path_v(1), 1);
  for (int i = 1; i < q; ++i)
    labeled.emplace_back(path_v(i), path_v(i + 1), i % t_max + 1);
  for (int j0 = 0; j0 < m; ++j0)
    for (int e : sc.sets[j0])
      labeled.emplace_back(path_v(j0 * t_max + 1), elem_u(e), 2);

  const int t_star = (m - 1) * t_max + delta + 2;

  GeneratedInstance gi;
  gi.reduction = "periodic-path";
  gi.names.assign(total, "");
  gi.names[0] = "s";
  for (int i = 1; i <= q; ++i) gi.names[path_v(i)] = "v" + std::to_string(i);
  for (int i = 1; i <= sc.n; ++i) gi.names[elem_u(i)] = "u" + std::to_string(i);

  gi.problem.graph = TemporalGraph::build(total, t_max, true, labeled);
  gi.problem.source = 0;
  gi.problem.delta = delta;
  gi.problem.budget = sc.budget;
  gi.problem.objective = objective;
  gi.problem.target_k = sc.n + static_cast<long long>(sc.budget) * delta;
  if (objective == Objective::MaxViralTstep) gi.problem.t_star = t_star;

  CoverSolution cover = solve_setcover_exact(sc);
  gi.cert.cover_optimum = cover.size;
  gi.cert.k = *gi.problem.target_k;
  gi.cert.t_star = t_star;
  gi.cert.answer = cover.exists() && cover.size <= sc.budget;
  if (gi.cert.answer) {
    // Transmission aligned with block j0 reaches exactly the elements of set
    // j0 at t_star; unused blocks pad the schedule to the full budget so the
    // path contributes budget*delta vertices.
    std::vector<char> used(m, 0);
    for (int j : cover.chosen) used[j - 1] = 1;
    int need = sc.budget - cover.size;
    for (int j0 = 0; j0 < m && need > 0; ++j0)
      if (!used[j0]) {
        used[j0] = 1;
        --need;
      }
    for (int j0 = 0; j0 < m; ++j0)
      if (used[j0]) gi.cert.witness.push_back((m - 1 - j0) * t_max + 1);
    std::sort(gi.cert.witness.begin(), gi.cert.witness.end());
  }
  verify_certificate(gi);
  return gi;
}

TemporalGraph sis_comparison_path() {
  return TemporalGraph::build(3, 4, false,
                              {{0, 1, 1}, {0, 1, 3}, {1, 2, 4}});
}

std::string certificate_json(const GeneratedInstance& gi) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["reduction"] = gi.reduction;
  j["answer"] = gi.cert.answer;
  j["k"] = gi.cert.k;
  j["witness_schedule"] = gi.cert.witness;
  j["cover_optimum"] = gi.cert.cover_optimum;
  j["objective"] = to_string(gi.problem.objective);
  j["source"] = gi.problem.source;
  j["delta"] = gi.problem.delta;
  j["budget"] = gi.problem.budget;
  j["constraint"] = to_string(gi.problem.constraint);
  j["n_vertices"] = gi.problem.graph.num_vertices();
  j["t_max"] = gi.problem.graph.t_max();
  j["periodic"] = gi.problem.graph.periodic();
  if (gi.cert.t_star) j["t_star"] = *gi.cert.t_star;
  if (gi.cert.d_gap) j["d_gap"] = *gi.cert.d_gap;
  j["names"] = gi.names;
  j["dummy_elements"] = gi.dummy_elements;
  if (gi.dummy_set_index) j["dummy_set_index"] = *gi.dummy_set_index;
  return j.dump(2) + "\n";
}

}  // namespace tg
