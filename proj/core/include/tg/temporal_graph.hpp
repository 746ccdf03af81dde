#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tg/errors.hpp"
#include "tg/types.hpp"

namespace tg {

/// A temporal graph: a fixed vertex set 0..n-1 plus one edge set per time
/// step 1..t_max. When `periodic` is set, the edge sequence repeats with
/// period t_max, so the edge set at step t is the one labeled
/// ((t-1) mod t_max)+1.
///
/// Immutable after construction; safe to share across solver threads.
class TemporalGraph {
 public:
  struct LabeledEdge {
    Vertex u, v;              // u < v
    std::vector<int> labels;  // sorted, unique, within [1, t_max]
  };

  /// Validates and builds. `labeled` entries are (u, v, t) triples; duplicate
  /// (edge, label) pairs, self loops, and out-of-range values are rejected.
  static TemporalGraph build(int n, int t_max, bool periodic,
                             const std::vector<std::tuple<int, int, int>>& labeled);

  int num_vertices() const { return n_; }
  int t_max() const { return t_max_; }
  bool periodic() const { return periodic_; }

  /// Edge set live at time step t (>= 1). Non-periodic graphs have no edges
  /// past t_max; periodic graphs wrap.
  const std::vector<std::pair<Vertex, Vertex>>& edges_at(int t) const {
    if (t > t_max_) {
      if (!periodic_) return kNoEdges;
      t = (t - 1) % t_max_ + 1;
    }
    return by_step_[t - 1];
  }

  /// One entry per underlying edge, canonically ordered by
  /// (first label, min endpoint, max endpoint).
  const std::vector<LabeledEdge>& edges() const { return edges_; }

  /// Edge set of the underlying (static) graph, ordered as edges().
  std::vector<std::pair<Vertex, Vertex>> underlying_edges() const;

  std::size_t num_temporal_edges() const;

 private:
  int n_ = 0;
  int t_max_ = 1;
  bool periodic_ = false;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> by_step_;
  std::vector<LabeledEdge> edges_;
  static const std::vector<std::pair<Vertex, Vertex>> kNoEdges;
};

/// Parses the TGF-T text format:
///   tgf 1
///   <n> <t_max> [periodic]
///   e <u> <v> <t1> <t2> ... <tk>     (all labels of one edge on one line)
///   # comment lines and blank lines are ignored
TemporalGraph parse_tgft(std::istream& in);
TemporalGraph parse_tgft(const std::string& text);
TemporalGraph load_tgft(const std::string& path);

/// Canonical form; parse(serialize(g)) == g and two calls are byte-identical.
std::string serialize_tgft(const TemporalGraph& g);
void save_tgft(const TemporalGraph& g, const std::string& path);

bool operator==(const TemporalGraph& a, const TemporalGraph& b);

/// Throws ValidationError unless `times` is strictly increasing, all >= 1,
/// and (for non-periodic graphs) all <= t_max.
void validate_schedule(const Schedule& times, const TemporalGraph& g);

/// One problem: graph, source, counter value, budget, objective and its
/// objective-specific extras.
struct ProblemInstance {
  TemporalGraph graph;
  Vertex source = 0;
  int delta = 1;
  int budget = 0;
  std::optional<long long> target_k;  // decision threshold, source excluded
  Objective objective = Objective::MaxSpread;
  std::optional<int> t_star;  // MaxViralTstep
  std::optional<int> d_gap;   // MinNonViralTime
  ScheduleConstraint constraint;
  DynamicsKind dynamics = DynamicsKind::Renewal;

  void validate() const;
};

}  // namespace tg
