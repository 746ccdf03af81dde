#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tg/temporal_graph.hpp"
#include "tg/types.hpp"

namespace tg {

/// SetCover input: elements 1..n, sets of elements, cover budget.
struct SetCoverInstance {
  int n = 0;
  std::vector<std::vector<int>> sets;
  int budget = 0;

  void validate() const;
};

/// VertexCover input: vertices 1..n (degree at most 3), edges, cover budget.
struct VertexCoverInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  int budget = 0;

  void validate() const;
};

/// Text formats:
///   sc <n> <m> <b>   followed by m lines of space-separated elements
///   vc <n> <m> <l>   followed by m lines of "u v"
SetCoverInstance parse_setcover(std::istream& in);
VertexCoverInstance parse_vertexcover(std::istream& in);

struct CoverSolution {
  int size = -1;              // -1: no cover exists
  std::vector<int> chosen;    // 1-based set / vertex indices
  bool exists() const { return size >= 0; }
};

/// Exhaustive optima; capped at 20 elements / vertices.
CoverSolution solve_setcover_exact(const SetCoverInstance& sc);
CoverSolution solve_vertexcover_exact(const VertexCoverInstance& vc);

/// Known answer carried by a generated instance. The witness schedule is
/// derived from an optimal cover, so the "yes" direction can be checked by
/// plain simulation with no solver in the loop.
struct Certificate {
  bool answer = false;
  long long k = 0;
  Schedule witness;  // empty on "no" instances
  int cover_optimum = -1;
  std::optional<int> t_star;
  std::optional<int> d_gap;
};

struct GeneratedInstance {
  std::string reduction;
  ProblemInstance problem;
  std::vector<std::string> names;  // per vertex id
  Certificate cert;
  std::vector<int> dummy_elements;     // padding elements (1-based)
  std::optional<int> dummy_set_index;  // padding set (1-based), when added
};

/// Compact JSON sidecar with the certificate, problem parameters and name
/// table; written next to the .tgft file by the CLI.
std::string certificate_json(const GeneratedInstance& gi);

/// Source-rooted perfect binary tree whose pendant leaves encode set
/// membership through edge labels: all pendants are reachable within the
/// budget iff the SetCover instance has a cover of that size. Objective:
/// MaxSpread over every non-source vertex.
GeneratedInstance gen_spread_tree(const SetCoverInstance& sc, int delta);

/// Tree with per-leaf keep-alive chains (x_i - y_i - z_i): lighting every
/// chain and refreshing the leaves with one final transmission maximizes the
/// simultaneously active count iff a cover exists. Objective: MaxViral, or
/// MaxViralTstep at the synchronization step.
GeneratedInstance gen_viral_tree(const SetCoverInstance& sc, int delta,
                                 Objective objective = Objective::MaxViral);

/// Tree whose gadget leaves re-activate every vertex after at most one
/// inactive step, making full activation with gap d=1 equivalent to covering.
GeneratedInstance gen_minnonviral_tree(const SetCoverInstance& sc, int delta);

enum class WindowRegime { Fixed, Shifting };

/// Star around the source with one leaf per VertexCover edge and vertex;
/// window-constrained schedules must choose, per width-2*delta window, between
/// covering a vertex's incident edges and collecting its private leaf.
/// Shifting regime spaces the windows delta steps apart under (2d,4d) gaps.
GeneratedInstance gen_window_star(const VertexCoverInstance& vc, int delta,
                                  WindowRegime regime);

/// Periodic path with cycling labels plus element vertices hanging off each
/// period block; hitting the right blocks in phase activates all elements at
/// the certificate time step. Requires delta < t_max, budget <= set count.
GeneratedInstance gen_periodic_path(const SetCoverInstance& sc, int delta,
                                    int t_max,
                                    Objective objective = Objective::MaxViralTstep);

/// Three-vertex path bundled for the classic-SIS comparison: under classic
/// SIS transmitting at (1,3) reaches strictly fewer vertices than (3) alone,
/// while renewal dynamics is monotone on the same instance.
TemporalGraph sis_comparison_path();

}  // namespace tg
