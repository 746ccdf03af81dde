#include "tg/temporal_graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace tg {

const std::vector<std::pair<Vertex, Vertex>> TemporalGraph::kNoEdges{};

const char* to_string(Objective o) {
  switch (o) {
    case Objective::MaxSpread: return "max-spread";
    case Objective::MaxViral: return "max-viral";
    case Objective::MaxViralTstep: return "max-viral-tstep";
    case Objective::MinNonViralTime: return "min-non-viral-time";
  }
  return "?";
}

const char* to_string(DynamicsKind k) {
  return k == DynamicsKind::Renewal ? "renewal" : "sis";
}

std::string to_string(const ScheduleConstraint& c) {
  switch (c.kind) {
    case ScheduleConstraint::Kind::Unconstrained: return "unconstrained";
    case ScheduleConstraint::Kind::FixedWindow:
      return "fixed:" + std::to_string(c.w);
    case ScheduleConstraint::Kind::ShiftingWindow:
      return "shifting:" + std::to_string(c.x) + "," + std::to_string(c.y);
  }
  return "?";
}

TemporalGraph TemporalGraph::build(
    int n, int t_max, bool periodic,
    const std::vector<std::tuple<int, int, int>>& labeled) {
  if (n < 1) throw ValidationError("vertex count must be positive");
  if (t_max < 1) throw ValidationError("t_max must be positive");

  TemporalGraph g;
  g.n_ = n;
  g.t_max_ = t_max;
  g.periodic_ = periodic;
  g.by_step_.assign(t_max, {});

  std::map<std::pair<Vertex, Vertex>, std::vector<int>> labels;
  for (auto [u, v, t] : labeled) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ValidationError("edge endpoint out of range: (" +
                            std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) throw ValidationError("self loop at vertex " + std::to_string(u));
    if (t < 1 || t > t_max)
      throw ValidationError("edge label " + std::to_string(t) +
                            " outside [1," + std::to_string(t_max) + "]");
    if (u > v) std::swap(u, v);
    labels[{u, v}].push_back(t);
  }

  for (auto& [uv, ts] : labels) {
    std::sort(ts.begin(), ts.end());
    if (std::adjacent_find(ts.begin(), ts.end()) != ts.end())
      throw ValidationError("duplicate label on edge (" +
                            std::to_string(uv.first) + "," +
                            std::to_string(uv.second) + ")");
    for (int t : ts) g.by_step_[t - 1].push_back(uv);
    g.edges_.push_back({uv.first, uv.second, ts});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const LabeledEdge& a, const LabeledEdge& b) {
    return std::tie(a.labels.front(), a.u, a.v) < std::tie(b.labels.front(), b.u, b.v);
  });
  for (auto& step : g.by_step_) std::sort(step.begin(), step.end());
  return g;
}

std::vector<std::pair<Vertex, Vertex>> TemporalGraph::underlying_edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

std::size_t TemporalGraph::num_temporal_edges() const {
  std::size_t c = 0;
  for (const auto& e : edges_) c += e.labels.size();
  return c;
}

bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.t_max() != b.t_max() ||
      a.periodic() != b.periodic())
    return false;
  const auto& ea = a.edges();
  const auto& eb = b.edges();
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i].u != eb[i].u || ea[i].v != eb[i].v || ea[i].labels != eb[i].labels)
      return false;
  return true;
}

namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

long parse_int(const std::string& tok, int line_no) {
  std::size_t pos = 0;
  long val = 0;
  try {
    val = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line_no, "expected integer, got '" + tok + "'");
  return val;
}

}  // namespace

TemporalGraph parse_tgft(std::istream& in) {
  std::string line;
  int line_no = 0;
  int header_fields_seen = 0;  // 0 = magic pending, 1 = dims pending, 2 = done
  long n = 0, t_max = 0;
  bool periodic = false;
  std::vector<std::tuple<int, int, int>> labeled;
  // Track (edge, label) duplicates here so the error carries a line number.
  std::map<std::pair<int, int>, std::vector<char>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;

    if (header_fields_seen == 0) {
      if (toks.size() != 2 || toks[0] != "tgf" || toks[1] != "1")
        throw ParseError(line_no, "expected header 'tgf 1'");
      header_fields_seen = 1;
      continue;
    }
    if (header_fields_seen == 1) {
      if (toks.size() < 2 || toks.size() > 3)
        throw ParseError(line_no, "expected '<n> <t_max> [periodic]'");
      n = parse_int(toks[0], line_no);
      t_max = parse_int(toks[1], line_no);
      if (toks.size() == 3) {
        if (toks[2] != "periodic")
          throw ParseError(line_no, "unknown flag '" + toks[2] + "'");
        periodic = true;
      }
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      if (t_max < 1) throw ParseError(line_no, "t_max must be positive");
      header_fields_seen = 2;
      continue;
    }

    if (toks[0] != "e")
      throw ParseError(line_no, "expected edge line 'e <u> <v> <t...>'");
    if (toks.size() < 4)
      throw ParseError(line_no, "edge line needs two endpoints and at least one label");
    long u = parse_int(toks[1], line_no);
    long v = parse_int(toks[2], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_no, "endpoint out of range");
    if (u == v) throw ParseError(line_no, "self loop");
    auto key = std::make_pair(static_cast<int>(std::min(u, v)),
                              static_cast<int>(std::max(u, v)));
    auto& marks = seen[key];
    if (marks.empty()) marks.assign(static_cast<std::size_t>(t_max), 0);
    for (std::size_t i = 3; i < toks.size(); ++i) {
      long t = parse_int(toks[i], line_no);
      if (t < 1 || t > t_max)
        throw ParseError(line_no, "label " + std::to_string(t) + " outside [1," +
                                      std::to_string(t_max) + "]");
      if (marks[t - 1])
        throw ParseError(line_no, "duplicate label " + std::to_string(t) +
                                      " on edge (" + std::to_string(key.first) +
                                      "," + std::to_string(key.second) + ")");
      marks[t - 1] = 1;
      labeled.emplace_back(key.first, key.second, static_cast<int>(t));
    }
  }
  if (header_fields_seen < 2) throw ParseError(line_no, "truncated header");
  return TemporalGraph::build(static_cast<int>(n), static_cast<int>(t_max),
                              periodic, labeled);
}

TemporalGraph parse_tgft(const std::string& text) {
  std::istringstream ss(text);
  return parse_tgft(ss);
}

TemporalGraph load_tgft(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open graph file: " + path);
  return parse_tgft(f);
}

std::string serialize_tgft(const TemporalGraph& g) {
  std::ostringstream out;
  out << "tgf 1\n";
  out << g.num_vertices() << ' ' << g.t_max();
  if (g.periodic()) out << " periodic";
  out << '\n';
  for (const auto& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v;
    for (int t : e.labels) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

void save_tgft(const TemporalGraph& g, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open output file: " + path);
  f << serialize_tgft(g);
}

void validate_schedule(const Schedule& times, const TemporalGraph& g) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 1)
      throw ValidationError("transmission time must be >= 1");
    if (i > 0 && times[i] <= times[i - 1])
      throw ValidationError("transmission times must be strictly increasing");
    if (!g.periodic() && times[i] > g.t_max())
      throw ValidationError("transmission time " + std::to_string(times[i]) +
                            " past lifetime of a non-periodic graph");
  }
}

void ProblemInstance::validate() const {
  if (source < 0 || source >= graph.num_vertices())
    throw ValidationError("source out of range");
  if (delta < 1) throw ValidationError("delta must be >= 1");
  if (budget < 0) throw ValidationError("budget must be >= 0");
  if (objective == Objective::MaxViralTstep) {
    if (!t_star) throw ValidationError("max-viral-tstep needs t_star");
    if (*t_star < 1) throw ValidationError("t_star must be >= 1");
    if (!graph.periodic() && *t_star > graph.t_max())
      throw ValidationError("t_star past lifetime of a non-periodic graph");
  }
  if (objective == Objective::MinNonViralTime) {
    if (!d_gap || *d_gap < 1)
      throw ValidationError("min-non-viral-time needs d_gap >= 1");
  }
  if (constraint.kind == ScheduleConstraint::Kind::FixedWindow && constraint.w < 1)
    throw ValidationError("fixed window width must be >= 1");
  if (constraint.kind == ScheduleConstraint::Kind::ShiftingWindow &&
      (constraint.x < 1 || constraint.x > constraint.y))
    throw ValidationError("shifting window needs 1 <= x <= y");
}

}  // namespace tg
