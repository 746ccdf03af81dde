#pragma once

#include <string>
#include <vector>

namespace tg {

using Vertex = int;

/// Strictly increasing transmission time steps (1-based).
using Schedule = std::vector<int>;

enum class Objective { MaxSpread, MaxViral, MaxViralTstep, MinNonViralTime };

enum class DynamicsKind {
  Renewal,     // adjacency to any active vertex resets the counter, even when active
  ClassicSis,  // only inactive vertices are infected; active ones always decay
};

/// Constraint regime a schedule must satisfy.
struct ScheduleConstraint {
  enum class Kind { Unconstrained, FixedWindow, ShiftingWindow };
  Kind kind = Kind::Unconstrained;
  int w = 0;  // fixed window width
  int x = 0;  // shifting: min gap
  int y = 0;  // shifting: max gap

  static ScheduleConstraint unconstrained() { return {}; }
  static ScheduleConstraint fixed_window(int w) {
    ScheduleConstraint c;
    c.kind = Kind::FixedWindow;
    c.w = w;
    return c;
  }
  static ScheduleConstraint shifting_window(int x, int y) {
    ScheduleConstraint c;
    c.kind = Kind::ShiftingWindow;
    c.x = x;
    c.y = y;
    return c;
  }
};

const char* to_string(Objective o);
const char* to_string(DynamicsKind k);
std::string to_string(const ScheduleConstraint& c);

}  // namespace tg
