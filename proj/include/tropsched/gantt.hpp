#pragma once

// Gantt charts of a single schedule.
//
// Column convention: times are laid on a unit grid anchored at
// origin = floor(min_i x_i). Column c (counting from 1) covers the time
// interval [origin + c - 1, origin + c]. A bar for [x_i, y_i] occupies the
// columns first = floor(x_i - origin) + 1 through last = ceil(y_i - origin),
// both inclusive, so with origin 0 the bar [0, 4] fills columns 1-4 and
// [4, 9] fills columns 5-9. A zero-length bar occupies no column.

#include <string>
#include <vector>

#include "tropsched/scheduling.hpp"

namespace tropsched {

template <class Num>
struct GanttBar {
  std::string name;
  Num start;
  Num finish;
  long first_col;
  long last_col;  // first_col - 1 for a zero-length bar

  bool occupies(long col) const noexcept { return col >= first_col && col <= last_col; }
};

template <class Num>
struct GanttChart {
  std::string title;
  std::string time_unit;
  Num origin;
  long columns = 0;
  std::vector<GanttBar<Num>> bars;
};

/// Throws DomainError when the schedule has a bottom entry or y_i < x_i.
template <class Num>
GanttChart<Num> layout_chart(const Schedule<Num>& sched, const std::vector<std::string>& names,
                             std::string title = {}, std::string time_unit = {});

/// One row per activity, three characters per column ("===" occupied,
/// " . " free), followed by the bar's exact time span.
template <class Num>
std::string render_ascii(const GanttChart<Num>& chart);

/// Self-contained SVG. Output depends only on the chart, byte for byte.
template <class Num>
std::string render_svg(const GanttChart<Num>& chart);

}  // namespace tropsched
