#include "tropsched/gantt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tropsched/error.hpp"

namespace tropsched {
namespace {

template <class Num>
long to_long(const Num& integral) {
  return std::lround(NumberTraits<Num>::to_double(integral));
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

template <class Num>
GanttChart<Num> layout_chart(const Schedule<Num>& sched, const std::vector<std::string>& names,
                             std::string title, std::string time_unit) {
  const std::size_t n = sched.x.size();
  if (sched.y.size() != n || names.size() != n) throw DimensionError("schedule and names differ in length");
  GanttChart<Num> chart;
  chart.title = std::move(title);
  chart.time_unit = std::move(time_unit);
  if (n == 0) {
    chart.origin = Num(0);
    return chart;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sched.x[i].is_bottom() || sched.y[i].is_bottom())
      throw DomainError("activity " + names[i] + " has no finite start or finish");
    if (sched.y[i] < sched.x[i]) throw DomainError("activity " + names[i] + " finishes before it starts");
  }
  Num min_x = sched.x[0].value();
  for (const auto& s : sched.x) min_x = std::min(min_x, s.value());
  chart.origin = NumberTraits<Num>::floor(min_x);
  for (std::size_t i = 0; i < n; ++i) {
    GanttBar<Num> bar{names[i], sched.x[i].value(), sched.y[i].value(), 0, 0};
    bar.first_col = to_long(NumberTraits<Num>::floor(Num(bar.start - chart.origin))) + 1;
    bar.last_col = to_long(NumberTraits<Num>::ceil(Num(bar.finish - chart.origin)));
    if (bar.finish == bar.start) bar.last_col = bar.first_col - 1;
    chart.columns = std::max(chart.columns, bar.last_col);
    chart.bars.push_back(std::move(bar));
  }
  return chart;
}

template <class Num>
std::string render_ascii(const GanttChart<Num>& chart) {
  std::size_t label = 0;
  for (const auto& b : chart.bars) label = std::max(label, b.name.size());
  std::ostringstream os;
  if (!chart.title.empty()) os << chart.title << "\n";
  os << "column c covers [" << NumberTraits<Num>::format(chart.origin) << " + c - 1, "
     << NumberTraits<Num>::format(chart.origin) << " + c]";
  if (!chart.time_unit.empty()) os << " " << chart.time_unit;
  os << "\n";
  os << std::string(label, ' ') << " ";
  for (long c = 1; c <= chart.columns; ++c) os << pad_left(std::to_string(c), 3);
  os << "\n";
  for (const auto& b : chart.bars) {
    os << pad_right(b.name, label) << " ";
    for (long c = 1; c <= chart.columns; ++c) os << (b.occupies(c) ? "===" : " . ");
    os << "  [" << NumberTraits<Num>::format(b.start) << ", " << NumberTraits<Num>::format(b.finish) << "]\n";
  }
  return os.str();
}

template <class Num>
std::string render_svg(const GanttChart<Num>& chart) {
  constexpr int col_w = 32, row_h = 28, bar_h = 18, pad = 12, char_w = 8;
  std::size_t label = 4;
  for (const auto& b : chart.bars) label = std::max(label, b.name.size());
  const int left = pad + static_cast<int>(label) * char_w + pad;
  const int top = pad + (chart.title.empty() ? 0 : 24) + 20;
  const long cols = std::max(chart.columns, 1L);
  const int width = left + static_cast<int>(cols) * col_w + pad;
  const int height = top + static_cast<int>(chart.bars.size()) * row_h + pad + 20;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"monospace\" font-size=\"12\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
  if (!chart.title.empty()) {
    os << "<text x=\"" << pad << "\" y=\"" << pad + 14 << "\" font-size=\"14\">" << xml_escape(chart.title)
       << "</text>\n";
  }
  os << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (long c = 0; c <= cols; ++c) {
    const int x = left + static_cast<int>(c) * col_w;
    os << "<line x1=\"" << x << "\" y1=\"" << top << "\" x2=\"" << x << "\" y2=\""
       << top + static_cast<int>(chart.bars.size()) * row_h << "\"/>\n";
  }
  os << "</g>\n<g text-anchor=\"middle\">\n";
  for (long c = 1; c <= cols; ++c) {
    os << "<text x=\"" << left + static_cast<int>(c) * col_w - col_w / 2 << "\" y=\"" << top - 6 << "\">" << c
       << "</text>\n";
  }
  os << "</g>\n";
  for (std::size_t i = 0; i < chart.bars.size(); ++i) {
    const auto& b = chart.bars[i];
    const int y = top + static_cast<int>(i) * row_h;
    const double x0 = left + NumberTraits<Num>::to_double(Num(b.start - chart.origin)) * col_w;
    const double w = NumberTraits<Num>::to_double(Num(b.finish - b.start)) * col_w;
    os << "<text x=\"" << pad << "\" y=\"" << y + row_h / 2 + 4 << "\">" << xml_escape(b.name) << "</text>\n";
    os << "<rect x=\"" << fixed(x0) << "\" y=\"" << y + (row_h - bar_h) / 2 << "\" width=\"" << fixed(w)
       << "\" height=\"" << bar_h << "\" fill=\"#4a7ab5\" stroke=\"#1f3f66\">"
       << "<title>" << xml_escape(b.name) << " [" << NumberTraits<Num>::format(b.start) << ", "
       << NumberTraits<Num>::format(b.finish) << "]</title></rect>\n";
  }
  const int axis_y = top + static_cast<int>(chart.bars.size()) * row_h + 16;
  os << "<text x=\"" << left << "\" y=\"" << axis_y << "\">column c covers ["
     << NumberTraits<Num>::format(chart.origin) << " + c - 1, " << NumberTraits<Num>::format(chart.origin)
     << " + c]" << (chart.time_unit.empty() ? "" : " " + xml_escape(chart.time_unit)) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

#define TROPSCHED_INSTANTIATE_GANTT(NUM)                                                              \
  template GanttChart<NUM> layout_chart(const Schedule<NUM>&, const std::vector<std::string>&,       \
                                        std::string, std::string);                                   \
  template std::string render_ascii(const GanttChart<NUM>&);                                         \
  template std::string render_svg(const GanttChart<NUM>&);

TROPSCHED_INSTANTIATE_GANTT(Rational)
TROPSCHED_INSTANTIATE_GANTT(double)

#undef TROPSCHED_INSTANTIATE_GANTT

}  // namespace tropsched
