#include "tropsched/instance_io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace tropsched {

std::string to_string(LagKind kind) {
  switch (kind) {
    case LagKind::start_start: return "start-start";
    case LagKind::start_finish: return "start-finish";
    case LagKind::finish_start: return "finish-start";
  }
  return "?";
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

/// One non-blank line with comments stripped.
struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string t = trim(raw);
    if (!t.empty()) lines.push_back({no, std::move(t)});
  }
  return lines;
}

std::optional<std::string> section_name(const std::string& text) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') return trim(text.substr(1, text.size() - 2));
  return std::nullopt;
}

template <class Num>
Num parse_number(const std::string& text, std::size_t line, const std::string& field) {
  try {
    return NumberTraits<Num>::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(field + ": " + e.message(), line);
  }
}

std::optional<LagKind> lag_kind(const std::string& s) {
  if (s == "start-start") return LagKind::start_start;
  if (s == "start-finish") return LagKind::start_finish;
  if (s == "finish-start") return LagKind::finish_start;
  return std::nullopt;
}

std::pair<std::string, std::string> key_value(const std::string& tok, std::size_t line) {
  const auto eq = tok.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
    throw ParseError("expected key=value, got '" + tok + "'", line);
  return {tok.substr(0, eq), tok.substr(eq + 1)};
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

template <class Num>
std::vector<std::string> InstanceDocument<Num>::names() const {
  std::vector<std::string> out;
  out.reserve(activities.size());
  for (const auto& a : activities) out.push_back(a.name);
  return out;
}

template <class Num>
InstanceDocument<Num> parse_instance_document(std::istream& in) {
  InstanceDocument<Num> doc;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::size_t> activity_line;
  std::map<std::tuple<LagKind, std::size_t, std::size_t>, std::size_t> seen_lag;
  std::string section;

  const auto lookup = [&](const std::string& name, std::size_t line) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError("unknown activity '" + name + "'", line);
    return it->second;
  };
  const auto add_lag = [&](Lag<Num> lag, std::size_t line) {
    auto key = std::make_tuple(lag.kind, lag.from, lag.to);
    if (auto it = seen_lag.find(key); it != seen_lag.end()) {
      throw ParseError("duplicate " + to_string(lag.kind) + " lag " + doc.activities[lag.from].name + " -> " +
                           doc.activities[lag.to].name + " (first given on line " +
                           std::to_string(it->second) + ")",
                       line);
    }
    seen_lag.emplace(key, line);
    doc.lags.push_back(std::move(lag));
  };

  for (const auto& [no, text] : read_lines(in)) {
    if (auto s = section_name(text)) {
      if (*s != "activities" && *s != "constraints") throw ParseError("unknown section [" + *s + "]", no);
      section = *s;
      continue;
    }
    if (section.empty()) {
      const auto eq = text.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'key = value' before the first section", no);
      const std::string key = trim(text.substr(0, eq));
      const std::string value = trim(text.substr(eq + 1));
      if (key == "title") {
        doc.title = value;
      } else if (key == "time-unit") {
        doc.time_unit = value;
      } else if (key == "diagonal") {
        if (value != "unit" && value != "explicit")
          throw ParseError("diagonal must be 'unit' or 'explicit'", no);
        doc.unit_diagonal = value == "unit";
      } else {
        throw ParseError("unknown header key '" + key + "'", no);
      }
      continue;
    }

    const auto tokens = split_ws(text);
    if (section == "activities") {
      const std::string& name = tokens.front();
      if (name.find('=') != std::string::npos) throw ParseError("activity line must start with a name", no);
      if (index.count(name)) throw ParseError("duplicate activity '" + name + "'", no);
      const std::size_t id = doc.activities.size();
      index.emplace(name, id);
      activity_line.push_back(no);
      ActivitySpec<Num> act{name, Scalar<Num>::bottom(), Num(0), Num(0)};
      bool have_h = false, have_f = false;
      std::optional<Num> duration;
      std::map<std::string, bool> given;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        auto [key, value] = key_value(tokens[t], no);
        if (given[key]) throw ParseError("field '" + key + "' given twice", no);
        given[key] = true;
        if (key == "release") {
          act.release = Scalar<Num>(parse_number<Num>(value, no, key));
        } else if (key == "release-deadline") {
          act.release_deadline = parse_number<Num>(value, no, key);
          have_h = true;
        } else if (key == "completion-deadline") {
          act.completion_deadline = parse_number<Num>(value, no, key);
          have_f = true;
        } else if (key == "duration") {
          duration = parse_number<Num>(value, no, key);
        } else {
          throw ParseError("unknown activity field '" + key + "'", no);
        }
      }
      if (!have_h) throw ParseError("activity '" + name + "' lacks release-deadline", no);
      if (!have_f) throw ParseError("activity '" + name + "' lacks completion-deadline", no);
      doc.activities.push_back(std::move(act));
      if (duration) add_lag(Lag<Num>{LagKind::start_finish, id, id, *duration}, no);
    } else {
      if (tokens.size() != 4) throw ParseError("constraint needs: kind from to lag", no);
      auto kind = lag_kind(tokens[0]);
      if (!kind) throw ParseError("unknown constraint kind '" + tokens[0] + "'", no);
      const std::size_t from = lookup(tokens[1], no);
      const std::size_t to = lookup(tokens[2], no);
      add_lag(Lag<Num>{*kind, from, to, parse_number<Num>(tokens[3], no, "lag")}, no);
    }
  }

  if (doc.activities.empty()) throw ParseError("no activities declared");
  const std::size_t n = doc.activities.size();
  std::vector<bool> has_finish(n, false), drives_finish(n, false);
  for (const auto& lag : doc.lags) {
    if (lag.kind != LagKind::start_finish) continue;
    has_finish[lag.to] = true;
    drives_finish[lag.from] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!has_finish[i])
      throw ParseError("activity '" + doc.activities[i].name + "' has no start-finish lag defining its finish",
                       activity_line[i]);
    if (!drives_finish[i])
      throw ParseError("start of activity '" + doc.activities[i].name +
                           "' bounds no finish time (start-finish matrix not column-regular)",
                       activity_line[i]);
  }
  return doc;
}

template <class Num>
InstanceDocument<Num> load_instance_document(const std::string& path) {
  auto in = open_or_throw(path);
  try {
    return parse_instance_document<Num>(in);
  } catch (const ParseError& e) {
    throw e.in_file(path);
  }
}

template <class Num>
ProjectInstance<Num> to_instance(const InstanceDocument<Num>& doc) {
  const std::size_t n = doc.activities.size();
  ProjectInstance<Num> inst{Matrix<Num>(n, n), Matrix<Num>(n, n), Matrix<Num>(n, n),
                            Vector<Num>(n),    Vector<Num>(n),    Vector<Num>(n)};
  for (const auto& lag : doc.lags) {
    Matrix<Num>& m = lag.kind == LagKind::start_start    ? inst.B
                     : lag.kind == LagKind::start_finish ? inst.C
                                                         : inst.D;
    m(lag.to, lag.from) = Scalar<Num>(lag.value);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (doc.unit_diagonal) inst.B(i, i) += Scalar<Num>::one();
    const auto& a = doc.activities[i];
    inst.g[i] = a.release;
    inst.h[i] = Scalar<Num>(a.release_deadline);
    inst.f[i] = Scalar<Num>(a.completion_deadline);
  }
  return inst;
}

template <class Num>
ProjectInstance<Num> parse_instance(const std::string& path) {
  return to_instance(load_instance_document<Num>(path));
}

template <class Num>
InstanceDocument<Num> from_instance(const ProjectInstance<Num>& inst, std::vector<std::string> names,
                                    std::string title, std::string time_unit) {
  validate_instance(inst);
  const std::size_t n = inst.size();
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("A" + std::to_string(i + 1));
  if (names.size() != n) throw DimensionError("one name per activity required");
  InstanceDocument<Num> doc;
  doc.title = std::move(title);
  doc.time_unit = std::move(time_unit);
  doc.unit_diagonal = false;
  for (std::size_t i = 0; i < n; ++i)
    doc.activities.push_back({names[i], inst.g[i], inst.h[i].value(), inst.f[i].value()});
  const auto emit = [&](LagKind kind, const Matrix<Num>& m) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, j).is_finite()) doc.lags.push_back({kind, j, i, m(i, j).value()});
  };
  emit(LagKind::start_finish, inst.C);
  emit(LagKind::start_start, inst.B);
  emit(LagKind::finish_start, inst.D);
  return doc;
}

template <class Num>
std::string serialize_instance(const InstanceDocument<Num>& doc) {
  using T = NumberTraits<Num>;
  std::ostringstream os;
  if (!doc.title.empty()) os << "title = " << doc.title << "\n";
  if (!doc.time_unit.empty()) os << "time-unit = " << doc.time_unit << "\n";
  os << "diagonal = " << (doc.unit_diagonal ? "unit" : "explicit") << "\n\n[activities]\n";
  for (const auto& a : doc.activities) {
    os << a.name;
    if (a.release.is_finite()) os << " release=" << T::format(a.release.value());
    os << " release-deadline=" << T::format(a.release_deadline)
       << " completion-deadline=" << T::format(a.completion_deadline) << "\n";
  }
  os << "\n[constraints]\n";
  for (const auto& lag : doc.lags)
    os << to_string(lag.kind) << " " << doc.activities[lag.from].name << " " << doc.activities[lag.to].name
       << " " << T::format(lag.value) << "\n";
  return os.str();
}

template <class Num>
Schedule<Num> parse_schedule(std::istream& in, const InstanceDocument<Num>& doc) {
  const std::size_t n = doc.activities.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(doc.activities[i].name, i);
  Schedule<Num> s{Vector<Num>(n), Vector<Num>(n)};
  std::vector<bool> seen(n, false), has_finish(n, false);
  for (const auto& [no, text] : read_lines(in)) {
    if (auto sec = section_name(text)) {
      if (*sec != "schedule") throw ParseError("unknown section [" + *sec + "]", no);
      continue;
    }
    const auto tokens = split_ws(text);
    auto it = index.find(tokens.front());
    if (it == index.end()) throw ParseError("unknown activity '" + tokens.front() + "'", no);
    const std::size_t i = it->second;
    if (seen[i]) throw ParseError("activity '" + tokens.front() + "' scheduled twice", no);
    seen[i] = true;
    bool has_start = false;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      auto [key, value] = key_value(tokens[t], no);
      if (key == "start") {
        s.x[i] = Scalar<Num>(parse_number<Num>(value, no, key));
        has_start = true;
      } else if (key == "finish") {
        s.y[i] = Scalar<Num>(parse_number<Num>(value, no, key));
        has_finish[i] = true;
      } else {
        throw ParseError("unknown schedule field '" + key + "'", no);
      }
    }
    if (!has_start) throw ParseError("activity '" + tokens.front() + "' lacks start", no);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) throw ParseError("activity '" + doc.activities[i].name + "' missing from schedule");
  const Vector<Num> cx = mat_vec(to_instance(doc).C, s.x);
  for (std::size_t i = 0; i < n; ++i)
    if (!has_finish[i]) s.y[i] = cx[i];
  return s;
}

template <class Num>
Schedule<Num> load_schedule(const std::string& path, const InstanceDocument<Num>& doc) {
  auto in = open_or_throw(path);
  try {
    return parse_schedule<Num>(in, doc);
  } catch (const ParseError& e) {
    throw e.in_file(path);
  }
}

template <class Num>
std::string serialize_schedule(const Schedule<Num>& sched, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "[schedule]\n";
  for (std::size_t i = 0; i < names.size(); ++i)
    os << names[i] << " start=" << sched.x[i] << " finish=" << sched.y[i] << "\n";
  return os.str();
}

#define TROPSCHED_INSTANTIATE_INSTANCE_IO(NUM)                                                         \
  template struct InstanceDocument<NUM>;                                                                \
  template InstanceDocument<NUM> parse_instance_document(std::istream&);                               \
  template InstanceDocument<NUM> load_instance_document(const std::string&);                           \
  template ProjectInstance<NUM> to_instance(const InstanceDocument<NUM>&);                             \
  template ProjectInstance<NUM> parse_instance(const std::string&);                                    \
  template InstanceDocument<NUM> from_instance(const ProjectInstance<NUM>&, std::vector<std::string>, \
                                               std::string, std::string);                              \
  template std::string serialize_instance(const InstanceDocument<NUM>&);                               \
  template Schedule<NUM> parse_schedule(std::istream&, const InstanceDocument<NUM>&);                  \
  template Schedule<NUM> load_schedule(const std::string&, const InstanceDocument<NUM>&);              \
  template std::string serialize_schedule(const Schedule<NUM>&, const std::vector<std::string>&);

TROPSCHED_INSTANTIATE_INSTANCE_IO(Rational)
TROPSCHED_INSTANTIATE_INSTANCE_IO(double)

#undef TROPSCHED_INSTANTIATE_INSTANCE_IO

}  // namespace tropsched
