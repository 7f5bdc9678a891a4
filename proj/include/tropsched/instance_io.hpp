#pragma once

// Plain-text project instance documents.
//
//   # comment
//   title = Vaccination sessions
//   time-unit = min
//   diagonal = unit            # or "explicit": do not add b_ii = 0
//
//   [activities]
//   S1  duration=4  release=0  release-deadline=4  completion-deadline=12
//
//   [constraints]
//   # kind          from  to   lag
//   start-start     S1    S2   1      # x(S2) >= x(S1) + 1
//   start-finish    S1    S1   4      # y(S1) >= x(S1) + 4
//   finish-start    S1    S3   0      # x(S3) >= y(S1) + 0
//
// Undefined lags are simply absent. `release` may be omitted (no release
// time); `release-deadline` and `completion-deadline` are required.
// `duration=d` is shorthand for the start-finish lag from an activity to
// itself. Numbers are decimals or fractions ("2.5", "7/3").

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "tropsched/scheduling.hpp"

namespace tropsched {

enum class LagKind { start_start, start_finish, finish_start };

std::string to_string(LagKind kind);

template <class Num>
struct Lag {
  LagKind kind;
  std::size_t from;
  std::size_t to;
  Num value;

  friend bool operator==(const Lag&, const Lag&) = default;
};

template <class Num>
struct ActivitySpec {
  std::string name;
  Scalar<Num> release;  // bottom when absent
  Num release_deadline;
  Num completion_deadline;

  friend bool operator==(const ActivitySpec&, const ActivitySpec&) = default;
};

template <class Num>
struct InstanceDocument {
  std::string title;
  std::string time_unit;
  bool unit_diagonal = true;
  std::vector<ActivitySpec<Num>> activities;
  std::vector<Lag<Num>> lags;

  std::vector<std::string> names() const;
};

/// Throws ParseError with the offending line for schema violations, unknown
/// activities, duplicate lags and activities lacking a start-finish lag.
template <class Num>
InstanceDocument<Num> parse_instance_document(std::istream& in);

template <class Num>
InstanceDocument<Num> load_instance_document(const std::string& path);

/// Assembles B, C, D (bottom where no lag is given) and g, h, f.
template <class Num>
ProjectInstance<Num> to_instance(const InstanceDocument<Num>& doc);

/// Parses and assembles in one step.
template <class Num>
ProjectInstance<Num> parse_instance(const std::string& path);

/// Inverse of to_instance. Emits `diagonal = explicit` and every finite
/// entry, so parsing the result reproduces `inst` exactly. Names default to
/// A1, A2, ... when `names` is empty.
template <class Num>
InstanceDocument<Num> from_instance(const ProjectInstance<Num>& inst, std::vector<std::string> names = {},
                                    std::string title = {}, std::string time_unit = {});

template <class Num>
std::string serialize_instance(const InstanceDocument<Num>& doc);

/// Schedule documents for `verify`:
///
///   [schedule]
///   S1 start=0 finish=4
///
/// Every activity of the instance must appear once. A missing `finish` is
/// filled in as (C x)_i.
template <class Num>
Schedule<Num> parse_schedule(std::istream& in, const InstanceDocument<Num>& doc);

template <class Num>
Schedule<Num> load_schedule(const std::string& path, const InstanceDocument<Num>& doc);

template <class Num>
std::string serialize_schedule(const Schedule<Num>& sched, const std::vector<std::string>& names);

}  // namespace tropsched
