#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tropsched/scheduling.hpp"

namespace tropsched {

/// Everything `solve` reports: the optimum, the generator and parameter
/// bounds, the two extreme schedules (u = u_low, u = u_high) with their
/// verification, and the reduction products R and s.
template <class Num>
struct ResultDocument {
  std::string title;
  std::string time_unit;
  ObjectiveKind objective = ObjectiveKind::makespan;
  std::vector<std::string> activities;
  Scalar<Num> theta;
  Matrix<Num> G;
  Vector<Num> u_low;
  Vector<Num> u_high;
  Matrix<Num> R;
  Vector<Num> s;
  Schedule<Num> low;
  Schedule<Num> high;
  bool unique = false;
  VerificationReport<Num> low_report;
  VerificationReport<Num> high_report;

  const Schedule<Num>& member(bool upper) const { return upper ? high : low; }

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

/// Solves nothing itself: packages a family, extracting and verifying both
/// extreme schedules against `inst`.
template <class Num>
ResultDocument<Num> make_result(const ProjectInstance<Num>& inst, const ScheduleFamily<Num>& fam,
                                std::vector<std::string> names, std::string title = {},
                                std::string time_unit = {}, const Num& tolerance = Num(0));

/// Bottom is null; exact integers are JSON integers when they fit in 64 bits,
/// other exact values are strings "p/q"; float mode uses JSON numbers.
template <class Num>
nlohmann::json scalar_to_json(const Scalar<Num>& s);
template <class Num>
Scalar<Num> scalar_from_json(const nlohmann::json& j);

template <class Num>
nlohmann::json to_json(const ResultDocument<Num>& doc);

/// Throws ParseError on a malformed document.
template <class Num>
ResultDocument<Num> result_from_json(const nlohmann::json& j);

/// Reads the "mode" field ("exact" or "float") of a serialized result.
std::string result_mode(const nlohmann::json& j);

nlohmann::json load_json(const std::string& path);

}  // namespace tropsched
