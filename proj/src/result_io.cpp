#include "tropsched/result_io.hpp"

#include <fstream>
#include <limits>

#include "tropsched/error.hpp"

namespace tropsched {
namespace {

using nlohmann::json;

constexpr ConstraintClass all_classes[] = {
    ConstraintClass::start_start,      ConstraintClass::start_finish,
    ConstraintClass::finish_start,     ConstraintClass::release,
    ConstraintClass::release_deadline, ConstraintClass::completion_deadline,
};

ConstraintClass class_from_string(const std::string& s) {
  for (auto c : all_classes)
    if (to_string(c) == s) return c;
  throw ParseError("unknown constraint class '" + s + "'");
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

template <class Num>
json vector_to_json(const Vector<Num>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(scalar_to_json(s));
  return a;
}

template <class Num>
Vector<Num> vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of numbers");
  Vector<Num> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(scalar_from_json<Num>(e));
  return v;
}

template <class Num>
json matrix_to_json(const Matrix<Num>& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(vector_to_json(a.row_vector(i)));
  return rows;
}

template <class Num>
Matrix<Num> matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rows");
  std::vector<Vector<Num>> rows;
  for (const auto& r : j) rows.push_back(vector_from_json<Num>(r));
  try {
    return Matrix<Num>::from_rows(rows);
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

json index_to_json(std::size_t i) {
  if (i == Violation<double>::npos) return nullptr;
  return i + 1;
}

std::size_t index_from_json(const json& j) {
  if (j.is_null()) return Violation<double>::npos;
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) throw ParseError("bad activity index");
  return j.get<std::size_t>() - 1;
}

template <class Num>
json member_to_json(const Schedule<Num>& s, const VerificationReport<Num>& rep) {
  json v = json::array();
  for (const auto& viol : rep.violations) {
    v.push_back({{"constraint", to_string(viol.kind)},
                 {"i", index_to_json(viol.i)},
                 {"j", index_to_json(viol.j)},
                 {"lhs", scalar_to_json(viol.lhs)},
                 {"rhs", scalar_to_json(viol.rhs)}});
  }
  return {{"x", vector_to_json(s.x)},
          {"y", vector_to_json(s.y)},
          {"feasible", rep.feasible()},
          {"violations", v}};
}

template <class Num>
void member_from_json(const json& j, Schedule<Num>& s, VerificationReport<Num>& rep) {
  s.x = vector_from_json<Num>(field(j, "x"));
  s.y = vector_from_json<Num>(field(j, "y"));
  rep.violations.clear();
  const json& v = field(j, "violations");
  if (!v.is_array()) throw ParseError("'violations' must be an array");
  for (const auto& e : v) {
    Violation<Num> viol{class_from_string(field(e, "constraint").get<std::string>()),
                        index_from_json(field(e, "i")), index_from_json(field(e, "j")),
                        scalar_from_json<Num>(field(e, "lhs")), scalar_from_json<Num>(field(e, "rhs"))};
    rep.violations.push_back(std::move(viol));
  }
}

}  // namespace

template <class Num>
ResultDocument<Num> make_result(const ProjectInstance<Num>& inst, const ScheduleFamily<Num>& fam,
                                std::vector<std::string> names, std::string title, std::string time_unit,
                                const Num& tolerance) {
  ResultDocument<Num> doc;
  doc.title = std::move(title);
  doc.time_unit = std::move(time_unit);
  doc.objective = fam.objective;
  doc.activities = std::move(names);
  doc.theta = fam.theta();
  doc.G = fam.G();
  doc.u_low = fam.u_low();
  doc.u_high = fam.u_high();
  doc.R = fam.R;
  doc.s = fam.s;
  doc.low = extract_schedule(fam, fam.u_low());
  doc.high = extract_schedule(fam, fam.u_high());
  doc.unique = doc.low == doc.high;
  doc.low_report = verify_schedule(inst, doc.low, tolerance);
  doc.high_report = verify_schedule(inst, doc.high, tolerance);
  return doc;
}

template <>
json scalar_to_json(const Scalar<Rational>& s) {
  if (s.is_bottom()) return nullptr;
  const Rational& v = s.value();
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return static_cast<std::int64_t>(v.get_num().get_si());
  return NumberTraits<Rational>::format(v);
}

template <>
json scalar_to_json(const Scalar<double>& s) {
  if (s.is_bottom()) return nullptr;
  return s.value();
}

template <>
Scalar<Rational> scalar_from_json(const json& j) {
  if (j.is_null()) return Scalar<Rational>::bottom();
  if (j.is_number_integer()) return Scalar<Rational>::of(j.get<long>());
  if (j.is_string()) return Scalar<Rational>(NumberTraits<Rational>::parse(j.get<std::string>()));
  if (j.is_number_float()) return Scalar<Rational>(NumberTraits<Rational>::parse(j.dump()));
  throw ParseError("expected a number, a fraction string or null");
}

template <>
Scalar<double> scalar_from_json(const json& j) {
  if (j.is_null()) return Scalar<double>::bottom();
  if (j.is_number()) return Scalar<double>(j.get<double>());
  if (j.is_string()) return Scalar<double>(NumberTraits<double>::parse(j.get<std::string>()));
  throw ParseError("expected a number, a fraction string or null");
}

template <class Num>
json to_json(const ResultDocument<Num>& doc) {
  json j;
  j["mode"] = NumberTraits<Num>::name;
  j["title"] = doc.title;
  j["time_unit"] = doc.time_unit;
  j["objective"] = to_string(doc.objective);
  j["activities"] = doc.activities;
  j["theta"] = scalar_to_json(doc.theta);
  j["G"] = matrix_to_json(doc.G);
  j["u_low"] = vector_to_json(doc.u_low);
  j["u_high"] = vector_to_json(doc.u_high);
  j["R"] = matrix_to_json(doc.R);
  j["s"] = vector_to_json(doc.s);
  j["unique"] = doc.unique;
  j["schedules"] = {{"low", member_to_json(doc.low, doc.low_report)},
                    {"high", member_to_json(doc.high, doc.high_report)}};
  return j;
}

template <class Num>
ResultDocument<Num> result_from_json(const json& j) {
  if (result_mode(j) != NumberTraits<Num>::name) {
    throw ParseError("result was written in " + result_mode(j) + " mode");
  }
  ResultDocument<Num> doc;
  try {
    doc.title = field(j, "title").get<std::string>();
    doc.time_unit = field(j, "time_unit").get<std::string>();
    try {
      doc.objective = objective_from_string(field(j, "objective").get<std::string>());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    doc.activities = field(j, "activities").get<std::vector<std::string>>();
    doc.theta = scalar_from_json<Num>(field(j, "theta"));
    doc.G = matrix_from_json<Num>(field(j, "G"));
    doc.u_low = vector_from_json<Num>(field(j, "u_low"));
    doc.u_high = vector_from_json<Num>(field(j, "u_high"));
    doc.R = matrix_from_json<Num>(field(j, "R"));
    doc.s = vector_from_json<Num>(field(j, "s"));
    doc.unique = field(j, "unique").get<bool>();
    const json& sched = field(j, "schedules");
    member_from_json(field(sched, "low"), doc.low, doc.low_report);
    member_from_json(field(sched, "high"), doc.high, doc.high_report);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed result: ") + e.what());
  }
  const std::size_t n = doc.activities.size();
  for (const auto* v : {&doc.u_low, &doc.u_high, &doc.s, &doc.low.x, &doc.low.y, &doc.high.x, &doc.high.y}) {
    if (v->size() != n) throw ParseError("result vectors do not match the activity list");
  }
  return doc;
}

std::string result_mode(const json& j) {
  try {
    std::string m = field(j, "mode").get<std::string>();
    if (m != "exact" && m != "float") throw ParseError("unknown mode '" + m + "'");
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed result: ") + e.what());
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file").in_file(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what()).in_file(path);
  }
}

#define TROPSCHED_INSTANTIATE_RESULT_IO(NUM)                                                              \
  template ResultDocument<NUM> make_result(const ProjectInstance<NUM>&, const ScheduleFamily<NUM>&,       \
                                           std::vector<std::string>, std::string, std::string, const NUM&); \
  template json to_json(const ResultDocument<NUM>&);                                                       \
  template ResultDocument<NUM> result_from_json(const json&);

TROPSCHED_INSTANTIATE_RESULT_IO(Rational)
TROPSCHED_INSTANTIATE_RESULT_IO(double)

#undef TROPSCHED_INSTANTIATE_RESULT_IO

}  // namespace tropsched
