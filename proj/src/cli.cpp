#include "tropsched/cli.hpp"

#include <exception>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "tropsched/error.hpp"
#include "tropsched/gantt.hpp"
#include "tropsched/instance_io.hpp"
#include "tropsched/result_io.hpp"

namespace tropsched::cli {
namespace {

template <class Num>
Num tolerance() {
  return NumberTraits<Num>::exact ? Num(0) : Num(float_tolerance);
}

std::string cycle_message(const InfeasibleError& e, const std::vector<std::string>& names) {
  if (e.kind() != InfeasibleError::Kind::linear_constraint || e.cycle().empty()) return e.what();
  std::string out = "cyclic precedence with positive total lag: ";
  for (std::size_t i : e.cycle()) out += names.at(i) + " -> ";
  return out + names.at(e.cycle().front());
}

template <class Num>
std::string joined(const Vector<Num>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].to_string();
  return out;
}

template <class Num>
std::string describe(const Violation<Num>& v, const std::vector<std::string>& names) {
  std::string who = names.at(v.i);
  if (v.j != Violation<Num>::npos) who = names.at(v.j) + " -> " + who;
  const char* rel = v.kind == ConstraintClass::start_finish ? " != " : " > ";
  return to_string(v.kind) + " " + who + ": " + v.lhs.to_string() + rel + v.rhs.to_string();
}

template <class Num>
void print_report(std::ostream& out, const VerificationReport<Num>& rep, const std::vector<std::string>& names,
                  const char* indent) {
  if (rep.feasible()) {
    out << indent << "feasible\n";
    return;
  }
  out << indent << "violations:\n";
  for (const auto& v : rep.violations) out << indent << "  " << describe(v, names) << "\n";
}

template <class Num>
void print_text(std::ostream& out, const ResultDocument<Num>& doc) {
  const auto& names = doc.activities;
  std::size_t w = 8;
  for (const auto& n : names) w = std::max(w, n.size());
  if (!doc.title.empty()) out << doc.title << "\n";
  out << "objective: " << to_string(doc.objective) << "\n";
  out << "mode: " << NumberTraits<Num>::name << "\n";
  out << "theta: " << doc.theta << (doc.time_unit.empty() ? "" : " " + doc.time_unit) << "\n";
  out << "unique: " << (doc.unique ? "yes" : "no") << "\n";
  out << "u_low: " << joined(doc.u_low) << "\n";
  out << "u_high: " << joined(doc.u_high) << "\n";
  out << "G:\n";
  for (std::size_t i = 0; i < doc.G.rows(); ++i) out << "  " << joined(doc.G.row_vector(i)) << "\n";
  for (bool upper : {false, true}) {
    const auto& s = doc.member(upper);
    out << "\nschedule at u = " << (upper ? "u_high" : "u_low") << "\n";
    out << "  " << std::left << std::setw(static_cast<int>(w)) << "activity" << std::right << std::setw(10)
        << "start" << std::setw(10) << "finish" << "\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
      out << "  " << std::left << std::setw(static_cast<int>(w)) << names[i] << std::right << std::setw(10)
          << s.x[i].to_string() << std::setw(10) << s.y[i].to_string() << "\n";
    }
    print_report(out, upper ? doc.high_report : doc.low_report, names, "  ");
  }
  if (!doc.unique) {
    out << "\nstart ranges over the family\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (doc.low.x[i] == doc.high.x[i]) continue;
      out << "  " << names[i] << ": [" << doc.low.x[i] << ", " << doc.high.x[i] << "]\n";
    }
  }
}

template <class Num>
int solve_as(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  const ObjectiveKind kind = objective_from_string(opt.objective);
  const auto doc = load_instance_document<Num>(opt.instance);
  const auto inst = to_instance(doc);
  try {
    validate_instance(inst);
  } catch (const Error& e) {
    throw ParseError(e.what()).in_file(opt.instance);
  }
  ScheduleFamily<Num> fam;
  try {
    fam = solve(inst, kind);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << cycle_message(e, doc.names()) << "\n";
    return infeasible;
  }
  const auto result = make_result(inst, fam, doc.names(), doc.title, doc.time_unit, tolerance<Num>());
  if (!result.low_report.feasible() || !result.high_report.feasible()) {
    err << "internal: extracted schedule fails verification\n";
    return internal;
  }
  if (opt.format == "json") {
    out << to_json(result).dump(2) << "\n";
  } else {
    print_text(out, result);
  }
  return success;
}

template <class Num>
int chart_as(const ChartOptions& opt, const nlohmann::json& j, std::ostream& out) {
  const auto doc = result_from_json<Num>(j);
  const auto chart = layout_chart(doc.member(opt.member == "high"), doc.activities, doc.title, doc.time_unit);
  const std::string text = opt.format == "svg" ? render_svg(chart) : render_ascii(chart);
  if (opt.out.empty()) {
    out << text;
    return success;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + opt.out);
  file << text;
  if (!file.flush()) throw std::runtime_error("cannot write " + opt.out);
  return success;
}

template <class Num>
int verify_as(const VerifyOptions& opt, std::ostream& out) {
  const auto doc = load_instance_document<Num>(opt.instance);
  const auto inst = to_instance(doc);
  try {
    validate_instance(inst);
  } catch (const Error& e) {
    throw ParseError(e.what()).in_file(opt.instance);
  }
  const auto sched = load_schedule(opt.schedule, doc);
  const auto rep = verify_schedule(inst, sched, tolerance<Num>());
  print_report(out, rep, doc.names(), "");
  out << "makespan: " << makespan_value(sched) << "\n";
  out << "deviation: " << deviation_value(sched.x) << "\n";
  return rep.feasible() ? success : infeasible;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_error;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return infeasible;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  }
}

}  // namespace

Mode mode_from_string(const std::string& name) {
  if (name == "exact") return Mode::exact;
  if (name == "float") return Mode::floating;
  throw ParseError("unknown mode '" + name + "' (expected exact or float)");
}

int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.objective != "makespan" && opt.objective != "deviation")
      throw ParseError("unknown objective '" + opt.objective + "'");
    if (opt.format != "json" && opt.format != "text") throw ParseError("unknown format '" + opt.format + "'");
    return opt.mode == Mode::exact ? solve_as<Rational>(opt, out, err) : solve_as<double>(opt, out, err);
  });
}

int run_chart(const ChartOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.member != "low" && opt.member != "high") throw ParseError("unknown member '" + opt.member + "'");
    if (opt.format != "ascii" && opt.format != "svg") throw ParseError("unknown format '" + opt.format + "'");
    const auto j = load_json(opt.result);
    try {
      return result_mode(j) == "exact" ? chart_as<Rational>(opt, j, out) : chart_as<double>(opt, j, out);
    } catch (const ParseError& e) {
      if (e.line() == 0 && e.what() == e.message()) throw e.in_file(opt.result);
      throw;
    }
  });
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    return opt.mode == Mode::exact ? verify_as<Rational>(opt, out) : verify_as<double>(opt, out);
  });
}

}  // namespace tropsched::cli
