#include "tropsched/scheduling.hpp"

#include <algorithm>
#include <sstream>

namespace tropsched {

std::string to_string(ObjectiveKind kind) {
  return kind == ObjectiveKind::makespan ? "makespan" : "deviation";
}

ObjectiveKind objective_from_string(const std::string& name) {
  if (name == "makespan") return ObjectiveKind::makespan;
  if (name == "deviation") return ObjectiveKind::deviation;
  throw DomainError("unknown objective '" + name + "'");
}

std::string to_string(ConstraintClass c) {
  switch (c) {
    case ConstraintClass::start_start: return "start-start";
    case ConstraintClass::start_finish: return "start-finish";
    case ConstraintClass::finish_start: return "finish-start";
    case ConstraintClass::release: return "release";
    case ConstraintClass::release_deadline: return "release-deadline";
    case ConstraintClass::completion_deadline: return "completion-deadline";
  }
  return "?";
}

namespace {

template <class Num>
bool has_empty_row(const Matrix<Num>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row_span(i);
    if (std::none_of(r.begin(), r.end(), [](const auto& v) { return v.is_finite(); })) return true;
  }
  return false;
}

std::string describe_cycle(const std::vector<std::size_t>& cycle) {
  std::ostringstream os;
  for (std::size_t v : cycle) os << "activity " << v + 1 << " -> ";
  if (!cycle.empty()) os << "activity " << cycle.front() + 1;
  return os.str();
}

/// Calls sink(violation) for each violated constraint until sink returns false.
template <class Num, class Sink>
void check_constraints(const ProjectInstance<Num>& inst, const Vector<Num>& x, const Vector<Num>& y,
                       const Num& tol, Sink&& sink) {
  const std::size_t n = inst.size();
  if (x.size() != n || y.size() != n) throw DimensionError("schedule length differs from instance size");
  using V = Violation<Num>;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& b = inst.B(i, j);
      if (b.is_bottom()) continue;
      Scalar<Num> lhs = b * x[j];
      if (exceeds(lhs, x[i], tol) && !sink(V{ConstraintClass::start_start, i, j, lhs, x[i]})) return;
    }
  const Vector<Num> cx = mat_vec(inst.C, x);
  for (std::size_t i = 0; i < n; ++i)
    if ((exceeds(cx[i], y[i], tol) || exceeds(y[i], cx[i], tol)) &&
        !sink(V{ConstraintClass::start_finish, i, V::npos, cx[i], y[i]}))
      return;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& d = inst.D(i, j);
      if (d.is_bottom()) continue;
      Scalar<Num> lhs = d * y[j];
      if (exceeds(lhs, x[i], tol) && !sink(V{ConstraintClass::finish_start, i, j, lhs, x[i]})) return;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (exceeds(inst.g[i], x[i], tol) && !sink(V{ConstraintClass::release, i, V::npos, inst.g[i], x[i]}))
      return;
  for (std::size_t i = 0; i < n; ++i)
    if (exceeds(x[i], inst.h[i], tol) &&
        !sink(V{ConstraintClass::release_deadline, i, V::npos, x[i], inst.h[i]}))
      return;
  for (std::size_t i = 0; i < n; ++i)
    if (exceeds(y[i], inst.f[i], tol) &&
        !sink(V{ConstraintClass::completion_deadline, i, V::npos, y[i], inst.f[i]}))
      return;
}

}  // namespace

template <class Num>
void validate_instance(const ProjectInstance<Num>& inst) {
  const std::size_t n = inst.g.size();
  const auto square_n = [n](const Matrix<Num>& m) { return m.rows() == n && m.cols() == n; };
  if (!square_n(inst.B) || !square_n(inst.C) || !square_n(inst.D) || inst.h.size() != n ||
      inst.f.size() != n)
    throw DimensionError("instance matrices and vectors must share one dimension");
  if (!is_column_regular(inst.C))
    throw DomainError("start-finish matrix C must be column-regular");
  if (has_empty_row(inst.C))
    throw DomainError("every activity needs a start-finish lag defining its finish time");
  if (!is_regular(inst.h)) throw DomainError("release deadlines h must all be finite");
  if (!is_regular(inst.f)) throw DomainError("completion deadlines f must all be finite");
}

template <class Num>
Reduction<Num> reduce_instance(const ProjectInstance<Num>& inst) {
  validate_instance(inst);
  Reduction<Num> red;
  red.R = add(inst.B, mat_mul(inst.D, inst.C));
  red.s = conj(add(vec_mat(conj(inst.f), inst.C), conj(inst.h)));
  return red;
}

template <class Num>
ScheduleFamily<Num> solve(const ProjectInstance<Num>& inst, ObjectiveKind kind) {
  ScheduleFamily<Num> fam;
  fam.objective = kind;
  auto red = reduce_instance(inst);
  Matrix<Num> r_star;
  try {
    r_star = kleene_star(red.R);
  } catch (const PositiveCycleError& e) {
    // Kernel order follows matrix entries r(c_t, c_t+1), i.e. c_t+1 precedes c_t.
    std::vector<std::size_t> cycle(e.cycle().rbegin(), e.cycle().rend());
    throw InfeasibleError(InfeasibleError::Kind::linear_constraint,
                          "cyclic precedence with positive total lag: " + describe_cycle(cycle), cycle);
  }
  if (dot(conj(red.s), mat_vec(r_star, inst.g)) > Scalar<Num>::one())
    throw InfeasibleError(InfeasibleError::Kind::box_conflict, "deadlines incompatible with release times");

  const std::size_t n = inst.size();
  const Vector<Num> q_row = kind == ObjectiveKind::makespan ? vec_mat(ones<Num>(n), inst.C) : ones<Num>(n);
  fam.solution = solve_rank_one_reduced(ones<Num>(n), q_row, red.R, r_star, inst.g, red.s);
  fam.C = inst.C;
  fam.R = std::move(red.R);
  fam.s = std::move(red.s);
  return fam;
}

template <class Num>
ScheduleFamily<Num> solve_makespan(const ProjectInstance<Num>& inst) {
  return solve(inst, ObjectiveKind::makespan);
}

template <class Num>
ScheduleFamily<Num> solve_deviation(const ProjectInstance<Num>& inst) {
  return solve(inst, ObjectiveKind::deviation);
}

template <class Num>
Schedule<Num> extract_schedule(const ScheduleFamily<Num>& fam, const Vector<Num>& u) {
  Schedule<Num> s;
  s.x = family_member(fam.solution, u);
  s.y = mat_vec(fam.C, s.x);
  return s;
}

template <class Num>
VerificationReport<Num> verify_schedule(const ProjectInstance<Num>& inst, const Schedule<Num>& sched,
                                        const Num& tolerance) {
  VerificationReport<Num> report;
  check_constraints(inst, sched.x, sched.y, tolerance, [&](Violation<Num> v) {
    report.violations.push_back(std::move(v));
    return true;
  });
  return report;
}

template <class Num>
Scalar<Num> makespan_value(const Schedule<Num>& sched) {
  return norm(sched.y) * norm(conj(sched.x));
}

template <class Num>
Scalar<Num> deviation_value(const Vector<Num>& x) {
  return norm(x) * norm(conj(x));
}

template <class Num>
Scalar<Num> objective_value(ObjectiveKind kind, const Schedule<Num>& sched) {
  return kind == ObjectiveKind::makespan ? makespan_value(sched) : deviation_value(sched.x);
}

template <class Num>
std::optional<Scalar<Num>> brute_force_oracle(const ProjectInstance<Num>& inst, ObjectiveKind kind,
                                              const Num& step, std::size_t max_points) {
  validate_instance(inst);
  if (!(step > 0)) throw DomainError("lattice step must be positive");
  if (!is_regular(inst.g)) throw DomainError("brute force needs finite release times");
  const std::size_t n = inst.size();

  std::vector<std::size_t> counts(n);
  std::size_t total = n ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.h[i] < inst.g[i]) return std::nullopt;
    const Num span = inst.h[i].value() - inst.g[i].value();
    const Num steps = NumberTraits<Num>::floor(Num(span / step));
    counts[i] = static_cast<std::size_t>(NumberTraits<Num>::to_double(steps)) + 1;
    if (counts[i] > max_points || total > max_points / counts[i])
      throw DomainError("lattice exceeds " + std::to_string(max_points) + " points");
    total *= counts[i];
  }

  std::optional<Scalar<Num>> best;
  const auto points = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel
  {
    std::optional<Scalar<Num>> local;
    Schedule<Num> s{Vector<Num>(n), {}};
#pragma omp for schedule(static)
    for (std::ptrdiff_t flat = 0; flat < points; ++flat) {
      auto rest = static_cast<std::size_t>(flat);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t t = rest % counts[i];
        rest /= counts[i];
        s.x[i] = Scalar<Num>(Num(inst.g[i].value() + step * NumberTraits<Num>::from_int(static_cast<long>(t))));
      }
      s.y = mat_vec(inst.C, s.x);
      bool ok = true;
      check_constraints(inst, s.x, s.y, Num(0), [&](const Violation<Num>&) { return ok = false; });
      if (!ok) continue;
      Scalar<Num> value = objective_value(kind, s);
      if (!local || value < *local) local = std::move(value);
    }
#pragma omp critical(tropsched_oracle_min)
    if (local && (!best || *local < *best)) best = std::move(local);
  }
  return best;
}

#define TROPSCHED_INSTANTIATE_SCHEDULING(NUM)                                                        \
  template void validate_instance(const ProjectInstance<NUM>&);                                       \
  template Reduction<NUM> reduce_instance(const ProjectInstance<NUM>&);                               \
  template ScheduleFamily<NUM> solve(const ProjectInstance<NUM>&, ObjectiveKind);                     \
  template ScheduleFamily<NUM> solve_makespan(const ProjectInstance<NUM>&);                           \
  template ScheduleFamily<NUM> solve_deviation(const ProjectInstance<NUM>&);                          \
  template Schedule<NUM> extract_schedule(const ScheduleFamily<NUM>&, const Vector<NUM>&);            \
  template VerificationReport<NUM> verify_schedule(const ProjectInstance<NUM>&, const Schedule<NUM>&, \
                                                   const NUM&);                                       \
  template Scalar<NUM> makespan_value(const Schedule<NUM>&);                                          \
  template Scalar<NUM> deviation_value(const Vector<NUM>&);                                           \
  template Scalar<NUM> objective_value(ObjectiveKind, const Schedule<NUM>&);                          \
  template std::optional<Scalar<NUM>> brute_force_oracle(const ProjectInstance<NUM>&, ObjectiveKind, \
                                                         const NUM&, std::size_t);

TROPSCHED_INSTANTIATE_SCHEDULING(Rational)
TROPSCHED_INSTANTIATE_SCHEDULING(double)

#undef TROPSCHED_INSTANTIATE_SCHEDULING

}  // namespace tropsched
