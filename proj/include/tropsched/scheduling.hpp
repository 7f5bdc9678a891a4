#pragma once

// Temporal project scheduling over max-plus algebra.
//
// For activity i, x_i is its start and y_i its finish time. An instance holds
//   B  start-start lags    b_ij + x_j <= x_i
//   C  start-finish lags   max_j (c_ij + x_j) = y_i
//   D  finish-start lags   d_ij + y_j <= x_i
//   g <= x <= h,  y <= f
// with bottom marking an undefined lag. Both solvers eliminate y = C x and
// reduce the problem to the rank-one form with R = B (+) D C and
// s = (f^- C (+) h^-)^-.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tropsched/optimization.hpp"

namespace tropsched {

enum class ObjectiveKind { makespan, deviation };

std::string to_string(ObjectiveKind kind);
/// Accepts "makespan" and "deviation"; throws DomainError otherwise.
ObjectiveKind objective_from_string(const std::string& name);

template <class Num>
struct ProjectInstance {
  Matrix<Num> B;
  Matrix<Num> C;
  Matrix<Num> D;
  Vector<Num> g;
  Vector<Num> h;
  Vector<Num> f;

  std::size_t size() const noexcept { return g.size(); }
  friend bool operator==(const ProjectInstance&, const ProjectInstance&) = default;
};

/// Throws DimensionError / DomainError unless the instance is well formed:
/// shared dimension n, C with no all-bottom column or row, h and f regular.
template <class Num>
void validate_instance(const ProjectInstance<Num>& inst);

template <class Num>
struct Schedule {
  Vector<Num> x;
  Vector<Num> y;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

template <class Num>
struct Reduction {
  Matrix<Num> R;
  Vector<Num> s;
};

/// All optimal schedules: x = G u, y = C G u for u in [u_low, u_high].
template <class Num>
struct ScheduleFamily {
  ObjectiveKind objective = ObjectiveKind::makespan;
  SolutionFamily<Num> solution;
  Matrix<Num> C;
  Matrix<Num> R;
  Vector<Num> s;

  const Scalar<Num>& theta() const noexcept { return solution.theta; }
  const Matrix<Num>& G() const noexcept { return solution.G; }
  const Vector<Num>& u_low() const noexcept { return solution.u_low; }
  const Vector<Num>& u_high() const noexcept { return solution.u_high; }
};

template <class Num>
Reduction<Num> reduce_instance(const ProjectInstance<Num>& inst);

/// Throws InfeasibleError: linear_constraint ("cyclic precedence with positive
/// total lag", cycle listed in precedence order) or box_conflict ("deadlines
/// incompatible with release times").
template <class Num>
ScheduleFamily<Num> solve_makespan(const ProjectInstance<Num>& inst);

template <class Num>
ScheduleFamily<Num> solve_deviation(const ProjectInstance<Num>& inst);

template <class Num>
ScheduleFamily<Num> solve(const ProjectInstance<Num>& inst, ObjectiveKind kind);

/// x = G u, y = C x. Throws DomainError naming the violated bound.
template <class Num>
Schedule<Num> extract_schedule(const ScheduleFamily<Num>& fam, const Vector<Num>& u);

enum class ConstraintClass {
  start_start,          // b_ij + x_j <= x_i
  start_finish,         // (C x)_i = y_i
  finish_start,         // d_ij + y_j <= x_i
  release,              // g_i <= x_i
  release_deadline,     // x_i <= h_i
  completion_deadline,  // y_i <= f_i
};

std::string to_string(ConstraintClass c);

/// One violated constraint, read as `lhs <= rhs` (or `lhs = rhs` for
/// start_finish). `j` is npos for constraints on a single activity.
template <class Num>
struct Violation {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  ConstraintClass kind;
  std::size_t i;
  std::size_t j = npos;
  Scalar<Num> lhs;
  Scalar<Num> rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

template <class Num>
struct VerificationReport {
  std::vector<Violation<Num>> violations;

  bool feasible() const noexcept { return violations.empty(); }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Checks every constraint class. `tolerance` is the slack allowed on each
/// comparison: 0 for exact arithmetic, small positive in float mode.
template <class Num>
VerificationReport<Num> verify_schedule(const ProjectInstance<Num>& inst, const Schedule<Num>& sched,
                                        const Num& tolerance = Num(0));

/// max_i y_i - min_i x_i.
template <class Num>
Scalar<Num> makespan_value(const Schedule<Num>& sched);

/// max_i x_i - min_i x_i.
template <class Num>
Scalar<Num> deviation_value(const Vector<Num>& x);

/// Objective of a schedule under `kind`.
template <class Num>
Scalar<Num> objective_value(ObjectiveKind kind, const Schedule<Num>& sched);

/// Exhaustive search over the lattice g_i, g_i + step, ..., <= h_i. Returns
/// the least objective value over feasible lattice points, or nullopt if no
/// lattice point is feasible. Throws DomainError when g or h has a bottom
/// entry or the lattice exceeds `max_points`.
template <class Num>
std::optional<Scalar<Num>> brute_force_oracle(const ProjectInstance<Num>& inst, ObjectiveKind kind,
                                              const Num& step, std::size_t max_points = 5'000'000);

}  // namespace tropsched
