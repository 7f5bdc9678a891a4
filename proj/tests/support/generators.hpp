#pragma once

// Seeded random instances for property tests, acceptance checks and benchmarks.

#include <cstdint>
#include <optional>
#include <random>

#include "tropsched/algebra.hpp"
#include "tropsched/error.hpp"
#include "tropsched/optimization.hpp"
#include "tropsched/scheduling.hpp"

namespace gen {

using namespace tropsched;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(eng_); }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

template <class Num = Rational>
Scalar<Num> scalar(Rng& rng, long lo, long hi, double p_bottom = 0) {
  if (p_bottom > 0 && rng.chance(p_bottom)) return Scalar<Num>::bottom();
  return Scalar<Num>::of(rng.uniform(lo, hi));
}

/// A finite value with a random denominator in 1..4, so that rational
/// arithmetic is exercised beyond the integers.
inline Scalar<Rational> fraction(Rng& rng, long lo, long hi, double p_bottom = 0) {
  if (p_bottom > 0 && rng.chance(p_bottom)) return Scalar<Rational>::bottom();
  const long den = rng.uniform(1, 4);
  Rational r(rng.uniform(lo * den, hi * den), den);
  r.canonicalize();
  return Scalar<Rational>(r);
}

template <class Num = Rational>
Vector<Num> vector(Rng& rng, std::size_t n, long lo, long hi, double p_bottom = 0) {
  Vector<Num> v(n);
  for (auto& x : v) x = scalar<Num>(rng, lo, hi, p_bottom);
  return v;
}

template <class Num = Rational>
Matrix<Num> matrix(Rng& rng, std::size_t m, std::size_t n, long lo, long hi, double p_bottom = 0) {
  Matrix<Num> a(m, n);
  for (auto& x : a.data()) x = scalar<Num>(rng, lo, hi, p_bottom);
  return a;
}

/// Removes edges of positive cycles until the star exists. Each round drops
/// the heaviest edge of the witness cycle, so entries stay in their range.
template <class Num>
Matrix<Num> break_positive_cycles(Matrix<Num> a) {
  for (;;) {
    try {
      (void)kleene_star(a);
      return a;
    } catch (const PositiveCycleError& e) {
      const auto& c = e.cycle();
      std::size_t best = 0;
      for (std::size_t t = 1; t < c.size(); ++t)
        if (a(c[t], c[(t + 1) % c.size()]) > a(c[best], c[(best + 1) % c.size()])) best = t;
      a(c[best], c[(best + 1) % c.size()]) = Scalar<Num>::bottom();
    }
  }
}

/// A random rank-one problem with entries in [lo, hi] or bottom, satisfying
/// every solver precondition, or nullopt when this draw cannot be repaired.
/// h is drawn first; g is then drawn below the largest admissible lower
/// bound (h^- B^*)^-, which keeps the box gate satisfied without leaving the
/// range.
inline std::optional<RankOneProblem<Rational>> rank_one_problem(Rng& rng, std::size_t n, long lo = -3,
                                                                 long hi = 3, double p_bottom = 0.4) {
  RankOneProblem<Rational> prob;
  prob.p = vector(rng, n, lo, hi, p_bottom);
  prob.q = vector(rng, n, lo, hi, p_bottom);
  if (!is_nonzero(prob.p) || !is_nonzero(prob.q) || dot(conj(prob.q), prob.p).is_bottom()) return std::nullopt;
  prob.B = break_positive_cycles(matrix(rng, n, n, lo, hi, p_bottom));
  prob.h = vector(rng, n, lo, hi);
  const auto g_max = conj(vec_mat(conj(prob.h), kleene_star(prob.B)));
  prob.g.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long top = std::min<long>(hi, NumberTraits<Rational>::floor(g_max[i].value()).get_num().get_si());
    if (top < lo) return std::nullopt;
    prob.g[i] = Scalar<Rational>::of(rng.uniform(lo, top));
  }
  return prob;
}

struct ProjectShape {
  double p_start_start = 0.35;
  double p_finish_start = 0.2;
  double p_extra_start_finish = 0.15;
  long max_width = 6;  // h_i - g_i
};

/// Small integer project: unit diagonal in B, durations 1..5 on the
/// diagonal of C, sparse lags in [-3, 3], releases 0..3. May be infeasible.
template <class Num = Rational>
ProjectInstance<Num> small_project(Rng& rng, std::size_t n, const ProjectShape& shape = {}) {
  ProjectInstance<Num> inst{Matrix<Num>(n, n), Matrix<Num>(n, n), Matrix<Num>(n, n),
                            Vector<Num>(n),    Vector<Num>(n),    Vector<Num>(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        inst.B(i, i) = Scalar<Num>::of(0);
        inst.C(i, i) = Scalar<Num>::of(rng.uniform(1, 5));
        continue;
      }
      if (rng.chance(shape.p_start_start)) inst.B(i, j) = Scalar<Num>::of(rng.uniform(-3, 3));
      if (rng.chance(shape.p_finish_start)) inst.D(i, j) = Scalar<Num>::of(rng.uniform(-3, 3));
      if (rng.chance(shape.p_extra_start_finish)) inst.C(i, j) = Scalar<Num>::of(rng.uniform(0, 5));
    }
  for (std::size_t i = 0; i < n; ++i) {
    const long g = rng.uniform(0, 3);
    inst.g[i] = Scalar<Num>::of(g);
    inst.h[i] = Scalar<Num>::of(g + rng.uniform(0, shape.max_width));
    inst.f[i] = Scalar<Num>::of(rng.uniform(4, 16));
  }
  return inst;
}

/// Large feasible project: precedences only from lower to higher index, so
/// R is triangular with a zero diagonal, and generous deadlines.
template <class Num = Rational>
ProjectInstance<Num> large_project(Rng& rng, std::size_t n, double density = 0.5) {
  ProjectInstance<Num> inst{Matrix<Num>(n, n), Matrix<Num>(n, n), Matrix<Num>(n, n),
                            Vector<Num>(n),    Vector<Num>(n),    Vector<Num>(n)};
  const long horizon = 20 * static_cast<long>(n);
  for (std::size_t i = 0; i < n; ++i) {
    inst.B(i, i) = Scalar<Num>::of(0);
    inst.C(i, i) = Scalar<Num>::of(rng.uniform(1, 9));
    for (std::size_t j = 0; j < i; ++j) {
      if (rng.chance(density)) inst.B(i, j) = Scalar<Num>::of(rng.uniform(0, 6));
      if (rng.chance(density / 4)) inst.D(i, j) = Scalar<Num>::of(rng.uniform(0, 3));
    }
    inst.g[i] = Scalar<Num>::of(rng.uniform(0, 10));
    inst.h[i] = Scalar<Num>::of(horizon);
    inst.f[i] = Scalar<Num>::of(2 * horizon);
  }
  return inst;
}

}  // namespace gen
