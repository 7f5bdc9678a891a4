#include "tropsched/optimization.hpp"

#include <stdexcept>
#include <string>

namespace tropsched {
namespace {

template <class Num>
void check_shapes(std::size_t n, const Matrix<Num>& b, const Vector<Num>& g, const Vector<Num>& h) {
  if (b.rows() != n || b.cols() != n || g.size() != n || h.size() != n)
    throw DimensionError("problem data do not share one dimension");
  if (!is_regular(h)) throw DomainError("upper bound h must be regular");
}

template <class Num>
Matrix<Num> star_or_infeasible(const Matrix<Num>& b) {
  try {
    return kleene_star(b);
  } catch (const PositiveCycleError& e) {
    throw InfeasibleError(InfeasibleError::Kind::linear_constraint, "infeasible linear constraint",
                          e.cycle());
  }
}

template <class Num>
void check_box_gate(const Matrix<Num>& b_star, const Vector<Num>& g, const Vector<Num>& h) {
  if (dot(conj(h), mat_vec(b_star, g)) > Scalar<Num>::one())
    throw InfeasibleError(InfeasibleError::Kind::box_conflict, "box and linear constraints conflict");
}

template <class Num>
void finish_bounds(SolutionFamily<Num>& fam, const Vector<Num>& h) {
  fam.u_high = conj(vec_mat(conj(h), fam.G));
  std::size_t at = 0;
  if (!leq(fam.u_low, fam.u_high, at)) {
    throw InfeasibleError(InfeasibleError::Kind::inconsistent_bounds,
                          "inconsistent bounds at parameter " + std::to_string(at + 1));
  }
}

template <class Num>
void compose(const Matrix<Num>& prefix, const Matrix<Num>& a, const std::vector<Matrix<Num>>& b_pow,
             std::size_t factors_left, std::size_t budget, Matrix<Num>& sum) {
  if (factors_left == 0) {
    sum = add(sum, prefix);
    return;
  }
  const Matrix<Num> with_a = mat_mul(prefix, a);
  for (std::size_t i = 0; i <= budget; ++i)
    compose(mat_mul(with_a, b_pow[i]), a, b_pow, factors_left - 1, budget - i, sum);
}

template <class Num>
std::vector<Matrix<Num>> powers_upto(const Matrix<Num>& b, std::size_t last) {
  std::vector<Matrix<Num>> pw{Matrix<Num>::identity(b.rows())};
  for (std::size_t i = 1; i <= last; ++i) pw.push_back(mat_mul(pw.back(), b));
  return pw;
}

}  // namespace

template <class Num>
ObjectiveFn<Num> conjugate_quadratic(Matrix<Num> a) {
  return [a = std::move(a)](const Vector<Num>& x) { return dot(conj(x), mat_vec(a, x)); };
}

template <class Num>
ObjectiveFn<Num> rank_one_quadratic(Vector<Num> p, Vector<Num> q) {
  return [p = std::move(p), q_row = conj(q)](const Vector<Num>& x) {
    return dot(conj(x), p) * dot(q_row, x);
  };
}

template <class Num>
SolutionFamily<Num> solve_rank_one_reduced(const Vector<Num>& p, const Vector<Num>& q_row,
                                           const Matrix<Num>& b, const Matrix<Num>& b_star,
                                           const Vector<Num>& g, const Vector<Num>& h) {
  const std::size_t n = b.rows();
  check_shapes(n, b, g, h);
  if (p.size() != n || q_row.size() != n) throw DimensionError("p and q must have length n");
  if (dot(q_row, p).is_bottom())
    throw InfeasibleError(InfeasibleError::Kind::degenerate_objective, "degenerate objective");
  check_box_gate(b_star, g, h);

  // Columns B^i p and rows q^- B^j for i, j = 0 .. n-2.
  const std::size_t terms = n >= 2 ? n - 1 : 0;
  std::vector<Vector<Num>> cols;
  std::vector<Vector<Num>> rows;
  cols.reserve(terms);
  rows.reserve(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    cols.push_back(i ? mat_vec(b, cols.back()) : p);
    rows.push_back(i ? vec_mat(rows.back(), b) : q_row);
  }

  // theta = sum_{i+j<=n-2} (h^- B^i p)(q^- B^j g) (+) q^- B^* p
  const Vector<Num> h_conj = conj(h);
  std::vector<Scalar<Num>> row_g_prefix(terms);
  for (std::size_t j = 0; j < terms; ++j) {
    row_g_prefix[j] = dot(rows[j], g);
    if (j) row_g_prefix[j] += row_g_prefix[j - 1];
  }
  Scalar<Num> theta = dot(q_row, mat_vec(b_star, p));
  for (std::size_t i = 0; i < terms; ++i)
    theta += dot(h_conj, cols[i]) * row_g_prefix[terms - 1 - i];
  if (theta.is_bottom()) throw std::logic_error("rank-one solver: theta is bottom");

  // G = theta^-1 sum_{i+j<=n-2} B^i p q^- B^j (+) B^*, grouped as
  // sum_i (B^i p)(sum_{j<=n-2-i} q^- B^j) so that it costs O(n^3).
  std::vector<Vector<Num>> row_prefix(terms);
  for (std::size_t j = 0; j < terms; ++j) row_prefix[j] = j ? add(row_prefix[j - 1], rows[j]) : rows[j];
  const Scalar<Num> theta_inv = theta.inverse();
  SolutionFamily<Num> fam;
  fam.theta = theta;
  fam.G = b_star;
  const auto nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel if (n >= kernels::parallel_threshold)
  {
    Num scratch{};
#pragma omp for schedule(static)
    for (std::ptrdiff_t sr = 0; sr < nn; ++sr) {
      const auto r = static_cast<std::size_t>(sr);
      auto grow = fam.G.row_span(r);
      for (std::size_t i = 0; i < terms; ++i) {
        const Scalar<Num> c = theta_inv * cols[i][r];
        if (c.is_bottom()) continue;
        const auto& rp = row_prefix[terms - 1 - i];
        for (std::size_t col = 0; col < n; ++col) grow[col].accumulate_product(c, rp[col], scratch);
      }
    }
  }
  fam.u_low = g;
  fam.constraints = {b, g, h};
  finish_bounds(fam, h);
  return fam;
}

template <class Num>
SolutionFamily<Num> solve_rank_one(const RankOneProblem<Num>& prob) {
  const std::size_t n = prob.B.rows();
  check_shapes(n, prob.B, prob.g, prob.h);
  if (prob.p.size() != n || prob.q.size() != n) throw DimensionError("p and q must have length n");
  if (!is_nonzero(prob.p) || !is_nonzero(prob.q) || dot(conj(prob.q), prob.p).is_bottom())
    throw InfeasibleError(InfeasibleError::Kind::degenerate_objective, "degenerate objective");
  const Matrix<Num> b_star = star_or_infeasible(prob.B);
  return solve_rank_one_reduced(prob.p, conj(prob.q), prob.B, b_star, prob.g, prob.h);
}

template <class Num>
Matrix<Num> composition_sum_f(const Matrix<Num>& a, const Matrix<Num>& b, std::size_t k) {
  const std::size_t n = a.rows();
  if (k == 0 || k > n) throw DomainError("F_k needs 1 <= k <= n");
  const auto b_pow = powers_upto(b, n - k);
  Matrix<Num> sum(n, n);
  compose(Matrix<Num>::identity(n), a, b_pow, k, n - k, sum);
  return sum;
}

template <class Num>
Matrix<Num> composition_sum_g(const Matrix<Num>& a, const Matrix<Num>& b, std::size_t k) {
  const std::size_t n = a.rows();
  if (k == 0 || k + 1 > n) throw DomainError("G_k needs 1 <= k <= n - 1");
  const std::size_t budget = n - k - 1;
  const auto b_pow = powers_upto(b, budget);
  Matrix<Num> sum(n, n);
  for (std::size_t i0 = 0; i0 <= budget; ++i0) compose(b_pow[i0], a, b_pow, k, budget - i0, sum);
  return sum;
}

template <class Num>
SolutionFamily<Num> solve_general(const GeneralProblem<Num>& prob) {
  const std::size_t n = prob.A.rows();
  if (!prob.A.square()) throw DimensionError("A must be square");
  check_shapes(n, prob.B, prob.g, prob.h);
  if (spectral_radius(prob.A).is_bottom())
    throw InfeasibleError(InfeasibleError::Kind::degenerate_objective, "degenerate objective");
  const Matrix<Num> b_star = star_or_infeasible(prob.B);
  check_box_gate(b_star, prob.g, prob.h);

  const Vector<Num> h_conj = conj(prob.h);
  Scalar<Num> theta;
  for (std::size_t k = 1; k <= n; ++k) theta += trace(composition_sum_f(prob.A, prob.B, k)).root(k);
  for (std::size_t k = 1; k + 1 <= n; ++k)
    theta += dot(h_conj, mat_vec(composition_sum_g(prob.A, prob.B, k), prob.g)).root(k);
  if (theta.is_bottom()) throw std::logic_error("general solver: theta is bottom");

  SolutionFamily<Num> fam;
  fam.theta = theta;
  try {
    fam.G = kleene_star(add(scale(theta.inverse(), prob.A), prob.B));
  } catch (const PositiveCycleError&) {
    throw std::logic_error("general solver: generator star diverges at the optimum");
  }
  fam.u_low = prob.g;
  fam.constraints = {prob.B, prob.g, prob.h};
  finish_bounds(fam, prob.h);
  return fam;
}

template <class Num>
Vector<Num> family_member(const SolutionFamily<Num>& fam, const Vector<Num>& u) {
  if (u.size() != fam.G.cols()) throw DimensionError("parameter vector has the wrong length");
  if (!is_nonzero(u)) throw DomainError("parameter vector must be nonzero");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < fam.u_low[i])
      throw DomainError("parameter " + std::to_string(i + 1) + " = " + u[i].to_string() +
                        " is below its lower bound " + fam.u_low[i].to_string());
    if (u[i] > fam.u_high[i])
      throw DomainError("parameter " + std::to_string(i + 1) + " = " + u[i].to_string() +
                        " is above its upper bound " + fam.u_high[i].to_string());
  }
  return mat_vec(fam.G, u);
}

template <class Num>
bool family_contains(const SolutionFamily<Num>& fam, const Vector<Num>& x,
                     const ObjectiveFn<Num>& objective, const Num& tolerance) {
  const auto& c = fam.constraints;
  if (x.size() != c.B.rows() || !is_regular(x)) return false;
  const Vector<Num> bx = mat_vec(c.B, x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (exceeds(bx[i], x[i], tolerance)) return false;
    if (exceeds(c.g[i], x[i], tolerance)) return false;
    if (exceeds(x[i], c.h[i], tolerance)) return false;
  }
  const Scalar<Num> value = objective(x);
  return !exceeds(value, fam.theta, tolerance) && !exceeds(fam.theta, value, tolerance);
}

#define TROPSCHED_INSTANTIATE_OPTIMIZATION(NUM)                                                   \
  template ObjectiveFn<NUM> conjugate_quadratic(Matrix<NUM>);                                     \
  template ObjectiveFn<NUM> rank_one_quadratic(Vector<NUM>, Vector<NUM>);                         \
  template SolutionFamily<NUM> solve_rank_one(const RankOneProblem<NUM>&);                        \
  template SolutionFamily<NUM> solve_rank_one_reduced(const Vector<NUM>&, const Vector<NUM>&,    \
                                                      const Matrix<NUM>&, const Matrix<NUM>&,    \
                                                      const Vector<NUM>&, const Vector<NUM>&);   \
  template SolutionFamily<NUM> solve_general(const GeneralProblem<NUM>&);                         \
  template Matrix<NUM> composition_sum_f(const Matrix<NUM>&, const Matrix<NUM>&, std::size_t);    \
  template Matrix<NUM> composition_sum_g(const Matrix<NUM>&, const Matrix<NUM>&, std::size_t);    \
  template Vector<NUM> family_member(const SolutionFamily<NUM>&, const Vector<NUM>&);             \
  template bool family_contains(const SolutionFamily<NUM>&, const Vector<NUM>&,                   \
                                const ObjectiveFn<NUM>&, const NUM&);

TROPSCHED_INSTANTIATE_OPTIMIZATION(Rational)
TROPSCHED_INSTANTIATE_OPTIMIZATION(double)

#undef TROPSCHED_INSTANTIATE_OPTIMIZATION

}  // namespace tropsched
