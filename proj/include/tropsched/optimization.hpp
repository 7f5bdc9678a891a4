#pragma once

// Minimization of conjugate quadratic forms x^- A x over regular x subject to
// B x <= x and g <= x <= h.
//
// solve_rank_one handles A = p q^- in O(n^3) semiring operations and is the
// solver used by the scheduling layer. solve_general handles an arbitrary A
// by enumerating the composition sums directly; it is exponential in n and is
// kept as an independent oracle for small instances (n <= 8).

#include <cstddef>
#include <functional>

#include "tropsched/algebra.hpp"

namespace tropsched {

/// min x^- p q^- x  s.t.  B x <= x,  g <= x <= h.
template <class Num>
struct RankOneProblem {
  Vector<Num> p;
  Vector<Num> q;
  Matrix<Num> B;
  Vector<Num> g;
  Vector<Num> h;
};

/// min x^- A x  s.t.  B x <= x,  g <= x <= h.
template <class Num>
struct GeneralProblem {
  Matrix<Num> A;
  Matrix<Num> B;
  Vector<Num> g;
  Vector<Num> h;
};

/// The feasible set a family was derived from, kept for membership tests.
template <class Num>
struct LinearBoxConstraints {
  Matrix<Num> B;
  Vector<Num> g;
  Vector<Num> h;
};

/// Every optimal solution is x = G u with u nonzero and u_low <= u <= u_high.
template <class Num>
struct SolutionFamily {
  Scalar<Num> theta;
  Matrix<Num> G;
  Vector<Num> u_low;
  Vector<Num> u_high;
  LinearBoxConstraints<Num> constraints;
};

template <class Num>
using ObjectiveFn = std::function<Scalar<Num>(const Vector<Num>&)>;

/// x |-> x^- A x.
template <class Num>
ObjectiveFn<Num> conjugate_quadratic(Matrix<Num> a);

/// x |-> (x^- p)(q^- x), the same form for A = p q^- without building A.
template <class Num>
ObjectiveFn<Num> rank_one_quadratic(Vector<Num> p, Vector<Num> q);

/// Throws InfeasibleError: linear_constraint when Tr(B) > 1 (with the cycle),
/// box_conflict when h^- B^* g > 1, degenerate_objective when q^- p is bottom.
template <class Num>
SolutionFamily<Num> solve_rank_one(const RankOneProblem<Num>& prob);

/// Rank-one solver on pre-reduced data: `q_row` is q^- itself and `b_star`
/// must equal B^*. Skips the Tr(B) check, which computing `b_star` already
/// performed, but still checks the box gate and the objective.
template <class Num>
SolutionFamily<Num> solve_rank_one_reduced(const Vector<Num>& p, const Vector<Num>& q_row,
                                           const Matrix<Num>& b, const Matrix<Num>& b_star,
                                           const Vector<Num>& g, const Vector<Num>& h);

/// Same errors as solve_rank_one; degenerate_objective when rho(A) is bottom.
template <class Num>
SolutionFamily<Num> solve_general(const GeneralProblem<Num>& prob);

/// F_k: sum of A B^i1 ... A B^ik over i1 + ... + ik <= n - k.
template <class Num>
Matrix<Num> composition_sum_f(const Matrix<Num>& a, const Matrix<Num>& b, std::size_t k);

/// G_k: sum of B^i0 (A B^i1 ... A B^ik) over i0 + ... + ik <= n - k - 1.
template <class Num>
Matrix<Num> composition_sum_g(const Matrix<Num>& a, const Matrix<Num>& b, std::size_t k);

/// x = G u. Throws DomainError naming the violated side and (1-based) index
/// when u leaves [u_low, u_high], or when u is the zero vector.
template <class Num>
Vector<Num> family_member(const SolutionFamily<Num>& fam, const Vector<Num>& u);

/// True iff x is regular, satisfies the family's constraints and attains
/// theta under `objective`. Comparisons allow `tolerance` slack (use 0 for
/// exact arithmetic).
template <class Num>
bool family_contains(const SolutionFamily<Num>& fam, const Vector<Num>& x,
                     const ObjectiveFn<Num>& objective, const Num& tolerance = Num(0));

}  // namespace tropsched
