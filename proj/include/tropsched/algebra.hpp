#pragma once

// Matrix calculus over the max-plus semifield: products, conjugation, traces,
// Kleene star, spectral radius, norms and the maximal solution of A x <= b.
//
// Products dispatch to kernels::parallel for orders at or above
// kernels::parallel_threshold and to kernels::serial otherwise.

#include <cstddef>

#include "tropsched/kernels.hpp"
#include "tropsched/matrix.hpp"

namespace tropsched {

template <class Num>
Vector<Num> ones(std::size_t n) {
  return Vector<Num>(n, Scalar<Num>::one());
}

template <class Num>
bool is_regular(const Vector<Num>& x) {
  for (const auto& v : x)
    if (v.is_bottom()) return false;
  return true;
}

template <class Num>
bool is_nonzero(const Vector<Num>& x) {
  for (const auto& v : x)
    if (v.is_finite()) return true;
  return false;
}

template <class Num>
bool is_column_regular(const Matrix<Num>& a);

/// Entrywise x <= y.
template <class Num>
bool leq(const Vector<Num>& x, const Vector<Num>& y);

/// Entrywise x <= y, with the first offending index in `at`.
template <class Num>
bool leq(const Vector<Num>& x, const Vector<Num>& y, std::size_t& at);

template <class Num>
bool leq(const Matrix<Num>& a, const Matrix<Num>& b);

/// Multiplicative conjugate transpose: finite entries inverted, bottom kept.
/// Throws DomainError("zero vector has no conjugate") on the zero vector.
template <class Num>
Vector<Num> conj(const Vector<Num>& x);

template <class Num>
Matrix<Num> add(const Matrix<Num>& a, const Matrix<Num>& b);
template <class Num>
Vector<Num> add(const Vector<Num>& x, const Vector<Num>& y);

template <class Num>
Matrix<Num> scale(const Scalar<Num>& s, Matrix<Num> a);
template <class Num>
Vector<Num> scale(const Scalar<Num>& s, Vector<Num> x);

template <class Num>
Matrix<Num> mat_mul(const Matrix<Num>& a, const Matrix<Num>& b);
/// A x for a column vector x.
template <class Num>
Vector<Num> mat_vec(const Matrix<Num>& a, const Vector<Num>& x);
/// r A for a row vector r.
template <class Num>
Vector<Num> vec_mat(const Vector<Num>& r, const Matrix<Num>& a);
/// Row times column: the scalar r x.
template <class Num>
Scalar<Num> dot(const Vector<Num>& r, const Vector<Num>& x);
/// Column times row: the rank-one matrix x r.
template <class Num>
Matrix<Num> outer(const Vector<Num>& x, const Vector<Num>& r);

/// A^k by repeated multiplication; A^0 = I.
template <class Num>
Matrix<Num> power(const Matrix<Num>& a, std::size_t k);

/// tr A, the sum of the diagonal.
template <class Num>
Scalar<Num> trace(const Matrix<Num>& a);

/// Tr(A) = tr A (+) tr A^2 (+) ... (+) tr A^n.
template <class Num>
Scalar<Num> trace_series(const Matrix<Num>& a);

/// A* = I (+) A (+) ... (+) A^(n-1), by the longest-path closure.
/// Throws PositiveCycleError("positive cycle: star diverges") when Tr(A) > 1.
template <class Num>
Matrix<Num> kleene_star(const Matrix<Num>& a);

/// rho(A) = sum over k of tr^(1/k)(A^k), the maximum cycle mean.
template <class Num>
Scalar<Num> spectral_radius(const Matrix<Num>& a);

/// ||x|| = 1^T x, the largest entry.
template <class Num>
Scalar<Num> norm(const Vector<Num>& x);
/// ||A|| = 1^T A 1, the largest entry.
template <class Num>
Scalar<Num> norm(const Matrix<Num>& a);

/// Maximal solution (b^- A)^- of A x <= b. Every solution x satisfies
/// x <= result. Requires a column-regular A and a regular b.
template <class Num>
Vector<Num> solve_leq(const Matrix<Num>& a, const Vector<Num>& b);

}  // namespace tropsched
