#pragma once

// Dense max-plus kernels. Each kernel exists twice: `serial` is the plain
// reference loop nest kept for testing, `parallel` distributes the outer loop
// with OpenMP. Both variants perform the same per-entry update sequence, so
// their results are identical, not merely equal up to rounding.

#include <cstddef>
#include <vector>

#include "tropsched/matrix.hpp"

namespace tropsched::kernels {

/// Outcome of the longest-path closure. On success `paths` holds
/// A+ = A (+) A^2 (+) ... ; otherwise `positive_cycle` lists the nodes of a
/// cycle with positive total weight and `paths` is unspecified.
template <class Num>
struct ClosureResult {
  Matrix<Num> paths;
  std::vector<std::size_t> positive_cycle;

  bool ok() const noexcept { return positive_cycle.empty(); }
};

/// Problems at or above this order go to the parallel kernels by default.
inline constexpr std::size_t parallel_threshold = 64;

namespace serial {

template <class Num>
Matrix<Num> multiply(const Matrix<Num>& a, const Matrix<Num>& b);
template <class Num>
Vector<Num> multiply(const Matrix<Num>& a, const Vector<Num>& x);
template <class Num>
Vector<Num> multiply(const Vector<Num>& row, const Matrix<Num>& a);
template <class Num>
ClosureResult<Num> closure(const Matrix<Num>& a);

}  // namespace serial

namespace parallel {

template <class Num>
Matrix<Num> multiply(const Matrix<Num>& a, const Matrix<Num>& b);
template <class Num>
Vector<Num> multiply(const Matrix<Num>& a, const Vector<Num>& x);
template <class Num>
Vector<Num> multiply(const Vector<Num>& row, const Matrix<Num>& a);
template <class Num>
ClosureResult<Num> closure(const Matrix<Num>& a);

}  // namespace parallel

/// Number of OpenMP threads available, 1 when built without OpenMP.
int max_threads();

}  // namespace tropsched::kernels
