#include "tropsched/kernels.hpp"

#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropsched::kernels {
namespace {

constexpr std::size_t no_successor = std::numeric_limits<std::size_t>::max();

template <class Num>
void check_product(const Matrix<Num>& a, const Matrix<Num>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
}

template <class Num>
void check_square(const Matrix<Num>& a, const char* what) {
  if (!a.square()) throw DimensionError(std::string(what) + ": matrix is not square");
}

/// Successor table for path reconstruction: next[i*n + j] is the node after i
/// on the best known i -> j walk.
std::vector<std::size_t> initial_successors(const auto& d) {
  const std::size_t n = d.rows();
  std::vector<std::size_t> next(n * n, no_successor);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d(i, j).is_finite()) next[i * n + j] = j;
  return next;
}

std::vector<std::size_t> walk(const std::vector<std::size_t>& next, std::size_t n,
                              std::size_t from, std::size_t to) {
  std::vector<std::size_t> nodes{from};
  while (from != to) {
    from = next[from * n + to];
    if (from == no_successor || nodes.size() > n) {
      throw std::logic_error("closure: broken successor table");
    }
    nodes.push_back(from);
  }
  return nodes;
}

/// Splits the closed walk into simple cycles and returns one of positive weight.
template <class Num>
std::vector<std::size_t> positive_simple_cycle(const Matrix<Num>& a,
                                               std::vector<std::size_t> closed) {
  const auto weight = [&](const std::vector<std::size_t>& c) {
    Scalar<Num> w = Scalar<Num>::one();
    for (std::size_t t = 0; t < c.size(); ++t) w *= a(c[t], c[(t + 1) % c.size()]);
    return w;
  };
  std::vector<std::size_t> stack;
  std::vector<std::size_t> fallback = closed;
  for (std::size_t v : closed) {
    for (std::size_t pos = 0; pos < stack.size(); ++pos) {
      if (stack[pos] != v) continue;
      std::vector<std::size_t> cycle(stack.begin() + static_cast<std::ptrdiff_t>(pos), stack.end());
      if (weight(cycle) > Scalar<Num>::one()) return cycle;
      stack.resize(pos);
      break;
    }
    stack.push_back(v);
  }
  if (!stack.empty() && weight(stack) > Scalar<Num>::one()) return stack;
  return fallback;
}

template <class Num>
std::vector<std::size_t> witness(const Matrix<Num>& a, const std::vector<std::size_t>& next,
                                 std::size_t i, std::size_t k) {
  const std::size_t n = a.rows();
  auto there = walk(next, n, i, k);
  auto back = walk(next, n, k, i);
  there.pop_back();
  back.pop_back();
  there.insert(there.end(), back.begin(), back.end());
  return positive_simple_cycle(a, std::move(there));
}

template <class Num>
bool diagonal_positive(const Matrix<Num>& d, std::size_t& at) {
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (d(i, i) > Scalar<Num>::one()) {
      at = i;
      return true;
    }
  }
  return false;
}

}  // namespace

namespace serial {

template <class Num>
Matrix<Num> multiply(const Matrix<Num>& a, const Matrix<Num>& b) {
  check_product(a, b);
  Matrix<Num> c(a.rows(), b.cols());
  Num scratch{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto crow = c.row_span(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik.is_bottom()) continue;
      auto brow = b.row_span(k);
      for (std::size_t j = 0; j < b.cols(); ++j) crow[j].accumulate_product(aik, brow[j], scratch);
    }
  }
  return c;
}

template <class Num>
Vector<Num> multiply(const Matrix<Num>& a, const Vector<Num>& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector product: size mismatch");
  Vector<Num> y(a.rows());
  Num scratch{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto arow = a.row_span(i);
    for (std::size_t j = 0; j < x.size(); ++j) y[i].accumulate_product(arow[j], x[j], scratch);
  }
  return y;
}

template <class Num>
Vector<Num> multiply(const Vector<Num>& row, const Matrix<Num>& a) {
  if (row.size() != a.rows()) throw DimensionError("vector-matrix product: size mismatch");
  Vector<Num> r(a.cols());
  Num scratch{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (row[i].is_bottom()) continue;
    auto arow = a.row_span(i);
    for (std::size_t j = 0; j < a.cols(); ++j) r[j].accumulate_product(row[i], arow[j], scratch);
  }
  return r;
}

template <class Num>
ClosureResult<Num> closure(const Matrix<Num>& a) {
  check_square(a, "closure");
  const std::size_t n = a.rows();
  ClosureResult<Num> result{a, {}};
  auto& d = result.paths;
  std::size_t at = 0;
  if (diagonal_positive(d, at)) {
    result.positive_cycle = {at};
    return result;
  }
  auto next = initial_successors(d);
  Num scratch{};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar<Num> dik = d(i, k);
      if (dik.is_bottom()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& dkj = d(k, j);
        if (dkj.is_bottom()) continue;
        NumberTraits<Num>::sum(scratch, dik.value(), dkj.value());
        auto& dij = d(i, j);
        if (dij.is_bottom() || scratch > dij.value()) {
          dij.assign(scratch);
          next[i * n + j] = next[i * n + k];
        }
      }
    }
    if (diagonal_positive(d, at)) {
      result.positive_cycle = witness(a, next, at, k);
      return result;
    }
  }
  return result;
}

}  // namespace serial

namespace parallel {

template <class Num>
Matrix<Num> multiply(const Matrix<Num>& a, const Matrix<Num>& b) {
  check_product(a, b);
  Matrix<Num> c(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel
  {
    Num scratch{};
#pragma omp for schedule(static)
    for (std::ptrdiff_t si = 0; si < rows; ++si) {
      const auto i = static_cast<std::size_t>(si);
      auto crow = c.row_span(i);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const auto& aik = a(i, k);
        if (aik.is_bottom()) continue;
        auto brow = b.row_span(k);
        for (std::size_t j = 0; j < b.cols(); ++j) crow[j].accumulate_product(aik, brow[j], scratch);
      }
    }
  }
  return c;
}

template <class Num>
Vector<Num> multiply(const Matrix<Num>& a, const Vector<Num>& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector product: size mismatch");
  Vector<Num> y(a.rows());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel
  {
    Num scratch{};
#pragma omp for schedule(static)
    for (std::ptrdiff_t si = 0; si < rows; ++si) {
      const auto i = static_cast<std::size_t>(si);
      auto arow = a.row_span(i);
      for (std::size_t j = 0; j < x.size(); ++j) y[i].accumulate_product(arow[j], x[j], scratch);
    }
  }
  return y;
}

template <class Num>
Vector<Num> multiply(const Vector<Num>& row, const Matrix<Num>& a) {
  if (row.size() != a.rows()) throw DimensionError("vector-matrix product: size mismatch");
  Vector<Num> r(a.cols());
  const auto cols = static_cast<std::ptrdiff_t>(a.cols());
#pragma omp parallel
  {
    Num scratch{};
#pragma omp for schedule(static)
    for (std::ptrdiff_t sj = 0; sj < cols; ++sj) {
      const auto j = static_cast<std::size_t>(sj);
      for (std::size_t i = 0; i < a.rows(); ++i) r[j].accumulate_product(row[i], a(i, j), scratch);
    }
  }
  return r;
}

template <class Num>
ClosureResult<Num> closure(const Matrix<Num>& a) {
  check_square(a, "closure");
  const std::size_t n = a.rows();
  ClosureResult<Num> result{a, {}};
  auto& d = result.paths;
  std::size_t at = 0;
  if (diagonal_positive(d, at)) {
    result.positive_cycle = {at};
    return result;
  }
  auto next = initial_successors(d);
  const auto rows = static_cast<std::ptrdiff_t>(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Row k and column k are invariant during round k because d(k,k) <= 0.
#pragma omp parallel
    {
      Num scratch{};
#pragma omp for schedule(static)
      for (std::ptrdiff_t si = 0; si < rows; ++si) {
        const auto i = static_cast<std::size_t>(si);
        const auto& dik = d(i, k);
        if (dik.is_bottom()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const auto& dkj = d(k, j);
          if (dkj.is_bottom()) continue;
          NumberTraits<Num>::sum(scratch, dik.value(), dkj.value());
          auto& dij = d(i, j);
          if (dij.is_bottom() || scratch > dij.value()) {
            dij.assign(scratch);
            next[i * n + j] = next[i * n + k];
          }
        }
      }
    }
    if (diagonal_positive(d, at)) {
      result.positive_cycle = witness(a, next, at, k);
      return result;
    }
  }
  return result;
}

}  // namespace parallel

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

#define TROPSCHED_INSTANTIATE_KERNELS(NS, NUM)                                        \
  template Matrix<NUM> NS::multiply(const Matrix<NUM>&, const Matrix<NUM>&);          \
  template Vector<NUM> NS::multiply(const Matrix<NUM>&, const Vector<NUM>&);          \
  template Vector<NUM> NS::multiply(const Vector<NUM>&, const Matrix<NUM>&);          \
  template ClosureResult<NUM> NS::closure(const Matrix<NUM>&);

TROPSCHED_INSTANTIATE_KERNELS(serial, Rational)
TROPSCHED_INSTANTIATE_KERNELS(serial, double)
TROPSCHED_INSTANTIATE_KERNELS(parallel, Rational)
TROPSCHED_INSTANTIATE_KERNELS(parallel, double)

#undef TROPSCHED_INSTANTIATE_KERNELS

}  // namespace tropsched::kernels
