#include "tropsched/algebra.hpp"

namespace tropsched {
namespace {

template <class Num>
bool use_parallel(std::size_t n) {
  return n >= kernels::parallel_threshold;
}

}  // namespace

template <class Num>
bool is_column_regular(const Matrix<Num>& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool found = false;
    for (std::size_t i = 0; i < a.rows() && !found; ++i) found = a(i, j).is_finite();
    if (!found) return false;
  }
  return true;
}

template <class Num>
bool leq(const Vector<Num>& x, const Vector<Num>& y, std::size_t& at) {
  if (x.size() != y.size()) throw DimensionError("vector comparison: size mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) {
      at = i;
      return false;
    }
  }
  return true;
}

template <class Num>
bool leq(const Vector<Num>& x, const Vector<Num>& y) {
  std::size_t at = 0;
  return leq(x, y, at);
}

template <class Num>
bool leq(const Matrix<Num>& a, const Matrix<Num>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix comparison: shape mismatch");
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i)
    if (da[i] > db[i]) return false;
  return true;
}

template <class Num>
Vector<Num> conj(const Vector<Num>& x) {
  if (!is_nonzero(x)) throw DomainError("zero vector has no conjugate");
  Vector<Num> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].is_finite()) r[i] = x[i].inverse();
  return r;
}

template <class Num>
Matrix<Num> add(const Matrix<Num>& a, const Matrix<Num>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix sum: shape mismatch");
  Matrix<Num> c = a;
  auto dc = c.data();
  auto db = b.data();
  for (std::size_t i = 0; i < dc.size(); ++i) dc[i] += db[i];
  return c;
}

template <class Num>
Vector<Num> add(const Vector<Num>& x, const Vector<Num>& y) {
  if (x.size() != y.size()) throw DimensionError("vector sum: size mismatch");
  Vector<Num> r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

template <class Num>
Matrix<Num> scale(const Scalar<Num>& s, Matrix<Num> a) {
  for (auto& v : a.data()) v *= s;
  return a;
}

template <class Num>
Vector<Num> scale(const Scalar<Num>& s, Vector<Num> x) {
  for (auto& v : x) v *= s;
  return x;
}

template <class Num>
Matrix<Num> mat_mul(const Matrix<Num>& a, const Matrix<Num>& b) {
  return use_parallel<Num>(a.rows()) ? kernels::parallel::multiply(a, b)
                                     : kernels::serial::multiply(a, b);
}

template <class Num>
Vector<Num> mat_vec(const Matrix<Num>& a, const Vector<Num>& x) {
  return use_parallel<Num>(a.rows()) ? kernels::parallel::multiply(a, x)
                                     : kernels::serial::multiply(a, x);
}

template <class Num>
Vector<Num> vec_mat(const Vector<Num>& r, const Matrix<Num>& a) {
  return use_parallel<Num>(a.cols()) ? kernels::parallel::multiply(r, a)
                                     : kernels::serial::multiply(r, a);
}

template <class Num>
Scalar<Num> dot(const Vector<Num>& r, const Vector<Num>& x) {
  if (r.size() != x.size()) throw DimensionError("inner product: size mismatch");
  Scalar<Num> s;
  Num scratch{};
  for (std::size_t i = 0; i < r.size(); ++i) s.accumulate_product(r[i], x[i], scratch);
  return s;
}

template <class Num>
Matrix<Num> outer(const Vector<Num>& x, const Vector<Num>& r) {
  Matrix<Num> m(x.size(), r.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) m(i, j) = x[i] * r[j];
  return m;
}

template <class Num>
Matrix<Num> power(const Matrix<Num>& a, std::size_t k) {
  if (!a.square()) throw DimensionError("power: matrix is not square");
  Matrix<Num> p = Matrix<Num>::identity(a.rows());
  for (std::size_t t = 0; t < k; ++t) p = mat_mul(p, a);
  return p;
}

template <class Num>
Scalar<Num> trace(const Matrix<Num>& a) {
  if (!a.square()) throw DimensionError("trace: matrix is not square");
  Scalar<Num> t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

template <class Num>
Scalar<Num> trace_series(const Matrix<Num>& a) {
  if (!a.square()) throw DimensionError("trace series: matrix is not square");
  Scalar<Num> t;
  Matrix<Num> p = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    if (k > 1) p = mat_mul(p, a);
    t += trace(p);
  }
  return t;
}

template <class Num>
Matrix<Num> kleene_star(const Matrix<Num>& a) {
  if (!a.square()) throw DimensionError("Kleene star: matrix is not square");
  auto closed = use_parallel<Num>(a.rows()) ? kernels::parallel::closure(a)
                                            : kernels::serial::closure(a);
  if (!closed.ok()) {
    throw PositiveCycleError("positive cycle: star diverges", std::move(closed.positive_cycle));
  }
  for (std::size_t i = 0; i < a.rows(); ++i) closed.paths(i, i) += Scalar<Num>::one();
  return std::move(closed.paths);
}

template <class Num>
Scalar<Num> spectral_radius(const Matrix<Num>& a) {
  if (!a.square()) throw DimensionError("spectral radius: matrix is not square");
  Scalar<Num> rho;
  Matrix<Num> p = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    if (k > 1) p = mat_mul(p, a);
    rho += trace(p).root(k);
  }
  return rho;
}

template <class Num>
Scalar<Num> norm(const Vector<Num>& x) {
  Scalar<Num> s;
  for (const auto& v : x) s += v;
  return s;
}

template <class Num>
Scalar<Num> norm(const Matrix<Num>& a) {
  Scalar<Num> s;
  for (const auto& v : a.data()) s += v;
  return s;
}

template <class Num>
Vector<Num> solve_leq(const Matrix<Num>& a, const Vector<Num>& b) {
  if (a.rows() != b.size()) throw DimensionError("A x <= b: size mismatch");
  if (!is_column_regular(a)) throw DomainError("A x <= b: matrix is not column-regular");
  if (!is_regular(b)) throw DomainError("A x <= b: right-hand side is not regular");
  return conj(vec_mat(conj(b), a));
}

#define TROPSCHED_INSTANTIATE_ALGEBRA(NUM)                                         \
  template bool is_column_regular(const Matrix<NUM>&);                             \
  template bool leq(const Vector<NUM>&, const Vector<NUM>&);                       \
  template bool leq(const Vector<NUM>&, const Vector<NUM>&, std::size_t&);         \
  template bool leq(const Matrix<NUM>&, const Matrix<NUM>&);                       \
  template Vector<NUM> conj(const Vector<NUM>&);                                   \
  template Matrix<NUM> add(const Matrix<NUM>&, const Matrix<NUM>&);                \
  template Vector<NUM> add(const Vector<NUM>&, const Vector<NUM>&);                \
  template Matrix<NUM> scale(const Scalar<NUM>&, Matrix<NUM>);                     \
  template Vector<NUM> scale(const Scalar<NUM>&, Vector<NUM>);                     \
  template Matrix<NUM> mat_mul(const Matrix<NUM>&, const Matrix<NUM>&);            \
  template Vector<NUM> mat_vec(const Matrix<NUM>&, const Vector<NUM>&);            \
  template Vector<NUM> vec_mat(const Vector<NUM>&, const Matrix<NUM>&);            \
  template Scalar<NUM> dot(const Vector<NUM>&, const Vector<NUM>&);                \
  template Matrix<NUM> outer(const Vector<NUM>&, const Vector<NUM>&);              \
  template Matrix<NUM> power(const Matrix<NUM>&, std::size_t);                     \
  template Scalar<NUM> trace(const Matrix<NUM>&);                                  \
  template Scalar<NUM> trace_series(const Matrix<NUM>&);                           \
  template Matrix<NUM> kleene_star(const Matrix<NUM>&);                            \
  template Scalar<NUM> spectral_radius(const Matrix<NUM>&);                        \
  template Scalar<NUM> norm(const Vector<NUM>&);                                   \
  template Scalar<NUM> norm(const Matrix<NUM>&);                                   \
  template Vector<NUM> solve_leq(const Matrix<NUM>&, const Vector<NUM>&);

TROPSCHED_INSTANTIATE_ALGEBRA(Rational)
TROPSCHED_INSTANTIATE_ALGEBRA(double)

#undef TROPSCHED_INSTANTIATE_ALGEBRA

}  // namespace tropsched
