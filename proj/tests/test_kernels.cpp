#include <doctest.h>

#include "support/generators.hpp"
#include "tropsched/kernels.hpp"

using namespace tropsched;
namespace k = tropsched::kernels;

TEST_CASE_TEMPLATE("parallel products match the serial reference", Num, Rational, double) {
  gen::Rng rng(41);
  for (std::size_t n : {1, 2, 7, 33, 70, 90}) {
    const auto a = gen::matrix<Num>(rng, n, n + 3, -20, 20, 0.3);
    const auto b = gen::matrix<Num>(rng, n + 3, n, -20, 20, 0.3);
    const auto x = gen::vector<Num>(rng, n + 3, -20, 20, 0.2);
    const auto r = gen::vector<Num>(rng, n, -20, 20, 0.2);
    CHECK(k::parallel::multiply(a, b) == k::serial::multiply(a, b));
    CHECK(k::parallel::multiply(a, x) == k::serial::multiply(a, x));
    CHECK(k::parallel::multiply(r, a) == k::serial::multiply(r, a));
  }
}

TEST_CASE("serial product is the textbook triple loop") {
  gen::Rng rng(8);
  const auto a = gen::matrix(rng, 6, 4, -9, 9, 0.3);
  const auto b = gen::matrix(rng, 4, 5, -9, 9, 0.3);
  Matrix<Rational> c(6, 5);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t l = 0; l < 4; ++l) c(i, j) = c(i, j) + a(i, l) * b(l, j);
  CHECK(k::serial::multiply(a, b) == c);
}

TEST_CASE_TEMPLATE("parallel closure matches the serial reference", Num, Rational, double) {
  gen::Rng rng(42);
  for (std::size_t n : {1, 3, 12, 65, 100}) {
    // Backward lags outweigh any forward path, so there is no positive cycle.
    Matrix<Num> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i > j && rng.chance(0.3)) a(i, j) = Scalar<Num>::of(rng.uniform(-5, 9));
        else if (i < j && rng.chance(0.1)) a(i, j) = Scalar<Num>::of(rng.uniform(-20 * long(n), -10 * long(n)));
    const auto s = k::serial::closure(a);
    const auto p = k::parallel::closure(a);
    REQUIRE(s.ok());
    REQUIRE(p.ok());
    CHECK(p.paths == s.paths);
  }
}

TEST_CASE("closure equals the sum of powers") {
  gen::Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng.uniform(1, 8);
    const auto a = gen::break_positive_cycles(gen::matrix(rng, n, n, -3, 3, 0.5));
    const auto res = k::serial::closure(a);
    REQUIRE(res.ok());
    Matrix<Rational> sum(n, n), pw = Matrix<Rational>::identity(n);
    for (std::size_t i = 1; i <= n; ++i) {
      pw = mat_mul(pw, a);
      sum = add(sum, pw);
    }
    CHECK(res.paths == sum);
  }
}

TEST_CASE("both closures report a positive cycle") {
  gen::Rng rng(44);
  for (int t = 0; t < 50; ++t) {
    const bool big = t % 5 == 0;
    const std::size_t n = big ? rng.uniform(64, 90) : rng.uniform(2, 10);
    auto a = gen::matrix(rng, n, n, -3, 3, big ? 0.98 : 0.7);
    const auto s = k::serial::closure(a);
    const auto p = k::parallel::closure(a);
    CHECK(s.ok() == p.ok());
    if (!big) CHECK(s.ok() == (trace_series(a) <= Scalar<Rational>::one()));
  }
}

TEST_CASE("thread count is positive") { CHECK(k::max_threads() >= 1); }
