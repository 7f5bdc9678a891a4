#include <doctest.h>

#include <functional>

#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace tropsched;
using namespace fixtures;

namespace {

// Maximum cycle mean by enumerating every simple cycle.
Q max_cycle_mean(const QMat& a) {
  const std::size_t n = a.rows();
  Q best;
  std::vector<bool> on(n, false);
  std::function<void(std::size_t, std::size_t, Rational, std::size_t)> walk =
      [&](std::size_t start, std::size_t at, Rational w, std::size_t len) {
        for (std::size_t next = start; next < n; ++next) {
          const Q& e = a(at, next);
          if (e.is_bottom()) continue;
          if (next == start) {
            best += Q(Rational(w + e.value()) / Rational(static_cast<long>(len + 1)));
          } else if (!on[next]) {
            on[next] = true;
            walk(start, next, w + e.value(), len + 1);
            on[next] = false;
          }
        }
      };
  for (std::size_t s = 0; s < n; ++s) {
    on[s] = true;
    walk(s, s, Rational(0), 0);
    on[s] = false;
  }
  return best;
}

}  // namespace

TEST_CASE("example products and closure") {
  const auto inst = vaccination();
  const QMat dc = mat_mul(inst.D, inst.C);
  CHECK(dc == qm({{o, o, o, o, o}, {o, o, o, o, o}, {q(4), o, o, o, o}, {o, o, o, o, o}, {o, q(4), o, q(5), o}}));

  const QMat r = add(inst.B, dc);
  CHECK(r == qm({{q(0), o, o, q(0), o},
                 {q(1), q(0), o, o, o},
                 {q(4), o, q(0), q(1), q(-1)},
                 {q(0), o, o, q(0), o},
                 {o, q(4), q(-1), q(5), q(0)}}));

  const QMat star = qm({{q(0), o, o, q(0), o},
                        {q(1), q(0), o, q(1), o},
                        {q(4), q(3), q(0), q(4), q(-1)},
                        {q(0), o, o, q(0), o},
                        {q(5), q(4), q(-1), q(5), q(0)}});
  CHECK(power(r, 2).row_vector(4) == QVec{q(5), q(4), q(-1), q(5), q(0)});
  for (std::size_t k = 2; k <= 5; ++k) CHECK(power(r, k) == star);
  CHECK(kleene_star(r) == star);
  CHECK(trace(r) == q(0));
  CHECK(trace_series(r) == q(0));

  const QVec fc = vec_mat(conj(inst.f), inst.C);
  // entry 4 is -12 + 5; the deadline bound 7 is tighter than h_4 = 9
  CHECK(fc == qv({-8, -8, -7, -7, -9}));
  const QVec s_row = add(fc, conj(inst.h));
  CHECK(s_row == qv({-4, -5, -7, -7, -5}));
  CHECK(vec_mat(s_row, star) == qv({0, -1, -6, 0, -5}));
  CHECK(dot(vec_mat(s_row, star), inst.g) == q(0));
  CHECK(norm(s_row) == q(-4));
  CHECK(norm(mat_vec(inst.C, inst.g)) == q(5));
  CHECK(norm(mat_vec(mat_mul(inst.C, r), inst.g)) == q(9));
  CHECK(norm(mat_mul(inst.C, star)) == q(9));
}

TEST_CASE("conjugate transpose") {
  CHECK(conj(qv({0, 1, 4, 0, 5})) == qv({0, -1, -4, 0, -5}));
  CHECK(conj(QVec{o, q(2)}) == QVec{o, q(-2)});
  CHECK_THROWS_WITH_AS(conj(QVec{o, o}), "zero vector has no conjugate", DomainError);
}

TEST_CASE("identity and dimension checks") {
  gen::Rng rng(5);
  const QMat a = gen::matrix(rng, 3, 4, -3, 3, 0.3);
  CHECK(mat_mul(a, QMat::identity(4)) == a);
  CHECK(mat_mul(QMat::identity(3), a) == a);
  CHECK_THROWS_AS(mat_mul(a, a), DimensionError);
  CHECK_THROWS_AS(trace(a), DimensionError);
  CHECK_THROWS_AS(trace_series(a), DimensionError);
  CHECK_THROWS_AS(kleene_star(a), DimensionError);
  CHECK_THROWS_AS(spectral_radius(a), DimensionError);
  CHECK_THROWS_AS(QMat::from_rows({{q(1)}, {q(1), q(2)}}), DimensionError);
}

TEST_CASE("trace edge cases") {
  CHECK(trace(QMat::identity(5)) == q(0));
  CHECK(trace(QMat(3, 3)).is_bottom());
  CHECK(trace_series(QMat(3, 3)).is_bottom());
  CHECK(trace_series(qm({{q(1)}})) == q(1));
}

TEST_CASE("trace identities on random matrices") {
  gen::Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rng.uniform(1, 5);
    const QMat a = props::random_fraction_matrix(rng, n, n, 0.3);
    const QMat c = props::random_fraction_matrix(rng, n, n, 0.3);
    const Q x = gen::fraction(rng, -5, 5, 0.1);
    CHECK(trace(mat_mul(a, c)) == trace(mat_mul(c, a)));
    CHECK(trace(scale(x, a)) == x * trace(a));
  }
}

TEST_CASE("kleene star") {
  CHECK(kleene_star(QMat(4, 4)) == QMat::identity(4));
  CHECK(kleene_star(QMat(0, 0)) == QMat(0, 0));
  CHECK(kleene_star(qm({{q(-2)}})) == qm({{q(0)}}));
  CHECK_THROWS_WITH_AS(kleene_star(qm({{q(1)}})), "positive cycle: star diverges", PositiveCycleError);
}

TEST_CASE("positive cycle witness is a positive simple cycle") {
  gen::Rng rng(99);
  int seen = 0;
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = rng.uniform(1, 7);
    const QMat a = gen::matrix(rng, n, n, -3, 3, 0.4);
    try {
      (void)kleene_star(a);
      CHECK(trace_series(a) <= q(0));
    } catch (const PositiveCycleError& e) {
      ++seen;
      CHECK(trace_series(a) > q(0));
      const auto& c = e.cycle();
      REQUIRE(!c.empty());
      std::vector<bool> used(n, false);
      Q w = Q::one();
      for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(!used[c[i]]);
        used[c[i]] = true;
        w *= a(c[i], c[(i + 1) % c.size()]);
      }
      CHECK(w > q(0));
    }
  }
  CHECK(seen > 50);
}

TEST_CASE("spectral radius") {
  CHECK(spectral_radius(QMat::identity(3)) == q(0));
  CHECK(spectral_radius(QMat(3, 3)).is_bottom());
  const QVec p = qv({1, 2}), qq = qv({0, 0});
  CHECK(spectral_radius(outer(p, conj(qq))) == q(2));

  gen::Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rng.uniform(1, 5);
    const QMat a = props::random_fraction_matrix(rng, n, n, 0.5);
    CHECK(spectral_radius(a) == max_cycle_mean(a));
  }
}

TEST_CASE("norms") {
  CHECK(norm(QVec{o, o}).is_bottom());
  CHECK(norm(qv({3, -1, 7})) == q(7));
  CHECK(norm(qm({{q(1), o}, {q(-4), q(2)}})) == q(2));
}

TEST_CASE("solve_leq") {
  CHECK(solve_leq(QMat::identity(2), qv({4, 5})) == qv({4, 5}));
  const auto inst = vaccination();
  const QVec x = solve_leq(inst.C, inst.f);
  CHECK(x == qv({8, 8, 7, 7, 9}));
  CHECK(leq(mat_vec(inst.C, x), inst.f));
  CHECK_THROWS_AS(solve_leq(qm({{q(0), o}, {q(1), o}}), qv({1, 1})), DomainError);
  CHECK_THROWS_AS(solve_leq(QMat::identity(2), QVec{q(1), o}), DomainError);
}

TEST_CASE("kleene and maximal solution property suites") {
  gen::Rng rng(77);
  for (auto [name, outcome] : {std::pair{"kleene identities", props::kleene_identities(rng, 500)},
                               std::pair{"maximal solution", props::leq_maximality(rng, 500)}}) {
    INFO(name, ": ", outcome.first);
    CHECK(outcome.ok());
  }
}
