#pragma once

// The vaccination-session instance used throughout the tests, entered as
// matrices so that it does not depend on the instance parser.

#include <string>
#include <vector>

#include "tropsched/scheduling.hpp"

namespace fixtures {

using tropsched::Rational;
using Q = tropsched::Scalar<Rational>;
using QVec = tropsched::Vector<Rational>;
using QMat = tropsched::Matrix<Rational>;

inline const Q o = Q::bottom();

inline Q q(long v) { return Q::of(v); }

inline QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(q(x));
  return v;
}

inline QMat qm(const std::vector<QVec>& rows) { return QMat::from_rows(rows); }

inline tropsched::ProjectInstance<Rational> vaccination() {
  tropsched::ProjectInstance<Rational> inst;
  inst.B = qm({{q(0), o, o, q(0), o},
               {q(1), q(0), o, o, o},
               {o, o, q(0), q(1), q(-1)},
               {q(0), o, o, q(0), o},
               {o, o, q(-1), o, q(0)}});
  inst.C = qm({{q(4), o, o, o, o},
               {o, q(4), o, o, o},
               {o, o, q(5), o, o},
               {o, o, o, q(5), o},
               {o, o, o, o, q(3)}});
  inst.D = qm({{o, o, o, o, o},
               {o, o, o, o, o},
               {q(0), o, o, o, o},
               {o, o, o, o, o},
               {o, q(0), o, q(0), o}});
  inst.g = qv({0, 0, 0, 0, 0});
  inst.h = qv({4, 5, 8, 9, 5});
  inst.f = qv({12, 12, 12, 12, 12});
  return inst;
}

inline std::vector<std::string> session_names() { return {"S1", "S2", "S3", "S4", "S5"}; }

inline std::string data_path(const std::string& name) { return std::string(TROPSCHED_TEST_DATA) + "/" + name; }

}  // namespace fixtures
