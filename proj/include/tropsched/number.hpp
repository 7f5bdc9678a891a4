#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropsched {

/// Exact arbitrary-precision rational, the default arithmetic.
using Rational = mpq_class;

/// Per-number-type hooks used by the generic algebra and I/O code.
template <class Num>
struct NumberTraits;

template <>
struct NumberTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  /// Accepts integers, decimals ("2.5", "-0.125") and fractions ("7/3").
  /// Scientific notation is rejected.
  static Rational parse(std::string_view text);
  /// Integers print bare, everything else as "p/q".
  static std::string format(const Rational& v);
  static Rational from_int(long v) { return Rational(v); }
  /// GMP compares and hashes correctly only in lowest terms.
  static void normalize(Rational& v) { v.canonicalize(); }
  /// out = a + b, skipping the gcd when both are integers.
  static void sum(Rational& out, const Rational& a, const Rational& b) {
    if (mpz_cmp_ui(a.get_den_mpz_t(), 1) == 0 && mpz_cmp_ui(b.get_den_mpz_t(), 1) == 0) {
      mpz_add(out.get_num_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
      mpz_set_ui(out.get_den_mpz_t(), 1);
    } else {
      mpq_add(out.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    }
  }
  static Rational divide(const Rational& v, unsigned long k) {
    Rational r = v / Rational(static_cast<long>(k));
    return r;
  }
  static bool is_integer(const Rational& v) { return v.get_den() == 1; }
  static double to_double(const Rational& v) { return v.get_d(); }
  static Rational floor(const Rational& v);
  static Rational ceil(const Rational& v);
};

template <>
struct NumberTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static double parse(std::string_view text);
  /// Shortest representation that round-trips.
  static std::string format(double v);
  static double from_int(long v) { return static_cast<double>(v); }
  static void normalize(double&) {}
  static void sum(double& out, double a, double b) { out = a + b; }
  static double divide(double v, unsigned long k) { return v / static_cast<double>(k); }
  static bool is_integer(double v);
  static double to_double(double v) { return v; }
  static double floor(double v);
  static double ceil(double v);
};

}  // namespace tropsched
