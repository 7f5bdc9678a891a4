#include "tropsched/number.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "tropsched/error.hpp"

namespace tropsched {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

[[noreturn]] void bad_number(std::string_view text, const char* why) {
  throw ParseError("invalid number '" + std::string(text) + "': " + why);
}

}  // namespace

Rational NumberTraits<Rational>::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.find_first_of("eE") != std::string_view::npos) {
    bad_number(text, "scientific notation is not accepted in exact mode");
  }
  Rational r;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text, "malformed fraction");
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_number(text, "zero denominator");
    r = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad_number(text, "malformed decimal");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    r = Rational(digits, scale);
  } else {
    if (!all_digits(body)) bad_number(text, "not a number");
    r = Rational(mpz_class(std::string(body), 10));
  }
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string NumberTraits<Rational>::format(const Rational& v) {
  return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
}

Rational NumberTraits<Rational>::floor(const Rational& v) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return Rational(q);
}

Rational NumberTraits<Rational>::ceil(const Rational& v) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return Rational(q);
}

double NumberTraits<double>::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size() || body.empty()) {
    // Fractions are accepted in float mode too, so exact documents load unchanged.
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
      return parse(body.substr(0, slash)) / parse(body.substr(slash + 1));
    }
    bad_number(text, "not a number");
  }
  if (!std::isfinite(v)) bad_number(text, "not finite");
  return v;
}

std::string NumberTraits<double>::format(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

bool NumberTraits<double>::is_integer(double v) { return std::floor(v) == v; }
double NumberTraits<double>::floor(double v) { return std::floor(v); }
double NumberTraits<double>::ceil(double v) { return std::ceil(v); }

}  // namespace tropsched
