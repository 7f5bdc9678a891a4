#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "tropsched/error.hpp"
#include "tropsched/number.hpp"

namespace tropsched {

/// An element of the max-plus semifield: either the semiring zero (bottom,
/// read as -infinity) or a finite number.
///
/// Operators follow the semifield, not ordinary arithmetic:
///   a + b  is  a (+) b = max(a, b)
///   a * b  is  a (x) b = a + b, bottom absorbing
/// The semiring one is the finite value 0.
template <class Num>
class Scalar {
 public:
  using number_type = Num;

  Scalar() = default;
  explicit Scalar(Num v) : finite_(true), value_(std::move(v)) { NumberTraits<Num>::normalize(value_); }

  static Scalar bottom() { return Scalar(); }
  static Scalar one() { return Scalar(NumberTraits<Num>::from_int(0)); }
  static Scalar of(long v) { return Scalar(NumberTraits<Num>::from_int(v)); }

  bool is_bottom() const noexcept { return !finite_; }
  bool is_finite() const noexcept { return finite_; }

  const Num& value() const {
    if (!finite_) throw DomainError("bottom has no finite value");
    return value_;
  }

  /// Multiplicative inverse; defined for finite values only.
  Scalar inverse() const {
    if (!finite_) throw DomainError("bottom has no inverse");
    return Scalar(Num(-value_));
  }

  /// Rational power x^q, i.e. q * x in conventional terms.
  Scalar pow(const Num& q) const {
    if (!finite_) {
      if (q > 0) return bottom();
      throw DomainError("bottom raised to a non-positive power");
    }
    return Scalar(Num(value_ * q));
  }

  /// The unique k-th root, x^(1/k).
  Scalar root(unsigned long k) const {
    if (k == 0) throw DomainError("zeroth root");
    if (!finite_) return bottom();
    return Scalar(NumberTraits<Num>::divide(value_, k));
  }

  Scalar& operator+=(const Scalar& o) {
    if (o.finite_ && (!finite_ || o.value_ > value_)) {
      finite_ = true;
      value_ = o.value_;
    }
    return *this;
  }

  Scalar& operator*=(const Scalar& o) {
    if (!o.finite_) {
      finite_ = false;
    } else if (finite_) {
      value_ += o.value_;
    }
    return *this;
  }

  /// *this (+)= a (x) b, using `scratch` to avoid temporaries. This is the
  /// inner update of every matrix kernel.
  /// Sets a finite value already in canonical form.
  void assign(const Num& v) {
    finite_ = true;
    value_ = v;
  }

  void accumulate_product(const Scalar& a, const Scalar& b, Num& scratch) {
    if (!a.finite_ || !b.finite_) return;
    NumberTraits<Num>::sum(scratch, a.value_, b.value_);
    if (!finite_ || scratch > value_) {
      finite_ = true;
      using std::swap;
      swap(value_, scratch);
    }
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  friend std::weak_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (!a.finite_ || !b.finite_) {
      return static_cast<int>(a.finite_) <=> static_cast<int>(b.finite_);
    }
    if (a.value_ < b.value_) return std::weak_ordering::less;
    if (b.value_ < a.value_) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

  std::string to_string() const {
    return finite_ ? NumberTraits<Num>::format(value_) : std::string("-inf");
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  bool finite_ = false;
  Num value_{};
};

template <class Num>
Scalar<Num> trop_add(const Scalar<Num>& a, const Scalar<Num>& b) {
  return a + b;
}

template <class Num>
Scalar<Num> trop_mul(const Scalar<Num>& a, const Scalar<Num>& b) {
  return a * b;
}

/// a > b with `tol` of slack; bottom lies below every finite value.
template <class Num>
bool exceeds(const Scalar<Num>& a, const Scalar<Num>& b, const Num& tol) {
  if (a.is_bottom()) return false;
  if (b.is_bottom()) return true;
  return a.value() - b.value() > tol;
}

}  // namespace tropsched
