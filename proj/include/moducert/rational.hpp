/// @file rational.hpp
/// Exact rational scalar used throughout the toolkit.
///
/// `Rational` wraps boost::multiprecision::cpp_rational, which keeps every
/// value in lowest terms with a positive denominator.  The wrapper restricts
/// implicit conversions to integral types so the type nests cleanly inside
/// Eigen expressions (greedy template constructors on the raw boost type
/// collide with Eigen's scalar-promotion probes).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <type_traits>
#include <utility>

#include "moducert/errors.hpp"

namespace moducert {

using Int = boost::multiprecision::cpp_int;

class Rational {
 public:
  using Rep = boost::multiprecision::cpp_rational;

  Rational() = default;

  template <typename I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  Rational(I n) : v_(n) {}  // NOLINT: implicit by design, mirrors int -> Q

  Rational(const Int& num) : v_(num) {}  // NOLINT: implicit by design

  Rational(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    // Canonical form keeps the denominator positive.
    v_ = den < 0 ? Rep(-num, -den) : Rep(num, den);
  }

  Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

  explicit Rational(Rep r) : v_(std::move(r)) {}

  /// Parses "num", "num/den", or a decimal-free signed integer string.
  static Rational from_string(const std::string& s);

  const Rep& rep() const { return v_; }
  Int num() const { return numerator(v_); }
  Int den() const { return denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator(v_) == 1; }
  int sign() const { return v_.sign(); }

  /// Canonical text form: "num" when the denominator is 1, else "num/den".
  std::string str() const { return v_.str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(Rep(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(Rep(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(Rep(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("Rational: division by zero");
    return Rational(Rep(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(Rep(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

 private:
  Rep v_{};
};

Rational abs(const Rational& q);

/// q^e for integer e (negative e inverts; throws DomainError on 0^negative).
Rational pow(const Rational& q, long e);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace moducert

namespace Eigen {

template <typename T>
struct NumTraits;

/// Exact-field traits: no epsilon, no precision loss, heap-backed scalar.
template <>
struct NumTraits<moducert::Rational> {
  using Real = moducert::Rational;
  using NonInteger = moducert::Rational;
  using Literal = moducert::Rational;
  using Nested = moducert::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
