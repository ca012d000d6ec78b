/// @file ratfunc.hpp
/// Rational functions as polynomial fractions, exact and gcd-free.
///
/// Equality is decided by cross-multiplication, so fractions never need a
/// canonical reduced form; a cheap exact-division cancellation keeps sizes
/// reasonable.  This is the scalar used for symbolic chart transitions.
#pragma once

#include <map>
#include <string>

#include "moducert/poly.hpp"

namespace moducert {

class RatFunc {
 public:
  RatFunc() = default;
  /// p / 1
  RatFunc(Poly p);  // NOLINT: implicit by design
  RatFunc(Poly num, Poly den);

  static RatFunc constant(const Ctx& ctx, const Rational& c);
  static RatFunc var(const Ctx& ctx, int index);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Ctx& ctx() const { return num_.ctx(); }

  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc reciprocal() const;
  RatFunc pow(int e) const;

  /// Cross-multiplication equality: a.num * b.den == b.num * a.den.
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str() const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

/// Substitutes rational functions for variables inside a polynomial.
/// Variables without an entry stay as themselves.
RatFunc substitute_ratfunc(const Poly& p, const std::map<int, RatFunc>& values);

/// Substitutes rational functions for variables in a rational function.
RatFunc substitute_ratfunc(const RatFunc& f, const std::map<int, RatFunc>& values);

}  // namespace moducert
