/// @file rational.cpp
#include "moducert/rational.hpp"

#include <ostream>

namespace moducert {

Rational Rational::from_string(const std::string& s) {
  auto bad = [&] { return UsageError("Rational: cannot parse '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    return Rational(Int(num), Int(den));
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (q.is_zero()) throw DomainError("Rational: 0 to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Rational acc(1);
  Rational base = q;
  unsigned long k = static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1UL) acc *= base;
    base *= base;
    k >>= 1UL;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

}  // namespace moducert
