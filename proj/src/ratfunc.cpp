/// @file ratfunc.cpp
#include "moducert/ratfunc.hpp"

#include "moducert/errors.hpp"
#include "moducert/polyops.hpp"

namespace moducert {

RatFunc::RatFunc(Poly p)
    : num_(std::move(p)), den_(Poly::constant(num_.ctx(), Rational(1))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("RatFunc: zero denominator");
  normalize();
}

RatFunc RatFunc::constant(const Ctx& ctx, const Rational& c) {
  return RatFunc(Poly::constant(ctx, c));
}

RatFunc RatFunc::var(const Ctx& ctx, int index) {
  return RatFunc(Poly::var(ctx, index));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.ctx(), Rational(1));
    return;
  }
  // Cheap cancellations: exact-divide when possible, keep the denominator's
  // leading coefficient positive, strip shared rational content.
  if (const auto q = try_exact_divide(num_, den_)) {
    num_ = *q;
    den_ = Poly::constant(num_.ctx(), Rational(1));
    return;
  }
  const Poly dn = primitive_normal(den_);
  const Rational scale = den_.leading_coeff() / dn.leading_coeff();
  den_ = dn;
  num_ = (Rational(1) / scale) * num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  return a * b.reciprocal();
}

RatFunc RatFunc::reciprocal() const {
  if (num_.is_zero()) throw DomainError("RatFunc: reciprocal of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return reciprocal().pow(-e);
  RatFunc acc = RatFunc::constant(ctx(), Rational(1));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::str() const {
  if (den_.is_constant() && den_.constant_term() == Rational(1)) {
    return num_.str();
  }
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFunc substitute_ratfunc(const Poly& p, const std::map<int, RatFunc>& values) {
  const Ctx& ctx = p.ctx();
  RatFunc acc = RatFunc::constant(ctx, Rational(0));
  for (const auto& [e, c] : p.terms()) {
    RatFunc term = RatFunc::constant(ctx, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const auto it = values.find(static_cast<int>(i));
      const RatFunc base = it == values.end()
                               ? RatFunc::var(ctx, static_cast<int>(i))
                               : it->second;
      term = term * base.pow(e[i]);
    }
    acc = acc + term;
  }
  return acc;
}

RatFunc substitute_ratfunc(const RatFunc& f, const std::map<int, RatFunc>& values) {
  const RatFunc n = substitute_ratfunc(f.num(), values);
  const RatFunc d = substitute_ratfunc(f.den(), values);
  return n / d;
}

}  // namespace moducert
