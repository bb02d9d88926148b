#include "fiberfield/ratfunc.hpp"

#include "fiberfield/errors.hpp"

namespace fiberfield {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly::one();
    return;
  }
  const UniPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  const Rational d = den_.lc();
  if (!d.is_one()) {
    const Rational inv = d.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZeroError();
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& t0) const {
  const Rational d = den_.eval(t0);
  if (d.is_zero()) throw PoleError("pole at t = " + t0.str());
  return num_.eval(t0) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace fiberfield
