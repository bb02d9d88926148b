#ifndef FIBERFIELD_RATIONAL_HPP
#define FIBERFIELD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "fiberfield/errors.hpp"

namespace fiberfield {

using Int = mpz_class;

/// Exact rational scalar. Always kept canonical: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den);
  Rational(long num, long den);
  // Accepts "p", "-p", "p/q".
  explicit Rational(const std::string& s);

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace fiberfield

#endif
