#ifndef FIBERFIELD_RATFUNC_HPP
#define FIBERFIELD_RATFUNC_HPP

#include <string>

#include "fiberfield/unipoly.hpp"

namespace fiberfield {

/// Element of Q(t): a reduced fraction of polynomials with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(UniPoly::one()) {}
  RatFunc(const Rational& c) : num_(c), den_(UniPoly::one()) {}  // NOLINT
  RatFunc(long c) : num_(Rational(c)), den_(UniPoly::one()) {}   // NOLINT
  RatFunc(const UniPoly& p) : num_(p), den_(UniPoly::one()) {}   // NOLINT
  RatFunc(UniPoly num, UniPoly den);

  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return RatFunc(Rational(1)); }
  static RatFunc t() { return RatFunc(UniPoly::t()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  // Throws PoleError when the denominator vanishes at t0.
  Rational eval(const Rational& t0) const;

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  UniPoly num_, den_;
};

}  // namespace fiberfield

#endif
