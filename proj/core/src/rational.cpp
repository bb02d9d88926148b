#include "fiberfield/rational.hpp"

namespace fiberfield {

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
  if (sgn(den) == 0) throw DivisionByZeroError("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational::Rational(const std::string& s) {
  if (mpq_set_str(v_.get_mpq_t(), s.c_str(), 10) != 0)
    throw Error("cannot parse rational: '" + s + "'");
  if (sgn(v_.get_den()) == 0) throw DivisionByZeroError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError();
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  return Rational(den(), num());
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace fiberfield
