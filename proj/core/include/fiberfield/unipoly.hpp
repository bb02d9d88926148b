#ifndef FIBERFIELD_UNIPOLY_HPP
#define FIBERFIELD_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "fiberfield/rational.hpp"

namespace fiberfield {

/// Dense univariate polynomial over the rationals in the family parameter t.
/// Coefficients are indexed by degree; the leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient list).
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c);  // NOLINT: constants convert implicitly
  UniPoly(long c) : UniPoly(Rational(c)) {}
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return UniPoly(Rational(1)); }
  // The monomial c * t^k.
  static UniPoly term(const Rational& c, int k);
  static UniPoly t() { return term(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return degree() == 0 && coeffs_[0].is_one(); }
  bool is_constant() const { return degree() <= 0; }
  // Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational lc() const;  // leading coefficient, 0 for the zero polynomial

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly scaled(const Rational& c) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  // Euclidean division by a nonzero divisor: returns (quotient, remainder).
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  // Division known to be exact; throws InternalError on a nonzero remainder.
  UniPoly divexact(const UniPoly& d) const;

  UniPoly monic() const;
  Rational eval(const Rational& t0) const;

  // Positive rational c such that (*this)/c has coprime integer coefficients.
  Rational content() const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly lcm(const UniPoly& a, const UniPoly& b);

}  // namespace fiberfield

#endif
