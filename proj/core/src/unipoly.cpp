#include "fiberfield/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "fiberfield/errors.hpp"

namespace fiberfield {

UniPoly::UniPoly(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::term(const Rational& c, int k) {
  UniPoly p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(k + 1, Rational());
  p.coeffs_[k] = c;
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational();
  return coeffs_[k];
}

Rational UniPoly::lc() const { return is_zero() ? Rational() : coeffs_.back(); }

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational());
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

UniPoly UniPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return UniPoly();
  UniPoly r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  UniPoly q, r(*this);
  const int dd = d.degree();
  const Rational dlc = d.lc();
  while (!r.is_zero() && r.degree() >= dd) {
    const int k = r.degree() - dd;
    const Rational c = r.lc() / dlc;
    q += term(c, k);
    r -= d * term(c, k);
  }
  return {q, r};
}

UniPoly UniPoly::divexact(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lc().inverse());
}

Rational UniPoly::eval(const Rational& t0) const {
  Rational r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t0 + *it;
  return r;
}

Rational UniPoly::content() const {
  if (is_zero()) return Rational();
  Int num_gcd(0), den_lcm(1);
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    num_gcd = gcd(num_gcd, c.num());
    den_lcm = lcm(den_lcm, c.den());
  }
  return Rational(num_gcd, den_lcm);
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << a.str();
    } else {
      if (!a.is_one()) os << a.str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  return (a * b).divexact(gcd(a, b)).monic();
}

}  // namespace fiberfield
