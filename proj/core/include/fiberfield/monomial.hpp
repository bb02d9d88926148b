#ifndef FIBERFIELD_MONOMIAL_HPP
#define FIBERFIELD_MONOMIAL_HPP

#include <string>
#include <vector>

#include "fiberfield/errors.hpp"

namespace fiberfield {

/// Exponent vector, one entry per ring variable.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int deg() const;
  bool is_one() const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // Componentwise difference; requires divides(m) in the caller.
  Monomial quotient_of(const Monomial& m) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }

  std::string str(const std::vector<std::string>& vars) const;
};

enum class MonomialOrder { Grevlex, Lex };

// Three-way comparison in the given order; positive when a > b.
// Lex priority follows variable index order (index 0 is the highest).
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord);

inline bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  return mono_cmp(a, b, ord) < 0;
}

// All monomials in nvars variables of total degree <= bound, ascending in
// (degree, order).
std::vector<Monomial> monomials_up_to(int nvars, int bound, MonomialOrder ord);

std::string order_name(MonomialOrder ord);

}  // namespace fiberfield

#endif
