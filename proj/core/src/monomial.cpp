#include "fiberfield/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fiberfield {

int Monomial::deg() const { return std::accumulate(e.begin(), e.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  if (e.size() != m.e.size()) throw InvariantError("monomial arity mismatch");
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  if (e.size() != m.e.size()) throw InvariantError("monomial arity mismatch");
  Monomial r(*this);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
  return r;
}

Monomial Monomial::quotient_of(const Monomial& m) const {
  Monomial r(m);
  for (size_t i = 0; i < e.size(); ++i) {
    r.e[i] -= e[i];
    if (r.e[i] < 0) throw InvariantError("monomial quotient is not integral");
  }
  return r;
}

std::string Monomial::str(const std::vector<std::string>& vars) const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    os << vars[i];
    if (e[i] > 1) os << "^" << e[i];
    any = true;
  }
  return any ? os.str() : "1";
}

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (a.e.size() != b.e.size()) throw InvariantError("monomial arity mismatch");
  switch (ord) {
    case MonomialOrder::Lex:
      for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    case MonomialOrder::Grevlex: {
      const int da = a.deg(), db = b.deg();
      if (da != db) return da > db ? 1 : -1;
      // Equal degree: larger means the last differing exponent is smaller.
      for (size_t i = a.e.size(); i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      return 0;
    }
  }
  throw InternalError("unknown monomial order");
}

std::vector<Monomial> monomials_up_to(int nvars, int bound, MonomialOrder ord) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  // Depth-first enumeration of exponent vectors with total degree <= bound.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur.e[var] = k;
      self(self, var + 1, remaining - k);
    }
    cur.e[var] = 0;
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) {
    if (x.deg() != y.deg()) return x.deg() < y.deg();
    return mono_less(x, y, ord);
  });
  return out;
}

std::string order_name(MonomialOrder ord) {
  return ord == MonomialOrder::Grevlex ? "grevlex" : "lex";
}

}  // namespace fiberfield
