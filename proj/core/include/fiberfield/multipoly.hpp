#ifndef FIBERFIELD_MULTIPOLY_HPP
#define FIBERFIELD_MULTIPOLY_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fiberfield/monomial.hpp"

namespace fiberfield {

/// Sparse multivariate polynomial over an exact field K (Rational or
/// RatFunc). Terms are kept sorted in descending monomial order with no
/// stored zero coefficients.
template <class K>
class MultiPoly {
 public:
  using Term = std::pair<Monomial, K>;

  MultiPoly() : nvars_(0), ord_(MonomialOrder::Grevlex) {}
  MultiPoly(int nvars, MonomialOrder ord) : nvars_(nvars), ord_(ord) {}
  MultiPoly(int nvars, MonomialOrder ord, std::vector<Term> terms)
      : nvars_(nvars), ord_(ord), terms_(std::move(terms)) {
    normalize();
  }

  static MultiPoly constant(int nvars, MonomialOrder ord, const K& c) {
    MultiPoly p(nvars, ord);
    if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
    return p;
  }
  static MultiPoly variable(int nvars, MonomialOrder ord, int i) {
    MultiPoly p(nvars, ord);
    Monomial m(nvars);
    m.e[i] = 1;
    p.terms_.push_back({m, K::one()});
    return p;
  }
  static MultiPoly monomial(int nvars, MonomialOrder ord, const Monomial& m, const K& c) {
    MultiPoly p(nvars, ord);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  int nvars() const { return nvars_; }
  MonomialOrder order() const { return ord_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.deg());
    return d;
  }

  const Term& leading() const {
    if (is_zero()) throw InvariantError("leading term of zero polynomial");
    return terms_.front();
  }

  K coeff(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.first == m) return t.second;
    return K::zero();
  }

  MultiPoly operator-() const {
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.nvars_, a.ord_);
    r.terms_ = merge_terms(a, b, false);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.nvars_, a.ord_);
    r.terms_ = merge_terms(a, b, true);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.nvars_, a.ord_);
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        r.terms_.push_back({ta.first * tb.first, ta.second * tb.second});
    r.normalize();
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const K& c) const {
    if (c.is_zero()) return MultiPoly(nvars_, ord_);
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.second = t.second * c;
    return r;
  }

  MultiPoly times_monomial(const Monomial& m, const K& c) const {
    if (c.is_zero()) return MultiPoly(nvars_, ord_);
    MultiPoly r(nvars_, ord_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.first * m, t.second * c});
    // Multiplying by a fixed monomial preserves the term order.
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly derivative(int var) const {
    MultiPoly r(nvars_, ord_);
    for (const auto& t : terms_) {
      const int k = t.first.e[var];
      if (k == 0) continue;
      Monomial m = t.first;
      m.e[var] -= 1;
      r.terms_.push_back({m, t.second * K(k)});
    }
    r.normalize();
    return r;
  }

  // Substitute images[i] for variable i; images live in the target context.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
      throw InvariantError("substitution image count mismatch");
    int tn = nvars_;
    MonomialOrder to = ord_;
    if (!images.empty()) {
      tn = images[0].nvars();
      to = images[0].order();
    }
    MultiPoly acc(tn, to);
    for (const auto& t : terms_) {
      MultiPoly prod = MultiPoly::constant(tn, to, t.second);
      for (int v = 0; v < nvars_; ++v)
        for (int k = 0; k < t.first.e[v]; ++k) prod = prod * images[v];
      acc += prod;
    }
    return acc;
  }

  K eval(const std::vector<K>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw InvariantError("evaluation point arity mismatch");
    K acc = K::zero();
    for (const auto& t : terms_) {
      K v = t.second;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < t.first.e[i]; ++k) v = v * point[i];
      acc = acc + v;
    }
    return acc;
  }

  // Same exponent data reinterpreted under another order (terms re-sorted).
  MultiPoly with_order(MonomialOrder ord) const {
    MultiPoly r(nvars_, ord, terms_);
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const -> MultiPoly<decltype(f(std::declval<K>()))> {
    using K2 = decltype(f(std::declval<K>()));
    MultiPoly<K2> r(nvars_, ord_);
    std::vector<typename MultiPoly<K2>::Term> ts;
    for (const auto& t : terms_) ts.push_back({t.first, f(t.second)});
    return MultiPoly<K2>(nvars_, ord_, std::move(ts));
  }

  /// Canonical text: terms in descending monomial order, explicit '^'.
  std::string str(const std::vector<std::string>& vars) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::string cs = t.second.str();
      bool neg = false;
      if (!cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos) {
        neg = true;
        cs = cs.substr(1);
      }
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      const bool unit = (cs == "1");
      if (t.first.is_one()) {
        os << (needs_parens(cs) ? "(" + cs + ")" : cs);
      } else {
        if (!unit) os << (needs_parens(cs) ? "(" + cs + ")" : cs) << "*";
        os << t.first.str(vars);
      }
    }
    return os.str();
  }

 private:
  static bool needs_parens(const std::string& s) {
    return s.find(' ') != std::string::npos || s.find('/') != std::string::npos;
  }

  void check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || ord_ != o.ord_)
      throw InvariantError("polynomial context mismatch");
  }

  static std::vector<Term> merge_terms(const MultiPoly& a, const MultiPoly& b, bool sub) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else c = mono_cmp(a.terms_[i].first, b.terms_[j].first, a.ord_);
      if (c > 0) {
        out.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        out.push_back({t.first, sub ? -t.second : t.second});
      } else {
        K v = sub ? K(a.terms_[i].second - b.terms_[j].second)
                  : K(a.terms_[i].second + b.terms_[j].second);
        if (!v.is_zero()) out.push_back({a.terms_[i].first, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  void normalize() {
    std::stable_sort(terms_.begin(), terms_.end(), [&](const Term& x, const Term& y) {
      return mono_cmp(x.first, y.first, ord_) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (static_cast<int>(t.first.e.size()) != nvars_)
        throw InvariantError("monomial arity mismatch in polynomial");
      if (!out.empty() && out.back().first == t.first) {
        out.back().second = out.back().second + t.second;
        if (out.back().second.is_zero()) out.pop_back();
      } else if (!t.second.is_zero()) {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
  }

  int nvars_;
  MonomialOrder ord_;
  std::vector<Term> terms_;
};

}  // namespace fiberfield

#endif
