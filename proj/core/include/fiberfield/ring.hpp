#ifndef FIBERFIELD_RING_HPP
#define FIBERFIELD_RING_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fiberfield/multipoly.hpp"

namespace fiberfield {

inline constexpr long kDefaultBudget = 100000;

/// Shared mutable-free counter so nested computations draw on one budget.
class StepBudget {
 public:
  explicit StepBudget(long limit = kDefaultBudget) : limit_(limit) {}
  void charge(long n = 1) {
    used_ += n;
    if (used_ > limit_) throw ResourceError("step budget exceeded (" + std::to_string(limit_) + ")");
  }
  long used() const { return used_; }
  long limit() const { return limit_; }

 private:
  long limit_;
  long used_ = 0;
};

/// Finitely generated ideal with an optional cached reduced Groebner basis.
/// The cached basis is reduced, autoreduced, monic, and sorted by ascending
/// leading monomial.
template <class K>
class Ideal {
 public:
  Ideal() : ord_(MonomialOrder::Grevlex) {}
  Ideal(std::vector<MultiPoly<K>> gens, MonomialOrder ord)
      : gens_(std::move(gens)), ord_(ord) {
    for (auto& g : gens_)
      if (g.order() != ord_) g = g.with_order(ord_);
    std::erase_if(gens_, [](const MultiPoly<K>& p) { return p.is_zero(); });
  }

  const std::vector<MultiPoly<K>>& generators() const { return gens_; }
  MonomialOrder order() const { return ord_; }
  bool has_groebner() const { return static_cast<bool>(gb_); }
  const std::vector<MultiPoly<K>>& groebner_basis() const {
    if (!gb_) throw InvariantError("groebner basis not computed");
    return *gb_;
  }

  void compute_groebner(StepBudget& budget);

 private:
  std::vector<MultiPoly<K>> gens_;
  MonomialOrder ord_;
  std::optional<std::vector<MultiPoly<K>>> gb_;
};

// Remainder of p under multivariate division by basis (need not be a
// Groebner basis; uniqueness of the remainder requires one).
template <class K>
MultiPoly<K> reduce_by(const MultiPoly<K>& p, const std::vector<MultiPoly<K>>& basis,
                       StepBudget* budget = nullptr);

template <class K>
Ideal<K> groebner(const Ideal<K>& ideal, StepBudget* budget = nullptr);

/// Affine algebra K[x_1..x_n]/I with unique normal forms. Immutable and
/// cheap to copy (shared payload).
template <class K>
class QuotientRing {
 public:
  QuotientRing() = default;
  QuotientRing(std::vector<std::string> vars, Ideal<K> ideal, StepBudget* budget = nullptr);

  // Free polynomial ring (no relations).
  static QuotientRing free_ring(std::vector<std::string> vars,
                                MonomialOrder ord = MonomialOrder::Grevlex) {
    return QuotientRing(std::move(vars), Ideal<K>({}, ord));
  }

  int nvars() const { return static_cast<int>(d_->vars.size()); }
  const std::vector<std::string>& vars() const { return d_->vars; }
  MonomialOrder order() const { return d_->ideal.order(); }
  const Ideal<K>& ideal() const { return d_->ideal; }
  const std::vector<MultiPoly<K>>& groebner_basis() const { return d_->ideal.groebner_basis(); }

  bool same_ring(const QuotientRing& o) const { return d_ == o.d_ || text() == o.text(); }

  MultiPoly<K> zero() const { return MultiPoly<K>(nvars(), order()); }
  MultiPoly<K> one() const { return constant(K::one()); }
  MultiPoly<K> constant(const K& c) const { return MultiPoly<K>::constant(nvars(), order(), c); }
  MultiPoly<K> var(int i) const { return MultiPoly<K>::variable(nvars(), order(), i); }
  MultiPoly<K> var(const std::string& name) const { return var(var_index(name)); }
  int var_index(const std::string& name) const;

  MultiPoly<K> normal_form(const MultiPoly<K>& p, StepBudget* budget = nullptr) const;
  bool contains(const MultiPoly<K>& p) const { return normal_form(p).is_zero(); }

  // All staircase monomials of total degree <= bound, ascending in
  // (degree, order).
  std::vector<Monomial> staircase(int bound) const;

  std::string text() const;  // canonical description used in reports

 private:
  struct Data {
    std::vector<std::string> vars;
    Ideal<K> ideal;
  };
  std::shared_ptr<const Data> d_;
};

template <class K>
std::vector<Monomial> staircase_basis(const QuotientRing<K>& ring, int bound) {
  return ring.staircase(bound);
}

// ---------------------------------------------------------------------------
// implementation

template <class K>
MultiPoly<K> reduce_by(const MultiPoly<K>& p, const std::vector<MultiPoly<K>>& basis,
                       StepBudget* budget) {
  MultiPoly<K> rem(p.nvars(), p.order());
  MultiPoly<K> cur = p;
  while (!cur.is_zero()) {
    const auto& lt = cur.leading();
    bool reduced = false;
    for (const auto& g : basis) {
      const auto& glt = g.leading();
      if (glt.first.divides(lt.first)) {
        const Monomial q = glt.first.quotient_of(lt.first);
        cur = cur - g.times_monomial(q, lt.second / glt.second);
        if (budget) budget->charge();
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem += MultiPoly<K>::monomial(cur.nvars(), cur.order(), lt.first, lt.second);
      cur = cur - MultiPoly<K>::monomial(cur.nvars(), cur.order(), lt.first, lt.second);
    }
  }
  return rem;
}

namespace detail {

template <class K>
Monomial lcm_mono(const MultiPoly<K>& a, const MultiPoly<K>& b) {
  const Monomial& x = a.leading().first;
  const Monomial& y = b.leading().first;
  Monomial m(x);
  for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(x.e[i], y.e[i]);
  return m;
}

template <class K>
bool coprime_leads(const MultiPoly<K>& a, const MultiPoly<K>& b) {
  const Monomial& x = a.leading().first;
  const Monomial& y = b.leading().first;
  for (size_t i = 0; i < x.e.size(); ++i)
    if (x.e[i] > 0 && y.e[i] > 0) return false;
  return true;
}

template <class K>
MultiPoly<K> s_poly(const MultiPoly<K>& f, const MultiPoly<K>& g) {
  const Monomial l = lcm_mono(f, g);
  const auto& lf = f.leading();
  const auto& lg = g.leading();
  return f.times_monomial(lf.first.quotient_of(l), lf.second.inverse()) -
         g.times_monomial(lg.first.quotient_of(l), lg.second.inverse());
}

}  // namespace detail

template <class K>
void Ideal<K>::compute_groebner(StepBudget& budget) {
  if (gb_) return;
  std::vector<MultiPoly<K>> g;
  for (const auto& p : gens_)
    if (!p.is_zero()) g.push_back(p.scaled(p.leading().second.inverse()));

  struct Pair {
    int i, j;
    Monomial lcm;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    const int c = mono_cmp(a.lcm, b.lcm, ord_);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> pending;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) pending.push_back({i, j, detail::lcm_mono(g[i], g[j])});
  };
  for (int j = 1; j < static_cast<int>(g.size()); ++j) push_pairs_for(j);

  auto pair_pending = [&](int i, int j) {
    for (const auto& p : pending)
      if ((p.i == i && p.j == j) || (p.i == j && p.j == i)) return true;
    return false;
  };

  while (!pending.empty()) {
    const auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    const Pair pr = *it;
    pending.erase(it);

    // Product criterion: coprime leading monomials reduce to zero.
    if (detail::coprime_leads(g[pr.i], g[pr.j])) continue;
    // Chain criterion: a third element dividing the lcm whose pairs with
    // both ends were already treated makes this pair redundant.
    bool skip = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (g[k].leading().first.divides(pr.lcm) && !pair_pending(pr.i, k) &&
          !pair_pending(pr.j, k))
        skip = true;
    }
    if (skip) continue;

    MultiPoly<K> r = reduce_by(detail::s_poly(g[pr.i], g[pr.j]), g, &budget);
    if (r.is_zero()) continue;
    g.push_back(r.scaled(r.leading().second.inverse()));
    push_pairs_for(static_cast<int>(g.size()) - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<MultiPoly<K>> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading().first;
      const auto& lj = g[j].leading().first;
      if (lj.divides(li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Autoreduce tails.
  std::vector<MultiPoly<K>> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly<K>> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly<K> r = others.empty() ? minimal[i] : reduce_by(minimal[i], others, &budget);
    if (!r.is_zero()) reduced.push_back(r.scaled(r.leading().second.inverse()));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly<K>& a, const MultiPoly<K>& b) {
    return mono_cmp(a.leading().first, b.leading().first, ord_) < 0;
  });
  gb_ = std::move(reduced);
}

template <class K>
Ideal<K> groebner(const Ideal<K>& ideal, StepBudget* budget) {
  Ideal<K> copy = ideal;
  StepBudget local;
  copy.compute_groebner(budget ? *budget : local);
  return copy;
}

template <class K>
QuotientRing<K>::QuotientRing(std::vector<std::string> vars, Ideal<K> ideal, StepBudget* budget) {
  StepBudget local;
  if (!ideal.has_groebner()) ideal.compute_groebner(budget ? *budget : local);
  for (const auto& g : ideal.groebner_basis())
    if (g.nvars() != static_cast<int>(vars.size()))
      throw InvariantError("generator arity does not match variable count");
  if (!ideal.groebner_basis().empty() && ideal.groebner_basis().front().leading().first.is_one())
    throw UnitIdealError("quotient by the unit ideal");
  auto data = std::make_shared<Data>();
  data->vars = std::move(vars);
  data->ideal = std::move(ideal);
  d_ = std::move(data);
}

template <class K>
int QuotientRing<K>::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (d_->vars[i] == name) return i;
  throw InvariantError("unknown variable '" + name + "'");
}

template <class K>
MultiPoly<K> QuotientRing<K>::normal_form(const MultiPoly<K>& p, StepBudget* budget) const {
  if (p.nvars() != nvars()) throw InvariantError("polynomial arity mismatch");
  MultiPoly<K> q = p.order() == order() ? p : p.with_order(order());
  return reduce_by(q, d_->ideal.groebner_basis(), budget);
}

template <class K>
std::vector<Monomial> QuotientRing<K>::staircase(int bound) const {
  std::vector<Monomial> out;
  const auto& gb = d_->ideal.groebner_basis();
  for (const auto& m : monomials_up_to(nvars(), bound, order())) {
    bool reducible = false;
    for (const auto& g : gb)
      if (g.leading().first.divides(m)) {
        reducible = true;
        break;
      }
    if (!reducible) out.push_back(m);
  }
  return out;
}

template <class K>
std::string QuotientRing<K>::text() const {
  std::string s = "K[";
  for (int i = 0; i < nvars(); ++i) {
    if (i) s += ",";
    s += d_->vars[i];
  }
  s += "]";
  const auto& gb = d_->ideal.groebner_basis();
  if (!gb.empty()) {
    s += "/(";
    for (size_t i = 0; i < gb.size(); ++i) {
      if (i) s += ", ";
      s += gb[i].str(d_->vars);
    }
    s += ")";
  }
  s += " " + order_name(order());
  return s;
}

}  // namespace fiberfield

#endif
