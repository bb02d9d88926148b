#ifndef FIBERFIELD_DERIVATION_HPP
#define FIBERFIELD_DERIVATION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fiberfield/ringmap.hpp"

namespace fiberfield {

/// A-linear derivation D = sum_i g_i d/dx_i of a quotient ring, stored by
/// its normal-form coefficient vector. Construction certifies tangency:
/// NF(sum_i g_i df/dx_i) = 0 for every Groebner generator f.
template <class K>
class Derivation {
 public:
  Derivation() = default;
  Derivation(QuotientRing<K> ring, std::vector<MultiPoly<K>> coeffs, bool check = true)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != ring_.nvars())
      throw InvariantError("derivation needs one coefficient per variable");
    for (auto& c : coeffs_) c = ring_.normal_form(c);
    if (check) {
      for (const auto& f : ring_.groebner_basis())
        if (!apply(f).is_zero())
          throw InvariantError("derivation is not tangent to the ideal");
    }
  }

  const QuotientRing<K>& ring() const { return ring_; }
  const std::vector<MultiPoly<K>>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const MultiPoly<K>& c) { return c.is_zero(); });
  }
  int max_coeff_degree() const {
    int d = -1;
    for (const auto& c : coeffs_) d = std::max(d, c.total_degree());
    return d;
  }

  // D(p), reduced to normal form.
  MultiPoly<K> apply(const MultiPoly<K>& p) const {
    MultiPoly<K> acc = ring_.zero();
    for (int v = 0; v < ring_.nvars(); ++v) acc += coeffs_[v] * p.derivative(v);
    return ring_.normal_form(acc);
  }

  Derivation scaled(const K& c) const {
    std::vector<MultiPoly<K>> cs;
    cs.reserve(coeffs_.size());
    for (const auto& g : coeffs_) cs.push_back(g.scaled(c));
    return Derivation(ring_, std::move(cs), false);
  }
  Derivation times(const MultiPoly<K>& b) const {
    std::vector<MultiPoly<K>> cs;
    cs.reserve(coeffs_.size());
    for (const auto& g : coeffs_) cs.push_back(ring_.normal_form(b * g));
    return Derivation(ring_, std::move(cs), false);
  }
  friend Derivation operator+(const Derivation& a, const Derivation& b) {
    a.check_same(b);
    std::vector<MultiPoly<K>> cs;
    for (int v = 0; v < a.ring_.nvars(); ++v) cs.push_back(a.coeffs_[v] + b.coeffs_[v]);
    return Derivation(a.ring_, std::move(cs), false);
  }
  friend Derivation operator-(const Derivation& a, const Derivation& b) {
    a.check_same(b);
    std::vector<MultiPoly<K>> cs;
    for (int v = 0; v < a.ring_.nvars(); ++v) cs.push_back(a.coeffs_[v] - b.coeffs_[v]);
    return Derivation(a.ring_, std::move(cs), false);
  }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

  std::string str() const {
    std::string s;
    for (int v = 0; v < ring_.nvars(); ++v) {
      if (v) s += ", ";
      s += "(" + coeffs_[v].str(ring_.vars()) + ")*d/d" + ring_.vars()[v];
    }
    return s;
  }

  void check_same(const Derivation& o) const {
    if (!ring_.same_ring(o.ring_)) throw InvariantError("derivations live on different rings");
  }

 private:
  QuotientRing<K> ring_;
  std::vector<MultiPoly<K>> coeffs_;
};

/// Lie bracket [D1, D2]: coefficient i is NF(D1(g2_i) - D2(g1_i)).
template <class K>
Derivation<K> bracket(const Derivation<K>& d1, const Derivation<K>& d2) {
  d1.check_same(d2);
  std::vector<MultiPoly<K>> cs;
  for (int v = 0; v < d1.ring().nvars(); ++v)
    cs.push_back(d1.apply(d2.coeffs()[v]) - d2.apply(d1.coeffs()[v]));
  return Derivation<K>(d1.ring(), std::move(cs));
}

/// Solved slice of Der_A(B): all tangent derivations with normal-form
/// coefficients of total degree <= degree_bound.
template <class K>
struct DerivationBasis {
  QuotientRing<K> ring;
  int degree_bound = 0;
  std::vector<Derivation<K>> basis;
  bool complete = false;  // solver ran to the stated bound

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Linear solve for the truncated derivation module. Writes each
/// coefficient in staircase coordinates and intersects the kernels of the
/// tangency conditions, one per Groebner generator.
template <class K>
DerivationBasis<K> derivation_basis(const QuotientRing<K>& ring, int degree_bound,
                                    StepBudget* budget = nullptr) {
  if (degree_bound < 0) throw InvariantError("degree bound must be >= 0");
  const auto monos = ring.staircase(degree_bound);
  const int nm = static_cast<int>(monos.size());
  const int nv = ring.nvars();
  const auto& gens = ring.groebner_basis();

  // Precompute NF(m * df/dx_v) and collect the support monomials per
  // generator; rows of the system are (generator, support monomial).
  std::vector<std::vector<std::vector<MultiPoly<K>>>> nf;  // [gen][var][mono]
  nf.resize(gens.size());
  std::vector<std::vector<Monomial>> row_support(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    nf[gi].resize(nv);
    for (int v = 0; v < nv; ++v) {
      const MultiPoly<K> df = gens[gi].derivative(v);
      nf[gi][v].reserve(nm);
      for (const auto& m : monos) {
        MultiPoly<K> p = ring.normal_form(df.times_monomial(m, K::one()), budget);
        for (const auto& t : p.terms()) {
          bool found = false;
          for (const auto& s : row_support[gi])
            if (s == t.first) {
              found = true;
              break;
            }
          if (!found) row_support[gi].push_back(t.first);
        }
        nf[gi][v].push_back(std::move(p));
      }
    }
  }
  int nrows = 0;
  for (const auto& s : row_support) nrows += static_cast<int>(s.size());
  Mat<K> m(nrows, nv * nm);
  int r0 = 0;
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    for (int v = 0; v < nv; ++v)
      for (int j = 0; j < nm; ++j) {
        const auto& p = nf[gi][v][j];
        for (const auto& t : p.terms()) {
          int ri = 0;
          while (!(row_support[gi][ri] == t.first)) ++ri;
          m.at(r0 + ri, v * nm + j) = t.second;
        }
      }
    r0 += static_cast<int>(row_support[gi].size());
  }
  if (budget) budget->charge(static_cast<long>(nrows) * nv * nm / 16 + 1);

  DerivationBasis<K> out;
  out.ring = ring;
  out.degree_bound = degree_bound;
  out.complete = true;
  for (const auto& vec : nullspace(m)) {
    std::vector<MultiPoly<K>> coeffs;
    for (int v = 0; v < nv; ++v) {
      MultiPoly<K> c(nv, ring.order());
      for (int j = 0; j < nm; ++j)
        c += MultiPoly<K>::monomial(nv, ring.order(), monos[j], vec[v * nm + j]);
      coeffs.push_back(std::move(c));
    }
    out.basis.emplace_back(ring, std::move(coeffs));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vectorization of derivations for span arithmetic.

template <class K>
struct DerivationCoords {
  QuotientRing<K> ring;
  std::vector<Monomial> monos;

  static DerivationCoords for_all(const QuotientRing<K>& ring,
                                  const std::vector<Derivation<K>>& ds) {
    int deg = 0;
    for (const auto& d : ds) deg = std::max(deg, d.max_coeff_degree());
    return DerivationCoords{ring, ring.staircase(deg)};
  }

  std::vector<K> vec(const Derivation<K>& d) const {
    const int nm = static_cast<int>(monos.size());
    std::vector<K> v(static_cast<size_t>(d.ring().nvars()) * nm, K::zero());
    for (int var = 0; var < d.ring().nvars(); ++var)
      for (const auto& t : d.coeffs()[var].terms()) {
        int j = 0;
        while (j < nm && !(monos[j] == t.first)) ++j;
        if (j == nm) throw InternalError("derivation coefficient outside coordinate support");
        v[static_cast<size_t>(var) * nm + j] = t.second;
      }
    return v;
  }
};

template <class K>
LinearSpan<K> span_of(const DerivationCoords<K>& coords, const std::vector<Derivation<K>>& ds) {
  std::vector<std::vector<K>> vs;
  vs.reserve(ds.size());
  for (const auto& d : ds) vs.push_back(coords.vec(d));
  return LinearSpan<K>(vs);
}

// Express d in the given basis; nullopt when it lies outside the span.
template <class K>
std::optional<std::vector<K>> coords_in_basis(const std::vector<Derivation<K>>& basis,
                                              const Derivation<K>& d) {
  if (basis.empty()) {
    if (d.is_zero()) return std::vector<K>{};
    return std::nullopt;
  }
  std::vector<Derivation<K>> all = basis;
  all.push_back(d);
  const auto coords = DerivationCoords<K>::for_all(d.ring(), all);
  return span_of(coords, basis).coords(coords.vec(d));
}

// ---------------------------------------------------------------------------
// Specialization t -> t0 (base change to the fiber).

inline MultiPoly<Rational> specialize_poly(const MultiPoly<RatFunc>& p, const Rational& t0) {
  return p.map_coeffs([&](const RatFunc& c) { return c.eval(t0); });
}

// Fiber ring B (x) Q at t = t0: substitute t0 into the original generators.
inline QuotientRing<Rational> fiber_ring(const QuotientRing<RatFunc>& family,
                                         const Rational& t0, StepBudget* budget = nullptr) {
  std::vector<MultiPoly<Rational>> gens;
  for (const auto& g : family.ideal().generators()) gens.push_back(specialize_poly(g, t0));
  return QuotientRing<Rational>(family.vars(), Ideal<Rational>(std::move(gens), family.order()),
                                budget);
}

inline Derivation<Rational> specialize(const Derivation<RatFunc>& d,
                                       const QuotientRing<Rational>& fiber,
                                       const Rational& t0) {
  std::vector<MultiPoly<Rational>> cs;
  for (const auto& c : d.coeffs()) cs.push_back(fiber.normal_form(specialize_poly(c, t0)));
  return Derivation<Rational>(fiber, std::move(cs));
}

inline DerivationBasis<Rational> specialize(const DerivationBasis<RatFunc>& b, const Rational& t0,
                                            StepBudget* budget = nullptr) {
  DerivationBasis<Rational> out;
  out.ring = fiber_ring(b.ring, t0, budget);
  out.degree_bound = b.degree_bound;
  out.complete = false;  // spans a subspace of the fiber's solved module
  for (const auto& d : b.basis) {
    Derivation<Rational> s = specialize(d, out.ring, t0);
    if (!s.is_zero()) out.basis.push_back(std::move(s));
  }
  return out;
}

/// Base-change verification at a rational point: the fiber's directly
/// solved module (lhs) against the specialized family module (rhs).
/// A mismatch is a reported observation, not an error.
struct BaseChangeReport {
  Rational t0;
  int degree_bound = 0;
  int dim_lhs = 0;  // derivations of the fiber, solved directly
  int dim_rhs = 0;  // specialize(derivation_basis(family))
  bool rhs_contained = false;
  bool match = false;
};

inline BaseChangeReport base_change_check(const QuotientRing<RatFunc>& family, const Rational& t0,
                                          int degree_bound, StepBudget* budget = nullptr) {
  BaseChangeReport rep;
  rep.t0 = t0;
  rep.degree_bound = degree_bound;
  const auto fam_basis = derivation_basis(family, degree_bound, budget);
  const auto rhs = specialize(fam_basis, t0, budget);
  const auto lhs = derivation_basis(rhs.ring, degree_bound, budget);
  rep.dim_lhs = lhs.dim();
  rep.dim_rhs = rhs.dim();
  std::vector<Derivation<Rational>> all = lhs.basis;
  for (const auto& d : rhs.basis) all.push_back(d);
  const auto coords = DerivationCoords<Rational>::for_all(rhs.ring, all);
  const auto lhs_span = span_of(coords, lhs.basis);
  rep.rhs_contained = true;
  for (const auto& d : rhs.basis)
    if (!lhs_span.contains(coords.vec(d))) {
      rep.rhs_contained = false;
      break;
    }
  rep.match = rep.rhs_contained && rep.dim_lhs == rep.dim_rhs;
  return rep;
}

// ---------------------------------------------------------------------------
// Transport of derivations along ring maps.

/// Pushforward along the geometric map Spec(target) -> Spec(source) induced
/// by an isomorphism phi with supplied inverse: D on the target ring is
/// carried to phi_inv . D . phi on the source ring.
template <class K>
Derivation<K> pushforward(const RingMap<K>& phi, const RingMap<K>& phi_inv,
                          const Derivation<K>& d) {
  if (!verify_mutually_inverse(phi, phi_inv))
    throw InvariantError("pushforward requires verified mutually inverse maps");
  if (!d.ring().same_ring(phi.target()))
    throw InvariantError("derivation does not live on the map's target ring");
  std::vector<MultiPoly<K>> cs;
  for (int i = 0; i < phi.source().nvars(); ++i)
    cs.push_back(phi_inv.apply(d.apply(phi.images()[i])));
  return Derivation<K>(phi.source(), std::move(cs));
}

/// Descend a derivation of the target ring to the source along an arbitrary
/// well-defined map (e.g. a normalization): requires every transported
/// coefficient to have a preimage. Errors when the derivation does not
/// preserve the image subring.
template <class K>
Derivation<K> descend_derivation(const RingMap<K>& phi, const Derivation<K>& d, int bound) {
  if (!d.ring().same_ring(phi.target()))
    throw InvariantError("derivation does not live on the map's target ring");
  std::vector<MultiPoly<K>> cs;
  for (int i = 0; i < phi.source().nvars(); ++i) {
    auto p = phi.preimage(d.apply(phi.images()[i]), bound);
    if (!p)
      throw InvariantError("derivation does not descend along the map (no preimage for D(" +
                           phi.source().vars()[i] + "))");
    cs.push_back(std::move(*p));
  }
  return Derivation<K>(phi.source(), std::move(cs));
}

/// Lift a derivation of the source through a normalization-style map into a
/// free univariate target: solves g * phi(x_i)' = phi(D(x_i)) for all i.
template <class K>
Derivation<K> lift_derivation(const RingMap<K>& phi, const Derivation<K>& d) {
  const auto& tgt = phi.target();
  if (tgt.nvars() != 1 || !tgt.ideal().generators().empty())
    throw InvariantError("lift target must be a free univariate ring");
  if (!d.ring().same_ring(phi.source()))
    throw InvariantError("derivation does not live on the map's source ring");
  std::optional<MultiPoly<K>> g;
  for (int i = 0; i < phi.source().nvars(); ++i) {
    const MultiPoly<K> lhs = phi.images()[i].derivative(0);
    const MultiPoly<K> rhs = phi.apply(d.coeffs()[i]);
    if (lhs.is_zero()) {
      if (!rhs.is_zero()) throw InvariantError("derivation does not lift along the map");
      continue;
    }
    if (!g) {
      // Exact univariate division rhs / lhs.
      MultiPoly<K> q(1, tgt.order()), r = rhs;
      while (!r.is_zero() && r.leading().first.e[0] >= lhs.leading().first.e[0]) {
        Monomial mq(1);
        mq.e[0] = r.leading().first.e[0] - lhs.leading().first.e[0];
        const K c = r.leading().second / lhs.leading().second;
        q += MultiPoly<K>::monomial(1, tgt.order(), mq, c);
        r -= lhs.times_monomial(mq, c);
      }
      if (!r.is_zero()) throw InvariantError("derivation does not lift along the map");
      g = q;
    } else {
      if (*g * lhs != rhs) throw InvariantError("derivation does not lift along the map");
    }
  }
  if (!g) throw InvariantError("degenerate map: cannot lift");
  return Derivation<K>(tgt, {*g});
}

// ---------------------------------------------------------------------------
// Pointwise structure.

/// Sub-Lie-algebra of derivations whose coefficients vanish at a smooth
/// point of the variety.
template <class K>
struct VanishingSubalgebra {
  std::vector<Derivation<K>> sub_basis;
  int codimension = 0;
};

template <class K>
bool point_on_variety(const QuotientRing<K>& ring, const std::vector<K>& point) {
  for (const auto& g : ring.groebner_basis())
    if (!g.eval(point).is_zero()) return false;
  return true;
}

// Jacobian criterion specialized to curves: full rank nvars-1 (0 when there
// are no relations).
template <class K>
bool point_is_smooth(const QuotientRing<K>& ring, const std::vector<K>& point) {
  const auto& gens = ring.groebner_basis();
  if (gens.empty()) return true;
  Mat<K> jac(static_cast<int>(gens.size()), ring.nvars());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int v = 0; v < ring.nvars(); ++v) jac.at(static_cast<int>(i), v) = gens[i].derivative(v).eval(point);
  return rank(jac) == ring.nvars() - 1;
}

template <class K>
VanishingSubalgebra<K> vanishing_subalgebra(const DerivationBasis<K>& basis,
                                            const std::vector<K>& point) {
  const auto& ring = basis.ring;
  if (static_cast<int>(point.size()) != ring.nvars())
    throw InvariantError("point arity mismatch");
  if (!point_on_variety(ring, point)) throw InvariantError("point is not on the variety");
  if (!point_is_smooth(ring, point)) throw InvariantError("fiber is not smooth at the point");
  const int n = basis.dim();
  Mat<K> m(ring.nvars(), n);
  for (int k = 0; k < n; ++k)
    for (int v = 0; v < ring.nvars(); ++v) m.at(v, k) = basis.basis[k].coeffs()[v].eval(point);
  VanishingSubalgebra<K> out;
  out.codimension = rank(m);
  for (const auto& c : nullspace(m)) {
    Derivation<K> d(ring, std::vector<MultiPoly<K>>(ring.nvars(), ring.zero()), false);
    bool first = true;
    for (int k = 0; k < n; ++k) {
      if (c[k].is_zero()) continue;
      if (first) {
        d = basis.basis[k].scaled(c[k]);
        first = false;
      } else {
        d = d + basis.basis[k].scaled(c[k]);
      }
    }
    out.sub_basis.push_back(std::move(d));
  }
  return out;
}

/// Greedy rank-1 freeness probe: does one basis element generate the whole
/// solved slice as a B-module, up to the degree bound?
template <class K>
struct FreenessReport {
  bool principal = false;
  int generator_index = -1;
};

template <class K>
FreenessReport<K> freeness_probe(const DerivationBasis<K>& b) {
  FreenessReport<K> rep;
  if (b.basis.empty()) return rep;
  const auto coords = DerivationCoords<K>::for_all(b.ring, b.basis);
  const auto full = span_of(coords, b.basis);
  const auto staircase = b.ring.staircase(b.degree_bound);
  for (int cand = 0; cand < b.dim(); ++cand) {
    std::vector<Derivation<K>> multiples;
    for (const auto& m : staircase) {
      Derivation<K> md = b.basis[cand].times(
          MultiPoly<K>::monomial(b.ring.nvars(), b.ring.order(), m, K::one()));
      if (md.max_coeff_degree() <= b.degree_bound && !md.is_zero()) multiples.push_back(std::move(md));
    }
    if (multiples.empty()) continue;
    const auto sub = span_of(coords, multiples);
    if (sub.dim() == full.dim()) {
      rep.principal = true;
      rep.generator_index = cand;
      return rep;
    }
  }
  return rep;
}

}  // namespace fiberfield

#endif
