#include "fiberfield/curves.hpp"

namespace fiberfield {

namespace {

// f = Y^2 - 4 (X - e1)(X - e2)(X - e3) in K[Y, X], lex with Y leading.
template <class K>
MultiPoly<K> weierstrass_equation(const K& e1, const K& e2, const K& e3) {
  const int nv = 2;
  const auto ord = MonomialOrder::Lex;
  const auto Y = MultiPoly<K>::variable(nv, ord, 0);
  const auto X = MultiPoly<K>::variable(nv, ord, 1);
  auto cst = [&](const K& c) { return MultiPoly<K>::constant(nv, ord, c); };
  return Y * Y - cst(K(Rational(4))) * (X - cst(e1)) * (X - cst(e2)) * (X - cst(e3));
}

}  // namespace

WeierstrassFamily weierstrass_family(const UniPoly& e1, const UniPoly& e2, const UniPoly& e3,
                                     StepBudget* budget) {
  if (!(e1 + e2 + e3).is_zero())
    throw InvariantError("weierstrass branch points must satisfy e1 + e2 + e3 = 0");
  WeierstrassFamily fam;
  fam.e1 = e1;
  fam.e2 = e2;
  fam.e3 = e3;
  fam.equation = weierstrass_equation<RatFunc>(RatFunc(e1), RatFunc(e2), RatFunc(e3));
  fam.ring = QuotientRing<RatFunc>({"Y", "X"},
                                   Ideal<RatFunc>({fam.equation}, MonomialOrder::Lex), budget);
  return fam;
}

QuotientRing<Rational> weierstrass_fiber(const Rational& e1, const Rational& e2,
                                         const Rational& e3, StepBudget* budget) {
  if (!(e1 + e2 + e3).is_zero())
    throw InvariantError("weierstrass branch points must satisfy e1 + e2 + e3 = 0");
  return QuotientRing<Rational>(
      {"Y", "X"}, Ideal<Rational>({weierstrass_equation<Rational>(e1, e2, e3)}, MonomialOrder::Lex),
      budget);
}

UniPoly discriminant(const WeierstrassFamily& fam) {
  const UniPoly a = fam.e1 - fam.e2, b = fam.e1 - fam.e3, c = fam.e2 - fam.e3;
  return (a * a * b * b * c * c).scaled(Rational(16));
}

Rational discriminant(const Rational& e1, const Rational& e2, const Rational& e3) {
  const Rational a = e1 - e2, b = e1 - e3, c = e2 - e3;
  return Rational(16) * a * a * b * b * c * c;
}

bool smoothness_check(const QuotientRing<Rational>& ring, StepBudget* budget) {
  const auto& gens = ring.ideal().generators();
  if (ring.nvars() != 2 || gens.size() != 1)
    throw InvariantError("smoothness check handles plane curves with one generator");
  const MultiPoly<Rational>& f = gens[0];
  Ideal<Rational> jac({f, f.derivative(0), f.derivative(1)}, ring.order());
  StepBudget local;
  jac.compute_groebner(budget ? *budget : local);
  const auto& gb = jac.groebner_basis();
  return !gb.empty() && gb.front().leading().first.is_one();
}

QuotientRing<Rational> nodal_ring(const Rational& e, StepBudget* budget) {
  return weierstrass_fiber(e, e, Rational(-2) * e, budget);
}

QuotientRing<Rational> cusp_ring(StepBudget* budget) {
  return weierstrass_fiber(Rational(0), Rational(0), Rational(0), budget);
}

QuotientRing<Rational> cusp_monomial_ring(StepBudget* budget) {
  const int nv = 2;
  const auto ord = MonomialOrder::Lex;
  const auto v = MultiPoly<Rational>::variable(nv, ord, 0);
  const auto u = MultiPoly<Rational>::variable(nv, ord, 1);
  return QuotientRing<Rational>({"v", "u"}, Ideal<Rational>({v * v - u * u * u}, ord), budget);
}

QuotientRing<Rational> laurent_ring(StepBudget* budget) {
  const int nv = 2;
  const auto ord = MonomialOrder::Grevlex;
  const auto x = MultiPoly<Rational>::variable(nv, ord, 0);
  const auto y = MultiPoly<Rational>::variable(nv, ord, 1);
  return QuotientRing<Rational>(
      {"x", "y"}, Ideal<Rational>({x * y - MultiPoly<Rational>::constant(nv, ord, 1)}, ord),
      budget);
}

QuotientRing<Rational> affine_line(const std::string& var) {
  return QuotientRing<Rational>::free_ring({var}, MonomialOrder::Grevlex);
}

MarkedAffineRing punctured_p1_ring(const std::vector<Rational>& points, StepBudget* budget) {
  const int k = static_cast<int>(points.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (points[i] == points[j])
        throw InvariantError("puncture points must be pairwise distinct");
  const int nv = 1 + k;
  const auto ord = MonomialOrder::Grevlex;
  std::vector<std::string> vars{"x"};
  for (int i = 0; i < k; ++i) vars.push_back("u" + std::to_string(i + 1));
  std::vector<MultiPoly<Rational>> gens;
  const auto x = MultiPoly<Rational>::variable(nv, ord, 0);
  for (int i = 0; i < k; ++i) {
    const auto u = MultiPoly<Rational>::variable(nv, ord, 1 + i);
    gens.push_back(u * (x - MultiPoly<Rational>::constant(nv, ord, points[i])) -
                   MultiPoly<Rational>::constant(nv, ord, 1));
  }
  MarkedAffineRing out;
  out.ring = QuotientRing<Rational>(vars, Ideal<Rational>(std::move(gens), ord), budget);
  for (int i = 0; i < k; ++i) out.inverted.push_back("x - (" + points[i].str() + ")");
  return out;
}

MarkedAffineRing localize(const QuotientRing<Rational>& ring, const MultiPoly<Rational>& h,
                          const std::string& witness_var, StepBudget* budget) {
  const int nv = ring.nvars() + 1;
  const auto ord = ring.order();
  std::vector<std::string> vars = ring.vars();
  vars.push_back(witness_var);
  auto extend = [&](const MultiPoly<Rational>& p) {
    std::vector<MultiPoly<Rational>::Term> ts;
    for (const auto& t : p.terms()) {
      Monomial m = t.first;
      m.e.push_back(0);
      ts.push_back({m, t.second});
    }
    return MultiPoly<Rational>(nv, ord, std::move(ts));
  };
  std::vector<MultiPoly<Rational>> gens;
  for (const auto& g : ring.ideal().generators()) gens.push_back(extend(g));
  const auto u = MultiPoly<Rational>::variable(nv, ord, nv - 1);
  gens.push_back(u * extend(h) - MultiPoly<Rational>::constant(nv, ord, 1));
  MarkedAffineRing out;
  // Throws UnitIdealError when h lies in the ideal: nothing to invert.
  out.ring = QuotientRing<Rational>(vars, Ideal<Rational>(std::move(gens), ord), budget);
  out.inverted.push_back(h.str(ring.vars()));
  return out;
}

RingMap<Rational> normalize_cuspidal(StepBudget* budget) {
  const auto src = cusp_ring(budget);
  const auto tgt = affine_line("s");
  const auto s = tgt.var(0);
  // X -> s^2, Y -> 2 s^3; source variables are ordered (Y, X).
  return RingMap<Rational>(src, tgt, {s * s * s.scaled(Rational(2)), s * s});
}

RingMap<Rational> normalize_nodal(const Rational& e, StepBudget* budget) {
  if (e.is_zero()) throw InvariantError("nodal normalization needs e != 0");
  const auto src = nodal_ring(e, budget);
  const auto tgt = affine_line("m");
  const auto m = tgt.var(0);
  const auto c = [&](const Rational& r) { return tgt.constant(r); };
  // X -> m^2 - 2e, Y -> 2m (m^2 - 3e). The RingMap constructor verifies the
  // defining equation maps to zero and rejects the parametrization otherwise.
  const auto X_im = m * m - c(Rational(2) * e);
  const auto Y_im = (m * m - c(Rational(3) * e)) * m.scaled(Rational(2));
  return RingMap<Rational>(src, tgt, {Y_im, X_im});
}

std::vector<Rational> nodal_node(const Rational& e) {
  // (Y, X) = (0, e): the double root of the Y = 0 slice.
  return {Rational(0), e};
}

std::optional<Derivation<Rational>> canonical_euler(const QuotientRing<Rational>& ring) {
  if (ring.nvars() == 1 && ring.ideal().generators().empty())
    return Derivation<Rational>(ring, {ring.var(0)});
  if (ring.same_ring(laurent_ring()))
    return Derivation<Rational>(ring, {ring.var(0), -ring.var(1)});
  if (ring.same_ring(cusp_ring()))
    return Derivation<Rational>(ring, {ring.var(0).scaled(Rational(3)), ring.var(1).scaled(Rational(2))});
  if (ring.same_ring(cusp_monomial_ring()))
    return Derivation<Rational>(ring, {ring.var(0).scaled(Rational(3)), ring.var(1).scaled(Rational(2))});
  return std::nullopt;
}

long plane_curve_genus(long d, long cusps, long nodes) {
  return (d - 1) * (d - 2) / 2 - cusps - nodes;
}

}  // namespace fiberfield
