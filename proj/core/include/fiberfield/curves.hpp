#ifndef FIBERFIELD_CURVES_HPP
#define FIBERFIELD_CURVES_HPP

#include <optional>
#include <string>
#include <vector>

#include "fiberfield/derivation.hpp"

namespace fiberfield {

// Constructors for the curve zoo. Hyperelliptic-style plane curves are
// built with lex order and Y ahead of X, so Y^2 is the leading monomial and
// normal forms are g(X) + h(X) Y.

/// Family Y^2 = 4 (X - e1)(X - e2)(X - e3) over Q[t] with e1 + e2 + e3 = 0;
/// the affine chart has the point at infinity removed.
struct WeierstrassFamily {
  UniPoly e1, e2, e3;
  QuotientRing<RatFunc> ring;
  MultiPoly<RatFunc> equation;
};

WeierstrassFamily weierstrass_family(const UniPoly& e1, const UniPoly& e2, const UniPoly& e3,
                                     StepBudget* budget = nullptr);

// Fixed rational branch points: the fiber ring over Q.
QuotientRing<Rational> weierstrass_fiber(const Rational& e1, const Rational& e2,
                                         const Rational& e3, StepBudget* budget = nullptr);

// 16 (e1-e2)^2 (e1-e3)^2 (e2-e3)^2, expanded exactly.
UniPoly discriminant(const WeierstrassFamily& fam);
Rational discriminant(const Rational& e1, const Rational& e2, const Rational& e3);

/// Jacobian smoothness for a plane curve ring Q[Y,X]/(f):
/// smooth iff 1 lies in (f, df/dX, df/dY).
bool smoothness_check(const QuotientRing<Rational>& ring, StepBudget* budget = nullptr);

// Nodal cubic E_N: Y^2 = 4 (X - e)^2 (X + 2e).
QuotientRing<Rational> nodal_ring(const Rational& e, StepBudget* budget = nullptr);
// Cuspidal cubic E_C: Y^2 = 4 X^3.
QuotientRing<Rational> cusp_ring(StepBudget* budget = nullptr);
// Monomial presentation Q[u,v]/(v^2 - u^3) with u = s^2, v = s^3.
QuotientRing<Rational> cusp_monomial_ring(StepBudget* budget = nullptr);
// Laurent ring Q[x,y]/(xy - 1), the two-punctured projective line.
QuotientRing<Rational> laurent_ring(StepBudget* budget = nullptr);
// Free univariate Q[s].
QuotientRing<Rational> affine_line(const std::string& var = "s");

/// Localized affine ring with Rabinowitsch witnesses u_i * h_i = 1.
/// Construction rejects inversion of functions lying in the ideal.
struct MarkedAffineRing {
  QuotientRing<Rational> ring;
  std::vector<std::string> inverted;  // text of the inverted functions
};

// Q[x, u_1..u_k]/(u_i (x - p_i) - 1): the line with the points p_i removed.
MarkedAffineRing punctured_p1_ring(const std::vector<Rational>& points,
                                   StepBudget* budget = nullptr);

// General Rabinowitsch localization of a plane/affine ring at h.
MarkedAffineRing localize(const QuotientRing<Rational>& ring, const MultiPoly<Rational>& h,
                          const std::string& witness_var, StepBudget* budget = nullptr);

/// Normalization of the cuspidal cubic: X -> s^2, Y -> 2 s^3 into Q[s];
/// well-definedness is verified. Derivations transport both ways via
/// lift_derivation / descend_derivation.
RingMap<Rational> normalize_cuspidal(StepBudget* budget = nullptr);

/// Normalization of the nodal cubic (e != 0). The parametrization is a
/// build-time candidate gated by a symbolic identity check; construction
/// throws if the image of the equation is nonzero.
RingMap<Rational> normalize_nodal(const Rational& e, StepBudget* budget = nullptr);

// The singular point of the nodal cubic in the (X, Y) chart.
std::vector<Rational> nodal_node(const Rational& e);

/// Canonical Euler-type field where the ring carries one: laurent x d/dx -
/// y d/dy, cusp 2X d/dX + 3Y d/dY (indices follow the ring's variable
/// order), affine line s d/ds.
std::optional<Derivation<Rational>> canonical_euler(const QuotientRing<Rational>& ring);

// g = C(d-1, 2) - k - n for a degree-d plane curve with k cusps, n nodes.
long plane_curve_genus(long d, long cusps, long nodes);

}  // namespace fiberfield

#endif
