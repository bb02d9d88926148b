#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fiberfield/curves.hpp"
#include "fiberfield/liealg.hpp"
#include "support/oracles.hpp"

using namespace fiberfield;
namespace ft = fiberfield::testing;

using PolyQ = MultiPoly<Rational>;

TEST_CASE("weierstrass constructors and the expansion oracle") {
  // (1, -1, 0): f = Y^2 - 4X(X-1)(X+1) = Y^2 - 4X^3 + 4X
  const auto ring = weierstrass_fiber(Rational(1), Rational(-1), Rational(0));
  const auto Y = ring.var("Y"), X = ring.var("X");
  CHECK(ring.ideal().generators()[0] ==
        Y * Y - (X * X * X).scaled(Rational(4)) + X.scaled(Rational(4)));
  CHECK(ring.ideal().generators()[0].str({"Y", "X"}) == "Y^2 - 4*X^3 + 4*X");

  // sum constraint is enforced
  CHECK_THROWS_AS(weierstrass_fiber(Rational(1), Rational(1), Rational(1)), InvariantError);
  CHECK_THROWS_AS(weierstrass_family(UniPoly::t(), UniPoly::t(), UniPoly()), InvariantError);

  // total degeneration is the cuspidal cubic
  const auto cusp = weierstrass_fiber(Rational(0), Rational(0), Rational(0));
  CHECK(cusp.same_ring(cusp_ring()));
}

TEST_CASE("discriminant formula") {
  CHECK(discriminant(Rational(1), Rational(-1), Rational(0)) == Rational(64));
  CHECK(discriminant(Rational(0), Rational(0), Rational(0)).is_zero());
  const auto fam = weierstrass_family(UniPoly::t(), -UniPoly::t(), UniPoly());
  CHECK(discriminant(fam) == UniPoly::term(Rational(64), 6));
}

TEST_CASE("discriminant vanishing tracks fiber smoothness") {
  const auto fam = weierstrass_family(UniPoly::t(), -UniPoly::t(), UniPoly());
  const auto delta = discriminant(fam);
  std::uniform_int_distribution<int> pick(-10, 10);
  for (int i = 0; i < 10; ++i) {
    const Rational t0(pick(ft::rng()), 1);
    const auto fiber = fiber_ring(fam.ring, t0);
    CHECK(smoothness_check(fiber) == !delta.eval(t0).is_zero());
  }
}

TEST_CASE("smoothness check on the singular cubics") {
  CHECK(smoothness_check(weierstrass_fiber(Rational(1), Rational(-1), Rational(0))));
  CHECK_FALSE(smoothness_check(cusp_ring()));
  CHECK_FALSE(smoothness_check(nodal_ring(Rational(1))));
}

TEST_CASE("nodal ring is the partial degeneration e1 = e2 = e") {
  const Rational e(1);
  const auto ring = nodal_ring(e);
  const auto Y = ring.var("Y"), X = ring.var("X");
  auto c = [&](const Rational& v) { return ring.constant(v); };
  // oracle: expand Y^2 - 4 (X - e)^2 (X + 2e) independently
  const auto expect = Y * Y - (X - c(e)) * (X - c(e)) * (X + c(Rational(2) * e)).scaled(Rational(4));
  CHECK(ring.ideal().generators()[0] == expect);
}

TEST_CASE("cusp ring and its monomial presentation agree") {
  const auto a = cusp_ring();
  const auto b = cusp_monomial_ring();
  for (int d = 0; d <= 6; ++d) CHECK(a.staircase(d).size() == b.staircase(d).size());
  for (int d = 1; d <= 4; ++d)
    CHECK(derivation_basis(a, d).dim() == derivation_basis(b, d).dim());

  // explicit isomorphism X -> u, Y -> 2v with inverse u -> X, v -> Y/2
  const RingMap<Rational> phi(a, b, {b.var("v").scaled(Rational(2)), b.var("u")});
  const RingMap<Rational> psi(b, a, {a.var("Y").scaled(Rational(1, 2)), a.var("X")});
  CHECK(verify_mutually_inverse(phi, psi));
  const auto euler_b = *canonical_euler(b);
  const auto moved = pushforward(phi, psi, euler_b);
  CHECK(moved == *canonical_euler(a));
}

TEST_CASE("punctured projective line rings") {
  const auto mk = punctured_p1_ring({Rational(0), Rational(1)});
  const auto& R = mk.ring;
  REQUIRE(R.nvars() == 3);

  // S-pair identity oracle: u2*(u1 x - 1) - u1*(u2 (x-1) - 1) = u1 u2 + u1 - u2
  const auto x = R.var("x"), u1 = R.var("u1"), u2 = R.var("u2");
  const auto g1 = u1 * x - R.one();
  const auto g2 = u2 * (x - R.one()) - R.one();
  const auto spair = u2 * g1 - u1 * g2;
  CHECK(spair == u1 * u2 + u1 - u2);
  CHECK(R.normal_form(spair).is_zero());

  // staircase up to degree 2: pure powers only
  const auto sc = R.staircase(2);
  CHECK(sc.size() == 7);  // 1, x, u1, u2, x^2, u1^2, u2^2
  for (const auto& m : sc) {
    int nonzero = 0;
    for (int v = 0; v < 3; ++v) nonzero += (m.e[v] > 0);
    CHECK(nonzero <= 1);
  }

  CHECK_THROWS_AS(punctured_p1_ring({Rational(1), Rational(1)}), InvariantError);

  // one puncture at 0 is the laurent ring in disguise
  const auto one = punctured_p1_ring({Rational(0)});
  for (int d = 0; d <= 4; ++d) CHECK(one.ring.staircase(d).size() == laurent_ring().staircase(d).size());
  for (int d = 1; d <= 3; ++d)
    CHECK(derivation_basis(one.ring, d).dim() == derivation_basis(laurent_ring(), d).dim());
}

TEST_CASE("localization rejects inverting an ideal member") {
  const auto cusp = cusp_ring();
  const auto f = cusp.ideal().generators()[0];
  CHECK_THROWS_AS(localize(cusp, f, "w"), UnitIdealError);
  // but a legitimate localization goes through
  const auto line = affine_line("x");
  const auto lx = localize(line, line.var(0), "u");
  CHECK(lx.ring.nvars() == 2);
  CHECK(lx.ring.staircase(3).size() == laurent_ring().staircase(3).size());
}

TEST_CASE("cuspidal normalization is well defined and kills the equation") {
  const auto phi = normalize_cuspidal();
  const auto cusp = phi.source();
  CHECK(phi.apply(cusp.ideal().generators()[0]).is_zero());
  // euler field corresponds to s d/ds (full transport tests live with the
  // derivation suite)
  const auto s = phi.target().var(0);
  CHECK(phi.apply(cusp.var("X")) == s * s);
  CHECK(phi.apply(cusp.var("Y")) == (s * s * s).scaled(Rational(2)));
}

TEST_CASE("nodal normalization: the symbolic gate decides the parametrization") {
  // The corrected parametrization passes for several e.
  for (const Rational& e : {Rational(1), Rational(3), Rational(-2), Rational(1, 2)}) {
    const auto phi = normalize_nodal(e);
    CHECK(phi.apply(phi.source().ideal().generators()[0]).is_zero());
  }
  CHECK_THROWS_AS(normalize_nodal(Rational(0)), InvariantError);

  // A candidate X -> e + m^2, Y -> 2m(m^2 + 3e) fails the well-definedness
  // gate: its substitution residue is 12 e m^2 (m^2 + 3e), not zero.
  const Rational e(1);
  const auto src = nodal_ring(e);
  const auto tgt = affine_line("m");
  const auto m = tgt.var(0);
  auto c = [&](const Rational& v) { return tgt.constant(v); };
  const auto bad_X = m * m + c(e);
  const auto bad_Y = (m * m + c(Rational(3) * e)) * m.scaled(Rational(2));
  const auto residue = src.ideal().generators()[0].substitute({bad_Y, bad_X});
  CHECK(residue ==
        (m * m * (m * m + c(Rational(3) * e))).scaled(Rational(12) * e));
  CHECK_THROWS_AS(RingMap<Rational>(src, tgt, {bad_Y, bad_X}), InvariantError);
}

TEST_CASE("node location and preimages") {
  // node preimage: for e = 3 the parameters m = +-3 map to the node (X,Y) = (3,0)
  const Rational e(3);
  const auto phi = normalize_nodal(e);
  const auto node = nodal_node(e);
  CHECK(point_on_variety(phi.source(), node));
  CHECK_FALSE(point_is_smooth(phi.source(), node));
  for (const Rational& mval : {Rational(3), Rational(-3)}) {
    CHECK(phi.images()[0].eval({mval}) == node[0]);  // Y image
    CHECK(phi.images()[1].eval({mval}) == node[1]);  // X image
  }
  // smooth elsewhere: (Y, X) = (20, -2) since 4 (-5)^2 (4) = 400 = 20^2
  CHECK(point_on_variety(phi.source(), {Rational(20), Rational(-2)}));
  CHECK(point_is_smooth(phi.source(), {Rational(20), Rational(-2)}));
}

TEST_CASE("genus bookkeeping") {
  CHECK(plane_curve_genus(3, 0, 0) == 1);  // smooth cubic
  CHECK(plane_curve_genus(3, 1, 0) == 0);  // cuspidal cubic normalizes to P^1
  CHECK(plane_curve_genus(3, 0, 1) == 0);  // nodal cubic
  CHECK(plane_curve_genus(4, 0, 0) == 3);
}

TEST_CASE("canonical euler fields") {
  CHECK(canonical_euler(laurent_ring()));
  CHECK(canonical_euler(cusp_ring()));
  CHECK(canonical_euler(cusp_monomial_ring()));
  CHECK(canonical_euler(affine_line("s")));
  CHECK_FALSE(canonical_euler(weierstrass_fiber(Rational(1), Rational(-1), Rational(0))));
  CHECK_FALSE(canonical_euler(punctured_p1_ring({Rational(0), Rational(1)}).ring));
}
