#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fiberfield/curves.hpp"
#include "fiberfield/deformation.hpp"
#include "fiberfield/liealg.hpp"
#include "support/oracles.hpp"

using namespace fiberfield;
namespace ft = fiberfield::testing;

namespace {

// Laurent-polynomial vector fields on the punctured line, computed by
// direct differentiation: an oracle for the witt_window table.
std::map<int, Rational> laurent_bracket(const std::map<int, Rational>& f,
                                        const std::map<int, Rational>& g) {
  // [f d/dx, g d/dx] = (f g' - g f') d/dx on exponents
  std::map<int, Rational> out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) {
      out[a + b - 1] = out[a + b - 1] + ca * cb * Rational(b) - ca * cb * Rational(a);
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

GradedLieAlgebra<Rational> abelian(int n) {
  std::map<std::pair<int, int>, SparseVec<Rational>> table;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) table[{i, j}] = {};
  return GradedLieAlgebra<Rational>(labels, std::vector<int>(n, 0), table);
}

FiberTable sl2_table() {
  // basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
  FiberTable t;
  t[{0, 1}] = {{1, Rational(2)}};
  t[{0, 2}] = {{2, Rational(-2)}};
  t[{1, 2}] = {{0, Rational(1)}};
  return t;
}

GradedLieAlgebra<Rational> regrade_zero(const GradedLieAlgebra<Rational>& L) {
  auto t = L.table();
  return GradedLieAlgebra<Rational>(L.labels(), std::vector<int>(L.dim(), 0), std::move(t));
}

}  // namespace

TEST_CASE("witt window structure constants match the differentiation oracle") {
  const int N = 5;
  const auto W = witt_window(N);
  auto idx = [&](int m) { return m + N; };
  for (int m = -N; m <= N; ++m)
    for (int n = m + 1; n <= N; ++n) {
      const auto fm = std::map<int, Rational>{{m + 1, Rational(1)}};
      const auto fn = std::map<int, Rational>{{n + 1, Rational(1)}};
      const auto br = laurent_bracket(fm, fn);
      if (std::abs(m + n) > N) {
        CHECK_FALSE(W.defined(idx(m), idx(n)));
        continue;
      }
      const auto v = W.bracket(idx(m), idx(n));
      if (br.empty()) {
        CHECK(v.empty());
      } else {
        REQUIRE(v.size() == 1);
        CHECK(v[0].first == idx(m + n));
        CHECK(v[0].second == br.at(m + n + 1));
      }
    }
  CHECK(W.bracket(idx(1), idx(2)) == SparseVec<Rational>{{idx(3), Rational(1)}});
  CHECK(W.bracket(idx(0), idx(4)) == SparseVec<Rational>{{idx(4), Rational(4)}});
}

TEST_CASE("jacobi check") {
  CHECK(jacobi_check(witt_window(5)).ok);
  CHECK(jacobi_check(abelian(4)).ok);
  // Antisymmetry violations are unrepresentable (only i<j is stored), and
  // weight additivity is rejected at construction.
  std::map<std::pair<int, int>, SparseVec<Rational>> bad;
  bad[{0, 1}] = {{0, Rational(1)}};
  CHECK_THROWS_AS(GradedLieAlgebra<Rational>({"a", "b"}, {1, 2}, bad), InvariantError);
  // A genuine Jacobi violation is reported with its triple.
  std::map<std::pair<int, int>, SparseVec<Rational>> nj;
  nj[{0, 1}] = {{2, Rational(1)}};
  nj[{0, 2}] = {{2, Rational(1)}};
  nj[{1, 2}] = {{0, Rational(1)}};
  const GradedLieAlgebra<Rational> L({"x", "y", "z"}, {0, 0, 0}, nj);
  const auto res = jacobi_check(L);
  CHECK_FALSE(res.ok);
  CHECK(res.first_violation == "[x,y,z]");
}

TEST_CASE("witt H2 in weight zero is one-dimensional, stabilized") {
  for (int N : {5, 6, 7}) {
    const auto rep = ce_h2(witt_window(N), 0, CoeffKind::Trivial);
    CHECK(rep.closed);
    CHECK(rep.dim_c2 == N);
    CHECK(rep.dim_cocycles == 2);
    CHECK(rep.dim_coboundaries == 1);
    CHECK(rep.dim_h2 == 1);
    CHECK_FALSE(rep.generator.empty());
  }
}

TEST_CASE("witt H2 vanishes in nonzero weights (windowed, partial)") {
  const auto W = witt_window(6);
  for (int w = -3; w <= 3; ++w) {
    if (w == 0) continue;
    CHECK(ce_h2(W, w, CoeffKind::Trivial, ClosurePolicy::Partial).dim_h2 == 0);
  }
  // boundary weights too
  for (int w : {-6, -5, 4, 5, 6}) {
    CHECK(ce_h2(W, w, CoeffKind::Trivial, ClosurePolicy::Partial).dim_h2 == 0);
  }
}

TEST_CASE("strict closure errors on nonzero weights") {
  CHECK_THROWS_AS(ce_h2(witt_window(4), 2, CoeffKind::Trivial, ClosurePolicy::Strict),
                  WindowClosureError);
}

TEST_CASE("the virasoro cochain is the H2 class") {
  const int N = 6;
  const auto W = witt_window(N);
  auto idx = [&](int m) { return m + N; };
  Cochain2<Rational> cubic;   // c(l_m, l_{-m}) = m^3 - m
  Cochain2<Rational> linear;  // c(l_m, l_{-m}) = m
  cubic.weight = 0;
  linear.weight = 0;
  for (int m = 1; m <= N; ++m) {
    cubic.set(idx(m), idx(-m), Rational(static_cast<long>(m) * m * m - m));
    linear.set(idx(m), idx(-m), Rational(m));
  }
  CHECK(verify_cocycle(W, cubic));
  CHECK(verify_cocycle(W, linear));
  CHECK_FALSE(is_coboundary(W, cubic));
  CHECK(is_coboundary(W, linear));

  // d1 of a 1-cochain is a cocycle and a coboundary (d2 . d1 = 0).
  Cochain2<Rational> cob;
  cob.weight = 0;
  for (int m = 1; m <= N; ++m) cob.set(idx(m), idx(-m), Rational(2 * m) * Rational(3, 7));
  CHECK(verify_cocycle(W, cob));
  CHECK(is_coboundary(W, cob));

  // single off-diagonal entry in weight 3 is not a cocycle:
  // d2 c (l_0, l_1, l_2) = -3 with c(l_1, l_2) = 1
  Cochain2<Rational> notc;
  notc.weight = 3;
  notc.set(idx(1), idx(2), Rational(1));
  CHECK_FALSE(verify_cocycle(W, notc));
}

TEST_CASE("d2 after d1 vanishes on windowed complexes") {
  const auto W = witt_window(6);
  for (int w = -3; w <= 3; ++w) {
    CHECK(d2_after_d1_vanishes(W, w, CoeffKind::Trivial));
    CHECK(d2_after_d1_vanishes(W, w, CoeffKind::Adjoint));
  }
  CHECK(d2_after_d1_vanishes(abelian(4), 0, CoeffKind::Trivial));
}

TEST_CASE("witt H1 vanishes (perfectness on the window)") {
  for (int N = 3; N <= 6; ++N) CHECK(ce_h1_trivial(witt_window(N)).dim_h2 == 0);
  CHECK(ce_h1_trivial(abelian(2)).dim_h2 == 2);
}

TEST_CASE("one-sided cusp window has H1 = 1: l_0 is not a bracket") {
  // lift the solved cusp module through the normalization and grade it
  const auto phi = normalize_cuspidal();
  const auto basis = derivation_basis(phi.source(), 3);
  std::vector<Derivation<Rational>> lifted;
  for (const auto& d : basis.basis) lifted.push_back(lift_derivation(phi, d));
  const auto euler = canonical_euler(phi.target());
  const auto graded = grade_by_ad_eigenvalues(lifted, *euler);
  std::vector<int> expect;
  for (int n = 0; n <= 4; ++n) expect.push_back(n);
  CHECK(graded.weights == expect);  // one-sided l_0..l_4, l_{-1} missing
  const auto wa = from_derivations(graded.basis, graded.weights);
  CHECK(matches_witt_constants(wa.algebra));
  CHECK(ce_h1_trivial(wa.algebra).dim_h2 == 1);
}

TEST_CASE("abelian H2 equals the full space of 2-cochains") {
  for (int n : {2, 3, 4}) {
    const auto rep = ce_h2(abelian(n), 0, CoeffKind::Trivial);
    CHECK(rep.dim_h2 == n * (n - 1) / 2);
    CHECK(rep.dim_coboundaries == 0);
    // adjoint with zero action: n copies of the trivial answer
    const auto adj = ce_h2(abelian(n), 0, CoeffKind::Adjoint);
    CHECK(adj.dim_h2 == n * rep.dim_h2);
  }
}

TEST_CASE("witt adjoint H2 at weight zero vanishes (consistency)") {
  const auto rep = ce_h2(witt_window(6), 0, CoeffKind::Adjoint);
  CHECK(rep.dim_h2 == 0);
  CHECK(rep.dim_cocycles == rep.dim_coboundaries);
}

TEST_CASE("ungraded windowed total complex reproduces the graded sum") {
  for (int N : {4, 5}) {
    const auto W = witt_window(N);
    int total = 0;
    for (int w = -2 * N; w <= 2 * N; ++w)
      total += ce_h2(W, w, CoeffKind::Trivial, ClosurePolicy::Partial).dim_h2;
    const auto rep = ce_h2(regrade_zero(W), 0, CoeffKind::Trivial, ClosurePolicy::Partial);
    CHECK(rep.dim_h2 == total);
    CHECK(rep.dim_h2 == 1);
  }
}

TEST_CASE("from_derivations: laurent ring realizes the witt window") {
  const auto ring = laurent_ring();
  const int d = 5;
  const auto basis = derivation_basis(ring, d);
  REQUIRE(basis.dim() == 2 * d - 1);
  const auto euler = canonical_euler(ring);
  REQUIRE(euler);
  const auto graded = grade_by_ad_eigenvalues(basis.basis, *euler);
  std::vector<int> expect;
  for (int n = -(d - 1); n <= d - 1; ++n) expect.push_back(n);
  CHECK(graded.weights == expect);
  const auto wa = from_derivations(graded.basis, graded.weights);
  CHECK(matches_witt_constants(wa.algebra));
  CHECK(jacobi_check(wa.algebra).ok);
  CHECK(ce_h1_trivial(wa.algebra).dim_h2 == 0);  // perfect on the window
  // both l_{-1} directions are present: weights -1 and +1 occur
  CHECK(std::count(graded.weights.begin(), graded.weights.end(), -1) == 1);
  CHECK(std::count(graded.weights.begin(), graded.weights.end(), 1) == 1);
}

TEST_CASE("from_derivations: polynomial line gives the one-sided window") {
  const auto ring = affine_line("x");
  const int d = 4;
  const auto basis = derivation_basis(ring, d);
  REQUIRE(basis.dim() == d + 1);
  const auto euler = canonical_euler(ring);
  const auto graded = grade_by_ad_eigenvalues(basis.basis, *euler);
  std::vector<int> expect;
  for (int n = -1; n <= d - 1; ++n) expect.push_back(n);
  CHECK(graded.weights == expect);
  CHECK(matches_witt_constants(from_derivations(graded.basis, graded.weights).algebra));
}

TEST_CASE("from_derivations rejects gradings that break weight additivity") {
  const auto ring = affine_line("x");
  const auto basis = derivation_basis(ring, 2);  // d/dx, x d/dx, x^2 d/dx
  CHECK_THROWS_AS(from_derivations(basis.basis, {0, 0, 5}), InvariantError);
}

TEST_CASE("punctured-sphere windowed H2: dim 2 for three punctures, 1 for two") {
  // two consecutive truncations agree in both cases (stabilization)
  int prev = -1;
  for (int d : {5, 6}) {
    const auto mk = punctured_p1_ring({Rational(0), Rational(1)});
    const auto basis = derivation_basis(mk.ring, d);
    CHECK(basis.dim() == 3 * (d - 1));
    const auto wa = from_derivations(basis.basis, std::vector<int>(basis.dim(), 0));
    const auto rep = ce_h2(wa.algebra, 0, CoeffKind::Trivial, ClosurePolicy::Partial);
    CHECK(rep.dim_h2 == 2);
    if (prev >= 0) CHECK(rep.dim_h2 == prev);
    prev = rep.dim_h2;
  }
  for (int d : {5, 6}) {
    const auto basis = derivation_basis(laurent_ring(), d);
    const auto wa = from_derivations(basis.basis, std::vector<int>(basis.dim(), 0));
    CHECK(ce_h2(wa.algebra, 0, CoeffKind::Trivial, ClosurePolicy::Partial).dim_h2 == 1);
  }
}

TEST_CASE("cohomology base change along the family") {
  const std::vector<std::string> labels{"h", "e", "f"};
  const std::vector<Rational> pts{Rational(0), Rational(1), Rational(2), Rational(-1),
                                  Rational(1, 2)};

  // current algebra: fiber cohomology constant in t0
  const auto cur = FreeBasisFamily::current_algebra(labels, sl2_table(), Rational(0));
  const auto rep = cohomology_base_change_check(cur, pts);
  CHECK(rep.all_agree);
  CHECK(rep.generic_h2 == 0);  // Whitehead: H2(sl2) = 0

  // scaled bracket (t-1)[,]: rank drops exactly at t = 1
  UniPoly tm1 = UniPoly::t() - UniPoly(1);
  const auto scaled = FreeBasisFamily::scaled_bracket(labels, sl2_table(), tm1, Rational(0));
  const auto rep2 = cohomology_base_change_check(scaled, pts);
  CHECK(rep2.generic_h2 == 0);
  CHECK_FALSE(rep2.all_agree);
  for (const auto& f : rep2.fibers) {
    if (f.t0 == Rational(1)) {
      CHECK(f.fiber_h2 == 3);  // abelian fiber: all 2-cochains are classes
      CHECK_FALSE(f.agrees);
    } else {
      CHECK(f.fiber_h2 == 0);
      CHECK(f.agrees);
    }
  }
}
