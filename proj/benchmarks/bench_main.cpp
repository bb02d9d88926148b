#include <benchmark/benchmark.h>

#include "fiberfield/curves.hpp"
#include "fiberfield/liealg.hpp"

using namespace fiberfield;

namespace {

void BM_GroebnerPunctured(benchmark::State& state) {
  const std::vector<Rational> pts{Rational(0), Rational(1), Rational(2)};
  for (auto _ : state) {
    auto ring = punctured_p1_ring(pts);
    benchmark::DoNotOptimize(ring.ring.groebner_basis().size());
  }
}
BENCHMARK(BM_GroebnerPunctured);

void BM_DerivationSolveLaurent(benchmark::State& state) {
  const auto ring = laurent_ring();
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto basis = derivation_basis(ring, bound);
    benchmark::DoNotOptimize(basis.dim());
  }
}
BENCHMARK(BM_DerivationSolveLaurent)->Arg(4)->Arg(6)->Arg(8);

void BM_DerivationSolveWeierstrassFamily(benchmark::State& state) {
  const auto fam = weierstrass_family(UniPoly::t(), -UniPoly::t(), UniPoly());
  for (auto _ : state) {
    auto basis = derivation_basis(fam.ring, 4);
    benchmark::DoNotOptimize(basis.dim());
  }
}
BENCHMARK(BM_DerivationSolveWeierstrassFamily);

void BM_WittH2(benchmark::State& state) {
  const auto W = witt_window(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = ce_h2(W, 0, CoeffKind::Trivial);
    benchmark::DoNotOptimize(rep.dim_h2);
  }
}
BENCHMARK(BM_WittH2)->Arg(6)->Arg(10);

void BM_PuncturedSphereH2(benchmark::State& state) {
  const auto mk = punctured_p1_ring({Rational(0), Rational(1)});
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto basis = derivation_basis(mk.ring, bound);
    auto wa = from_derivations(basis.basis, std::vector<int>(basis.dim(), 0));
    auto rep = ce_h2(wa.algebra, 0, CoeffKind::Trivial, ClosurePolicy::Partial);
    benchmark::DoNotOptimize(rep.dim_h2);
  }
}
BENCHMARK(BM_PuncturedSphereH2)->Arg(5)->Arg(6);

void BM_NullspaceRational(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Mat<Rational> m(n, n + 3);
  unsigned seed = 12345;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      seed = seed * 1103515245 + 12345;
      m.at(i, j) = Rational((seed >> 16) % 19 - 9, 1 + (seed >> 8) % 4);
    }
  for (auto _ : state) {
    auto ker = nullspace(m);
    benchmark::DoNotOptimize(ker.size());
  }
}
BENCHMARK(BM_NullspaceRational)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
