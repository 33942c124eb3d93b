// Microbenchmarks for the hot paths: multiplet generation and validation,
// the exact Verma kernel solver, closed-form singular vectors, the Weyl
// dimension product, classification, and JSON serialization.

#include "sopq/classify.hpp"
#include "sopq/multiplet.hpp"
#include "sopq/serialize.hpp"
#include "sopq/singvec.hpp"
#include "sopq/verma.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace sopq;

namespace {

AlgebraSpec spec_of_rank(int rank) {
  // Odd-parity split of rank l: so(l+2, l+1).
  return AlgebraSpec::make(rank + 2, rank + 1);
}

void BM_MainMultiplet(benchmark::State& state) {
  AlgebraSpec spec = spec_of_rank(static_cast<int>(state.range(0)));
  std::vector<Rat> labels(spec.h + 1, Rat(2));
  labels[0] = 3;
  for (auto _ : state) {
    Multiplet mult = main_multiplet(spec, labels);
    benchmark::DoNotOptimize(mult.nodes.size());
  }
}
BENCHMARK(BM_MainMultiplet)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_ValidateMultiplet(benchmark::State& state) {
  AlgebraSpec spec = spec_of_rank(static_cast<int>(state.range(0)));
  std::vector<Rat> labels(spec.h + 1, Rat(2));
  Multiplet mult = main_multiplet(spec, labels);
  for (auto _ : state) {
    auto violations = validate_multiplet(mult);
    benchmark::DoNotOptimize(violations.size());
  }
}
BENCHMARK(BM_ValidateMultiplet)->Arg(4)->Arg(8)->Arg(16);

void BM_SweepValidate(benchmark::State& state) {
  for (auto _ : state) {
    SweepStats stats = sweep_validate(3, 2);
    benchmark::DoNotOptimize(stats.multiplets);
  }
}
BENCHMARK(BM_SweepValidate);

void BM_VermaKernel(benchmark::State& state) {
  StructureConstants sc(7);
  const int m = static_cast<int>(state.range(0));
  // (lambda+rho, e1^vee) = m with generic tail coordinates.
  Weight lam_rho = {frac(m, 2), frac(1, 5), frac(2, 7)};
  Weight rho = sc.roots().rho();
  Weight lambda(3);
  for (int i = 0; i < 3; ++i) lambda[i] = lam_rho[i] - rho[i];
  Root beta{{1, 0, 0}};
  for (auto _ : state) {
    VermaModule vm(sc, lambda);  // fresh module: slices are memoized inside
    auto kernel = vm.solve_singular(beta, m);
    benchmark::DoNotOptimize(kernel.size());
  }
}
BENCHMARK(BM_VermaKernel)->Arg(1)->Arg(2)->Arg(3);

void BM_ClosedFormSingular(benchmark::State& state) {
  StructureConstants sc(7);
  const RootSystem& rs = sc.roots();
  const int m = static_cast<int>(state.range(0));
  AlgebraSpec spec = AlgebraSpec::make(5, 2);
  Root beta{{1, 0, 0}};
  ChainDecomposition chain = chain_decomposition(spec, beta);
  Weight lam_rho = {frac(m, 2), frac(1, 5), frac(2, 7)};
  Weight rho = rs.rho();
  Weight lambda(3);
  for (int i = 0; i < 3; ++i) lambda[i] = lam_rho[i] - rho[i];
  for (auto _ : state) {
    NCPolynomial poly = singular_vector_closed_form(rs, chain, m, lambda);
    VermaModule vm(sc, lambda);
    SingularCheck check = verify_singular(vm, poly);
    benchmark::DoNotOptimize(check.verified);
  }
}
BENCHMARK(BM_ClosedFormSingular)->Arg(1)->Arg(2)->Arg(3);

void BM_WeylDimension(benchmark::State& state) {
  AlgebraSpec spec = spec_of_rank(static_cast<int>(state.range(0)));
  std::vector<Rat> labels(spec.h + 1, Rat(3));
  for (auto _ : state) {
    Int dim = weyl_dimension_labels(spec, labels);
    benchmark::DoNotOptimize(dim.get_ui());
  }
}
BENCHMARK(BM_WeylDimension)->Arg(4)->Arg(8)->Arg(16);

void BM_Classify(benchmark::State& state) {
  AlgebraSpec spec = AlgebraSpec::make(6, 4);
  std::vector<Rat> labels(spec.h + 1, Rat(2));
  for (auto _ : state) {
    ClassificationReport rep = classify(spec, labels);
    benchmark::DoNotOptimize(rep.frp.size());
  }
}
BENCHMARK(BM_Classify);

void BM_JsonRoundTrip(benchmark::State& state) {
  AlgebraSpec spec = AlgebraSpec::make(6, 4);
  std::vector<Rat> labels(spec.h + 1, Rat(2));
  Multiplet mult = main_multiplet(spec, labels);
  for (auto _ : state) {
    std::string text = multiplet_json(mult);
    Multiplet back = multiplet_from_json(text);
    benchmark::DoNotOptimize(back.nodes.size());
  }
}
BENCHMARK(BM_JsonRoundTrip);

}  // namespace

BENCHMARK_MAIN();
