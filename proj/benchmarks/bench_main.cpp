#include <benchmark/benchmark.h>

#include "bcbvp/boundary_data.hpp"
#include "bcbvp/solvers.hpp"
#include "bcbvp/t_operator.hpp"

using namespace bcbvp;

namespace {

const cplx kZ(0.35, -0.2);

void BM_TQuadrature(benchmark::State& state) {
  QuadratureConfig cfg;
  cfg.centered_cauchy = state.range(0) != 0;
  const ComplexSource f = [](cplx z) { return z * std::conj(z) + 1.0; };
  for (auto _ : state) benchmark::DoNotOptimize(t_complex(f, kZ, cfg));
  state.SetLabel(cfg.centered_cauchy ? "split" : "tensor");
}
BENCHMARK(BM_TQuadrature)->Arg(1)->Arg(0);

void BM_TClosedForm(benchmark::State& state) {
  const ComplexPoly f = ComplexPoly::monomial(2, 1) + ComplexPoly::constant(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(t_complex(f, kZ));
}
BENCHMARK(BM_TClosedForm);

void BM_SchwarzPairing(benchmark::State& state) {
  const auto d = BoundaryFourierData::dirac(0.3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pair_schwarz_kernel(d, kZ));
}
BENCHMARK(BM_SchwarzPairing)->Arg(16)->Arg(64)->Arg(256);

void BM_FieldEvaluation(benchmark::State& state) {
  const auto c = BoundaryFourierData::cosine(1);
  SchwarzSpec s;
  s.order = 2;
  s.boundary_plus = {c, BoundaryFourierData::constant(0.25)};
  s.boundary_minus = {BoundaryFourierData::cosine(2), c};
  s.c_plus = {0.5, 0.0};
  s.c_minus = {-0.25, 1.0};
  s.source = PolynomialSource(PolynomialSource::Terms{{{0, 0}, Bicomplex(1.0)}, {{1, 0}, Bicomplex(0.0, 0.5)}});
  const SolveOptions opts{state.range(0) != 0 ? EvalPath::quadrature : EvalPath::spectral, {}};
  const SolutionField w = solve_schwarz(s, opts);
  for (auto _ : state) benchmark::DoNotOptimize(w(kZ));
  state.SetLabel(to_string(opts.path).data());
}
BENCHMARK(BM_FieldEvaluation)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
