#include <benchmark/benchmark.h>

#include <random>

#include "ginter/circle_slice.hpp"
#include "ginter/curve_trace.hpp"
#include "ginter/descent.hpp"
#include "ginter/log.hpp"
#include "ginter/oracle.hpp"
#include "ginter/real_roots.hpp"
#include "testutil.hpp"

using namespace ginter;
using namespace testutil;

namespace {

ComplexPoly fixed_poly(int degree, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_monic_complex(rng, degree);
}

void BM_FindAllRoots_Line(benchmark::State& state) {
  const ComplexPoly f = fixed_poly(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_all_roots(f, Method::line));
  }
}
BENCHMARK(BM_FindAllRoots_Line)->Arg(4)->Arg(8)->Arg(12);

void BM_FindAllRoots_Circle(benchmark::State& state) {
  const ComplexPoly f = fixed_poly(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_all_roots(f, Method::circle));
  }
}
BENCHMARK(BM_FindAllRoots_Circle)->Arg(4)->Arg(8)->Arg(12);

void BM_CircleZeros(benchmark::State& state) {
  std::mt19937_64 rng(19);
  const RealPoly f = random_monic_real(rng, static_cast<int>(state.range(0)));
  const double r = dominance_radius(f) * 1.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(circle_zeros(f, r));
  }
}
BENCHMARK(BM_CircleZeros)->Arg(8)->Arg(16)->Arg(24);

void BM_RealRootsIn(benchmark::State& state) {
  std::mt19937_64 rng(23);
  std::vector<Complex> planted;
  for (int k = 0; k < static_cast<int>(state.range(0)); ++k) {
    planted.push_back(Complex(uniform_pm1(rng) * 0.95));
  }
  const ComplexPoly f = expand_from_roots(planted);
  std::vector<double> coeffs;
  for (int k = 0; k <= f.degree(); ++k) coeffs.push_back(f.coeff(k).real());
  const RealPoly p(coeffs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(real_roots_in(p, -1.0, 1.0));
  }
}
BENCHMARK(BM_RealRootsIn)->Arg(6)->Arg(12)->Arg(18);

void BM_AberthRoots(benchmark::State& state) {
  const ComplexPoly f = fixed_poly(static_cast<int>(state.range(0)), 31);
  for (auto _ : state) {
    benchmark::DoNotOptimize(aberth_roots(f));
  }
}
BENCHMARK(BM_AberthRoots)->Arg(4)->Arg(8)->Arg(16);

void BM_Trace(benchmark::State& state) {
  const ComplexPoly f = deg8_sample();
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace(f, {-1.5, 1.5, -1.5, 1.5}, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Trace)->Arg(100)->Arg(400)->Arg(800);

}  // namespace

int main(int argc, char** argv) {
  ginter::set_log_level(ginter::LogLevel::quiet);
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  ::benchmark::Shutdown();
  return 0;
}
