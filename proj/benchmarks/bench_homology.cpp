#include <benchmark/benchmark.h>

#include "chiwb/multiplicity.hpp"
#include "chiwb/parse.hpp"

using namespace chiwb;

static void BM_ChiCuspTangent(benchmark::State& state) {
  auto r = RingContext::make(Field::rationals(), {"x", "y"});
  for (auto _ : state) {
    Ideal cusp(r, {parse_polynomial("y^2 - x^3", r)});
    Ideal line(r, {parse_polynomial("y", r)});
    benchmark::DoNotOptimize(chi(cusp, line).chi);
  }
}
BENCHMARK(BM_ChiCuspTangent);

static void BM_ResolutionSquareOfMax(benchmark::State& state) {
  auto r = RingContext::make(Field::prime_field(101), {"x", "y", "z"});
  for (auto _ : state) {
    Ideal m2(r, {parse_polynomial("x^2", r), parse_polynomial("x*y", r),
                 parse_polynomial("x*z", r), parse_polynomial("y^2", r),
                 parse_polynomial("y*z", r), parse_polynomial("z^2", r)});
    PresentedModule m = PresentedModule::quotient_by(m2);
    benchmark::DoNotOptimize(m.resolution().ranks.size());
  }
}
BENCHMARK(BM_ResolutionSquareOfMax);

static void BM_HilbertSamuelCusp(benchmark::State& state) {
  auto r = RingContext::make(Field::rationals(), {"x", "y"});
  for (auto _ : state) {
    Ideal cusp(r, {parse_polynomial("y^2 - x^3", r)});
    benchmark::DoNotOptimize(hs_multiplicity(cusp, Ideal::irrelevant(r), 1));
  }
}
BENCHMARK(BM_HilbertSamuelCusp);
