#include <benchmark/benchmark.h>

#include "chiwb/ideal.hpp"
#include "chiwb/parse.hpp"

using namespace chiwb;

namespace {

Ideal katsura3(const RingPtr& r) {
  return Ideal(r, {parse_polynomial("x + 2*y + 2*z - 1", r),
                   parse_polynomial("x^2 + 2*y^2 + 2*z^2 - x", r),
                   parse_polynomial("2*x*y + 2*y*z - y", r)});
}

}  // namespace

static void BM_GroebnerKatsura3(benchmark::State& state) {
  auto r = RingContext::make(Field::prime_field(101), {"x", "y", "z"});
  for (auto _ : state) {
    Ideal i = katsura3(r);
    benchmark::DoNotOptimize(i.groebner().elements.size());
  }
}
BENCHMARK(BM_GroebnerKatsura3);

static void BM_SaturationCuspTransform(benchmark::State& state) {
  auto r = RingContext::make(Field::rationals(), {"v", "u"});
  Polynomial total = parse_polynomial("v^2*u^2 - v^3", r);
  Polynomial v = parse_polynomial("v", r);
  for (auto _ : state) {
    Ideal i(r, {total});
    benchmark::DoNotOptimize(ideal_saturation(i, v).generators().size());
  }
}
BENCHMARK(BM_SaturationCuspTransform);
