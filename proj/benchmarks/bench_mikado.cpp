#include <benchmark/benchmark.h>

#include "mikado/biclosed.hpp"
#include "mikado/braid.hpp"
#include "mikado/coxeter.hpp"
#include "mikado/hecke.hpp"
#include "mikado/verify.hpp"

using namespace mikado;

namespace {

CoxeterSystem a3() {
  return make_system("A3", {"s1", "s2", "s3"},
                     {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
}
CoxeterSystem dihedral_inf() {
  return make_system("Dinf", {"s", "t"}, {{1, 0}, {0, 1}});
}
CoxeterSystem universal3() {
  return make_system("U3", {"r", "s", "t"}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

// Full canonical basis table from a cold cache.
void BM_CanonicalBasisTableA3(benchmark::State& state) {
  CoxeterSystem sys = a3();
  std::vector<Element> group = ball(sys, 6);
  for (auto _ : state) {
    HeckeAlgebra alg(sys);
    for (const Element& w : group) benchmark::DoNotOptimize(alg.cprime(w));
  }
}
BENCHMARK(BM_CanonicalBasisTableA3)->Unit(benchmark::kMillisecond);

// One positivity check for the longest element against a warm algebra but a
// cold twisted basis.
void BM_ThreeparamLongestA3(benchmark::State& state) {
  CoxeterSystem sys = a3();
  HeckeAlgebra alg(sys);
  std::vector<Element> group = ball(sys, 6);
  Element w0 = group.back();
  Element y = parse_element(sys, "s1 s2 s3");
  alg.cprime(w0);
  for (auto _ : state) {
    BiclosedSet A = BiclosedSet::inversion(sys, y);
    benchmark::DoNotOptimize(check_threeparam(alg, w0, A));
  }
}
BENCHMARK(BM_ThreeparamLongestA3)->Unit(benchmark::kMillisecond);

void BM_BallUniversal3(benchmark::State& state) {
  CoxeterSystem sys = universal3();
  for (auto _ : state)
    benchmark::DoNotOptimize(ball(sys, (int)state.range(0)));
}
BENCHMARK(BM_BallUniversal3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_TwistedOrderDihedral(benchmark::State& state) {
  CoxeterSystem sys = dihedral_inf();
  BiclosedSet A = BiclosedSet::half_space({1, -1});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        twisted_order_on_ball(sys, A, (int)state.range(0)));
}
BENCHMARK(BM_TwistedOrderDihedral)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_LiftUniversal3(benchmark::State& state) {
  CoxeterSystem sys = universal3();
  HeckeAlgebra alg(sys);
  Element y = parse_element(sys, "s t r s");
  BiclosedSet A = BiclosedSet::inversion(sys, y);
  Element x = parse_element(sys, "r t s r t s");
  for (auto _ : state) benchmark::DoNotOptimize(t_twisted(alg, x, A));
}
BENCHMARK(BM_LiftUniversal3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
