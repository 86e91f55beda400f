#include <benchmark/benchmark.h>

#include "dwbc/hankel/hankel.hpp"
#include "dwbc/identities/identities.hpp"

using namespace dwbc;

namespace {

const WeightTriple kW(Rational(3, 2), Rational(2, 3), Rational(1, 2));

void BM_ZEnumerate(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_Z(n, kW, Backend::Enumerate));
}
BENCHMARK(BM_ZEnumerate)->DenseRange(3, 6);

void BM_ZTransfer(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_Z(n, kW, Backend::Transfer));
}
BENCHMARK(BM_ZTransfer)->DenseRange(4, 10, 2);

void BM_ZDeterminant(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ik_homogeneous(n, Complex(1.1), Complex(0.35)));
}
BENCHMARK(BM_ZDeterminant)->DenseRange(4, 16, 4);

// s-fold against (r - s)-fold integrals at fixed N = 6
void BM_EfpMirS(benchmark::State& st) {
  BoundaryGenFamily fam(kW, 6);
  EfpQuery q{6, static_cast<int>(st.range(0)), static_cast<int>(st.range(1))};
  for (auto _ : st) benchmark::DoNotOptimize(efp_mir_s(q, fam));
}
BENCHMARK(BM_EfpMirS)->Args({3, 1})->Args({4, 2})->Args({5, 3})->Args({6, 4})->Unit(benchmark::kMillisecond);

void BM_EfpMirN(benchmark::State& st) {
  BoundaryGenFamily fam(kW, 6);
  EfpQuery q{6, static_cast<int>(st.range(0)), static_cast<int>(st.range(1))};
  for (auto _ : st) benchmark::DoNotOptimize(efp_mir_n(q, fam));
}
BENCHMARK(BM_EfpMirN)->Args({3, 1})->Args({4, 2})->Args({5, 3})->Args({6, 4})->Unit(benchmark::kMillisecond);

void BM_EfpOracle(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(efp_oracle(6, 4, 2, kW));
}
BENCHMARK(BM_EfpOracle)->Unit(benchmark::kMillisecond);

void BM_EfpOrtho(benchmark::State& st) {
  EfpQuery q{4, 3, static_cast<int>(st.range(0))};
  for (auto _ : st) benchmark::DoNotOptimize(efp_ortho(q, 1.1, 0.35));
}
BENCHMARK(BM_EfpOrtho)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Trace(benchmark::State& st) {
  BoundaryGenFamily fam(kW, 4);
  for (auto _ : st) benchmark::DoNotOptimize(efp_double_contour_trace(EfpQuery{4, 3, 2}, fam));
}
BENCHMARK(BM_Trace)->Unit(benchmark::kMillisecond);

void BM_Cantini(benchmark::State& st) {
  const int s = static_cast<int>(st.range(0));
  std::vector<Rational> x, y;
  for (int j = 0; j < s; ++j) {
    x.emplace_back(j + 2, 3);
    y.emplace_back(-(j + 1), 5 + j);
  }
  for (auto _ : st) benchmark::DoNotOptimize(check_cantini(Rational(1, 3), x, y));
}
BENCHMARK(BM_Cantini)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
