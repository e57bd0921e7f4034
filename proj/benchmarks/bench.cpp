#include <benchmark/benchmark.h>

#include "invkl/fan.hpp"
#include "invkl/graph.hpp"
#include "invkl/kls.hpp"
#include "invkl/poly.hpp"
#include "invkl/series.hpp"

namespace {

void BM_q_closed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invkl::q_fan_closed(n));
}
BENCHMARK(BM_q_closed)->Arg(50)->Arg(200)->Arg(500);

// The sequence routes compute Q_{F_0..F_n} in one sweep; timings are for the
// whole prefix, which is how the cross-check suites consume them.
void BM_q_recurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invkl::q_fan_recurrence(n));
}
BENCHMARK(BM_q_recurrence)->Arg(50)->Arg(200);

void BM_q_deletion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invkl::q_fan_deletion(n));
}
BENCHMARK(BM_q_deletion)->Arg(50)->Arg(200);

void BM_q_generating_function(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invkl::q_fan_from_gf(n));
}
BENCHMARK(BM_q_generating_function)->Arg(50)->Arg(200);

void BM_y_closed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invkl::y_fan_closed(n));
}
BENCHMARK(BM_y_closed)->Arg(50)->Arg(100);

void BM_y_deletion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invkl::y_fan_deletion(n));
}
BENCHMARK(BM_y_deletion)->Arg(50)->Arg(100);

void BM_y_generating_function(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invkl::y_fan_from_gf(n));
}
BENCHMARK(BM_y_generating_function)->Arg(50)->Arg(100);

// The generic composition-recursion engine; cost is dominated by the
// number of compositions of fan(n), which grows like a Bell-number slice.
void BM_q_fan_oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invkl::q_fan_oracle(n));
}
BENCHMARK(BM_q_fan_oracle)->DenseRange(5, 7);

void BM_y_fan_oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invkl::y_fan_oracle(n));
}
BENCHMARK(BM_y_fan_oracle)->DenseRange(5, 6);

void BM_chromatic_fan(benchmark::State& state) {
  const invkl::Multigraph g = invkl::fan(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invkl::chromatic_polynomial(g));
}
BENCHMARK(BM_chromatic_fan)->Arg(8)->Arg(12);

void BM_sturm_normalized_q(benchmark::State& state) {
  const invkl::IntPoly b =
      invkl::hadamard_normalize(invkl::q_fan_closed(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(invkl::sturm_real_rooted(b));
}
BENCHMARK(BM_sturm_normalized_q)->Arg(20)->Arg(40);

void BM_weight_sum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    invkl::IntPoly sum;
    for (const auto& a : invkl::cprime_structures(n)) sum += invkl::weight_w(a);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_weight_sum)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
