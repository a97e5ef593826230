#include <benchmark/benchmark.h>

#include "hallcl/bases.hpp"
#include "hallcl/hall.hpp"
#include "hallcl/operators.hpp"
#include "hallcl/oracle.hpp"

using namespace hallcl;

namespace {

void BM_product(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto parts = partitions_of(d);
  HallElement x(Basis::I);
  for (const Partition& p : parts) x.add_term(p, QRat(1));
  for (auto _ : state) {
    auto r = product(x, x);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_product)->Arg(4)->Arg(6);

void BM_convert_to_p(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  HallElement x(Basis::I);
  for (const Partition& p : partitions_of(d)) x.add_term(p, QRat(1));
  for (auto _ : state) {
    auto r = convert(x, Basis::p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_convert_to_p)->Arg(4)->Arg(6)->Arg(8);

void BM_coproduct(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  HallElement x(Basis::I);
  for (const Partition& p : partitions_of(d)) x.add_term(p, QRat(1));
  for (auto _ : state) {
    auto r = coproduct(x);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_coproduct)->Arg(4)->Arg(6);

void BM_vertex_D0(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  HallElement x(Basis::I);
  for (const Partition& p : partitions_of(d)) x.add_term(p, QRat(1));
  for (auto _ : state) {
    auto r = vertex_D0(x);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_vertex_D0)->Arg(4)->Arg(6);

void BM_oracle_g_table(benchmark::State& state) {
  const Partition lam{{2, 2, 1}};
  for (auto _ : state) {
    auto t = count_g_table(lam, 2);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_oracle_g_table);

void BM_qbinomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto b = qbinomial(n, n / 2);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_qbinomial)->Arg(20)->Arg(40);

} // namespace

BENCHMARK_MAIN();
