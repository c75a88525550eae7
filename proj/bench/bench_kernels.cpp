// Serial reference vs OpenMP kernels. Each pair runs on the same input; the
// parallel variant takes the thread count as its argument.

#include <random>

#include <benchmark/benchmark.h>

#include "branchlaw/branching.hpp"
#include "branchlaw/character_table.hpp"
#include "branchlaw/group.hpp"
#include "branchlaw/oracle.hpp"
#include "branchlaw/parallel.hpp"
#include "branchlaw/poly.hpp"
#include "branchlaw/tensor.hpp"

using namespace branchlaw;

namespace {

struct Fixture {
  GroupData group;
  CharacterTable table;
  TensorMatrices tensors;
};

const Fixture& typeII() {
  static const Fixture f = [] {
    Fixture x;
    x.group = build_group(builtin_group("typeII"));
    x.table = dixon_character_table(x.group);
    x.tensors = build_tensor_matrices(x.table, x.group);
    return x;
  }();
  return f;
}

MultiPoly random_poly(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> e(0, 15);
  std::uniform_int_distribution<long> c(-50, 50);
  MultiPoly p;
  for (int i = 0; i < terms; ++i) p.add_term({e(rng), e(rng), e(rng)}, Cyclotomic(c(rng)));
  return p;
}

const std::pair<MultiPoly, MultiPoly>& operands() {
  static const auto ops = [] {
    std::mt19937 rng(1);
    return std::make_pair(random_poly(rng, 300), random_poly(rng, 300));
  }();
  return ops;
}

void BM_multiply_serial(benchmark::State& state) {
  const auto& [a, b] = operands();
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(a, b));
}

void BM_multiply_parallel(benchmark::State& state) {
  set_num_threads(static_cast<int>(state.range(0)));
  const auto& [a, b] = operands();
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}

void BM_class_coeffs_serial(benchmark::State& state) {
  const auto& g = typeII().group;
  for (auto _ : state) benchmark::DoNotOptimize(all_class_mult_coeffs_serial(g));
}

void BM_class_coeffs_parallel(benchmark::State& state) {
  set_num_threads(static_cast<int>(state.range(0)));
  const auto& g = typeII().group;
  for (auto _ : state) benchmark::DoNotOptimize(all_class_mult_coeffs(g));
}

void BM_series_serial(benchmark::State& state) {
  const auto& f = typeII();
  for (auto _ : state) benchmark::DoNotOptimize(compute_series_serial(f.table, f.tensors, "typeII"));
}

void BM_series_parallel(benchmark::State& state) {
  set_num_threads(static_cast<int>(state.range(0)));
  const auto& f = typeII();
  for (auto _ : state) benchmark::DoNotOptimize(compute_series(f.table, f.tensors, "typeII"));
}

void BM_schur_serial(benchmark::State& state) {
  const auto& f = typeII();
  for (auto _ : state) benchmark::DoNotOptimize(schur_table_serial(f.table, f.group, 8));
}

void BM_schur_parallel(benchmark::State& state) {
  set_num_threads(static_cast<int>(state.range(0)));
  const auto& f = typeII();
  for (auto _ : state) benchmark::DoNotOptimize(schur_table(f.table, f.group, 8));
}

}  // namespace

BENCHMARK(BM_multiply_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_class_coeffs_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_class_coeffs_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_series_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_series_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_schur_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_schur_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
