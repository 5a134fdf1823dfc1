// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "deltamatroid/binary.h"
#include "deltamatroid/census.h"
#include "deltamatroid/gf2.h"
#include "deltamatroid/golden.h"
#include "deltamatroid/isomorphism.h"
#include "deltamatroid/set_system.h"
#include "deltamatroid/transforms.h"

namespace dmat {
namespace {

std::vector<SetSystem> Sample(int n, std::size_t count) {
  std::mt19937_64 rng(7);
  std::vector<SetSystem> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t limit =
        (std::uint64_t{1} << SymmetricBinaryMatrix::EncodingBits(n)) - 1;
    const auto a = SymmetricBinaryMatrix::FromEncoding(
        n, std::uniform_int_distribution<std::uint64_t>(0, limit)(rng));
    out.push_back(Twist(MatroidOfMatrix(a),
                        SubsetMask(static_cast<std::uint32_t>(
                            rng() & ((1u << n) - 1)))));
  }
  return out;
}

void BM_MatroidOfMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto a = SymmetricBinaryMatrix::FromEncoding(
      n, rng() & ((std::uint64_t{1} << SymmetricBinaryMatrix::EncodingBits(n)) -
                  1));
  for (auto _ : state) benchmark::DoNotOptimize(MatroidOfMatrix(a));
}
BENCHMARK(BM_MatroidOfMatrix)->DenseRange(4, 12, 4);

void BM_ExchangeAxiom(benchmark::State& state) {
  const auto systems = Sample(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsDeltaMatroid(systems[i++ % systems.size()]));
  }
}
BENCHMARK(BM_ExchangeAxiom)->DenseRange(4, 10, 2);

void BM_HandleSlide(benchmark::State& state) {
  const auto systems = Sample(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(HandleSlide(systems[i++ % systems.size()], 1, 2));
  }
}
BENCHMARK(BM_HandleSlide)->DenseRange(4, 12, 4);

void BM_BinaryBySearch(benchmark::State& state) {
  const auto systems = Sample(5, 64);
  IsBinaryBySearch(systems[0]);  // build the matrix table outside the loop
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsBinaryBySearch(systems[i++ % systems.size()]));
  }
}
BENCHMARK(BM_BinaryBySearch);

void BM_BinaryByExcludedMinors(benchmark::State& state) {
  const auto systems = Sample(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        IsBinaryByExcludedMinors(systems[i++ % systems.size()]));
  }
}
BENCHMARK(BM_BinaryByExcludedMinors)->DenseRange(3, 6, 1);

void BM_CanonicalForm(benchmark::State& state) {
  const auto systems = Sample(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(CanonicalForm(systems[i++ % systems.size()]));
  }
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 7, 1);

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateDeltaMatroids(n));
}
BENCHMARK(BM_Census)->DenseRange(2, 3, 1)->Unit(benchmark::kMillisecond);

void BM_GoldenSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(RunGoldenSuite());
}
BENCHMARK(BM_GoldenSuite)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace dmat

BENCHMARK_MAIN();
