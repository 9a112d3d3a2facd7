// Copyright 2026 The divide2 Authors. All Rights Reserved.
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

#include <random>

#include <benchmark/benchmark.h>

#include "divide2/bernstein.hpp"
#include "divide2/counterexample.hpp"
#include "divide2/theta.hpp"
#include "oracles.hpp"

namespace {

using namespace divide2;

void BM_DivideByTwo(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto xs = oracle::labels("x", n), ys = oracle::labels("y", n);
  FinInstance inst(xs, ys, oracle::random_map(rng, xs, ys));
  for (auto _ : state) benchmark::DoNotOptimize(divide_by_two(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DivideByTwo)->RangeMultiplier(4)->Range(4, 4096)->Complexity();

void BM_Theta(benchmark::State& state) {
  BiSeq chi(Bit::zero, -8, {Bit::one, Bit::zero, Bit::one, Bit::one}, Bit::one);
  Index n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta(chi, ParityPoint(n, Bit::zero)));
    n = (n + 1) % 32 - 16;
  }
}
BENCHMARK(BM_Theta);

void BM_ExhaustiveSearch(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  const Index d = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(w, d));
}
BENCHMARK(BM_ExhaustiveSearch)->Args({1, 3})->Args({2, 5})->Args({2, 7})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
