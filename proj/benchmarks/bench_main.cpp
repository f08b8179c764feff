/*
Copyright 2026 The dirichlet-j Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "dirichlet/identities.hpp"
#include "dirichlet/jfun.hpp"
#include "dirichlet/linalg.hpp"
#include "dirichlet/special.hpp"

using namespace dirichlet;

static void BM_Quadrature(benchmark::State& state) {
  const double s = static_cast<double>(state.range(0)) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(jfun::j_quadrature(s));
}
BENCHMARK(BM_Quadrature)->Arg(1)->Arg(2)->Arg(7)->Arg(16);

static void BM_EulerSeries(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jfun::j_euler_series(n, 1e-12));
}
BENCHMARK(BM_EulerSeries)->Arg(1)->Arg(4)->Arg(8);

static void BM_BetaNumeric(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(special::beta_numeric(Real(2.5), digits));
}
BENCHMARK(BM_BetaNumeric)->Arg(15)->Arg(30)->Arg(60);

static void BM_EulerNumbers(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact::euler_numbers(count));
}
BENCHMARK(BM_EulerNumbers)->Arg(16)->Arg(64)->Arg(128);

static void BM_Involution(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(linalg::involution_defect(linalg::build_matrix(n, TrigKind::cosine)));
  }
}
BENCHMARK(BM_Involution)->Arg(16)->Arg(64);

static void BM_Collapse(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(identities::check_collapse(m));
}
BENCHMARK(BM_Collapse)->Arg(4)->Arg(8);
BENCHMARK_MAIN();
