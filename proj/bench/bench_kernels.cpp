// Copyright 2026 The Infodiagram Authors.
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

// Serial versus OpenMP kernels on random Shannon instances.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "infodiagram/diagram.hpp"
#include "infodiagram/shannon.hpp"
#include "infodiagram/verify.hpp"

namespace {

using namespace infodiagram;

ChainRuleInstance random_instance(int n) {
  std::mt19937_64 rng(42);
  const ProductJoint joint = random_product_joint(std::vector<int>(n, 2), rng, 0.0);
  return tabulate(shannon_instance(joint.dist, joint.coordinates, LogBase::nats));
}

void BM_MuTableSerial(benchmark::State& state) {
  const auto inst = random_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::mu_table(inst));
}

void BM_MuTableParallel(benchmark::State& state) {
  const auto inst = random_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mu_table(inst));
}

void BM_VerifySerial(benchmark::State& state) {
  const auto inst = random_instance(static_cast<int>(state.range(0)));
  VerifyOptions options;
  options.keep_all_rows = false;
  for (auto _ : state) benchmark::DoNotOptimize(serial::verify_hu(inst, options));
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto inst = random_instance(static_cast<int>(state.range(0)));
  VerifyOptions options;
  options.keep_all_rows = false;
  for (auto _ : state) benchmark::DoNotOptimize(verify_hu(inst, options));
}

}  // namespace

BENCHMARK(BM_MuTableSerial)->DenseRange(4, 8, 2);
BENCHMARK(BM_MuTableParallel)->DenseRange(4, 8, 2);
BENCHMARK(BM_VerifySerial)->Arg(3)->Arg(4);
BENCHMARK(BM_VerifyParallel)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
