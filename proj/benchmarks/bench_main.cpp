// Copyright 2026 The qcert authors
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

#include "qcert/certify.hpp"
#include "qcert/diamond.hpp"
#include "qcert/fixtures.hpp"

using namespace qcert;

static void BM_Tensor(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const Matrix a = random_gaussian(d, d, rng);
  const Matrix b = random_gaussian(d, d, rng);
  for (auto _ : state) {
    Matrix t = tensor(a, b);
    benchmark::DoNotOptimize(t.data());
  }
}
BENCHMARK(BM_Tensor)->Arg(4)->Arg(8)->Arg(14);

static void BM_PartialTrace(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(2);
  const Matrix m = random_gaussian(d * d, d * d, rng);
  for (auto _ : state) {
    Matrix t = partial_trace(m, {d, d}, {1});
    benchmark::DoNotOptimize(t.data());
  }
}
BENCHMARK(BM_PartialTrace)->Arg(4)->Arg(8)->Arg(14);

static void BM_KrausToChoi(benchmark::State& state) {
  const KrausChannel c = random_channel(4, 4, 4, 3);
  for (auto _ : state) {
    ChoiMatrix j = kraus_to_choi(c);
    benchmark::DoNotOptimize(j.m.data());
  }
}
BENCHMARK(BM_KrausToChoi);

static void BM_Complement(benchmark::State& state) {
  const KrausChannel c = random_channel(4, 4, 4, 4);
  for (auto _ : state) {
    KrausChannel comp = complement(c);
    benchmark::DoNotOptimize(comp.kraus.data());
  }
}
BENCHMARK(BM_Complement)->Unit(benchmark::kMicrosecond);

static void BM_DiamondQubit(benchmark::State& state) {
  const KrausChannel id = identity_channel(2);
  const KrausChannel dep = fixtures::completely_depolarizing(2);
  const HermitianPreservingMap diff = difference_map(id, dep);
  for (auto _ : state) {
    DiamondResult res = diamond_norm(diff);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_DiamondQubit)->Unit(benchmark::kMillisecond);

static void BM_DiamondTwoQubit(benchmark::State& state) {
  const KrausChannel e = fixtures::phase_flip_two_qubit();
  const HermitianPreservingMap diff = difference_map(e, identity_channel(4));
  for (auto _ : state) {
    DiamondResult res = diamond_norm(diff);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_DiamondTwoQubit)->Unit(benchmark::kMillisecond);

static void BM_CertifyPrivateCode(benchmark::State& state) {
  const KrausChannel comp = complement(fixtures::phase_flip_two_qubit());
  const SubsystemDecomposition code = fixtures::phase_flip_code();
  for (auto _ : state) {
    CertificationResult res = certify_private(comp, code);
    benchmark::DoNotOptimize(res.epsilon);
  }
}
BENCHMARK(BM_CertifyPrivateCode)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
