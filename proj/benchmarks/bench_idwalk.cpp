// Copyright 2026 The idwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numbers>

#include "idwalk/correlations.hpp"
#include "idwalk/oracle.hpp"
#include "idwalk/presets.hpp"
#include "idwalk/spinspace.hpp"

using namespace idwalk;

namespace {

PropagatedSet preset_set(int L, int steps, double phi = std::numbers::pi) {
    const auto model = WalkModel::conditional_hop(0.05, Boundary::Open);
    return propagate_set(IdenticalEnsemble(preset_configuration(Preset::III, L), phi), L, model, steps);
}

void BM_ConditionalHopStep(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    const StepOperator op(L, WalkModel::conditional_hop(0.05, Boundary::Open));
    SpinorField f = preset_set(L, 5).fields[0];
    for (auto _ : state) {
        op.apply_in_place(f);
        benchmark::DoNotOptimize(f);
    }
    state.SetComplexityN(L);
}
BENCHMARK(BM_ConditionalHopStep)->Arg(10)->Arg(20)->Arg(40)->Arg(80)->Complexity();

void BM_SplitStep(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    const StepOperator op(L, WalkModel::split_step());
    SpinorField f = propagate_set(IdenticalEnsemble(preset_configuration(Preset::III, L), 0.0), L, WalkModel::split_step(), 0).fields[0];
    for (auto _ : state) {
        op.apply_in_place(f);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_SplitStep)->Arg(40)->Arg(80);

void BM_JointObservables(benchmark::State& state) {
    const auto set = preset_set(static_cast<int>(state.range(0)), 20);
    for (auto _ : state) benchmark::DoNotOptimize(joint_observables(set));
}
BENCHMARK(BM_JointObservables)->Arg(10)->Arg(20)->Arg(40);

void BM_ReducedSpinDensity(benchmark::State& state) {
    const auto set = preset_set(40, 20);
    for (auto _ : state) benchmark::DoNotOptimize(reduced_spin_density(set));
}
BENCHMARK(BM_ReducedSpinDensity);

void BM_HermitianEigensystem(benchmark::State& state) {
    const CMatrix rho = reduced_spin_density(preset_set(20, 20)).rho;
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigensystem(rho));
}
BENCHMARK(BM_HermitianEigensystem);

void BM_OracleFullStep(benchmark::State& state) {
    const int L = 3;
    const auto model = WalkModel::conditional_hop(0.1, Boundary::Open);
    const CMatrix u = oracle::dense_step_matrix(L, model);
    auto dense = oracle::assemble_full_state(IdenticalEnsemble(preset_configuration(Preset::IV, L), 0.0), LatticeSpec(L, Boundary::Open));
    for (auto _ : state) {
        dense = oracle::full_step(dense, u);
        benchmark::DoNotOptimize(dense);
    }
}
BENCHMARK(BM_OracleFullStep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
