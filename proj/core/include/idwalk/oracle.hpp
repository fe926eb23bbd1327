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

#pragma once

#include <cstddef>
#include <vector>

#include "idwalk/correlations.hpp"
#include "idwalk/ensemble.hpp"
#include "idwalk/matrix.hpp"
#include "idwalk/spinspace.hpp"
#include "idwalk/walk.hpp"

/// Brute-force reference path: the full (2L²)^N state, evolved with the dense
/// single-particle unitary applied slot by slot. Shares nothing with the
/// factorized engine except the coin definition; it is meant to be slow and
/// obviously right.
namespace idwalk::oracle {

inline constexpr std::size_t kMaxAmplitudes = 2'000'000;

/// exp(A) by scaling and squaring of a Taylor series.
CMatrix expm(const CMatrix& a);

/// Dense d×d hopping Hamiltonian t·Σ(|r+ê⟩⟨r| + h.c.) on the L² sites.
CMatrix hopping_hamiltonian(int L, double t, Boundary boundary, Axis axis);

/// Dense single-particle step matrix on the 2L² basis, built entry by entry
/// from the model definition.
CMatrix dense_step_matrix(int L, const WalkModel& model);

struct DenseState {
    LatticeSpec spec;
    int particles = 0;
    std::vector<cplx> amplitudes;  ///< slot 0 is the most significant index

    std::size_t dim() const noexcept { return spec.dim(); }
    double norm_squared() const;
};

/// (1/√N!)·Σ_P e^{iφ_P}·|S0[P(1)], …, S0[P(N)]⟩. Throws CapabilityError when
/// (2L²)^N exceeds kMaxAmplitudes.
DenseState assemble_full_state(const IdenticalEnsemble& ensemble, const LatticeSpec& spec);

/// Rebuild the dense state from already-propagated single-particle fields.
DenseState assemble_from_fields(const PropagatedSet& set);

/// U^{⊗N}|Ψ⟩ with `step_matrix` applied to every slot.
DenseState full_step(const DenseState& state, const CMatrix& step_matrix);

/// Convenience: builds the step matrix for `model` first.
DenseState full_step(const DenseState& state, const WalkModel& model);

/// ⟨Ψ|P̂_{i,a}·P̂_{j,b}|Ψ⟩ for slots i ≠ j (default the first two).
double full_two_point(const DenseState& state, const BasisLabel& a, const BasisLabel& b,
                      int slot_i = 0, int slot_j = 1);

/// ⟨Ψ|P̂_{i,a}|Ψ⟩.
double full_single_density(const DenseState& state, const BasisLabel& a, int slot = 0);

/// Spin-summed joint distribution of slots (0, 1).
JointDistribution full_joint_distribution(const DenseState& state);

/// Coincidence and Δ12 summed directly over the materialized distribution.
JointObservables full_joint_observables(const DenseState& state);

/// Trace over every position index, keeping the N spins.
SpinDensity full_partial_trace(const DenseState& state);

cplx overlap(const DenseState& a, const DenseState& b);

/// ⟨Ψ0|Ûⁿ|Ψ0⟩ for the same-site Up/Down pair, by explicit two-particle
/// propagation on the periodic lattice.
cplx dense_return_amplitude(int x0, int y0, double phi, int n, int L, double t,
                            double theta = kDefaultCoinAngle);

}  // namespace idwalk::oracle
