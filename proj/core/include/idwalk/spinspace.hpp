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

#include <vector>

#include "idwalk/matrix.hpp"
#include "idwalk/walk.hpp"

namespace idwalk {

/// Reduced state of the N spins after tracing out every position.
/// Tensor-factor order follows S0; particle 0 is the most significant bit of
/// the 2^N basis index and Up is bit value 0.
struct SpinDensity {
    CMatrix rho;
    int particles = 0;
    int step = 0;
};

/// Hermitian eigendecomposition, eigenvalues in descending order and the
/// matching orthonormal eigenvectors as columns of `vectors`.
struct EigenSystem {
    std::vector<double> values;
    CMatrix vectors;
    int sweeps = 0;
};

/// Cyclic complex Jacobi. Throws ValidationError if `m` is not Hermitian
/// within 1e-10, NumericError if 100 sweeps do not bring the off-diagonal
/// norm to 1e-13·max(1, ‖m‖_F).
EigenSystem hermitian_eigensystem(const CMatrix& m);

/// T^{ab}[σ, σ'] = Σ_r ψ_a(r, σ)·conj(ψ_b(r, σ')).
CMatrix spin_overlap(const PropagatedSet& set, int a, int b);

/// ρ_C = (1/N!)·Σ_{p,p'} e^{i(φ_p − φ_p')}·⊗_j T^{p(j), p'(j)}. Throws
/// CapabilityError for N > 6.
SpinDensity reduced_spin_density(const PropagatedSet& set);

/// Σ_{j<k} σ^z_j σ^z_k on N spins (diagonal).
CMatrix ising_generator(int particles);

/// 2·Σ_{k,l} (λ_k − λ_l)²/(λ_k + λ_l)·|⟨k|O|l⟩|², pairs with λ_k + λ_l ≤ 1e-12
/// skipped, eigenvalues clamped at 0.
double qfi(const CMatrix& rho, const CMatrix& generator);
double qfi(const EigenSystem& rho_eigen, const CMatrix& generator);

/// −Σ λ·log₂λ over eigenvalues above 1e-14 (bits).
double von_neumann_entropy(const CMatrix& rho);
double von_neumann_entropy(const EigenSystem& rho_eigen);

/// Tr ρ² as the squared Frobenius norm.
double purity(const CMatrix& rho);

}  // namespace idwalk
