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

#include <array>
#include <vector>

#include "idwalk/matrix.hpp"

namespace idwalk {

/// Two dichotomic single-qubit observables per particle. The first `m`
/// particles (in S0 / tensor-factor order) carry the A set, the rest the B set.
struct BellSettings {
    int particles = 0;
    int m = 0;
    std::vector<std::array<CMatrix, 2>> operators;
};

/// A = {σ^z, σ^x} on the first m particles,
/// B = {−(σ^x + σ^z)/√2, (σ^x − σ^z)/√2} on the others.
/// Throws ValidationError unless 1 <= m < N.
BellSettings default_settings(int particles, int m);

/// E(k_1..k_N) for the 2^N setting tuples. Entry index: bit (N−1−j) set
/// means particle j uses its second operator.
struct CorrelationTensor {
    int particles = 0;
    std::vector<double> E;
};

/// E = Tr(ρ·⊗_j A_j(k_j)). Throws DimensionError if ρ is not 2^N square.
CorrelationTensor correlation_tensor(const CMatrix& rho, const BellSettings& settings);

/// ζ = 2^{−N}·Σ_s |Σ_k Π_j s_j^{k_j−1}·E(k)|. Local-realistic data satisfy ζ ≤ 1.
double zeta(const CorrelationTensor& tensor);

}  // namespace idwalk
