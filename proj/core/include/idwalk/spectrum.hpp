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

#include "idwalk/lattice.hpp"
#include "idwalk/matrix.hpp"
#include "idwalk/walk.hpp"

namespace idwalk {

enum class Branch { Plus, Minus };

/// Eigenpair of the conditional-hop step on a periodic lattice, restricted to
/// the 2×2 block of momentum (kx, ky).
struct PbcEigenpair {
    int nx = 0;
    int ny = 0;
    double kx = 0.0;
    double ky = 0.0;
    Branch branch = Branch::Plus;
    cplx eigenvalue;
    double phase = 0.0;  ///< arg(eigenvalue)
    cplx u;              ///< Up component
    cplx v;              ///< Down component
};

/// The 2×2 block U_k = [[e^{−iε_x}cosθ, e^{−iε_x}sinθ], [e^{−iε_y}sinθ, −e^{−iε_y}cosθ]]
/// with ε = 2t·cos k.
CMatrix pbc_block(double kx, double ky, double t, double theta);

/// All 2L² eigenpairs, ordered by (ny, nx, branch).
/// λ± = τ ± √(e^{−i(ε_x+ε_y)} + τ²), τ = cosθ·(e^{−iε_x} − e^{−iε_y})/2, principal root.
std::vector<PbcEigenpair> pbc_spectrum(int L, double t, double theta = kDefaultCoinAngle);

/// Real-space eigenvector (1/L)·e^{ik·r}·(u|↑⟩ + v|↓⟩) on a periodic lattice.
SpinorField pbc_eigenvector_field(int L, const PbcEigenpair& pair);

/// ⟨Ψ0|Ûⁿ|Ψ0⟩ for Ψ0 = (|r0↑⟩|r0↓⟩ + e^{iφ}|r0↓⟩|r0↑⟩)/√2 under the periodic
/// conditional-hop walk, evaluated from the momentum-space spectrum.
cplx return_amplitude(int x0, int y0, double phi, int n, int L, double t,
                      double theta = kDefaultCoinAngle);

}  // namespace idwalk
