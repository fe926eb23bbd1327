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

#include <complex>
#include <vector>

#include "idwalk/lattice.hpp"

namespace idwalk {

/// Ordered list S0 of N pairwise-distinct basis states plus the exchange
/// phase φ ∈ [0, π] picked up by odd permutations (φ = 0 bosons, φ = π
/// fermions). Order matters: it fixes the tensor-factor order of every
/// derived quantity.
class IdenticalEnsemble {
public:
    /// Throws ValidationError for N < 2, duplicate labels or φ ∉ [0, π].
    IdenticalEnsemble(std::vector<BasisLabel> labels, double phi);

    const std::vector<BasisLabel>& labels() const noexcept { return labels_; }
    double phi() const noexcept { return phi_; }
    int size() const noexcept { return static_cast<int>(labels_.size()); }

    /// Same S0 with a different exchange phase.
    IdenticalEnsemble with_phi(double phi) const { return {labels_, phi}; }

    /// Throws BoundsError if some label does not fit `spec`.
    void check_fits(const LatticeSpec& spec) const;

private:
    std::vector<BasisLabel> labels_;
    double phi_;
};

/// One element of S_N, stored as the image list (p[0], ..., p[N-1]).
struct Permutation {
    std::vector<int> image;
    bool odd = false;
};

/// All N! permutations in lexicographic order, with parity.
std::vector<Permutation> all_permutations(int n);

/// e^{iφ_P}: 1 for even P, e^{iφ} for odd P.
std::complex<double> permutation_phase(const Permutation& p, double phi);

}  // namespace idwalk
