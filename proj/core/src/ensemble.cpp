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

#include "idwalk/ensemble.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <string>

#include "idwalk/error.hpp"

namespace idwalk {

IdenticalEnsemble::IdenticalEnsemble(std::vector<BasisLabel> labels, double phi)
    : labels_(std::move(labels)), phi_(phi) {
    if (labels_.size() < 2) {
        throw ValidationError("an identical-particle ensemble needs N >= 2 states");
    }
    if (!(phi_ >= 0.0 && phi_ <= std::numbers::pi + 1e-15)) {
        throw ValidationError("exchange phase must lie in [0, pi], got " + std::to_string(phi_));
    }
    for (std::size_t a = 0; a < labels_.size(); ++a)
        for (std::size_t b = a + 1; b < labels_.size(); ++b)
            if (labels_[a] == labels_[b]) {
                throw ValidationError("S0 entries " + std::to_string(a) + " and " +
                                      std::to_string(b) + " coincide; states must be distinct");
            }
}

void IdenticalEnsemble::check_fits(const LatticeSpec& spec) const {
    for (const BasisLabel& l : labels_) (void)ordinal(spec, l);
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        out.push_back(Permutation{p, inversions % 2 == 1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::complex<double> permutation_phase(const Permutation& p, double phi) {
    return p.odd ? std::polar(1.0, phi) : std::complex<double>(1.0);
}

}  // namespace idwalk
