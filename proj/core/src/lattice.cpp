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

#include "idwalk/lattice.hpp"

#include <cmath>
#include <string>

#include "idwalk/error.hpp"

namespace idwalk {

LatticeSpec::LatticeSpec(int side, Boundary b) : L(side), boundary(b) {
    if (side < 1) {
        throw ValidationError("lattice side L must be >= 1, got " + std::to_string(side));
    }
}

std::size_t ordinal(const LatticeSpec& spec, const BasisLabel& label) {
    if (label.x < 0 || label.x >= spec.L || label.y < 0 || label.y >= spec.L) {
        throw BoundsError("basis label (" + std::to_string(label.x) + ", " +
                          std::to_string(label.y) + ") outside an L=" +
                          std::to_string(spec.L) + " lattice");
    }
    return site_index(spec, label.x, label.y) * 2 + static_cast<std::size_t>(label.spin);
}

BasisLabel label_of(const LatticeSpec& spec, std::size_t index) {
    if (index >= spec.dim()) {
        throw BoundsError("ordinal " + std::to_string(index) + " outside [0, " +
                          std::to_string(spec.dim()) + ")");
    }
    const std::size_t site = index / 2;
    const auto L = static_cast<std::size_t>(spec.L);
    return BasisLabel{static_cast<int>(site % L), static_cast<int>(site / L),
                      index % 2 == 0 ? Spin::Up : Spin::Down};
}

SpinorField::SpinorField(const LatticeSpec& spec) : spec_(spec), amps_(spec.dim()) {}

SpinorField::SpinorField(const LatticeSpec& spec, std::vector<cplx> amplitudes)
    : spec_(spec), amps_(std::move(amplitudes)) {
    if (amps_.size() != spec_.dim()) {
        throw DimensionError("field has " + std::to_string(amps_.size()) +
                             " amplitudes, lattice needs " + std::to_string(spec_.dim()));
    }
}

double SpinorField::norm_squared() const noexcept {
    double s = 0.0;
    for (const cplx& a : amps_) s += std::norm(a);
    return s;
}

double SpinorField::norm() const noexcept { return std::sqrt(norm_squared()); }

SpinorField& SpinorField::operator*=(cplx s) {
    for (cplx& a : amps_) a *= s;
    return *this;
}

SpinorField operator*(cplx s, SpinorField f) {
    f *= s;
    return f;
}

SpinorField basis_state(const LatticeSpec& spec, const BasisLabel& label) {
    SpinorField f(spec);
    f[ordinal(spec, label)] = 1.0;
    return f;
}

cplx inner(const SpinorField& a, const SpinorField& b) {
    if (!(a.spec() == b.spec()) || a.size() != b.size()) {
        throw DimensionError("inner product of fields on different lattices");
    }
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

}  // namespace idwalk
