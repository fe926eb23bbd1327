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
#include <cstddef>
#include <span>
#include <vector>

namespace idwalk {

using cplx = std::complex<double>;

enum class Boundary { Open, Periodic };

enum class Spin : int { Up = 0, Down = 1 };

/// Square L×L lattice with a spin-1/2 internal degree of freedom per site.
struct LatticeSpec {
    int L = 1;
    Boundary boundary = Boundary::Open;

    LatticeSpec() = default;
    LatticeSpec(int side, Boundary b);

    /// Number of single-particle basis states, 2·L².
    std::size_t dim() const noexcept { return 2 * sites(); }
    std::size_t sites() const noexcept {
        return static_cast<std::size_t>(L) * static_cast<std::size_t>(L);
    }

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

struct BasisLabel {
    int x = 0;
    int y = 0;
    Spin spin = Spin::Up;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Site-major, spin-minor ordinal: ((y·L + x)·2 + σ). Throws BoundsError.
std::size_t ordinal(const LatticeSpec& spec, const BasisLabel& label);

/// Inverse of `ordinal`.
BasisLabel label_of(const LatticeSpec& spec, std::size_t index);

/// Site index y·L + x.
inline std::size_t site_index(const LatticeSpec& spec, int x, int y) {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(spec.L) +
           static_cast<std::size_t>(x);
}

/// Complex amplitudes over the 2L² basis of one particle.
class SpinorField {
public:
    SpinorField() = default;
    /// Zero field.
    explicit SpinorField(const LatticeSpec& spec);
    SpinorField(const LatticeSpec& spec, std::vector<cplx> amplitudes);

    const LatticeSpec& spec() const noexcept { return spec_; }
    std::size_t size() const noexcept { return amps_.size(); }

    std::span<const cplx> amplitudes() const noexcept { return amps_; }
    std::span<cplx> amplitudes() noexcept { return amps_; }

    cplx operator[](std::size_t i) const { return amps_[i]; }
    cplx& operator[](std::size_t i) { return amps_[i]; }
    cplx at(const BasisLabel& label) const { return amps_[ordinal(spec_, label)]; }

    double norm_squared() const noexcept;
    double norm() const noexcept;

    SpinorField& operator*=(cplx s);

private:
    LatticeSpec spec_;
    std::vector<cplx> amps_;
};

SpinorField operator*(cplx s, SpinorField f);

/// Unit vector at `label`.
SpinorField basis_state(const LatticeSpec& spec, const BasisLabel& label);

/// ⟨a|b⟩, conjugate-linear in `a`. Throws DimensionError on lattice mismatch.
cplx inner(const SpinorField& a, const SpinorField& b);

}  // namespace idwalk
