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

#include <numbers>
#include <vector>

#include "idwalk/ensemble.hpp"
#include "idwalk/lattice.hpp"
#include "idwalk/matrix.hpp"

namespace idwalk {

enum class WalkKind { ConditionalHop, SplitStep };

inline constexpr double kDefaultCoinAngle = std::numbers::pi / 4;

/// Evolution rule for one step of a single walker.
///
/// ConditionalHop: U = U_S·U_C, where the coin U_C acts on spin and the
/// conditional shift U_S propagates the Up sector with exp(−iH∥) (hopping
/// along x) and the Down sector with exp(−iH⊥) (hopping along y).
///
/// SplitStep: U = U_y·U_C·U_x·U_C with unit spin-dependent translations on a
/// torus. Only defined with periodic boundaries.
struct WalkModel {
    WalkKind kind = WalkKind::ConditionalHop;
    double t = 0.05;
    double theta = kDefaultCoinAngle;
    Boundary boundary = Boundary::Open;

    static WalkModel conditional_hop(double t, Boundary boundary = Boundary::Open,
                                     double theta = kDefaultCoinAngle);
    static WalkModel split_step(double theta = kDefaultCoinAngle);

    /// Throws ValidationError (t < 0, θ ∉ [0, 2π)) or ConfigurationError
    /// (SplitStep with open boundary).
    void validate() const;

    /// Multiplier turning a step count into rescaled time τ: t for
    /// ConditionalHop, 1 for SplitStep.
    double time_scale() const noexcept { return kind == WalkKind::SplitStep ? 1.0 : t; }

    friend bool operator==(const WalkModel&, const WalkModel&) = default;
};

/// K = exp(−i·h) for the 1D nearest-neighbour chain h = t·Σ(|x+1⟩⟨x| + h.c.),
/// built from the closed-form chain spectrum.
struct ChainPropagator {
    int L = 1;
    double t = 0.0;
    Boundary boundary = Boundary::Open;
    CMatrix K;
};

ChainPropagator build_chain_propagator(int L, double t, Boundary boundary);

/// Per-site coin (a↑, a↓) → (cosθ·a↑ + sinθ·a↓, sinθ·a↑ − cosθ·a↓).
SpinorField apply_coin(const SpinorField& field, double theta);

/// Up sector propagated by `kx` along each row, Down sector by `ky` along each
/// column. Throws DimensionError if the propagators do not match the field.
SpinorField apply_conditional_shift(const SpinorField& field, const ChainPropagator& kx,
                                    const ChainPropagator& ky);

enum class Axis { X, Y };

/// Up amplitudes move +1 along `axis`, Down amplitudes −1 (mod L).
/// Throws ConfigurationError on an open lattice.
SpinorField split_shift(const SpinorField& field, Axis axis);

/// One walk step with the propagators cached, for repeated application.
class StepOperator {
public:
    StepOperator(int L, const WalkModel& model);

    const WalkModel& model() const noexcept { return model_; }
    const LatticeSpec& spec() const noexcept { return spec_; }

    SpinorField apply(const SpinorField& field) const;
    void apply_in_place(SpinorField& field) const;

private:
    void coin_in_place(SpinorField& f) const;
    void conditional_shift_in_place(SpinorField& f) const;
    void split_shift_in_place(SpinorField& f, Axis axis) const;

    LatticeSpec spec_;
    WalkModel model_;
    ChainPropagator chain_;  // shared by both axes: H∥ and H⊥ have the same 1D factor
    double cos_theta_;
    double sin_theta_;
};

/// Single step; builds the propagators on each call.
SpinorField step(const SpinorField& field, const WalkModel& model);

/// The factorized representation of the N-particle state after `n` steps:
/// fields[j] = Uⁿ|S0[j]⟩.
struct PropagatedSet {
    std::vector<SpinorField> fields;
    int n = 0;
    WalkModel model;
    IdenticalEnsemble ensemble;

    int size() const noexcept { return static_cast<int>(fields.size()); }
    const LatticeSpec& spec() const { return fields.front().spec(); }
    double tau() const noexcept { return n * model.time_scale(); }
};

/// Uⁿ applied to every S0 state. Throws on invalid model or labels.
PropagatedSet propagate_set(const IdenticalEnsemble& ensemble, int L, const WalkModel& model,
                            int n);

/// One more step of every field.
void advance(PropagatedSet& set, const StepOperator& op);

/// max_ab |⟨ψ_a|ψ_b⟩ − δ_ab|.
double gram_defect(const PropagatedSet& set);

/// Probability on the outermost ring of sites, averaged over the N fields
/// (the single-particle density summed over edge sites).
double edge_probability(const PropagatedSet& set);

}  // namespace idwalk
