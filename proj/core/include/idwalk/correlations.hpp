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

#include <span>
#include <vector>

#include "idwalk/lattice.hpp"
#include "idwalk/walk.hpp"

namespace idwalk {

/// Weights of the reduced pair sum for the slot pair (1, 2):
///   C = Σ_{l≠k} [ direct·n_l(1)·n_k(2) + exchange(l,k)·M_kl(1)·M_lk(2) ]
/// with direct = f_N = 1/(N(N−1)) and exchange(l,k) obtained by summing the
/// phase e^{i(φ_P − φ_P')} over every permutation P with P(1)=l, P(2)=k
/// (P' = P composed with the 1↔2 swap), divided by N!. For N = 2 this is
/// f_N·e^{∓iφ}; for N ≥ 4 the parities of the spectator slots cancel and it
/// reduces to f_N·cos φ.
class PairWeights {
public:
    PairWeights(int n_particles, double phi);

    int size() const noexcept { return n_; }
    double direct() const noexcept { return direct_; }
    /// Throws ValidationError for l = k or out-of-range indices.
    cplx exchange(int l, int k) const;

private:
    int n_;
    double direct_;
    std::vector<cplx> exchange_;
};

/// w_{l k l' k'}: direct weight for (l',k') = (l,k), exchange weight for
/// (l',k') = (k,l), 0 otherwise. Throws ValidationError when l = k.
cplx pair_weight(int n_particles, double phi, int l, int k, int lp, int kp);

/// ⟨Ψ(n)| P̂_{1,a} P̂_{2,b} |Ψ(n)⟩ from the factorized fields. Throws
/// ValidationError if the set is not Gram-orthonormal (1e-10).
double two_point_correlation(const PropagatedSet& set, const BasisLabel& a, const BasisLabel& b);

/// Single-slot density ⟨Ψ|P̂_{1,a}|Ψ⟩ = (1/N)·Σ_l |ψ_l(a)|².
double single_particle_density(const PropagatedSet& set, const BasisLabel& a);

/// C − C^F: direct weight 1/(N³−N²) on l≠k, the l=k part of C^F subtracted.
double connected_correlation(const PropagatedSet& set, const BasisLabel& a, const BasisLabel& b);

/// Product-state (distinguishable) correlation |ψ1(a)|²·|ψ2(b)|².
double distinguishable_correlation(const SpinorField& first, const SpinorField& second,
                                   const BasisLabel& a, const BasisLabel& b);

/// Spin-summed joint distribution P(r1, r2), r = y·L + x, row-major over r1.
struct JointDistribution {
    int L = 0;
    int n = 0;
    std::vector<double> P;

    std::size_t sites() const noexcept { return static_cast<std::size_t>(L) * L; }
    double operator()(std::size_t r1, std::size_t r2) const { return P[r1 * sites() + r2]; }
    double total() const;
    double min_entry() const;
};

/// Materializes all L⁴ entries.
JointDistribution joint_distribution(const PropagatedSet& set);

/// Observables of the joint distribution evaluated without materializing it.
struct JointObservables {
    double coincidence = 0.0;  ///< Σ_r P(r, r)
    double delta12 = 0.0;      ///< Σ |r1 − r2|·P(r1, r2)
    double total = 0.0;        ///< Σ P(r1, r2)
};

JointObservables joint_observables(const PropagatedSet& set);

double coincidence_probability(const PropagatedSet& set);
double mean_interparticle_distance(const PropagatedSet& set);

struct DistanceSample {
    int n = 0;
    double tau = 0.0;
    double delta12 = 0.0;
};

using DistanceSeries = std::vector<DistanceSample>;

struct VelocityFit {
    double velocity = 0.0;
    double intercept = 0.0;
    double fit_error = 0.0;  ///< mean absolute residual
    int samples = 0;
};

/// Least-squares slope of Δ12 against τ over samples with τ in [tau_lo, tau_hi].
/// Throws ValidationError with fewer than two samples in the window.
VelocityFit spread_velocity(std::span<const DistanceSample> series, double tau_lo, double tau_hi);

/// Throws ValidationError if the set's Gram matrix deviates from identity by
/// more than `tolerance`.
void require_orthonormal(const PropagatedSet& set, double tolerance = 1e-10);

}  // namespace idwalk
