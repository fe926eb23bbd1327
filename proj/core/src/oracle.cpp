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

#include "idwalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "idwalk/error.hpp"

namespace idwalk::oracle {

namespace {

double one_norm(const CMatrix& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

std::size_t checked_power(std::size_t base, int exponent) {
    std::size_t r = 1;
    for (int i = 0; i < exponent; ++i) {
        r *= base;
        if (r > kMaxAmplitudes) {
            throw CapabilityError("dense oracle limited to " + std::to_string(kMaxAmplitudes) +
                                  " amplitudes");
        }
    }
    return r;
}

std::vector<std::size_t> slot_ordinals(std::size_t index, std::size_t dim, int particles) {
    std::vector<std::size_t> o(particles);
    for (int j = particles - 1; j >= 0; --j) {
        o[j] = index % dim;
        index /= dim;
    }
    return o;
}

std::size_t slot_stride(std::size_t dim, int particles, int slot) {
    std::size_t s = 1;
    for (int j = slot + 1; j < particles; ++j) s *= dim;
    return s;
}

CMatrix coin_matrix(std::size_t sites, double theta) {
    CMatrix c(2 * sites, 2 * sites);
    const double ct = std::cos(theta), st = std::sin(theta);
    for (std::size_t r = 0; r < sites; ++r) {
        c(2 * r, 2 * r) = ct;
        c(2 * r, 2 * r + 1) = st;
        c(2 * r + 1, 2 * r) = st;
        c(2 * r + 1, 2 * r + 1) = -ct;
    }
    return c;
}

}  // namespace

CMatrix expm(const CMatrix& a) {
    const std::size_t n = a.rows();
    int squarings = 0;
    double norm = one_norm(a);
    while (norm > 0.25) {
        norm /= 2;
        ++squarings;
    }
    const CMatrix b = cplx(std::ldexp(1.0, -squarings)) * a;
    CMatrix result = CMatrix::identity(n);
    CMatrix term = CMatrix::identity(n);
    for (int k = 1; k <= 40; ++k) {
        term = b * term;
        term *= cplx(1.0 / k);
        result += term;
        if (term.frobenius_norm() < 1e-20) break;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

CMatrix hopping_hamiltonian(int L, double t, Boundary boundary, Axis axis) {
    const std::size_t S = static_cast<std::size_t>(L) * L;
    CMatrix h(S, S);
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) {
            int x2 = x, y2 = y;
            (axis == Axis::X ? x2 : y2) += 1;
            if (x2 == L || y2 == L) {
                if (boundary == Boundary::Open) continue;
                x2 %= L;
                y2 %= L;
            }
            const std::size_t from = static_cast<std::size_t>(y) * L + x;
            const std::size_t to = static_cast<std::size_t>(y2) * L + x2;
            h(to, from) += t;
            h(from, to) += t;
        }
    return h;
}

CMatrix dense_step_matrix(int L, const WalkModel& model) {
    model.validate();
    const std::size_t S = static_cast<std::size_t>(L) * L;
    const std::size_t d = 2 * S;
    const CMatrix coin = coin_matrix(S, model.theta);
    if (model.kind == WalkKind::ConditionalHop) {
        const CMatrix kx = expm(cplx(0, -1) * hopping_hamiltonian(L, model.t, model.boundary, Axis::X));
        const CMatrix ky = expm(cplx(0, -1) * hopping_hamiltonian(L, model.t, model.boundary, Axis::Y));
        CMatrix shift(d, d);
        for (std::size_t r = 0; r < S; ++r)
            for (std::size_t rp = 0; rp < S; ++rp) {
                shift(2 * r, 2 * rp) = kx(r, rp);
                shift(2 * r + 1, 2 * rp + 1) = ky(r, rp);
            }
        return shift * coin;
    }
    // |x+s, y, σ_s⟩⟨x, y, σ_s| with σ_{+1} = Up, σ_{−1} = Down, on the torus.
    const auto translation = [&](Axis axis) {
        CMatrix u(d, d);
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x)
                for (int s : {+1, -1}) {
                    const int sigma = s == +1 ? 0 : 1;
                    const int x2 = axis == Axis::X ? (x + s + L) % L : x;
                    const int y2 = axis == Axis::Y ? (y + s + L) % L : y;
                    u((static_cast<std::size_t>(y2) * L + x2) * 2 + sigma,
                      (static_cast<std::size_t>(y) * L + x) * 2 + sigma) = 1.0;
                }
        return u;
    };
    return translation(Axis::Y) * coin * translation(Axis::X) * coin;
}

double DenseState::norm_squared() const {
    double s = 0.0;
    for (const cplx& a : amplitudes) s += std::norm(a);
    return s;
}

DenseState assemble_full_state(const IdenticalEnsemble& ensemble, const LatticeSpec& spec) {
    ensemble.check_fits(spec);
    const int N = ensemble.size();
    const std::size_t d = spec.dim();
    DenseState st{spec, N, std::vector<cplx>(checked_power(d, N))};
    const auto perms = all_permutations(N);
    const double amp = 1.0 / std::sqrt(static_cast<double>(perms.size()));
    for (const Permutation& p : perms) {
        std::size_t idx = 0;
        for (int j = 0; j < N; ++j) idx = idx * d + ordinal(spec, ensemble.labels()[p.image[j]]);
        st.amplitudes[idx] += amp * permutation_phase(p, ensemble.phi());
    }
    return st;
}

DenseState assemble_from_fields(const PropagatedSet& set) {
    const int N = set.size();
    const LatticeSpec& spec = set.spec();
    const std::size_t d = spec.dim();
    DenseState st{spec, N, std::vector<cplx>(checked_power(d, N))};
    const auto perms = all_permutations(N);
    const double amp = 1.0 / std::sqrt(static_cast<double>(perms.size()));
    for (const Permutation& p : perms) {
        const cplx c = amp * permutation_phase(p, set.ensemble.phi());
        for (std::size_t idx = 0; idx < st.amplitudes.size(); ++idx) {
            const auto o = slot_ordinals(idx, d, N);
            cplx prod = c;
            for (int j = 0; j < N && prod != cplx(0.0); ++j) prod *= set.fields[p.image[j]][o[j]];
            st.amplitudes[idx] += prod;
        }
    }
    return st;
}

DenseState full_step(const DenseState& state, const CMatrix& u) {
    const std::size_t d = state.dim();
    if (u.rows() != d || u.cols() != d) throw DimensionError("step matrix dimension mismatch");
    DenseState cur = state;
    std::vector<cplx> next(cur.amplitudes.size());
    for (int slot = 0; slot < state.particles; ++slot) {
        const std::size_t inner = slot_stride(d, state.particles, slot);
        const std::size_t outer = cur.amplitudes.size() / (inner * d);
        std::fill(next.begin(), next.end(), cplx(0.0));
        for (std::size_t o = 0; o < outer; ++o) {
            const cplx* in = &cur.amplitudes[o * d * inner];
            cplx* out = &next[o * d * inner];
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = 0; k < d; ++k) {
                    const cplx uik = u(i, k);
                    if (uik == cplx(0.0)) continue;
                    const cplx* src = in + k * inner;
                    cplx* dst = out + i * inner;
                    for (std::size_t r = 0; r < inner; ++r) dst[r] += uik * src[r];
                }
        }
        std::swap(cur.amplitudes, next);
    }
    return cur;
}

DenseState full_step(const DenseState& state, const WalkModel& model) {
    return full_step(state, dense_step_matrix(state.spec.L, model));
}

double full_two_point(const DenseState& state, const BasisLabel& a, const BasisLabel& b,
                      int slot_i, int slot_j) {
    if (slot_i == slot_j || slot_i < 0 || slot_j < 0 || slot_i >= state.particles ||
        slot_j >= state.particles) {
        throw ValidationError("two-point projector needs two distinct valid slots");
    }
    const std::size_t d = state.dim();
    const std::size_t oa = ordinal(state.spec, a);
    const std::size_t ob = ordinal(state.spec, b);
    const std::size_t si = slot_stride(d, state.particles, slot_i);
    const std::size_t sj = slot_stride(d, state.particles, slot_j);
    double c = 0.0;
    for (std::size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
        if ((idx / si) % d == oa && (idx / sj) % d == ob) c += std::norm(state.amplitudes[idx]);
    }
    return c;
}

double full_single_density(const DenseState& state, const BasisLabel& a, int slot) {
    const std::size_t d = state.dim();
    const std::size_t oa = ordinal(state.spec, a);
    const std::size_t s = slot_stride(d, state.particles, slot);
    double c = 0.0;
    for (std::size_t idx = 0; idx < state.amplitudes.size(); ++idx)
        if ((idx / s) % d == oa) c += std::norm(state.amplitudes[idx]);
    return c;
}

JointDistribution full_joint_distribution(const DenseState& state) {
    const std::size_t d = state.dim();
    const std::size_t S = state.spec.sites();
    JointDistribution jd{state.spec.L, 0, std::vector<double>(S * S, 0.0)};
    const std::size_t s0 = slot_stride(d, state.particles, 0);
    const std::size_t s1 = slot_stride(d, state.particles, 1);
    for (std::size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
        const std::size_t r1 = ((idx / s0) % d) / 2;
        const std::size_t r2 = ((idx / s1) % d) / 2;
        jd.P[r1 * S + r2] += std::norm(state.amplitudes[idx]);
    }
    return jd;
}

JointObservables full_joint_observables(const DenseState& state) {
    const JointDistribution jd = full_joint_distribution(state);
    const int L = jd.L;
    JointObservables out;
    for (std::size_t r1 = 0; r1 < jd.sites(); ++r1)
        for (std::size_t r2 = 0; r2 < jd.sites(); ++r2) {
            const double p = jd(r1, r2);
            const double dx = double(r1 % L) - double(r2 % L);
            const double dy = double(r1 / L) - double(r2 / L);
            out.total += p;
            out.delta12 += std::sqrt(dx * dx + dy * dy) * p;
            if (r1 == r2) out.coincidence += p;
        }
    return out;
}

SpinDensity full_partial_trace(const DenseState& state) {
    const int N = state.particles;
    const std::size_t d = state.dim();
    const std::size_t S = state.spec.sites();
    const std::size_t spins = std::size_t{1} << N;
    std::size_t positions = 1;
    for (int j = 0; j < N; ++j) positions *= S;
    // Regroup amplitudes as [position tuple][spin tuple].
    std::vector<cplx> grouped(positions * spins);
    for (std::size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
        const auto o = slot_ordinals(idx, d, N);
        std::size_t pos = 0, spin = 0;
        for (int j = 0; j < N; ++j) {
            pos = pos * S + o[j] / 2;
            spin = spin * 2 + o[j] % 2;
        }
        grouped[pos * spins + spin] = state.amplitudes[idx];
    }
    SpinDensity out{CMatrix(spins, spins), N, 0};
    for (std::size_t p = 0; p < positions; ++p) {
        const cplx* v = &grouped[p * spins];
        for (std::size_t s = 0; s < spins; ++s) {
            if (v[s] == cplx(0.0)) continue;
            for (std::size_t sp = 0; sp < spins; ++sp) out.rho(s, sp) += v[s] * std::conj(v[sp]);
        }
    }
    return out;
}

cplx overlap(const DenseState& a, const DenseState& b) {
    if (a.amplitudes.size() != b.amplitudes.size()) throw DimensionError("dense state size mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return s;
}

cplx dense_return_amplitude(int x0, int y0, double phi, int n, int L, double t, double theta) {
    const LatticeSpec spec(L, Boundary::Periodic);
    const IdenticalEnsemble pair({{x0, y0, Spin::Up}, {x0, y0, Spin::Down}}, phi);
    const DenseState initial = assemble_full_state(pair, spec);
    const CMatrix u = dense_step_matrix(L, WalkModel::conditional_hop(t, Boundary::Periodic, theta));
    DenseState cur = initial;
    for (int i = 0; i < n; ++i) cur = full_step(cur, u);
    return overlap(initial, cur);
}

}  // namespace idwalk::oracle
