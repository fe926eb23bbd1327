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

#include "idwalk/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

#include "idwalk/error.hpp"

namespace idwalk {

CMatrix pbc_block(double kx, double ky, double t, double theta) {
    const cplx ex = std::polar(1.0, -2.0 * t * std::cos(kx));
    const cplx ey = std::polar(1.0, -2.0 * t * std::cos(ky));
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return CMatrix::from_rows(2, 2, {ex * c, ex * s, ey * s, -ey * c});
}

namespace {

// Null vector of (B − λ) for a 2×2 B, used when the closed form degenerates
// (sinθ = 0).
std::pair<cplx, cplx> fallback_eigenvector(const CMatrix& b, cplx lambda) {
    cplx u, v;
    if (std::abs(b(0, 1)) > 1e-12) {
        u = b(0, 1);
        v = lambda - b(0, 0);
    } else if (std::abs(b(1, 0)) > 1e-12) {
        u = lambda - b(1, 1);
        v = b(1, 0);
    } else if (std::abs(lambda - b(0, 0)) <= std::abs(lambda - b(1, 1))) {
        u = 1.0;
        v = 0.0;
    } else {
        u = 0.0;
        v = 1.0;
    }
    const double n = std::sqrt(std::norm(u) + std::norm(v));
    return {u / n, v / n};
}

cplx integer_power(cplx z, int n) {
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

}  // namespace

std::vector<PbcEigenpair> pbc_spectrum(int L, double t, double theta) {
    if (L < 1) throw ValidationError("lattice side must be >= 1");
    const double pi = std::numbers::pi;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    std::vector<PbcEigenpair> out;
    out.reserve(2 * static_cast<std::size_t>(L) * L);
    for (int ny = 0; ny < L; ++ny) {
        for (int nx = 0; nx < L; ++nx) {
            const double kx = 2 * pi * nx / L;
            const double ky = 2 * pi * ny / L;
            const double eps_x = 2 * t * std::cos(kx);
            const double eps_y = 2 * t * std::cos(ky);
            const cplx ex = std::polar(1.0, -eps_x);
            const cplx ey = std::polar(1.0, -eps_y);
            const cplx tau = c * (ex - ey) / 2.0;
            const cplx root = std::sqrt(ex * ey + tau * tau);
            for (Branch br : {Branch::Plus, Branch::Minus}) {
                PbcEigenpair p;
                p.nx = nx;
                p.ny = ny;
                p.kx = kx;
                p.ky = ky;
                p.branch = br;
                p.eigenvalue = br == Branch::Plus ? tau + root : tau - root;
                p.phase = std::arg(p.eigenvalue);
                const double alpha = p.phase + eps_x;
                const double denom2 = 2.0 - 2.0 * c * std::cos(alpha);
                if (denom2 > 1e-14 && std::abs(s) > 1e-12) {
                    const double denom = std::sqrt(denom2);
                    p.u = s / denom;
                    p.v = (std::polar(1.0, alpha) - c) / denom;
                } else {
                    std::tie(p.u, p.v) =
                        fallback_eigenvector(pbc_block(kx, ky, t, theta), p.eigenvalue);
                }
                out.push_back(p);
            }
        }
    }
    return out;
}

SpinorField pbc_eigenvector_field(int L, const PbcEigenpair& pair) {
    const LatticeSpec spec(L, Boundary::Periodic);
    SpinorField f(spec);
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) {
            const cplx w = std::polar(1.0 / L, pair.kx * x + pair.ky * y);
            const std::size_t i = site_index(spec, x, y) * 2;
            f[i] = w * pair.u;
            f[i + 1] = w * pair.v;
        }
    return f;
}

cplx return_amplitude(int x0, int y0, double phi, int n, int L, double t, double theta) {
    (void)ordinal(LatticeSpec(L, Boundary::Periodic), BasisLabel{x0, y0, Spin::Up});
    if (n < 0) throw ValidationError("step count must be >= 0");
    // Site-diagonal single-particle amplitudes ⟨r0σ'|Uⁿ|r0σ⟩; translation
    // invariance makes them independent of r0.
    cplx g_uu = 0.0, g_dd = 0.0, g_ud = 0.0, g_du = 0.0;
    for (const PbcEigenpair& p : pbc_spectrum(L, t, theta)) {
        const cplx ln = integer_power(p.eigenvalue, n);
        g_uu += std::norm(p.u) * ln;
        g_dd += std::norm(p.v) * ln;
        g_ud += p.u * std::conj(p.v) * ln;
        g_du += std::conj(p.u) * p.v * ln;
    }
    const double area = static_cast<double>(L) * L;
    g_uu /= area;
    g_dd /= area;
    g_ud /= area;
    g_du /= area;
    return g_uu * g_dd + std::cos(phi) * g_ud * g_du;
}

}  // namespace idwalk
