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

#include "idwalk/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "idwalk/ensemble.hpp"
#include "idwalk/error.hpp"

namespace idwalk {

namespace {

constexpr double kImagTolerance = 1e-12;

double real_checked(cplx v, const char* what) {
    if (std::abs(v.imag()) > kImagTolerance) {
        throw NumericError(std::string(what) + ": imaginary residue " +
                           std::to_string(v.imag()) + " exceeds tolerance");
    }
    return v.real();
}

// conj(ψ_a(i))·ψ_b(i) at a single basis ordinal.
cplx overlap_at(const PropagatedSet& set, int a, int b, std::size_t i) {
    return std::conj(set.fields[a][i]) * set.fields[b][i];
}

// Spin-summed site overlaps G_ab(r) = Σ_σ conj(ψ_a(rσ))·ψ_b(rσ).
struct SiteOverlaps {
    int n = 0;
    std::size_t sites = 0;
    std::vector<cplx> g;

    cplx operator()(int a, int b, std::size_t r) const {
        return g[(static_cast<std::size_t>(a) * n + b) * sites + r];
    }
};

SiteOverlaps site_overlaps(const PropagatedSet& set) {
    SiteOverlaps o{set.size(), set.spec().sites(), {}};
    o.g.resize(static_cast<std::size_t>(o.n) * o.n * o.sites);
    for (int a = 0; a < o.n; ++a)
        for (int b = 0; b < o.n; ++b) {
            cplx* out = &o.g[(static_cast<std::size_t>(a) * o.n + b) * o.sites];
            const auto fa = set.fields[a].amplitudes();
            const auto fb = set.fields[b].amplitudes();
            for (std::size_t r = 0; r < o.sites; ++r) {
                out[r] = std::conj(fa[2 * r]) * fb[2 * r] + std::conj(fa[2 * r + 1]) * fb[2 * r + 1];
            }
        }
    return o;
}

// Symmetric part of P as Σ_α c_α·v_α(r1)·v_α(r2) with real site vectors v_α:
// S = Σ_l g_l (c = f_N), each g_l (c = −f_N), and Re/Im of G_kl for l<k
// (c = 2·Re w(l,k)).
struct BilinearTerms {
    std::size_t sites = 0;
    std::vector<double> coeff;
    std::vector<std::vector<double>> vec;
};

BilinearTerms bilinear_terms(const PropagatedSet& set) {
    const SiteOverlaps g = site_overlaps(set);
    const PairWeights w(set.size(), set.ensemble.phi());
    BilinearTerms t;
    t.sites = g.sites;
    std::vector<double> total(g.sites, 0.0);
    for (int l = 0; l < g.n; ++l) {
        std::vector<double> gl(g.sites);
        for (std::size_t r = 0; r < g.sites; ++r) {
            gl[r] = g(l, l, r).real();
            total[r] += gl[r];
        }
        t.coeff.push_back(-w.direct());
        t.vec.push_back(std::move(gl));
    }
    t.coeff.push_back(w.direct());
    t.vec.push_back(std::move(total));
    for (int l = 0; l < g.n; ++l)
        for (int k = l + 1; k < g.n; ++k) {
            const double c = 2.0 * w.exchange(l, k).real();
            std::vector<double> re(g.sites), im(g.sites);
            for (std::size_t r = 0; r < g.sites; ++r) {
                re[r] = g(k, l, r).real();
                im[r] = g(k, l, r).imag();
            }
            t.coeff.push_back(c);
            t.vec.push_back(std::move(re));
            t.coeff.push_back(c);
            t.vec.push_back(std::move(im));
        }
    return t;
}

}  // namespace

PairWeights::PairWeights(int n_particles, double phi) : n_(n_particles) {
    if (n_ < 2) throw ValidationError("pair weights need N >= 2");
    direct_ = 1.0 / (static_cast<double>(n_) * (n_ - 1));
    exchange_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
    const auto perms = all_permutations(n_);
    const double inv_fact = 1.0 / static_cast<double>(perms.size());
    // P even: e^{i(0 − φ)}; P odd: e^{i(φ − 0)}.
    for (const Permutation& p : perms) {
        const cplx phase = std::polar(1.0, p.odd ? phi : -phi);
        exchange_[static_cast<std::size_t>(p.image[0]) * n_ + p.image[1]] += phase * inv_fact;
    }
}

cplx PairWeights::exchange(int l, int k) const {
    if (l < 0 || k < 0 || l >= n_ || k >= n_) throw ValidationError("pair index out of range");
    if (l == k) throw ValidationError("pair weights require l != k");
    return exchange_[static_cast<std::size_t>(l) * n_ + k];
}

cplx pair_weight(int n_particles, double phi, int l, int k, int lp, int kp) {
    const PairWeights w(n_particles, phi);
    if (l == k) throw ValidationError("pair weights require l != k (S0 entries are distinct)");
    for (int i : {l, k, lp, kp})
        if (i < 0 || i >= n_particles) throw ValidationError("pair index out of range");
    if (lp == l && kp == k) return w.direct();
    if (lp == k && kp == l) return w.exchange(l, k);
    return 0.0;
}

void require_orthonormal(const PropagatedSet& set, double tolerance) {
    const double defect = gram_defect(set);
    if (defect > tolerance) {
        throw ValidationError("propagated fields are not orthonormal (Gram defect " +
                              std::to_string(defect) + ")");
    }
}

double two_point_correlation(const PropagatedSet& set, const BasisLabel& a, const BasisLabel& b) {
    require_orthonormal(set);
    const std::size_t ia = ordinal(set.spec(), a);
    const std::size_t ib = ordinal(set.spec(), b);
    const PairWeights w(set.size(), set.ensemble.phi());
    cplx c = 0.0;
    for (int l = 0; l < set.size(); ++l)
        for (int k = 0; k < set.size(); ++k) {
            if (l == k) continue;
            c += w.direct() * overlap_at(set, l, l, ia) * overlap_at(set, k, k, ib);
            c += w.exchange(l, k) * overlap_at(set, k, l, ia) * overlap_at(set, l, k, ib);
        }
    return real_checked(c, "two_point_correlation");
}

double single_particle_density(const PropagatedSet& set, const BasisLabel& a) {
    const std::size_t ia = ordinal(set.spec(), a);
    double s = 0.0;
    for (const SpinorField& f : set.fields) s += std::norm(f[ia]);
    return s / set.size();
}

double connected_correlation(const PropagatedSet& set, const BasisLabel& a, const BasisLabel& b) {
    require_orthonormal(set);
    const std::size_t ia = ordinal(set.spec(), a);
    const std::size_t ib = ordinal(set.spec(), b);
    const int N = set.size();
    const PairWeights w(N, set.ensemble.phi());
    const double nn = static_cast<double>(N);
    const double connected_direct = 1.0 / (nn * nn * nn - nn * nn);
    cplx c = 0.0;
    for (int l = 0; l < N; ++l)
        for (int k = 0; k < N; ++k) {
            const cplx dens = overlap_at(set, l, l, ia) * overlap_at(set, k, k, ib);
            if (l == k) {
                c -= dens / (nn * nn);
                continue;
            }
            c += connected_direct * dens;
            c += w.exchange(l, k) * overlap_at(set, k, l, ia) * overlap_at(set, l, k, ib);
        }
    return real_checked(c, "connected_correlation");
}

double distinguishable_correlation(const SpinorField& first, const SpinorField& second,
                                   const BasisLabel& a, const BasisLabel& b) {
    if (!(first.spec() == second.spec())) throw DimensionError("fields on different lattices");
    return std::norm(first.at(a)) * std::norm(second.at(b));
}

double JointDistribution::total() const {
    // Fixed-order pairwise summation keeps the total reproducible.
    std::vector<double> buf = P;
    std::size_t n = buf.size();
    while (n > 1) {
        const std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i + half < n; ++i) buf[i] += buf[i + half];
        n = half;
    }
    return buf.empty() ? 0.0 : buf[0];
}

double JointDistribution::min_entry() const {
    return P.empty() ? 0.0 : *std::min_element(P.begin(), P.end());
}

JointDistribution joint_distribution(const PropagatedSet& set) {
    require_orthonormal(set);
    const SiteOverlaps g = site_overlaps(set);
    const PairWeights w(set.size(), set.ensemble.phi());
    const std::size_t S = g.sites;
    JointDistribution jd{set.spec().L, set.n, std::vector<double>(S * S, 0.0)};
    std::vector<double> total(S, 0.0);
    for (int l = 0; l < g.n; ++l)
        for (std::size_t r = 0; r < S; ++r) total[r] += g(l, l, r).real();
    for (std::size_t r1 = 0; r1 < S; ++r1) {
        double* row = &jd.P[r1 * S];
        for (std::size_t r2 = 0; r2 < S; ++r2) row[r2] = w.direct() * total[r1] * total[r2];
        for (int l = 0; l < g.n; ++l) {
            const double gl1 = g(l, l, r1).real();
            for (std::size_t r2 = 0; r2 < S; ++r2) row[r2] -= w.direct() * gl1 * g(l, l, r2).real();
        }
        for (int l = 0; l < g.n; ++l)
            for (int k = l + 1; k < g.n; ++k) {
                const cplx wz1 = w.exchange(l, k) * g(k, l, r1);
                for (std::size_t r2 = 0; r2 < S; ++r2) {
                    row[r2] += 2.0 * (wz1 * std::conj(g(k, l, r2))).real();
                }
            }
    }
    return jd;
}

JointObservables joint_observables(const PropagatedSet& set) {
    require_orthonormal(set);
    const BilinearTerms terms = bilinear_terms(set);
    const int L = set.spec().L;
    const std::size_t S = terms.sites;

    std::vector<double> dist_table(static_cast<std::size_t>(L) * L);
    for (int dy = 0; dy < L; ++dy)
        for (int dx = 0; dx < L; ++dx)
            dist_table[static_cast<std::size_t>(dy) * L + dx] = std::sqrt(double(dx * dx + dy * dy));

    JointObservables out;
    std::vector<double> drow(S);
    std::vector<double> quad(terms.coeff.size(), 0.0);
    for (std::size_t r1 = 0; r1 < S; ++r1) {
        const int x1 = static_cast<int>(r1 % L);
        const int y1 = static_cast<int>(r1 / L);
        for (std::size_t r2 = r1 + 1; r2 < S; ++r2) {
            const int dx = std::abs(static_cast<int>(r2 % L) - x1);
            const int dy = std::abs(static_cast<int>(r2 / L) - y1);
            drow[r2] = dist_table[static_cast<std::size_t>(dy) * L + dx];
        }
        for (std::size_t a = 0; a < terms.vec.size(); ++a) {
            const double* v = terms.vec[a].data();
            double acc = 0.0;
            for (std::size_t r2 = r1 + 1; r2 < S; ++r2) acc += drow[r2] * v[r2];
            quad[a] += v[r1] * acc;
        }
    }
    for (std::size_t a = 0; a < terms.vec.size(); ++a) {
        const auto& v = terms.vec[a];
        double diag = 0.0, sum = 0.0;
        for (std::size_t r = 0; r < S; ++r) {
            diag += v[r] * v[r];
            sum += v[r];
        }
        out.delta12 += terms.coeff[a] * 2.0 * quad[a];
        out.coincidence += terms.coeff[a] * diag;
        out.total += terms.coeff[a] * sum * sum;
    }
    return out;
}

double coincidence_probability(const PropagatedSet& set) {
    require_orthonormal(set);
    const BilinearTerms terms = bilinear_terms(set);
    double p = 0.0;
    for (std::size_t a = 0; a < terms.vec.size(); ++a) {
        double diag = 0.0;
        for (double v : terms.vec[a]) diag += v * v;
        p += terms.coeff[a] * diag;
    }
    return p;
}

double mean_interparticle_distance(const PropagatedSet& set) {
    return joint_observables(set).delta12;
}

VelocityFit spread_velocity(std::span<const DistanceSample> series, double tau_lo, double tau_hi) {
    constexpr double kEdge = 1e-9;
    std::vector<DistanceSample> in;
    for (const DistanceSample& s : series)
        if (s.tau >= tau_lo - kEdge && s.tau <= tau_hi + kEdge) in.push_back(s);
    if (in.size() < 2) {
        throw ValidationError("velocity fit window [" + std::to_string(tau_lo) + ", " +
                              std::to_string(tau_hi) + "] holds " + std::to_string(in.size()) +
                              " samples; need at least 2");
    }
    const double m = static_cast<double>(in.size());
    double mt = 0.0, md = 0.0;
    for (const auto& s : in) {
        mt += s.tau;
        md += s.delta12;
    }
    mt /= m;
    md /= m;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& s : in) {
        sxx += (s.tau - mt) * (s.tau - mt);
        sxy += (s.tau - mt) * (s.delta12 - md);
    }
    if (sxx <= 0.0) throw ValidationError("velocity fit window holds a single time value");
    VelocityFit fit;
    fit.velocity = sxy / sxx;
    fit.intercept = md - fit.velocity * mt;
    fit.samples = static_cast<int>(in.size());
    for (const auto& s : in) fit.fit_error += std::abs(s.delta12 - (fit.intercept + fit.velocity * s.tau));
    fit.fit_error /= m;
    return fit;
}

}  // namespace idwalk
