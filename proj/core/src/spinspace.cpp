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

#include "idwalk/spinspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "idwalk/ensemble.hpp"
#include "idwalk/error.hpp"

namespace idwalk {

EigenSystem hermitian_eigensystem(const CMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("eigensystem of a non-square matrix");
    const double scale = std::max(1.0, m.frobenius_norm());
    const double defect = hermiticity_defect(m);
    if (defect > 1e-10 * scale) {
        throw ValidationError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    const std::size_t n = m.rows();
    CMatrix a = m;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    CMatrix v = CMatrix::identity(n);
    const double tol = 1e-13 * scale;
    int sweep = 0;
    for (; a.off_diagonal_norm() > tol; ++sweep) {
        if (sweep >= 100) throw NumericError("Jacobi eigensolver did not converge in 100 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                const cplx phase = apq / r;  // e^{iα}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // W = diag(1, e^{−iα})·[[c, s], [−s, c]] on the (p, q) plane.
                const cplx wqp = -s * std::conj(phase);
                const cplx wqq = c * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * c + akq * wqp;
                    a(k, q) = akp * s + akq * wqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(wqp) * aqk;
                    a(q, k) = s * apk + std::conj(wqq) * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * wqp;
                    v(k, q) = vkp * s + vkq * wqq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = app - t * r;
                a(q, q) = aqq + t * r;
            }
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
    EigenSystem es{std::vector<double>(n), CMatrix(n, n), sweep};
    for (std::size_t c = 0; c < n; ++c) {
        es.values[c] = a(order[c], order[c]).real();
        for (std::size_t k = 0; k < n; ++k) es.vectors(k, c) = v(k, order[c]);
    }
    return es;
}

CMatrix spin_overlap(const PropagatedSet& set, int a, int b) {
    if (a < 0 || b < 0 || a >= set.size() || b >= set.size()) {
        throw BoundsError("spin_overlap: particle index out of range");
    }
    const auto fa = set.fields[a].amplitudes();
    const auto fb = set.fields[b].amplitudes();
    CMatrix t(2, 2);
    for (std::size_t r = 0; r < fa.size(); r += 2)
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t sp = 0; sp < 2; ++sp) t(s, sp) += fa[r + s] * std::conj(fb[r + sp]);
    return t;
}

SpinDensity reduced_spin_density(const PropagatedSet& set) {
    const int N = set.size();
    if (N > 6) {
        throw CapabilityError("reduced spin density supports N <= 6 particles, got " +
                              std::to_string(N));
    }
    std::vector<CMatrix> overlaps(static_cast<std::size_t>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) overlaps[static_cast<std::size_t>(a) * N + b] = spin_overlap(set, a, b);

    const auto perms = all_permutations(N);
    const double phi = set.ensemble.phi();
    const double inv_fact = 1.0 / static_cast<double>(perms.size());
    const std::size_t dim = std::size_t{1} << N;
    SpinDensity out{CMatrix(dim, dim), N, set.n};
    for (const Permutation& p : perms) {
        for (const Permutation& pp : perms) {
            const cplx coeff =
                permutation_phase(p, phi) * std::conj(permutation_phase(pp, phi)) * inv_fact;
            CMatrix term = CMatrix::identity(1);
            bool zero = false;
            for (int j = 0; j < N && !zero; ++j) {
                const CMatrix& t = overlaps[static_cast<std::size_t>(p.image[j]) * N + pp.image[j]];
                zero = t.frobenius_norm() == 0.0;
                term = kron(term, t);
            }
            if (zero) continue;
            term *= coeff;
            out.rho += term;
        }
    }
    return out;
}

CMatrix ising_generator(int particles) {
    if (particles < 2) throw ValidationError("Ising generator needs N >= 2");
    const std::size_t dim = std::size_t{1} << particles;
    CMatrix o(dim, dim);
    for (std::size_t s = 0; s < dim; ++s) {
        const int down = std::popcount(s);
        const int up = particles - down;
        o(s, s) = up * (up - 1) / 2 + down * (down - 1) / 2 - up * down;
    }
    return o;
}

double qfi(const EigenSystem& es, const CMatrix& generator) {
    const std::size_t n = es.values.size();
    if (generator.rows() != n || generator.cols() != n) {
        throw DimensionError("QFI: generator and density have different dimensions");
    }
    const CMatrix o = es.vectors.adjoint() * generator * es.vectors;
    std::vector<double> lam(n);
    for (std::size_t k = 0; k < n; ++k) lam[k] = std::max(0.0, es.values[k]);
    double f = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            const double sum = lam[k] + lam[l];
            if (sum <= 1e-12) continue;
            const double diff = lam[k] - lam[l];
            f += diff * diff / sum * std::norm(o(k, l));
        }
    return 2.0 * f;
}

double qfi(const CMatrix& rho, const CMatrix& generator) {
    if (generator.rows() != rho.rows()) {
        throw DimensionError("QFI: generator and density have different dimensions");
    }
    return qfi(hermitian_eigensystem(rho), generator);
}

double von_neumann_entropy(const EigenSystem& es) {
    double s = 0.0;
    for (double l : es.values)
        if (l > 1e-14) s -= l * std::log2(l);
    return s;
}

double von_neumann_entropy(const CMatrix& rho) {
    return von_neumann_entropy(hermitian_eigensystem(rho));
}

double purity(const CMatrix& rho) {
    const double f = rho.frobenius_norm();
    return f * f;
}

}  // namespace idwalk
