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

#include "idwalk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "idwalk/correlations.hpp"
#include "idwalk/oracle.hpp"
#include "idwalk/spectrum.hpp"
#include "idwalk/spinspace.hpp"

namespace idwalk {

namespace {

using std::numbers::pi;
constexpr double kPhiGrid[] = {0.0, pi / 4, pi / 2, 3 * pi / 4, pi};

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double max_state_diff(const oracle::DenseState& a, const oracle::DenseState& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) m = std::max(m, std::abs(a.amplitudes[i] - b.amplitudes[i]));
    return m;
}

double step_operator_defect(int L, const WalkModel& model) {
    const LatticeSpec spec(L, model.boundary);
    const CMatrix dense = oracle::dense_step_matrix(L, model);
    const StepOperator op(L, model);
    double m = 0.0;
    for (std::size_t k = 0; k < spec.dim(); ++k) {
        const SpinorField out = op.apply(basis_state(spec, label_of(spec, k)));
        for (std::size_t i = 0; i < spec.dim(); ++i) m = std::max(m, std::abs(out[i] - dense(i, k)));
    }
    return m;
}

struct Errors {
    double two_point = 0, joint = 0, rho = 0, spin_measures = 0, state = 0;
};

void compare_ensemble(const std::vector<BasisLabel>& labels, const WalkModel& model, int L, int steps,
                      Errors& err) {
    const LatticeSpec spec(L, model.boundary);
    const CMatrix u = oracle::dense_step_matrix(L, model);
    const StepOperator op(L, model);
    const int N = static_cast<int>(labels.size());
    const CMatrix gen = ising_generator(N);
    const std::vector<std::pair<BasisLabel, BasisLabel>> probes = [&] {
        std::vector<std::pair<BasisLabel, BasisLabel>> p;
        for (Spin a : {Spin::Up, Spin::Down})
            for (Spin b : {Spin::Up, Spin::Down}) {
                p.push_back({{L - 1, L - 1, a}, {L - 1, L - 1, b}});
                p.push_back({{0, 0, a}, {L - 1, L - 1, b}});
                p.push_back({{1, 0, a}, {0, 1, b}});
            }
        return p;
    }();
    for (double phi : kPhiGrid) {
        const IdenticalEnsemble ensemble(labels, phi);
        oracle::DenseState dense = oracle::assemble_full_state(ensemble, spec);
        PropagatedSet set = propagate_set(ensemble, L, model, 0);
        for (int n = 0; n <= steps; ++n) {
            if (n > 0) {
                dense = oracle::full_step(dense, u);
                advance(set, op);
            }
            for (const auto& [a, b] : probes) {
                err.two_point = std::max(
                    err.two_point, std::abs(two_point_correlation(set, a, b) - oracle::full_two_point(dense, a, b)));
            }
            const JointObservables jf = joint_observables(set);
            const JointObservables jd = oracle::full_joint_observables(dense);
            err.joint = std::max({err.joint, std::abs(jf.coincidence - jd.coincidence),
                                  std::abs(jf.delta12 - jd.delta12), std::abs(jf.total - jd.total)});
            if (n <= 10) {
                const CMatrix rf = reduced_spin_density(set).rho;
                const CMatrix rd = oracle::full_partial_trace(dense).rho;
                err.rho = std::max(err.rho, max_abs_diff(rf, rd));
                err.spin_measures = std::max({err.spin_measures, std::abs(purity(rf) - purity(rd)),
                                              std::abs(von_neumann_entropy(rf) - von_neumann_entropy(rd)),
                                              std::abs(qfi(rf, gen) - qfi(rd, gen))});
            }
        }
        err.state = std::max(err.state, max_state_diff(oracle::assemble_from_fields(set), dense));
    }
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

SuiteReport oracle_suite() {
    Timer timer;
    SuiteReport r{"oracle", {}, 0.0};
    const auto hop = WalkModel::conditional_hop(0.1, Boundary::Open);
    r.checks.push_back({"dense step matrix, conditional hop, open", step_operator_defect(3, hop), 1e-12});
    r.checks.push_back({"dense step matrix, conditional hop, periodic",
                        step_operator_defect(3, WalkModel::conditional_hop(0.1, Boundary::Periodic)), 1e-12});
    r.checks.push_back({"dense step matrix, split step", step_operator_defect(3, WalkModel::split_step()), 1e-12});

    const std::vector<std::vector<BasisLabel>> ensembles = {
        {{0, 0, Spin::Up}, {0, 2, Spin::Down}, {2, 0, Spin::Down}, {2, 2, Spin::Up}},
        {{1, 1, Spin::Up}, {1, 1, Spin::Down}, {0, 2, Spin::Up}, {2, 2, Spin::Down}},
        {{1, 1, Spin::Up}, {1, 1, Spin::Down}},
        {{0, 0, Spin::Up}, {2, 1, Spin::Down}},
    };
    Errors err;
    for (const auto& labels : ensembles) compare_ensemble(labels, hop, 3, 40, err);
    r.checks.push_back({"two-point correlation", err.two_point, 1e-10});
    r.checks.push_back({"coincidence, delta12, normalization", err.joint, 1e-10});
    r.checks.push_back({"reduced spin density, steps 0-10", err.rho, 1e-10});
    r.checks.push_back({"purity, entropy, qfi, steps 0-10", err.spin_measures, 1e-10});
    r.checks.push_back({"reassembled state at step 40", err.state, 1e-10});
    r.seconds = timer.seconds();
    return r;
}

SuiteReport spectral_suite() {
    Timer timer;
    SuiteReport r{"spectral", {}, 0.0};
    const int L = 6;
    const double t = 0.1, theta = pi / 4;
    const auto spectrum = pbc_spectrum(L, t, theta);
    double block = 0.0, modulus = 0.0, field = 0.0;
    const StepOperator op(L, WalkModel::conditional_hop(t, Boundary::Periodic, theta));
    for (const auto& p : spectrum) {
        const CMatrix uk = pbc_block(p.kx, p.ky, t, theta);
        const cplx au = uk(0, 0) * p.u + uk(0, 1) * p.v;
        const cplx av = uk(1, 0) * p.u + uk(1, 1) * p.v;
        block = std::max(block, std::hypot(std::abs(au - p.eigenvalue * p.u), std::abs(av - p.eigenvalue * p.v)));
        modulus = std::max(modulus, std::abs(std::abs(p.eigenvalue) - 1.0));
        const SpinorField f = pbc_eigenvector_field(L, p);
        const SpinorField g = op.apply(f);
        double res = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) res += std::norm(g[i] - p.eigenvalue * f[i]);
        field = std::max(field, std::sqrt(res));
    }
    r.checks.push_back({"eigenpair count 2L^2", std::abs(double(spectrum.size()) - 2.0 * L * L), 0.0});
    r.checks.push_back({"block eigen residual", block, 1e-12});
    r.checks.push_back({"unit modulus", modulus, 1e-12});
    r.checks.push_back({"lattice eigenvector residual", field, 1e-12});

    double amp = 0.0, rule = 0.0;
    for (int n = 0; n <= 5; ++n) {
        for (double phi : kPhiGrid) {
            amp = std::max(amp, std::abs(return_amplitude(2, 3, phi, n, L, t, theta) -
                                         oracle::dense_return_amplitude(2, 3, phi, n, L, t, theta)));
        }
        rule = std::max(rule, std::abs(return_amplitude(0, 0, 0.0, n, L, t, theta) +
                                       return_amplitude(0, 0, pi, n, L, t, theta) -
                                       2.0 * return_amplitude(0, 0, pi / 2, n, L, t, theta)));
    }
    r.checks.push_back({"return amplitude vs dense pair, n<=5", amp, 1e-10});
    r.checks.push_back({"A(0) + A(pi) = 2 A(pi/2)", rule, 1e-10});
    r.seconds = timer.seconds();
    return r;
}

}  // namespace idwalk
