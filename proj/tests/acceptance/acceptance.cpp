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

// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance              run every criterion
//   acceptance --criterion 4

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "idwalk/bell.hpp"
#include "idwalk/correlations.hpp"
#include "idwalk/oracle.hpp"
#include "idwalk/presets.hpp"
#include "idwalk/spectrum.hpp"
#include "idwalk/spinspace.hpp"

using namespace idwalk;
using std::numbers::pi;

namespace {

const std::vector<double> kPhi = {0.0, pi / 4, pi / 2, 3 * pi / 4, pi};
const std::vector<BasisLabel> kCorners = {{0, 0, Spin::Up}, {0, 2, Spin::Down}, {2, 0, Spin::Down}, {2, 2, Spin::Up}};
const Preset kPresets[] = {Preset::I, Preset::II, Preset::III, Preset::IV};

struct Outcome {
    bool pass = false;
    std::string detail;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
    char buf[1024];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

const char* phi_name(double phi) {
    static const char* names[] = {"0", "pi/4", "pi/2", "3pi/4", "pi"};
    for (int i = 0; i < 5; ++i)
        if (phi == kPhi[i]) return names[i];
    return "?";
}

// ---- 1: two-point correlations against the dense state -------------------
Outcome oracle_two_point() {
    Stopwatch sw;
    const auto model = WalkModel::conditional_hop(0.1, Boundary::Open);
    const LatticeSpec spec(3, Boundary::Open);
    const CMatrix u = oracle::dense_step_matrix(3, model);
    const StepOperator op(3, model);
    double worst = 0.0;
    for (double phi : kPhi) {
        const IdenticalEnsemble e(kCorners, phi);
        auto dense = oracle::assemble_full_state(e, spec);
        auto set = propagate_set(e, 3, model, 0);
        for (int n = 0; n <= 40; ++n) {
            if (n > 0) {
                dense = oracle::full_step(dense, u);
                advance(set, op);
            }
            for (Spin a : {Spin::Up, Spin::Down})
                for (Spin b : {Spin::Up, Spin::Down}) {
                    const BasisLabel x{2, 2, a}, y{2, 2, b};
                    worst = std::max(worst, std::abs(two_point_correlation(set, x, y) - oracle::full_two_point(dense, x, y)));
                }
        }
    }
    const double t = sw.seconds();
    return {worst <= 1e-10 && t <= 60, fmt("max |C - C_dense| = %.2e (tol 1e-10), %.1f s (limit 60 s)", worst, t)};
}

// ---- 2: reduced spin density against the dense partial trace -------------
Outcome oracle_spin_density() {
    Stopwatch sw;
    const auto model = WalkModel::conditional_hop(0.1, Boundary::Open);
    const LatticeSpec spec(3, Boundary::Open);
    const CMatrix u = oracle::dense_step_matrix(3, model);
    const StepOperator op(3, model);
    const std::vector<std::vector<BasisLabel>> configs = {kCorners, preset_configuration(Preset::III, 3),
                                                          preset_configuration(Preset::IV, 3)};
    double worst = 0.0;
    for (const auto& labels : configs)
        for (double phi : kPhi) {
            const IdenticalEnsemble e(labels, phi);
            auto dense = oracle::assemble_full_state(e, spec);
            auto set = propagate_set(e, 3, model, 0);
            for (int n = 0; n <= 10; ++n) {
                if (n > 0) {
                    dense = oracle::full_step(dense, u);
                    advance(set, op);
                }
                worst = std::max(worst, max_abs_diff(reduced_spin_density(set).rho, oracle::full_partial_trace(dense).rho));
            }
        }
    const double t = sw.seconds();
    return {worst <= 1e-10 && t <= 120,
            fmt("max |rho - rho_dense| = %.2e (tol 1e-10) over 3 configs, %.1f s (limit 120 s)", worst, t)};
}

// ---- 3: periodic spectrum and return amplitude ----------------------------
Outcome spectral() {
    Stopwatch sw;
    const int L = 6;
    const double t = 0.1, theta = pi / 4;
    const auto sp = pbc_spectrum(L, t, theta);
    double residual = 0.0, modulus = 0.0;
    for (const auto& p : sp) {
        const CMatrix uk = pbc_block(p.kx, p.ky, t, theta);
        const cplx a = uk(0, 0) * p.u + uk(0, 1) * p.v - p.eigenvalue * p.u;
        const cplx b = uk(1, 0) * p.u + uk(1, 1) * p.v - p.eigenvalue * p.v;
        residual = std::max(residual, std::hypot(std::abs(a), std::abs(b)));
        modulus = std::max(modulus, std::abs(std::abs(p.eigenvalue) - 1.0));
    }
    double amp = 0.0, rule = 0.0;
    const std::pair<int, int> sites[] = {{0, 0}, {2, 3}, {5, 1}};
    for (int n = 0; n <= 5; ++n)
        for (auto [x, y] : sites) {
            for (double phi : kPhi)
                amp = std::max(amp, std::abs(return_amplitude(x, y, phi, n, L, t, theta) -
                                             oracle::dense_return_amplitude(x, y, phi, n, L, t, theta)));
            rule = std::max(rule, std::abs(return_amplitude(x, y, 0, n, L, t, theta) + return_amplitude(x, y, pi, n, L, t, theta) -
                                           2.0 * return_amplitude(x, y, pi / 2, n, L, t, theta)));
        }
    const double secs = sw.seconds();
    const bool ok = sp.size() == std::size_t(2 * L * L) && residual <= 1e-12 && modulus <= 1e-12 && amp <= 1e-10 &&
                    rule <= 1e-10 && secs <= 10;
    return {ok, fmt("%zu eigenpairs, residual %.1e, ||lambda|-1| %.1e (tol 1e-12); |A0 - dense| %.1e, sum rule %.1e "
                    "(tol 1e-10); %.2f s (limit 10 s)",
                    sp.size(), residual, modulus, amp, rule, secs)};
}

// shared driver: Δ12 series for a preset/φ cell
DistanceSeries distance_series(const std::vector<BasisLabel>& labels, double phi, int L, const WalkModel& model,
                               int steps, std::vector<double>* coincidence = nullptr) {
    const IdenticalEnsemble e(labels, phi);
    auto set = propagate_set(e, L, model, 0);
    const StepOperator op(L, model);
    DistanceSeries out;
    for (int n = 0; n <= steps; ++n) {
        if (n > 0) advance(set, op);
        const auto jo = joint_observables(set);
        out.push_back({n, set.tau(), jo.delta12});
        if (coincidence) coincidence->push_back(jo.coincidence);
    }
    return out;
}

// ---- 4: spread velocity ordering ------------------------------------------
Outcome velocity_ordering() {
    Stopwatch sw;
    const auto model = WalkModel::conditional_hop(0.05, Boundary::Open);
    bool ordered = true;
    double worst_fit = 0.0;
    std::string table;
    for (Preset p : kPresets) {
        std::vector<double> v;
        for (double phi : kPhi) {
            const auto fit = spread_velocity(distance_series(preset_configuration(p, 40), phi, 40, model, 103), 4.8, 5.15);
            v.push_back(fit.velocity);
            worst_fit = std::max(worst_fit, fit.fit_error);
        }
        for (std::size_t i = 1; i < v.size(); ++i) ordered = ordered && v[i] >= v[i - 1];
        ordered = ordered && v.back() > v.front();
        table += fmt(" %s:v0=%.4f,vpi=%.4f", std::string(to_string(p)).c_str(), v.front(), v.back());
    }
    const double secs = sw.seconds();
    const bool fit_ok = worst_fit <= 1e-7;
    return {ordered && fit_ok && secs <= 600,
            fmt("ordering %s;%s; max fit residual %.2e (bound 1e-7: %s); %.0f s (limit 600 s)", ordered ? "ok" : "violated",
                table.c_str(), worst_fit, fit_ok ? "ok" : "exceeded", secs)};
}

// ---- 5: coincidence structure ---------------------------------------------
Outcome coincidence_structure() {
    const int L = 16;
    const auto model = WalkModel::conditional_hop(0.05, Boundary::Open);
    bool initial_ok = true;
    double d3 = 0, d4 = 0;
    for (double phi : kPhi) {
        const double c3 = coincidence_probability(propagate_set(IdenticalEnsemble(preset_configuration(Preset::III, L), phi), L, model, 0));
        const double c4 = coincidence_probability(propagate_set(IdenticalEnsemble(preset_configuration(Preset::IV, L), phi), L, model, 0));
        if (phi == 0.0) {
            d3 = c3;
            d4 = c4;
        }
        initial_ok = initial_ok && std::abs(c3 - 1.0 / 3) <= 1e-12 && std::abs(c4 - 1.0 / 6) <= 1e-12 && c3 == d3 && c4 == d4;
    }
    double avg[2] = {0, 0};
    for (int i = 0; i < 2; ++i) {
        std::vector<double> c;
        distance_series(preset_configuration(Preset::III, L), i == 0 ? 0.0 : pi, L, model, 50, &c);
        for (int n = 10; n <= 50; ++n) avg[i] += c[n] / 41;
    }
    return {initial_ok && avg[0] > avg[1],
            fmt("P_diag(0): III %.15f, IV %.15f, phase-independent %s; III mean P_diag n=10..50: phi=0 %.5f > phi=pi %.5f",
                d3, d4, initial_ok ? "yes" : "no", avg[0], avg[1])};
}

// spin-space series for L=40, t=0.05
struct SpinSeries {
    std::vector<double> purity, entropy, qfi, zeta;
};

SpinSeries spin_series(Preset p, double phi, int steps) {
    const int L = 40;
    const auto model = WalkModel::conditional_hop(0.05, Boundary::Open);
    auto set = propagate_set(IdenticalEnsemble(preset_configuration(p, L), phi), L, model, 0);
    const StepOperator op(L, model);
    const CMatrix gen = ising_generator(4);
    const BellSettings bell = default_settings(4, 2);
    SpinSeries s;
    for (int n = 0; n <= steps; ++n) {
        if (n > 0) advance(set, op);
        const CMatrix rho = reduced_spin_density(set).rho;
        const EigenSystem eig = hermitian_eigensystem(rho);
        s.purity.push_back(purity(rho));
        s.entropy.push_back(von_neumann_entropy(eig));
        s.qfi.push_back(qfi(eig, gen));
        s.zeta.push_back(zeta(correlation_tensor(rho, bell)));
    }
    return s;
}

// ---- 6: purity and entropy ------------------------------------------------
Outcome thermalization() {
    bool ok = true;
    std::string detail;
    for (Preset p : kPresets) {
        std::map<double, SpinSeries> s;
        for (double phi : kPhi) {
            s[phi] = spin_series(p, phi, 50);
            if (!(s[phi].entropy.back() > s[phi].entropy.front())) {
                ok = false;
                detail += fmt(" entropy did not grow for %s phi=%s;", std::string(to_string(p)).c_str(), phi_name(phi));
            }
        }
        if (p == Preset::III || p == Preset::IV) {
            const double b = s[0.0].purity.back(), f = s[pi].purity.back();
            const bool here = b < f && b <= 1.0 / 16 + 0.02;
            ok = ok && here;
            detail += fmt(" %s purity(50): phi=0 %.4f, phi=pi %.4f;", std::string(to_string(p)).c_str(), b, f);
        }
    }
    return {ok, "entropy grows for all presets and phases;" + detail + " bound 1/16+0.02"};
}

// ---- 7: QFI trend ---------------------------------------------------------
Outcome qfi_trend() {
    bool ok = true;
    std::string detail;
    for (Preset p : {Preset::III, Preset::IV}) {
        const auto f = spin_series(p, pi, 50);
        const auto b = spin_series(p, 0.0, 50);
        const double peak = *std::max_element(b.qfi.begin(), b.qfi.end());
        const bool here = f.qfi.back() > f.qfi.front() && b.qfi.back() * 2 <= peak;
        ok = ok && here;
        detail += fmt(" %s: phi=pi F(0)=%.3f F(50)=%.3f; phi=0 F(50)=%.3f max=%.3f;", std::string(to_string(p)).c_str(),
                      f.qfi.front(), f.qfi.back(), b.qfi.back(), peak);
    }
    return {ok, detail.substr(1)};
}

// ---- 8: Bell quantity -----------------------------------------------------
Outcome bell_suite() {
    bool ok = true;
    std::string detail;
    double z3[3];
    int i = 0;
    for (double phi : {0.0, pi / 2, pi}) z3[i++] = spin_series(Preset::III, phi, 0).zeta.front();
    ok = z3[0] > 1 && z3[2] > 1 && std::abs(z3[1] - 1) <= 5e-3;
    detail += fmt("III n=0: zeta(0)=%.4f zeta(pi/2)=%.4f zeta(pi)=%.4f;", z3[0], z3[1], z3[2]);
    double worst = 0.0;
    for (Preset p : {Preset::I, Preset::II, Preset::IV})
        for (double phi : kPhi) {
            const auto s = spin_series(p, phi, 30);
            worst = std::max(worst, *std::max_element(s.zeta.begin(), s.zeta.end()));
        }
    ok = ok && worst <= 1 + 1e-10;
    detail += fmt(" max zeta over I/II/IV, 30 steps = %.6f;", worst);
    const IdenticalEnsemble pair({{1, 1, Spin::Up}, {1, 1, Spin::Down}}, pi);
    const CMatrix singlet = reduced_spin_density(propagate_set(pair, 3, WalkModel::conditional_hop(0.1), 0)).rho;
    const double zs = zeta(correlation_tensor(singlet, default_settings(2, 1)));
    ok = ok && std::abs(zs - std::sqrt(2.0)) <= 1e-10;
    detail += fmt(" singlet zeta - sqrt2 = %.1e", zs - std::sqrt(2.0));
    return {ok, detail};
}

// ---- 9: split-step statistics ---------------------------------------------
Outcome split_step_statistics() {
    const int L = 40, steps = 12;
    const auto model = WalkModel::split_step();
    double spread_non_shared = 0.0;
    for (Preset p : {Preset::I, Preset::II}) {
        std::vector<double> c0;
        const auto d0 = distance_series(preset_configuration(p, L), 0.0, L, model, steps, &c0);
        for (double phi : kPhi) {
            std::vector<double> c;
            const auto d = distance_series(preset_configuration(p, L), phi, L, model, steps, &c);
            for (int n = 0; n <= steps; ++n)
                spread_non_shared = std::max({spread_non_shared, std::abs(c[n] - c0[n]), std::abs(d[n].delta12 - d0[n].delta12)});
        }
    }
    bool shared_ok = true;
    std::string detail;
    for (Preset p : {Preset::III, Preset::IV}) {
        std::vector<double> v;
        for (double phi : kPhi) v.push_back(spread_velocity(distance_series(preset_configuration(p, L), phi, L, model, steps), 4, 12).velocity);
        const double lo = *std::min_element(v.begin(), v.end());
        const bool here = v.back() - lo > 1e-6 && v.back() >= *std::max_element(v.begin(), v.end());
        shared_ok = shared_ok && here;
        detail += fmt(" %s v0=%.4f vpi=%.4f;", std::string(to_string(p)).c_str(), v.front(), v.back());
    }
    const bool indep = spread_non_shared <= 1e-12;
    return {indep && shared_ok,
            fmt("I/II max spread across phi of P_diag/delta12 = %.3e (tol 1e-12: %s); III/IV phase-dependent with v_pi "
                "maximal: %s;%s",
                spread_non_shared, indep ? "ok" : "exceeded", shared_ok ? "yes" : "no", detail.c_str())};
}

// ---- 10: randomized invariants --------------------------------------------
Outcome invariants() {
    Stopwatch sw;
    std::mt19937_64 rng(20260101);
    const int seeds = 120;
    double drift = 0, gram = 0, mass = 0, asym = 0, neg = 0, ent_pur = 0, qfi_law = 0;
    std::set<std::string> asym_cases;
    for (int seed = 0; seed < seeds; ++seed) {
        rng.seed(1000 + seed);
        std::uniform_int_distribution<int> pickL(3, 8), pickN(2, 4), pickSteps(0, 30);
        std::uniform_real_distribution<double> unit(0, 1);
        const int L = pickL(rng);
        const bool split = unit(rng) < 0.3;
        WalkModel model = split ? WalkModel::split_step(unit(rng) * 2 * pi)
                                : WalkModel::conditional_hop(0.5 * unit(rng), unit(rng) < 0.5 ? Boundary::Open : Boundary::Periodic,
                                                             unit(rng) * 2 * pi);
        const LatticeSpec spec(L, model.boundary);
        std::vector<std::size_t> idx(spec.dim());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        const int N = pickN(rng);
        std::vector<BasisLabel> labels;
        for (int j = 0; j < N; ++j) labels.push_back(label_of(spec, idx[j]));
        const double phi = seed % 10 == 0 ? 0.0 : seed % 10 == 1 ? pi : unit(rng) * pi;
        const auto set = propagate_set(IdenticalEnsemble(labels, phi), L, model, pickSteps(rng));

        for (const auto& f : set.fields) drift = std::max(drift, std::abs(f.norm() - 1.0));
        gram = std::max(gram, gram_defect(set));
        const auto jd = joint_distribution(set);
        mass = std::max(mass, std::abs(jd.total() - 1.0));
        neg = std::max(neg, -jd.min_entry());
        for (std::size_t a = 0; a < jd.sites(); ++a)
            for (std::size_t b = a + 1; b < jd.sites(); ++b) {
                const double d = std::abs(jd(a, b) - jd(b, a));
                asym = std::max(asym, d);
                if (d > 1e-12) asym_cases.insert(fmt("N=%d L=%d %s", N, L, model.boundary == Boundary::Periodic ? "periodic" : "open"));
            }

        const CMatrix rho = reduced_spin_density(set).rho;
        const EigenSystem eig = hermitian_eigensystem(rho);
        const double p = purity(rho), s = von_neumann_entropy(eig);
        // Rényi-2 ≤ von Neumann ≤ N, and a pure state has zero entropy
        double bad = std::max({-std::log2(p) - s, s - N, 0.0});
        if (p > 1 - 1e-12) bad = std::max(bad, s);
        ent_pur = std::max(ent_pur, bad);

        const std::size_t dim = rho.rows();
        CMatrix pure(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) pure(i, j) = eig.vectors(i, 0) * std::conj(eig.vectors(j, 0));
        const CMatrix gen = ising_generator(N);
        const double m1 = (pure * gen).trace().real(), m2 = (pure * gen * gen).trace().real();
        qfi_law = std::max(qfi_law, std::abs(qfi(pure, gen) - 4 * (m2 - m1 * m1)));
    }
    const double secs = sw.seconds();
    const bool ok = drift <= 1e-11 && gram <= 1e-10 && mass <= 1e-10 && asym <= 1e-12 && neg <= 1e-12 &&
                    ent_pur <= 1e-9 && qfi_law <= 1e-8 && secs <= 300;
    std::string where;
    for (const auto& c : asym_cases) where += (where.empty() ? "" : ", ") + c;
    return {ok, fmt("%d seeds: norm drift %.1e, Gram %.1e, mass %.1e, asymmetry %.1e (tol 1e-12%s%s), negativity %.1e, "
                    "entropy/purity %.1e, QFI variance law %.1e; %.1f s (limit 300 s)",
                    seeds, drift, gram, mass, asym, where.empty() ? "" : "; broken for ", where.c_str(), neg, ent_pur,
                    qfi_law, secs)};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "oracle two-point equivalence", oracle_two_point},
    {2, "oracle spin-density equivalence", oracle_spin_density},
    {3, "periodic spectrum", spectral},
    {4, "exchange-statistics velocity ordering", velocity_ordering},
    {5, "coincidence structure", coincidence_structure},
    {6, "thermalization witnesses", thermalization},
    {7, "QFI trend", qfi_trend},
    {8, "Bell quantity", bell_suite},
    {9, "split-step statistics independence", split_step_statistics},
    {10, "randomized invariants", invariants},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    int failed = 0, ran = 0;
    for (const auto& c : kCriteria) {
        if (only && c.id != only) continue;
        ++ran;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        std::printf("[%s] AC%-2d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }
    return failed ? 1 : 0;
}
