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

#include "idwalk/timeseries.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "idwalk/bell.hpp"
#include "idwalk/error.hpp"
#include "idwalk/spinspace.hpp"

namespace idwalk {

namespace {

struct CellResult {
    std::vector<TimeSeriesRow> rows;
    CellSummary summary;
    std::optional<JointDistribution> joint;
};

constexpr Observable kColumnOrder[] = {Observable::Coincidence, Observable::Delta12, Observable::Qfi,
                                       Observable::Entropy,     Observable::Purity,  Observable::Zeta};

CellResult run_cell(const RunConfig& cfg, int L, const InitialCondition& ic, double phi) {
    const IdenticalEnsemble ensemble(ic.labels, phi);
    const StepOperator op(L, cfg.model);
    PropagatedSet set = propagate_set(ensemble, L, cfg.model, 0);
    const int N = ensemble.size();

    const bool joint_obs = cfg.wants(Observable::Coincidence) || cfg.wants(Observable::Delta12) ||
                           cfg.wants(Observable::Velocity);
    const bool spin_obs = cfg.wants(Observable::Qfi) || cfg.wants(Observable::Entropy) ||
                          cfg.wants(Observable::Purity) || cfg.wants(Observable::Zeta);
    const CMatrix generator = cfg.wants(Observable::Qfi) ? ising_generator(N) : CMatrix();
    const BellSettings bell =
        cfg.wants(Observable::Zeta) ? default_settings(N, cfg.bell_split.value_or(N / 2)) : BellSettings{};

    CellResult out;
    out.summary.preset = ic.tag;
    out.summary.phi = phi;
    DistanceSeries distances;
    for (int n = 0; n <= cfg.steps; ++n) {
        if (n > 0) advance(set, op);
        TimeSeriesRow row{ic.tag, phi, n, set.tau(), {}};
        out.summary.max_edge_probability = std::max(out.summary.max_edge_probability, edge_probability(set));
        out.summary.max_gram_defect = std::max(out.summary.max_gram_defect, gram_defect(set));

        JointObservables jo;
        if (joint_obs) {
            jo = joint_observables(set);
            distances.push_back({n, set.tau(), jo.delta12});
        }
        std::optional<SpinDensity> rho;
        std::optional<EigenSystem> eig;
        if (spin_obs) {
            rho = reduced_spin_density(set);
            eig = hermitian_eigensystem(rho->rho);
            const double lo = eig->values.back();
            out.summary.min_spin_eigenvalue = std::min(out.summary.min_spin_eigenvalue.value_or(lo), lo);
        }
        for (Observable o : kColumnOrder) {
            if (!cfg.wants(o)) continue;
            switch (o) {
                case Observable::Coincidence: row.values.push_back(jo.coincidence); break;
                case Observable::Delta12: row.values.push_back(jo.delta12); break;
                case Observable::Qfi: row.values.push_back(qfi(*eig, generator)); break;
                case Observable::Entropy: row.values.push_back(von_neumann_entropy(*eig)); break;
                case Observable::Purity: row.values.push_back(purity(rho->rho)); break;
                case Observable::Zeta: row.values.push_back(zeta(correlation_tensor(rho->rho, bell))); break;
                default: break;
            }
        }
        if (cfg.probe_site) {
            const auto [x, y] = *cfg.probe_site;
            for (Spin a : {Spin::Up, Spin::Down})
                for (Spin b : {Spin::Up, Spin::Down})
                    row.values.push_back(two_point_correlation(set, {x, y, a}, {x, y, b}));
        }
        for (double v : row.values) {
            if (!std::isfinite(v)) {
                std::ostringstream os;
                os << "non-finite observable at preset " << ic.tag << ", phi " << phi << ", n " << n;
                throw NumericError(os.str());
            }
        }
        out.rows.push_back(std::move(row));
    }
    if (cfg.wants(Observable::Velocity)) out.summary.velocity = spread_velocity(distances, cfg.fit_lo, cfg.fit_hi);
    if (cfg.wants(Observable::JointDist)) {
        out.joint = joint_distribution(set);
        out.summary.min_joint_entry = out.joint->min_entry();
    }
    return out;
}

}  // namespace

std::vector<std::string> table_columns(const RunConfig& config) {
    std::vector<std::string> cols;
    for (Observable o : kColumnOrder)
        if (config.wants(o)) cols.emplace_back(to_string(o));
    if (config.probe_site) {
        for (const char* c : {"c_up_up", "c_up_down", "c_down_up", "c_down_down"}) cols.emplace_back(c);
    }
    return cols;
}

TimeSeriesTable run_timeseries(const RunConfig& config, int L, int workers) {
    validate(config);
    const auto ics = config.initial_conditions(L);
    struct Cell {
        const InitialCondition* ic;
        double phi;
    };
    std::vector<Cell> cells;
    for (const auto& ic : ics)
        for (double phi : config.phi) cells.push_back({&ic, phi});

    std::vector<CellResult> results(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                results[i] = run_cell(config, L, *cells[i].ic, cells[i].phi);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int threads = std::clamp<int>(workers, 1, static_cast<int>(std::max<std::size_t>(cells.size(), 1)));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    TimeSeriesTable table;
    table.L = L;
    table.columns = table_columns(config);
    for (auto& r : results) {
        for (auto& row : r.rows) table.rows.push_back(std::move(row));
        if (config.model.boundary == Boundary::Open && r.summary.max_edge_probability > kBoundaryLeakThreshold) {
            std::ostringstream os;
            os << "boundary leak: preset " << r.summary.preset << ", phi " << r.summary.phi << ", L " << L
               << ": edge probability reached " << r.summary.max_edge_probability;
            table.warnings.push_back(os.str());
        }
        if (r.joint) table.joints.push_back({r.summary.preset, r.summary.phi, std::move(*r.joint)});
        table.cells.push_back(std::move(r.summary));
    }
    return table;
}

TimeSeriesTable run_timeseries(const RunConfig& config) {
    if (config.L.empty()) throw ValidationError("config has no lattice size");
    return run_timeseries(config, config.L.front());
}

}  // namespace idwalk
