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

#include <optional>
#include <string>
#include <vector>

#include "idwalk/config.hpp"
#include "idwalk/correlations.hpp"

namespace idwalk {

struct TimeSeriesRow {
    std::string preset;
    double phi = 0.0;
    int n = 0;
    double tau = 0.0;
    std::vector<double> values;  ///< one per TimeSeriesTable::columns entry
};

/// Per-(preset, φ) diagnostics that do not fit the row layout.
struct CellSummary {
    std::string preset;
    double phi = 0.0;
    double max_edge_probability = 0.0;
    double max_gram_defect = 0.0;
    std::optional<double> min_spin_eigenvalue;  ///< before clamping; only if spin observables ran
    std::optional<double> min_joint_entry;      ///< only if joint_dist ran
    std::optional<VelocityFit> velocity;
};

struct JointSnapshot {
    std::string preset;
    double phi = 0.0;
    JointDistribution dist;
};

struct TimeSeriesTable {
    int L = 0;
    std::vector<std::string> columns;  ///< observable columns after preset,phi,n,tau
    std::vector<TimeSeriesRow> rows;   ///< ordered by (preset, φ, n) in config order
    std::vector<CellSummary> cells;
    std::vector<JointSnapshot> joints;  ///< final-step distributions when joint_dist is requested
    std::vector<std::string> warnings;
};

/// Edge probability above this on an open lattice is reported as a warning.
inline constexpr double kBoundaryLeakThreshold = 1e-8;

/// Column names for the configured observables.
std::vector<std::string> table_columns(const RunConfig& config);

/// Evaluates every (preset, φ) cell for lattice size L. Cells may run on
/// `workers` threads; the result does not depend on the worker count.
TimeSeriesTable run_timeseries(const RunConfig& config, int L, int workers = 1);

/// First entry of config.L.
TimeSeriesTable run_timeseries(const RunConfig& config);

}  // namespace idwalk
