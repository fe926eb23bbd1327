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
#include <string_view>
#include <vector>

#include "idwalk/lattice.hpp"
#include "idwalk/presets.hpp"
#include "idwalk/walk.hpp"

namespace idwalk {

enum class Observable { Coincidence, Delta12, Velocity, Qfi, Entropy, Purity, Zeta, JointDist };

std::string_view to_string(Observable o);
/// Throws ValidationError for unknown names.
Observable parse_observable(std::string_view name);

/// One initial condition: a preset tag, or "S0" with explicit labels.
struct InitialCondition {
    std::string tag;
    std::vector<BasisLabel> labels;
};

struct RunConfig {
    std::vector<int> L{16};  ///< a single size for `run`; `sweep` accepts several
    WalkModel model;
    std::vector<std::string> presets;       ///< tags "I".."IV", or {"S0"}
    std::vector<BasisLabel> explicit_s0;    ///< used when presets == {"S0"}
    int spacing = 1;
    std::vector<double> phi{0.0};
    int steps = 0;
    std::vector<Observable> observables{Observable::Coincidence, Observable::Delta12};
    std::string output;
    double fit_lo = 4.8;
    double fit_hi = 5.15;
    std::optional<int> bell_split;                  ///< A-set size; N/2 when absent
    std::optional<std::pair<int, int>> probe_site;  ///< adds two-point columns at r1 = r2
    std::string note;                               ///< copied into the metadata sidecar

    bool wants(Observable o) const;
    /// Initial conditions for lattice size `L`, in config order.
    std::vector<InitialCondition> initial_conditions(int L) const;
};

/// Parses and fully validates a JSON config document. Syntax errors report
/// line and column; validation errors list every violated field. Both throw
/// ValidationError.
RunConfig parse_run_config(std::string_view text);

/// Throws ValidationError listing every violation.
void validate(const RunConfig& config);

/// Canonical JSON form (all keys, defaults filled in, 2-space indent).
std::string serialize(const RunConfig& config);

/// Reads and parses a config file; IoError if unreadable.
RunConfig load_run_config(const std::string& path);

}  // namespace idwalk
