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

#include <string>
#include <vector>

namespace idwalk {

struct CheckResult {
    std::string name;
    double error = 0.0;
    double tolerance = 0.0;
    bool passed() const { return error <= tolerance; }
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.0;
    bool passed() const;
};

/// Factorized engine against the dense (2L²)^N oracle at L = 3, N ∈ {2, 4},
/// 40 steps, φ ∈ {0, π/4, π/2, 3π/4, π}.
SuiteReport oracle_suite();

/// Periodic-lattice eigenpairs and return amplitude at L = 6, t = 0.1.
SuiteReport spectral_suite();

}  // namespace idwalk
