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

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "idwalk/config.hpp"
#include "idwalk/timeseries.hpp"

namespace idwalk {

/// Shortest decimal form that reads back to the same double.
std::string format_real(double v);

/// Header `preset,phi,n,tau,<columns...>`, one LF-terminated line per row.
void emit_csv(const TimeSeriesTable& table, std::ostream& out);

/// `preset,phi,n,x1,y1,x2,y2,p` for every stored final-step distribution;
/// rounding negatives are written as 0 (the minimum goes to the metadata).
void emit_joint_csv(const TimeSeriesTable& table, int steps, std::ostream& out);

/// 64-bit FNV-1a over the canonical serialized config.
std::uint64_t config_hash(const RunConfig& config);

/// Sidecar document: tool version, config hash, per-cell diagnostics,
/// velocity fits, warnings and convention notes.
std::string metadata_json(const RunConfig& config, const std::vector<TimeSeriesTable>& tables);

/// Writes `contents` to `path`; IoError with the path on failure.
void write_file(const std::string& path, const std::string& contents);

}  // namespace idwalk
