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

#include "idwalk/output.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "idwalk/error.hpp"
#include "idwalk/version.hpp"

namespace idwalk {

std::string format_real(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc()) throw NumericError("cannot format value");
    std::string s(buf, res.ptr);
    if (s == "-0") s = "0";
    return s;
}

void emit_csv(const TimeSeriesTable& table, std::ostream& out) {
    std::string line = "preset,phi,n,tau";
    for (const auto& c : table.columns) line += "," + c;
    out << line << '\n';
    for (const auto& r : table.rows) {
        line = r.preset + "," + format_real(r.phi) + "," + std::to_string(r.n) + "," + format_real(r.tau);
        for (double v : r.values) line += "," + format_real(v);
        out << line << '\n';
    }
}

void emit_joint_csv(const TimeSeriesTable& table, int steps, std::ostream& out) {
    out << "preset,phi,n,x1,y1,x2,y2,p\n";
    const int L = table.L;
    for (const auto& j : table.joints) {
        const std::string prefix = j.preset + "," + format_real(j.phi) + "," + std::to_string(steps) + ",";
        for (std::size_t r1 = 0; r1 < j.dist.sites(); ++r1)
            for (std::size_t r2 = 0; r2 < j.dist.sites(); ++r2) {
                out << prefix << r1 % L << ',' << r1 / L << ',' << r2 % L << ',' << r2 / L << ','
                    << format_real(std::max(0.0, j.dist(r1, r2))) << '\n';
            }
    }
}

std::uint64_t config_hash(const RunConfig& config) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : serialize(config)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string metadata_json(const RunConfig& config, const std::vector<TimeSeriesTable>& tables) {
    using nlohmann::json;
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(config_hash(config)));
    json doc;
    doc["tool"] = "idwalk";
    doc["version"] = kVersion;
    doc["csv_schema"] = kCsvSchemaVersion;
    doc["config_hash"] = std::string("fnv1a64:") + hash;
    doc["config"] = json::parse(serialize(config));
    doc["conventions"] = {
        {"basis", "ordinal = ((y*L + x)*2 + spin), spin up = 0, down = 1"},
        {"tau", "n * t for conditional_hop, n for split_step"},
        {"joint_distribution", "spin-summed, slots 1 and 2"},
        {"distance", "Euclidean lattice distance, open-lattice metric"},
        {"spin_order", "rho_C tensor factors follow S0 order, first particle most significant"},
        {"bell", "A set {sz, sx} on the first bell_split particles, B set on the rest"},
        {"qfi_generator", "sum over i<j of sz_i sz_j"},
        {"entropy", "log base 2"},
        {"velocity", "least-squares slope of delta12 against tau inside fit_window"},
    };
    json warnings = json::array();
    json sizes = json::array();
    for (const auto& t : tables) {
        json cells = json::array();
        for (const auto& c : t.cells) {
            json cell = {{"preset", c.preset},
                         {"phi", c.phi},
                         {"max_edge_probability", c.max_edge_probability},
                         {"max_gram_defect", c.max_gram_defect}};
            if (c.min_spin_eigenvalue) cell["min_spin_eigenvalue"] = *c.min_spin_eigenvalue;
            if (c.min_joint_entry) cell["min_joint_entry"] = *c.min_joint_entry;
            if (c.velocity) {
                cell["velocity"] = {{"v", c.velocity->velocity},
                                    {"intercept", c.velocity->intercept},
                                    {"mean_abs_residual", c.velocity->fit_error},
                                    {"samples", c.velocity->samples}};
            }
            cells.push_back(cell);
        }
        sizes.push_back({{"L", t.L}, {"cells", cells}});
        for (const auto& w : t.warnings) warnings.push_back(w);
    }
    doc["runs"] = sizes;
    if (!config.note.empty()) doc["note"] = config.note;
    doc["warnings"] = warnings;
    return doc.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace idwalk
