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

// idwalk: command-line driver for the identical-particle quantum walk library.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idwalk/config.hpp"
#include "idwalk/error.hpp"
#include "idwalk/figures.hpp"
#include "idwalk/output.hpp"
#include "idwalk/timeseries.hpp"
#include "idwalk/verify.hpp"
#include "idwalk/version.hpp"

namespace fs = std::filesystem;
using namespace idwalk;

namespace {

// "out/data.csv" -> "out/data" + suffix
std::string with_suffix(const std::string& csv_path, const std::string& suffix) {
    fs::path p(csv_path);
    if (p.extension() == ".csv") p.replace_extension();
    return p.string() + suffix;
}

void report_warnings(const std::vector<TimeSeriesTable>& tables) {
    for (const auto& t : tables)
        for (const auto& w : t.warnings) std::cerr << "warning: " << w << "\n";
}

void write_outputs(const RunConfig& cfg, const std::vector<TimeSeriesTable>& tables, const std::string& out) {
    if (out.empty() || out == "-") {
        for (const auto& t : tables) emit_csv(t, std::cout);
        return;
    }
    for (const auto& t : tables) {
        const std::string path = tables.size() == 1 ? out : with_suffix(out, ".L" + std::to_string(t.L) + ".csv");
        std::ostringstream csv;
        emit_csv(t, csv);
        write_file(path, csv.str());
        if (!t.joints.empty()) {
            std::ostringstream joint;
            emit_joint_csv(t, cfg.steps, joint);
            write_file(with_suffix(path, ".joint.csv"), joint.str());
        }
    }
    write_file(with_suffix(out, ".meta.json"), metadata_json(cfg, tables));
}

int cmd_run(const std::string& config_path, std::string out) {
    const RunConfig cfg = load_run_config(config_path);
    if (cfg.L.size() != 1) throw ValidationError("run takes a single L; use sweep for several sizes");
    if (out.empty()) out = cfg.output;
    const std::vector<TimeSeriesTable> tables{run_timeseries(cfg, cfg.L.front(), 1)};
    report_warnings(tables);
    write_outputs(cfg, tables, out);
    return 0;
}

int cmd_sweep(const std::string& config_path, int workers, std::string out) {
    const RunConfig cfg = load_run_config(config_path);
    if (out.empty()) out = cfg.output;
    std::vector<TimeSeriesTable> tables;
    for (int L : cfg.L) tables.push_back(run_timeseries(cfg, L, workers));
    report_warnings(tables);
    write_outputs(cfg, tables, out);
    return 0;
}

int cmd_verify(const std::string& suite) {
    std::vector<SuiteReport> reports;
    if (suite == "oracle" || suite == "all") reports.push_back(oracle_suite());
    if (suite == "spectral" || suite == "all") reports.push_back(spectral_suite());
    bool ok = true;
    for (const auto& r : reports) {
        for (const auto& c : r.checks) {
            std::printf("[%s] %-9s %-46s err=%.3e tol=%.1e\n", c.passed() ? "PASS" : "FAIL", r.suite.c_str(),
                        c.name.c_str(), c.error, c.tolerance);
        }
        std::printf("%s suite: %s (%.2f s)\n", r.suite.c_str(), r.passed() ? "ok" : "FAILED", r.seconds);
        ok = ok && r.passed();
    }
    return ok ? 0 : 2;
}

int cmd_figs(const std::string& id, const std::string& out) {
    const std::string doc = serialize(figure_config(id));
    if (out.empty() || out == "-") std::cout << doc;
    else write_file(out, doc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Identical-particle quantum walks on a square lattice"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string config_path, out, suite = "all", figure;
    int workers = 1;

    auto* run = app.add_subcommand("run", "Evaluate a time series for one lattice size");
    run->add_option("--config", config_path, "JSON run configuration")->required();
    run->add_option("--out", out, "CSV output path (default: config output, '-' for stdout)");

    auto* sweep = app.add_subcommand("sweep", "Evaluate every (L, preset, phi) cell of a config");
    sweep->add_option("--config", config_path, "JSON run configuration")->required();
    sweep->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 1024));
    sweep->add_option("--out", out, "CSV output path");

    auto* verify = app.add_subcommand("verify", "Cross-check the engine against reference computations");
    verify->add_option("--suite", suite, "oracle, spectral or all")
        ->check(CLI::IsMember({"oracle", "spectral", "all"}));

    auto* figs = app.add_subcommand("figs", "Print the run configuration for a figure");
    figs->add_option("--figure", figure, "2..7 or app1..app4")->required();
    figs->add_option("--out", out, "Write the config here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run) return cmd_run(config_path, out);
        if (*sweep) return cmd_sweep(config_path, workers, out);
        if (*verify) return cmd_verify(suite);
        if (*figs) return cmd_figs(figure, out);
    } catch (const Error& e) {
        std::cerr << "idwalk: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "idwalk: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
