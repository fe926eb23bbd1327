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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "idwalk/config.hpp"
#include "idwalk/error.hpp"
#include "idwalk/figures.hpp"
#include "idwalk/oracle.hpp"
#include "idwalk/output.hpp"
#include "idwalk/presets.hpp"
#include "idwalk/timeseries.hpp"
#include "idwalk/verify.hpp"

using namespace idwalk;
using std::numbers::pi;

namespace {

std::string csv_of(const TimeSeriesTable& t) {
    std::ostringstream os;
    emit_csv(t, os);
    return os.str();
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Presets, GeometryAndSpins) {
    const auto one = preset_configuration(Preset::I, 16);
    std::set<std::pair<int, int>> sites;
    for (const auto& b : one) {
        EXPECT_EQ(b.spin, Spin::Up);
        sites.insert({b.x, b.y});
    }
    EXPECT_EQ(sites.size(), 4u);
    EXPECT_EQ(one[0], (BasisLabel{7, 7, Spin::Up}));
    EXPECT_EQ(one[3], (BasisLabel{9, 9, Spin::Up}));

    const auto three = preset_configuration(Preset::III, 16);
    std::map<std::pair<int, int>, std::set<Spin>> occ;
    for (const auto& b : three) occ[{b.x, b.y}].insert(b.spin);
    ASSERT_EQ(occ.size(), 2u);
    for (const auto& [site, spins] : occ) EXPECT_EQ(spins.size(), 2u);

    const auto four = preset_configuration(Preset::IV, 16);
    EXPECT_EQ(four[0], (BasisLabel{7, 7, Spin::Up}));
    EXPECT_EQ(four[1], (BasisLabel{7, 7, Spin::Down}));
    EXPECT_EQ(four[2], (BasisLabel{7, 9, Spin::Up}));
    EXPECT_EQ(four[3], (BasisLabel{9, 9, Spin::Down}));
}

TEST(Presets, SmallLatticeMatchesCornerPatternUpToTranslation) {
    // L = 3, s = 1 puts the square on the corners (0,0)..(2,2)
    const auto two = preset_configuration(Preset::II, 3);
    const std::vector<BasisLabel> corners = {{0, 0, Spin::Up}, {0, 2, Spin::Down}, {2, 0, Spin::Down}, {2, 2, Spin::Up}};
    EXPECT_EQ(two, corners);
}

TEST(Presets, ValidForAllLegalSizesAndRejectsOverflow) {
    for (Preset p : {Preset::I, Preset::II, Preset::III, Preset::IV})
        for (int L = 3; L <= 20; ++L)
            for (int s = 1; L / 2 + s <= L - 1; ++s) EXPECT_NO_THROW(IdenticalEnsemble(preset_configuration(p, L, s), 0.0));
    EXPECT_THROW(preset_configuration(Preset::I, 2), BoundsError);
    EXPECT_THROW(preset_configuration(Preset::I, 16, 8), BoundsError);
    EXPECT_THROW(preset_configuration(Preset::I, 16, 0), BoundsError);
    EXPECT_THROW(parse_preset("V"), ValidationError);
}

TEST(Config, MinimalDocumentGetsDefaults) {
    const auto c = parse_run_config(R"({"L":16, "preset":"III", "phi":[0], "steps":50})");
    EXPECT_EQ(c.L, std::vector<int>{16});
    EXPECT_EQ(c.model.kind, WalkKind::ConditionalHop);
    EXPECT_DOUBLE_EQ(c.model.t, 0.05);
    EXPECT_DOUBLE_EQ(c.model.theta, pi / 4);
    EXPECT_EQ(c.model.boundary, Boundary::Open);
    EXPECT_DOUBLE_EQ(c.fit_lo, 4.8);
    EXPECT_DOUBLE_EQ(c.fit_hi, 5.15);
    EXPECT_EQ(c.spacing, 1);
    EXPECT_EQ(c.presets, std::vector<std::string>{"III"});
}

TEST(Config, SplitStepDefaultsToPeriodic) {
    const auto c = parse_run_config(R"({"L":8, "model":{"kind":"split_step"}, "preset":"I", "steps":3})");
    EXPECT_EQ(c.model.boundary, Boundary::Periodic);
    EXPECT_THROW(parse_run_config(R"({"L":8, "model":{"kind":"split_step","boundary":"open"}, "preset":"I", "steps":3})"),
                 ValidationError);
}

TEST(Config, RoundTripIsIdempotent) {
    const char* docs[] = {
        R"({"L":16, "preset":"III", "phi":[0, 3.141592653589793], "steps":50})",
        R"({"L":[10,20], "preset":["I","IV"], "steps":5, "observables":["qfi","zeta"], "bell_split":1})",
        R"({"L":3, "S0":[[0,0,"up"],[2,2,"down"]], "steps":4, "probe_site":[2,2], "note":"x"})",
    };
    for (const char* d : docs) {
        const std::string once = serialize(parse_run_config(d));
        EXPECT_EQ(serialize(parse_run_config(once)), once);
    }
}

TEST(Config, ErrorsNameTheField) {
    try {
        parse_run_config(R"({"L":16, "preset":"III", "steps":-1})");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("steps"), std::string::npos);
    }
}

TEST(Config, ListsEveryViolation) {
    try {
        parse_run_config(R"({"L":16, "preset":"III", "steps":-1, "phi":[4], "colour":1})");
        FAIL();
    } catch (const ValidationError& e) {
        const std::string m = e.what();
        EXPECT_NE(m.find("colour"), std::string::npos);
        EXPECT_NE(m.find("unknown key"), std::string::npos);
    }
    try {
        parse_run_config(R"({"L":16, "preset":"III", "steps":-1, "phi":[4]})");
        FAIL();
    } catch (const ValidationError& e) {
        const std::string m = e.what();
        EXPECT_NE(m.find("steps"), std::string::npos);
        EXPECT_NE(m.find("phi"), std::string::npos);
    }
}

TEST(Config, SyntaxErrorReportsLine) {
    try {
        parse_run_config("{\n  \"L\": 16,\n  \"steps\": ,\n}");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(Config, RejectsBadCombinations) {
    EXPECT_THROW(parse_run_config(R"({"L":16, "preset":"III", "steps":50, "observables":["velocity"]})"),
                 ValidationError);  // window beyond reach
    EXPECT_THROW(parse_run_config(R"({"L":2, "preset":"I", "steps":5})"), ValidationError);
    EXPECT_THROW(parse_run_config(R"({"L":16, "preset":"I", "S0":[[0,0,"up"],[1,1,"up"]], "steps":5})"),
                 ValidationError);
    EXPECT_THROW(parse_run_config(R"({"L":4, "S0":[[0,0,"up"],[0,0,"up"]], "steps":5})"), ValidationError);
    EXPECT_THROW(parse_run_config(R"({"L":16, "preset":"I", "steps":5, "observables":["magic"]})"), ValidationError);
    EXPECT_THROW(parse_run_config(R"([1,2])"), ValidationError);
}

TEST(Config, LoadMissingFileIsIoError) {
    EXPECT_THROW(load_run_config("/nonexistent/dir/config.json"), IoError);
}

TEST(Timeseries, ZeroStepRunIsPhaseIndependent) {
    auto c = parse_run_config(
        R"({"L":8, "preset":["III","IV"], "phi":[0, 1.0, 3.141592653589793], "steps":0,
            "observables":["coincidence","delta12","entropy","purity","zeta","qfi"]})");
    const auto t = run_timeseries(c);
    ASSERT_EQ(t.rows.size(), 6u);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        EXPECT_EQ(t.rows[i].n, 0);
        const auto& first = t.rows[i < 3 ? 0 : 3];
        EXPECT_EQ(t.rows[i].values[0], first.values[0]);
        EXPECT_EQ(t.rows[i].values[1], first.values[1]);
    }
    EXPECT_NEAR(t.rows[0].values[0], 1.0 / 3, 1e-15);
    EXPECT_NEAR(t.rows[3].values[0], 1.0 / 6, 1e-15);
}

TEST(Timeseries, RowOrderAndColumns) {
    auto c = parse_run_config(R"({"L":8, "preset":["II","I"], "phi":[1.0, 0], "steps":2, "observables":["delta12","coincidence"]})");
    const auto t = run_timeseries(c);
    EXPECT_EQ(t.columns, (std::vector<std::string>{"coincidence", "delta12"}));
    ASSERT_EQ(t.rows.size(), 12u);
    EXPECT_EQ(t.rows[0].preset, "II");
    EXPECT_EQ(t.rows[0].phi, 1.0);
    EXPECT_EQ(t.rows[2].n, 2);
    EXPECT_EQ(t.rows[3].phi, 0.0);
    EXPECT_EQ(t.rows[6].preset, "I");
}

TEST(Timeseries, SmallLatticeEqualsOracle) {
    auto c = parse_run_config(R"({"L":3, "model":{"t":0.1}, "preset":"III", "phi":[0.7], "steps":6,
                                  "observables":["coincidence","delta12","purity"], "probe_site":[1,1]})");
    const auto t = run_timeseries(c);
    const auto e = IdenticalEnsemble(preset_configuration(Preset::III, 3), 0.7);
    auto dense = oracle::assemble_full_state(e, LatticeSpec(3, Boundary::Open));
    for (const auto& row : t.rows) {
        if (row.n > 0) dense = oracle::full_step(dense, c.model);
        const auto jo = oracle::full_joint_observables(dense);
        EXPECT_NEAR(row.values[0], jo.coincidence, 1e-10);
        EXPECT_NEAR(row.values[1], jo.delta12, 1e-10);
        EXPECT_NEAR(row.values[2], purity(oracle::full_partial_trace(dense).rho), 1e-10);
        EXPECT_NEAR(row.values[3], oracle::full_two_point(dense, {1, 1, Spin::Up}, {1, 1, Spin::Up}), 1e-10);
        EXPECT_NEAR(row.values[4], oracle::full_two_point(dense, {1, 1, Spin::Up}, {1, 1, Spin::Down}), 1e-10);
    }
}

TEST(Timeseries, WorkerCountDoesNotChangeBytes) {
    auto c = parse_run_config(R"({"L":10, "preset":["I","II","III","IV"], "phi":[0, 1.5, 3], "steps":8,
                                  "observables":["coincidence","delta12","entropy"]})");
    const std::string a = csv_of(run_timeseries(c, 10, 1));
    const std::string b = csv_of(run_timeseries(c, 10, 3));
    const std::string again = csv_of(run_timeseries(c, 10, 1));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, again);
}

TEST(Timeseries, BoundaryLeakWarning) {
    // tiny lattice: walkers hit the edge immediately
    auto c = parse_run_config(R"({"L":3, "preset":"I", "steps":3})");
    const auto t = run_timeseries(c);
    ASSERT_FALSE(t.warnings.empty());
    EXPECT_NE(t.warnings[0].find("boundary leak"), std::string::npos);
}

TEST(Timeseries, VelocityAndJointSnapshot) {
    auto c = parse_run_config(R"({"L":8, "preset":"III", "phi":[3.141592653589793], "steps":6,
                                  "observables":["velocity","joint_dist"], "fit_window":[0.1, 0.3]})");
    const auto t = run_timeseries(c);
    ASSERT_EQ(t.cells.size(), 1u);
    ASSERT_TRUE(t.cells[0].velocity.has_value());
    EXPECT_EQ(t.cells[0].velocity->samples, 5);
    ASSERT_EQ(t.joints.size(), 1u);
    EXPECT_NEAR(t.joints[0].dist.total(), 1.0, 1e-10);
    ASSERT_TRUE(t.cells[0].min_joint_entry.has_value());
    EXPECT_TRUE(t.columns.empty());
}

TEST(Csv, HeaderOnlyAndOneRow) {
    TimeSeriesTable t;
    t.columns = {"coincidence"};
    EXPECT_EQ(csv_of(t), "preset,phi,n,tau,coincidence\n");
    t.rows.push_back({"III", 0.1, 2, 0.1, {1.0 / 3}});
    const std::string s = csv_of(t);
    EXPECT_EQ(count_lines(s), 2);
    EXPECT_EQ(s, "preset,phi,n,tau,coincidence\nIII,0.1,2,0.1,0.3333333333333333\n");
}

TEST(Csv, ShortestRoundTrip) {
    for (double v : {0.1, 1.0 / 3, 1e-300, 123456.789, pi, -2.5e-17}) EXPECT_EQ(std::stod(format_real(v)), v);
    EXPECT_EQ(format_real(0.5), "0.5");
    EXPECT_EQ(format_real(-0.0), "0");
}

TEST(Metadata, HashAndContents) {
    const auto a = parse_run_config(R"({"L":8, "preset":"I", "steps":1})");
    const auto b = parse_run_config(R"({"steps":1, "preset":["I"], "L":8})");
    const auto c = parse_run_config(R"({"L":8, "preset":"I", "steps":2})");
    EXPECT_EQ(config_hash(a), config_hash(b));
    EXPECT_NE(config_hash(a), config_hash(c));
    const std::string m = metadata_json(a, {run_timeseries(a)});
    EXPECT_NE(m.find("\"config_hash\": \"fnv1a64:"), std::string::npos);
    EXPECT_NE(m.find("max_edge_probability"), std::string::npos);
    EXPECT_NE(m.find("\"version\""), std::string::npos);
}

TEST(WriteFile, UnwritablePathIsIoError) {
    EXPECT_THROW(write_file("/nonexistent/dir/out.csv", "x"), IoError);
}

TEST(Figures, EveryIdYieldsAValidConfig) {
    for (auto id : figure_ids()) {
        const RunConfig c = figure_config(id);
        EXPECT_NO_THROW(validate(c)) << id;
        EXPECT_EQ(serialize(parse_run_config(serialize(c))), serialize(c)) << id;
    }
    EXPECT_EQ(figure_config("2").L.front(), 16);
    EXPECT_EQ(figure_config("app1").explicit_s0.size(), 4u);
    EXPECT_THROW(figure_config("8"), ValidationError);
}

TEST(Verify, SpectralSuitePasses) {
    const auto r = spectral_suite();
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed()) << c.name << " " << c.error;
}
