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

#include "idwalk/figures.hpp"

#include <numbers>
#include <string>

#include "idwalk/error.hpp"

namespace idwalk {

namespace {

using std::numbers::pi;

RunConfig base(int L, int steps, std::vector<Observable> obs) {
    RunConfig c;
    c.L = {L};
    c.model = WalkModel::conditional_hop(0.05, Boundary::Open);
    c.presets = {"I", "II", "III", "IV"};
    c.phi = {0.0, pi / 4, pi / 2, 3 * pi / 4, pi};
    c.steps = steps;
    c.observables = std::move(obs);
    return c;
}

}  // namespace

std::vector<std::string_view> figure_ids() {
    return {"2", "3", "4", "5", "6", "7", "app1", "app2", "app3", "app4"};
}

RunConfig figure_config(std::string_view id) {
    RunConfig c;
    if (id == "2") {
        c = base(16, 50, {Observable::Coincidence});
    } else if (id == "3") {
        // 103 steps so that tau = n t covers the fit window
        c = base(40, 103, {Observable::Delta12, Observable::Velocity});
    } else if (id == "4") {
        c = base(40, 50, {Observable::Qfi});
    } else if (id == "5") {
        c = base(40, 50, {Observable::Entropy});
    } else if (id == "6") {
        c = base(40, 50, {Observable::Purity});
    } else if (id == "7") {
        c = base(40, 30, {Observable::Zeta});
    } else if (id == "app1") {
        c = base(3, 40, {});
        c.model.t = 0.1;
        c.presets = {"S0"};
        c.explicit_s0 = {{0, 0, Spin::Up}, {0, 2, Spin::Down}, {2, 0, Spin::Down}, {2, 2, Spin::Up}};
        c.probe_site = {2, 2};
    } else if (id == "app2") {
        c = base(40, 103, {Observable::Delta12, Observable::Velocity});
        c.L = {10, 20, 30, 40};
        c.presets = {"III"};
        c.phi = {pi};
    } else if (id == "app3") {
        c = base(40, 50, {Observable::Coincidence});
        c.model = WalkModel::split_step();
    } else if (id == "app4") {
        c = base(40, 12, {Observable::Delta12, Observable::Velocity});
        c.model = WalkModel::split_step();
        c.fit_lo = 4.0;
        c.fit_hi = 12.0;
        c.note = "split-step spread velocities, tau = n";
    } else {
        throw ValidationError("unknown figure '" + std::string(id) + "'");
    }
    c.output = "fig" + std::string(id) + ".csv";
    validate(c);
    return c;
}

}  // namespace idwalk
