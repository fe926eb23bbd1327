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

#include "idwalk/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "idwalk/ensemble.hpp"
#include "idwalk/error.hpp"

namespace idwalk {

using nlohmann::json;

namespace {

constexpr std::string_view kObservableNames[] = {"coincidence", "delta12", "velocity", "qfi",
                                                 "entropy",     "purity",  "zeta",     "joint_dist"};

const std::set<std::string> kTopKeys = {"L",     "model",        "preset",     "S0",
                                        "spacing", "phi",        "steps",      "observables",
                                        "output", "fit_window",  "bell_split", "probe_site", "note"};
const std::set<std::string> kModelKeys = {"kind", "t", "theta", "boundary"};

class Violations {
public:
    void add(const std::string& field, const std::string& what) { items_.push_back(field + ": " + what); }
    bool empty() const { return items_.empty(); }
    [[noreturn]] void raise() const {
        std::string msg = "invalid run config (" + std::to_string(items_.size()) + " problem" +
                          (items_.size() == 1 ? "" : "s") + ")";
        for (const auto& s : items_) msg += "\n  " + s;
        throw ValidationError(msg);
    }

private:
    std::vector<std::string> items_;
};

bool read_int(const json& j, int& out) {
    if (!j.is_number_integer()) return false;
    const auto v = j.get<long long>();
    if (v < INT32_MIN || v > INT32_MAX) return false;
    out = static_cast<int>(v);
    return true;
}

std::optional<BasisLabel> read_label(const json& j) {
    if (!j.is_array() || j.size() != 3) return std::nullopt;
    BasisLabel b;
    if (!read_int(j[0], b.x) || !read_int(j[1], b.y) || !j[2].is_string()) return std::nullopt;
    const auto s = j[2].get<std::string>();
    if (s == "up") b.spin = Spin::Up;
    else if (s == "down") b.spin = Spin::Down;
    else return std::nullopt;
    return b;
}

void check(const RunConfig& c, Violations& v) {
    if (c.L.empty()) v.add("L", "must list at least one size");
    for (int L : c.L)
        if (L < 1) v.add("L", "must be >= 1, got " + std::to_string(L));
    if (!(c.model.t >= 0.0) || !std::isfinite(c.model.t)) v.add("model.t", "must be finite and >= 0");
    if (!(c.model.theta >= 0.0 && c.model.theta < 2 * std::numbers::pi))
        v.add("model.theta", "must lie in [0, 2pi)");
    if (c.model.kind == WalkKind::SplitStep && c.model.boundary != Boundary::Periodic)
        v.add("model.boundary", "split_step requires periodic boundary");
    if (c.steps < 0) v.add("steps", "must be >= 0, got " + std::to_string(c.steps));
    if (c.phi.empty()) v.add("phi", "must list at least one value");
    for (double p : c.phi)
        if (!(p >= 0.0 && p <= std::numbers::pi)) v.add("phi", "value outside [0, pi]");
    if (c.spacing < 1) v.add("spacing", "must be >= 1");
    if (c.presets.empty()) v.add("preset", "no initial condition given");
    if (!(c.fit_lo < c.fit_hi)) v.add("fit_window", "lower bound must be below upper bound");

    const bool explicit_s0 = c.presets.size() == 1 && c.presets[0] == "S0";
    int particles = 4;
    if (explicit_s0) {
        particles = static_cast<int>(c.explicit_s0.size());
        try {
            IdenticalEnsemble e(c.explicit_s0, 0.0);
            for (int L : c.L)
                if (L >= 1) e.check_fits(LatticeSpec(L, c.model.boundary));
        } catch (const Error& e) {
            v.add("S0", e.what());
        }
    } else {
        for (const auto& tag : c.presets) {
            try {
                const Preset p = parse_preset(tag);
                for (int L : c.L)
                    if (L >= 1 && c.spacing >= 1) preset_configuration(p, L, c.spacing);
            } catch (const Error& e) {
                v.add("preset", e.what());
            }
        }
    }
    if (c.bell_split && (*c.bell_split < 1 || *c.bell_split >= particles))
        v.add("bell_split", "must satisfy 1 <= bell_split < N");
    if (c.probe_site) {
        for (int L : c.L) {
            const auto [x, y] = *c.probe_site;
            if (x < 0 || y < 0 || x >= L || y >= L) v.add("probe_site", "outside the lattice for L=" + std::to_string(L));
        }
    }
    const bool spin_obs = c.wants(Observable::Qfi) || c.wants(Observable::Entropy) ||
                          c.wants(Observable::Purity) || c.wants(Observable::Zeta);
    if (spin_obs && particles > 6) v.add("observables", "spin-space observables support at most 6 particles");
    if (c.wants(Observable::Velocity)) {
        const double reach = c.steps * c.model.time_scale();
        if (reach < c.fit_hi) {
            std::ostringstream os;
            os << "velocity needs tau up to " << c.fit_hi << " but steps reach only " << reach;
            v.add("fit_window", os.str());
        }
    }
}

}  // namespace

std::string_view to_string(Observable o) { return kObservableNames[static_cast<int>(o)]; }

Observable parse_observable(std::string_view name) {
    for (int i = 0; i < 8; ++i)
        if (kObservableNames[i] == name) return static_cast<Observable>(i);
    throw ValidationError("unknown observable '" + std::string(name) + "'");
}

bool RunConfig::wants(Observable o) const {
    return std::find(observables.begin(), observables.end(), o) != observables.end();
}

std::vector<InitialCondition> RunConfig::initial_conditions(int size) const {
    std::vector<InitialCondition> out;
    if (presets.size() == 1 && presets[0] == "S0") {
        out.push_back({"S0", explicit_s0});
        return out;
    }
    for (const auto& tag : presets) out.push_back({tag, preset_configuration(parse_preset(tag), size, spacing)});
    return out;
}

void validate(const RunConfig& config) {
    Violations v;
    check(config, v);
    if (!v.empty()) v.raise();
}

RunConfig parse_run_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // nlohmann reports "line L, column C" in its message
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("config must be a JSON object");

    RunConfig c;
    Violations v;
    for (const auto& [key, _] : doc.items())
        if (!kTopKeys.count(key)) v.add(key, "unknown key");

    if (doc.contains("L")) {
        const json& j = doc["L"];
        c.L.clear();
        int L = 0;
        if (read_int(j, L)) c.L.push_back(L);
        else if (j.is_array() && !j.empty()) {
            for (const json& e : j) {
                if (read_int(e, L)) c.L.push_back(L);
                else v.add("L", "entries must be integers");
            }
        } else v.add("L", "must be an integer or a non-empty list of integers");
    } else {
        v.add("L", "required");
    }

    if (doc.contains("model")) {
        const json& m = doc["model"];
        if (!m.is_object()) v.add("model", "must be an object");
        else {
            for (const auto& [key, _] : m.items())
                if (!kModelKeys.count(key)) v.add("model." + key, "unknown key");
            if (m.contains("kind")) {
                const json& k = m["kind"];
                if (k == "conditional_hop") c.model.kind = WalkKind::ConditionalHop;
                else if (k == "split_step") {
                    c.model.kind = WalkKind::SplitStep;
                    c.model.boundary = Boundary::Periodic;
                } else v.add("model.kind", "expected \"conditional_hop\" or \"split_step\"");
            }
            if (m.contains("t")) {
                if (m["t"].is_number()) c.model.t = m["t"].get<double>();
                else v.add("model.t", "must be a number");
            }
            if (m.contains("theta")) {
                if (m["theta"].is_number()) c.model.theta = m["theta"].get<double>();
                else v.add("model.theta", "must be a number");
            }
            if (m.contains("boundary")) {
                const json& b = m["boundary"];
                if (b == "open") c.model.boundary = Boundary::Open;
                else if (b == "periodic") c.model.boundary = Boundary::Periodic;
                else v.add("model.boundary", "expected \"open\" or \"periodic\"");
            }
        }
    }

    const bool has_s0 = doc.contains("S0");
    if (doc.contains("preset")) {
        const json& p = doc["preset"];
        std::vector<std::string> tags;
        if (p.is_string()) tags.push_back(p.get<std::string>());
        else if (p.is_array() && !p.empty() && std::all_of(p.begin(), p.end(), [](const json& e) { return e.is_string(); }))
            for (const json& e : p) tags.push_back(e.get<std::string>());
        else v.add("preset", "must be a tag or a non-empty list of tags");
        for (const auto& t : tags) {
            if (t == "S0") {
                if (tags.size() != 1) v.add("preset", "\"S0\" cannot be combined with other presets");
                if (!has_s0) v.add("S0", "required when preset is \"S0\"");
            } else if (has_s0) {
                v.add("preset", "explicit S0 given together with preset " + t);
            }
        }
        c.presets = tags;
    } else if (has_s0) {
        c.presets = {"S0"};
    } else {
        v.add("preset", "required (or give S0)");
    }
    if (has_s0) {
        const json& s = doc["S0"];
        if (!s.is_array()) v.add("S0", "must be a list of [x, y, \"up\"|\"down\"]");
        else
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (auto b = read_label(s[i])) c.explicit_s0.push_back(*b);
                else v.add("S0[" + std::to_string(i) + "]", "expected [x, y, \"up\"|\"down\"]");
            }
    }

    if (doc.contains("spacing") && !read_int(doc["spacing"], c.spacing)) v.add("spacing", "must be an integer");

    if (doc.contains("phi")) {
        const json& p = doc["phi"];
        c.phi.clear();
        if (p.is_number()) c.phi.push_back(p.get<double>());
        else if (p.is_array()) {
            for (const json& e : p) {
                if (e.is_number()) c.phi.push_back(e.get<double>());
                else v.add("phi", "entries must be numbers");
            }
        } else v.add("phi", "must be a number or a list of numbers");
    }

    if (doc.contains("steps")) {
        if (!read_int(doc["steps"], c.steps)) v.add("steps", "must be an integer");
    } else {
        v.add("steps", "required");
    }

    if (doc.contains("observables")) {
        const json& o = doc["observables"];
        c.observables.clear();
        if (!o.is_array()) v.add("observables", "must be a list");
        else
            for (const json& e : o) {
                try {
                    if (!e.is_string()) throw ValidationError("entries must be strings");
                    const Observable ob = parse_observable(e.get<std::string>());
                    if (!c.wants(ob)) c.observables.push_back(ob);
                } catch (const ValidationError& err) {
                    v.add("observables", err.what());
                }
            }
    }

    if (doc.contains("output")) {
        if (doc["output"].is_string()) c.output = doc["output"].get<std::string>();
        else v.add("output", "must be a string");
    }

    if (doc.contains("fit_window")) {
        const json& w = doc["fit_window"];
        if (w.is_array() && w.size() == 2 && w[0].is_number() && w[1].is_number()) {
            c.fit_lo = w[0].get<double>();
            c.fit_hi = w[1].get<double>();
        } else v.add("fit_window", "must be [lo, hi]");
    }

    if (doc.contains("bell_split")) {
        int m = 0;
        if (read_int(doc["bell_split"], m)) c.bell_split = m;
        else v.add("bell_split", "must be an integer");
    }

    if (doc.contains("probe_site")) {
        const json& p = doc["probe_site"];
        int x = 0, y = 0;
        if (p.is_array() && p.size() == 2 && read_int(p[0], x) && read_int(p[1], y)) c.probe_site = {x, y};
        else v.add("probe_site", "must be [x, y]");
    }

    if (doc.contains("note")) {
        if (doc["note"].is_string()) c.note = doc["note"].get<std::string>();
        else v.add("note", "must be a string");
    }

    if (v.empty()) check(c, v);
    if (!v.empty()) v.raise();
    return c;
}

std::string serialize(const RunConfig& c) {
    json doc = json::object();
    if (c.L.size() == 1) doc["L"] = c.L[0];
    else doc["L"] = c.L;
    doc["model"] = {
        {"kind", c.model.kind == WalkKind::SplitStep ? "split_step" : "conditional_hop"},
        {"t", c.model.t},
        {"theta", c.model.theta},
        {"boundary", c.model.boundary == Boundary::Periodic ? "periodic" : "open"},
    };
    doc["preset"] = c.presets;
    if (c.presets.size() == 1 && c.presets[0] == "S0") {
        json s = json::array();
        for (const auto& b : c.explicit_s0) s.push_back({b.x, b.y, b.spin == Spin::Up ? "up" : "down"});
        doc["S0"] = s;
    }
    doc["spacing"] = c.spacing;
    doc["phi"] = c.phi;
    doc["steps"] = c.steps;
    json obs = json::array();
    for (Observable o : c.observables) obs.push_back(std::string(to_string(o)));
    doc["observables"] = obs;
    doc["output"] = c.output;
    doc["fit_window"] = {c.fit_lo, c.fit_hi};
    if (c.bell_split) doc["bell_split"] = *c.bell_split;
    if (c.probe_site) doc["probe_site"] = {c.probe_site->first, c.probe_site->second};
    if (!c.note.empty()) doc["note"] = c.note;
    return doc.dump(2) + "\n";
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_run_config(ss.str());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

}  // namespace idwalk
