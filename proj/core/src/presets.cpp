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

#include "idwalk/presets.hpp"

#include <string>

#include "idwalk/error.hpp"

namespace idwalk {

std::string_view to_string(Preset p) {
    switch (p) {
        case Preset::I: return "I";
        case Preset::II: return "II";
        case Preset::III: return "III";
        case Preset::IV: return "IV";
    }
    return "?";
}

Preset parse_preset(std::string_view tag) {
    if (tag == "I") return Preset::I;
    if (tag == "II") return Preset::II;
    if (tag == "III") return Preset::III;
    if (tag == "IV") return Preset::IV;
    throw ValidationError("unknown preset '" + std::string(tag) + "' (expected I, II, III or IV)");
}

std::vector<BasisLabel> preset_configuration(Preset p, int L, int s) {
    const int c = L / 2;
    if (s < 1 || c - s < 0 || c + s > L - 1) {
        throw BoundsError("preset " + std::string(to_string(p)) + " with spacing " + std::to_string(s) +
                          " does not fit on L=" + std::to_string(L));
    }
    const int lo = c - s, hi = c + s;
    const auto at = [](int x, int y, Spin sp) { return BasisLabel{x, y, sp}; };
    switch (p) {
        case Preset::I:
            return {at(lo, lo, Spin::Up), at(lo, hi, Spin::Up), at(hi, lo, Spin::Up), at(hi, hi, Spin::Up)};
        case Preset::II:
            return {at(lo, lo, Spin::Up), at(lo, hi, Spin::Down), at(hi, lo, Spin::Down), at(hi, hi, Spin::Up)};
        case Preset::III:
            return {at(lo, lo, Spin::Up), at(lo, lo, Spin::Down), at(hi, hi, Spin::Up), at(hi, hi, Spin::Down)};
        case Preset::IV:
            return {at(lo, lo, Spin::Up), at(lo, lo, Spin::Down), at(lo, hi, Spin::Up), at(hi, hi, Spin::Down)};
    }
    return {};
}

}  // namespace idwalk
