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

#include <string_view>
#include <vector>

#include "idwalk/lattice.hpp"

namespace idwalk {

/// Four-walker initial geometries on the square r_A..r_D around the centre
/// c = floor(L/2), with corners c ± s:
///   r_A = (c−s, c−s), r_B = (c−s, c+s), r_C = (c+s, c−s), r_D = (c+s, c+s).
enum class Preset { I, II, III, IV };

std::string_view to_string(Preset p);
/// Accepts "I", "II", "III", "IV". Throws ValidationError otherwise.
Preset parse_preset(std::string_view tag);

///   I   (A↑)(B↑)(C↑)(D↑)
///   II  (A↑)(B↓)(C↓)(D↑)
///   III (A↑)(A↓)(D↑)(D↓)
///   IV  (A↑)(A↓)(B↑)(D↓)
/// Throws BoundsError unless s ≥ 1 and c ± s lies in [0, L−1].
std::vector<BasisLabel> preset_configuration(Preset p, int L, int s = 1);

}  // namespace idwalk
