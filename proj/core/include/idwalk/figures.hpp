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

#include "idwalk/config.hpp"

namespace idwalk {

/// Figure ids accepted by figure_config: "2".."7", "app1".."app4".
std::vector<std::string_view> figure_ids();

/// Run configuration producing the data for one figure. Throws
/// ValidationError for unknown ids.
RunConfig figure_config(std::string_view id);

}  // namespace idwalk
