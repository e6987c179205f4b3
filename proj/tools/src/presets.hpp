// Copyright 2026 The bribelab Authors
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

// Named parameter sets for the published case studies and the cost curve.

#ifndef BRIBELAB_TOOLS_PRESETS_HPP_
#define BRIBELAB_TOOLS_PRESETS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bribelab/config.hpp"

namespace bribelab::cli {

// Block reward used to quote case-study costs in BTC. Presentation only: no
// core computation reads it.
inline constexpr double kCaseStudyBtcPerBlock = 6.25;
inline constexpr const char* kBtcProvenance =
    "converted at R = 6.25 BTC per block, the Bitcoin block subsidy when the case study was written";

struct Preset {
  std::string name;
  std::string description;
  Config config;
};

std::optional<Preset> find_preset(std::string_view name);
std::vector<std::string> preset_names();

// Grid of the T sweep that reproduces the success and cost curve:
// T = 200, 300, ..., 5000 at l0 = 150, gamma = 0.05, g_def = 0.4.
struct SweepPreset {
  std::string vary;
  double from;
  double to;
  double step;
};
SweepPreset cost_curve_sweep();

}  // namespace bribelab::cli

#endif  // BRIBELAB_TOOLS_PRESETS_HPP_
