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

#include "presets.hpp"

namespace bribelab::cli {
namespace {

Preset make(std::string name, std::string description, AttackParams params) {
  Config config;
  config.params = params;
  config.population = MinerPopulation::equal_split(params);
  return Preset{std::move(name), std::move(description), std::move(config)};
}

std::vector<Preset> all_presets() {
  return {
      make("bitcoin-a", "Bitcoin, 150-block confirmation window, long attack", AttackParams{2500, 150, 0.05, 0.4, 158000.0}),
      make("bitcoin-b", "Bitcoin, 150-block confirmation window, short attack", AttackParams{400, 150, 0.03, 0.2, 158000.0}),
      make("cost-curve", "baseline of the T sweep behind the success and cost curve", AttackParams{2500, 150, 0.05, 0.4, 158000.0}),
  };
}

}  // namespace

std::optional<Preset> find_preset(std::string_view name) {
  for (Preset& preset : all_presets()) {
    if (preset.name == name) return std::move(preset);
  }
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const Preset& preset : all_presets()) names.push_back(preset.name);
  return names;
}

SweepPreset cost_curve_sweep() { return SweepPreset{"T", 200.0, 5000.0, 100.0}; }

}  // namespace bribelab::cli
