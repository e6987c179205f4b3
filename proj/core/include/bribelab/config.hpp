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

#ifndef BRIBELAB_CONFIG_HPP_
#define BRIBELAB_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bribelab/attack_model.hpp"

namespace bribelab {

// The document does not parse or does not match the schema.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  AttackParams params;
  MinerPopulation population;
  std::uint64_t seed = 0;
};

// Parses a JSON document with keys T, l0, gamma, g_def, phi (default 1.0),
// reward (default 1.0), epsilon (default 0.0), seed (default 0) and an optional
// miners object {"honest": [...], "noncommitted": [...]}. Unknown keys are
// rejected. A missing miners object yields MinerPopulation::equal_split.
//
// Throws ConfigError on schema problems and ValidationError on invariant
// violations.
Config load_config(std::string_view document);
Config load_config_file(const std::filesystem::path& path);

// Inverse of load_config; always writes the miners object.
std::string dump_config(const Config& config);

}  // namespace bribelab

#endif  // BRIBELAB_CONFIG_HPP_
