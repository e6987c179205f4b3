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

#include "bribelab/config.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace bribelab {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 9> kKnownKeys = {"T", "l0", "gamma", "g_def", "phi", "reward", "epsilon", "seed", "miners"};

int read_int(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ConfigError(std::string("missing required key '") + key + "'");
  const json& value = doc.at(key);
  if (!value.is_number_integer()) throw ConfigError(std::string("key '") + key + "' must be an integer");
  const auto raw = value.get<std::int64_t>();
  if (raw < std::numeric_limits<int>::min() || raw > std::numeric_limits<int>::max()) {
    throw ConfigError(std::string("key '") + key + "' is out of range");
  }
  return static_cast<int>(raw);
}

double read_double(const json& doc, const char* key, std::optional<double> fallback) {
  if (!doc.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(std::string("missing required key '") + key + "'");
  }
  const json& value = doc.at(key);
  if (!value.is_number()) throw ConfigError(std::string("key '") + key + "' must be a number");
  return value.get<double>();
}

std::vector<double> read_shares(const json& miners, const char* key) {
  if (!miners.contains(key)) return {};
  const json& list = miners.at(key);
  if (!list.is_array()) throw ConfigError(std::string("miners.") + key + " must be an array of numbers");
  std::vector<double> shares;
  shares.reserve(list.size());
  for (const json& item : list) {
    if (!item.is_number()) throw ConfigError(std::string("miners.") + key + " must be an array of numbers");
    shares.push_back(item.get<double>());
  }
  return shares;
}

}  // namespace

Config load_config(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& item : doc.items()) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), item.key()) == kKnownKeys.end()) {
      throw ConfigError("unknown key '" + item.key() + "'");
    }
  }

  Config config;
  AttackParams& params = config.params;
  params.horizon = read_int(doc, "T");
  params.initial_gap = read_int(doc, "l0");
  params.gamma = read_double(doc, "gamma", std::nullopt);
  params.g_def = read_double(doc, "g_def", std::nullopt);
  params.phi = read_double(doc, "phi", 1.0);
  params.reward = read_double(doc, "reward", 1.0);
  params.epsilon_payment = read_double(doc, "epsilon", 0.0);
  if (doc.contains("seed")) {
    const json& seed = doc.at("seed");
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
      throw ConfigError("key 'seed' must be an unsigned 64-bit integer");
    }
    config.seed = seed.get<std::uint64_t>();
  }
  params.validate();

  if (doc.contains("miners")) {
    const json& miners = doc.at("miners");
    if (!miners.is_object()) throw ConfigError("miners must be an object");
    for (const auto& item : miners.items()) {
      if (item.key() != "honest" && item.key() != "noncommitted") throw ConfigError("unknown key 'miners." + item.key() + "'");
    }
    config.population.honest = read_shares(miners, "honest");
    config.population.noncommitted = read_shares(miners, "noncommitted");
  } else {
    config.population = MinerPopulation::equal_split(params);
  }
  config.population.validate(params);
  return config;
}

Config load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_config(buffer.str());
}

std::string dump_config(const Config& config) {
  const AttackParams& p = config.params;
  json doc = {
      {"T", p.horizon},
      {"l0", p.initial_gap},
      {"gamma", p.gamma},
      {"g_def", p.g_def},
      {"phi", p.phi},
      {"reward", p.reward},
      {"epsilon", p.epsilon_payment},
      {"seed", config.seed},
      {"miners", {{"honest", config.population.honest}, {"noncommitted", config.population.noncommitted}}},
  };
  return doc.dump(2);
}

}  // namespace bribelab
