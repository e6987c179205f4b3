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

#include "bribelab/attack_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace bribelab {
namespace {

constexpr double kShareSumTolerance = 1e-12;
constexpr double kHonestShareTolerance = 1e-9;

double sum(const std::vector<double>& values) {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

std::string describe(const char* what, double value) {
  std::ostringstream out;
  out.precision(17);
  out << what << " (got " << value << ")";
  return out.str();
}

}  // namespace

ValidationError::ValidationError(std::string field, const std::string& message)
    : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

void AttackParams::validate() const {
  if (horizon < 1) throw ValidationError("T", describe("horizon must be at least 1", horizon));
  if (initial_gap < 1) throw ValidationError("l0", describe("initial gap must be at least 1", initial_gap));
  if (!(gamma > 0.0 && gamma < 1.0)) throw ValidationError("gamma", describe("must lie in (0, 1)", gamma));
  if (!(g_def >= 0.0 && g_def < 1.0)) throw ValidationError("g_def", describe("must lie in [0, 1)", g_def));
  if (!(phi > 0.0) || !std::isfinite(phi)) throw ValidationError("phi", describe("must be positive and finite", phi));
  if (!(reward > 0.0) || !std::isfinite(reward)) throw ValidationError("reward", describe("must be positive and finite", reward));
  if (!(epsilon_payment >= 0.0) || !std::isfinite(epsilon_payment)) {
    throw ValidationError("epsilon", describe("must be non-negative and finite", epsilon_payment));
  }
}

double MinerPopulation::honest_share() const noexcept { return sum(honest); }
double MinerPopulation::noncommitted_share() const noexcept { return sum(noncommitted); }

MinerPopulation MinerPopulation::equal_split(const AttackParams& params) {
  MinerPopulation population;
  if (params.g_def > 0.0) population.honest.push_back(params.g_def);
  const double rest = 1.0 - params.g_def;
  // 0.6 / 0.05 evaluates to 11.999999999999998; the slack keeps exact ratios
  // from rounding up to an extra miner.
  const auto count = static_cast<std::size_t>(std::ceil(rest / params.gamma - 1e-9));
  // 0.9 / 30 rounds one ulp above 0.03; clamping keeps every share <= gamma
  // and moves the sum by far less than the 1e-12 tolerance.
  if (count > 0) population.noncommitted.assign(count, std::min(rest / static_cast<double>(count), params.gamma));
  return population;
}

void MinerPopulation::validate(const AttackParams& params) const {
  for (double share : honest) {
    if (!(share >= 0.0)) throw ValidationError("miners.honest", describe("shares must be non-negative", share));
  }
  for (double share : noncommitted) {
    if (!(share >= 0.0)) throw ValidationError("miners.noncommitted", describe("shares must be non-negative", share));
    if (share > params.gamma) {
      throw ValidationError("miners.noncommitted", describe("share exceeds gamma; such miners belong to the honest pool", share));
    }
  }
  const double total = honest_share() + noncommitted_share();
  if (std::abs(total - 1.0) > kShareSumTolerance) throw ValidationError("miners", describe("shares must sum to 1", total));
  if (std::abs(honest_share() - params.g_def) > kHonestShareTolerance) {
    throw ValidationError("miners.honest", describe("honest shares must sum to g_def", honest_share()));
  }
}

CostReport CostReport::make(Money per_block, Money corruption) {
  CostReport report;
  report.per_block = per_block;
  report.corruption = corruption;
  report.total = per_block + corruption;
  return report;
}

bool is_reachable(const GameState& state, int horizon, int initial_gap) noexcept {
  if (state.t < 0 || state.t > horizon || state.gap < 0) return false;
  if (std::abs(state.gap - initial_gap) > state.t) return false;
  if ((state.gap + initial_gap + state.t) % 2 != 0) return false;
  // Any positive gap is reachable along a path that stays positive (climb
  // first, then descend); zero is reachable only as a first hit.
  return true;
}

std::vector<GameState> reachable_states(int horizon, int initial_gap) {
  std::vector<GameState> states;
  for (int t = 0; t <= horizon; ++t) {
    const int lowest = std::max(0, initial_gap - t);
    for (int gap = lowest; gap <= initial_gap + t; ++gap) {
      GameState state{t, gap};
      if (is_reachable(state, horizon, initial_gap)) states.push_back(state);
    }
  }
  return states;
}

std::vector<GameState> reachable_states(const AttackParams& params) {
  return reachable_states(params.horizon, params.initial_gap);
}

}  // namespace bribelab
