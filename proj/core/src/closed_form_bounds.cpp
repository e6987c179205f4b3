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

#include "bribelab/closed_form_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bribelab {
namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::domain_error(message);
}

BoundResult invalid(std::string note) { return BoundResult{std::nullopt, std::move(note), false}; }

CostBound invalid_cost(std::string note) {
  CostBound bound;
  bound.hypothesis_note = std::move(note);
  return bound;
}

BoundResult probability(double value, std::string note) {
  BoundResult result{value, std::move(note), false};
  if (value > 1.0 || value < 0.0) {
    result.value = std::clamp(value, 0.0, 1.0);
    result.clamped = true;
    result.hypothesis_note += result.hypothesis_note.empty() ? "clamped to [0, 1]" : "; clamped to [0, 1]";
  }
  return result;
}

// 1 - 2(g + gamma): drift of the threshold walk toward zero.
double threshold_drift(double g_def, double gamma) { return 1.0 - 2.0 * g_def - 2.0 * gamma; }

// (1-g-gamma)^{5/2} / (g+gamma)^{7/2}, shared by the level-hit and worst-case
// bounds.
double level_constant(double g_def, double gamma) {
  const double up = g_def + gamma;
  return std::pow(1.0 - up, 2.5) / std::pow(up, 3.5);
}

}  // namespace

Money budish_total_cost(int horizon, double phi, Money reward) {
  require(horizon >= 0 && phi >= 0.0 && reward >= 0.0, "budish cost needs non-negative T, phi and R");
  return (horizon + phi) * reward;
}

Money budish_miner_cost(int horizon, double phi, double share, Money reward) {
  require(share >= 0.0 && share <= 1.0, "miner share must lie in [0, 1]");
  return budish_total_cost(horizon, phi, reward) * share;
}

Money participation_loss_bound(Money immediate_loss, Money future_value, double epsilon) {
  require(immediate_loss >= 0.0 && future_value >= 0.0, "losses must be non-negative");
  require(epsilon >= 0.0 && epsilon <= 1.0, "epsilon must lie in [0, 1]");
  return immediate_loss + epsilon * future_value;
}

Money thresholding_cost(int horizon, double f_max, double phi, Money reward) {
  require(horizon >= 0 && phi >= 0.0 && reward >= 0.0, "thresholding cost needs non-negative T, phi and R");
  require(f_max >= 0.0 && f_max <= 1.0, "f_max must lie in [0, 1]");
  return (horizon + f_max * phi) * reward;
}

Money thresholding_miner_cost(int horizon, double f_max, double phi, double share, Money reward) {
  require(share >= 0.0 && share <= 1.0, "miner share must lie in [0, 1]");
  return thresholding_cost(horizon, f_max, phi, reward) * share;
}

FmaxSelection select_fmax(const MinerPopulation& population, const std::function<double(double)>& pivot_probability,
                          double coverage_target) {
  require(coverage_target > 0.5 && coverage_target <= 1.0, "coverage target must lie in (1/2, 1]");
  std::vector<std::pair<double, double>> miners;  // (flip bound, share)
  miners.reserve(population.noncommitted.size());
  for (double share : population.noncommitted) miners.emplace_back(pivot_probability(share), share);
  std::sort(miners.begin(), miners.end());

  FmaxSelection selection;
  double covered = 0.0;
  for (std::size_t i = 0; i < miners.size(); ++i) {
    covered += miners[i].second;
    // Miners tied at the same flip bound join together.
    if (i + 1 < miners.size() && miners[i + 1].first == miners[i].first) continue;
    if (covered >= coverage_target) {
      selection.feasible = true;
      selection.f_max = miners[i].first;
      selection.covered_share = covered;
      return selection;
    }
  }
  selection.covered_share = covered;
  return selection;
}

BoundResult failure_upper_bound(const AttackParams& params) {
  const double drift = 1.0 - 2.0 * params.g_def;
  if (!(drift > 0.0)) return invalid("needs g_def < 1/2");
  const double horizon = params.horizon;
  if (!(horizon > params.initial_gap / drift)) return invalid("needs T > l0 / (1 - 2 g_def)");
  const double shortfall = params.initial_gap - horizon * drift;
  return probability(std::exp(-0.5 * shortfall * shortfall / horizon), "");
}

BoundResult success_lower_bound(const AttackParams& params) {
  BoundResult failure = failure_upper_bound(params);
  if (!failure.valid()) return failure;
  return probability(1.0 - *failure.value, failure.hypothesis_note);
}

double expected_stopping_time_bound(int initial_gap, double g_def) {
  require(g_def >= 0.0 && g_def < 0.5, "stopping time needs 0 <= g_def < 1/2");
  require(initial_gap >= 0, "initial gap must be non-negative");
  return initial_gap / (1.0 - 2.0 * g_def);
}

BoundResult level_hit_probability_bound(int steps, double g_def, double gamma) {
  require(steps >= 1, "level-hit bound needs tau - t >= 1; use the trivial bound 1 at tau = t");
  require(g_def >= 0.0 && gamma > 0.0 && g_def + gamma < 1.0, "needs 0 < g_def + gamma < 1");
  const double value = level_constant(g_def, gamma) / (std::sqrt(2.0 * std::numbers::pi) * std::sqrt(static_cast<double>(steps)));
  return probability(value, "");
}

BoundResult argmin_tail_bound(int tail_steps, double g_def, double gamma) {
  require(tail_steps >= 0, "tail length must be non-negative");
  const double drift = threshold_drift(g_def, gamma);
  if (!(drift > 0.0)) return invalid("needs 1 - 2 g_def - 2 gamma > 0");
  return probability(std::exp(-0.5 * tail_steps * drift * drift), "");
}

double decayed_harmonic_sum_bound(double a, int t, int horizon) {
  require(a > 0.0 && a <= 1.0, "decay rate a must lie in (0, 1]");
  require(horizon >= t, "needs T >= t");
  const double span = horizon + 1.0 - t;
  const double geometric = 1.0 + 1.0 / (1.0 - std::exp(-a));
  const double radicand = span - 2.0 * std::log1p(std::sqrt(span)) / a;
  if (!(radicand > 0.0)) return geometric;
  return std::min(2.0 / std::sqrt(radicand), geometric);
}

double decayed_harmonic_sum_bound_with_tail_factor(double a, int t, int horizon) {
  require(a > 0.0 && a <= 1.0, "decay rate a must lie in (0, 1]");
  require(horizon >= t, "needs T >= t");
  const double span = horizon + 1.0 - t;
  const double tail_factor = 1.0 / (1.0 - std::exp(-a));
  const double geometric = 1.0 + tail_factor;
  const double radicand = span - 2.0 * std::log1p(std::sqrt(span)) / a;
  if (!(radicand > 0.0)) return geometric;
  return std::min(1.0 / (1.0 + std::sqrt(span)) + tail_factor / std::sqrt(radicand), geometric);
}

CostBound worst_case_cost_bound(const AttackParams& params) {
  if (!params.supercritical()) return invalid_cost("needs g_def + gamma < 1/2");
  const double horizon = params.horizon;
  const double drift = threshold_drift(params.g_def, params.gamma);
  const double bracket = 4.0 * std::log1p(std::sqrt(horizon)) / drift +
                         std::sqrt(2.0 / std::numbers::pi) * level_constant(params.g_def, params.gamma) * 2.0 * std::sqrt(horizon);
  CostBound bound;
  bound.per_block = horizon * params.reward;
  bound.corruption = params.threshold_stake() * bracket;
  bound.total = *bound.per_block + *bound.corruption;
  bound.vacuous = bracket >= horizon;
  if (bound.vacuous) bound.hypothesis_note = "vacuous regime";
  return bound;
}

CostBound expected_cost_bound(const AttackParams& params) {
  if (!params.supercritical()) return invalid_cost("needs g_def + gamma < 1/2");
  const double horizon = params.horizon;
  const double l0 = params.initial_gap;
  const double attack_drift = 1.0 - 2.0 * params.g_def;
  const double drift = threshold_drift(params.g_def, params.gamma);
  const double exponent = -(drift * drift * horizon / 2.0 - attack_drift * l0) / 2.0;
  CostBound bound;
  bound.per_block = params.reward * (l0 / 2.0 + l0 / (2.0 * attack_drift));
  bound.corruption = params.threshold_stake() * horizon * std::exp(exponent);
  bound.total = *bound.per_block + *bound.corruption;
  bound.vacuous = exponent >= 0.0;
  if (bound.vacuous) bound.hypothesis_note = "vacuous regime";
  return bound;
}

}  // namespace bribelab
