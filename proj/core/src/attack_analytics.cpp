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

#include "bribelab/attack_analytics.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>

namespace bribelab {
namespace {

constexpr double kFlushBelow = 1e-300;

// Runs the absorbing walk forward. `visit(t, alive)` sees the alive mass at
// time t for gaps 0..l0+t (gap 0 always zero) before the step to t + 1;
// `absorb(t, mass)` sees the mass first hitting zero at t.
template <typename Visit, typename Absorb>
void propagate(int horizon, int initial_gap, double up, Visit&& visit, Absorb&& absorb) {
  const double down = 1.0 - up;
  const auto width = static_cast<std::size_t>(initial_gap + horizon + 2);
  std::vector<double> alive(width, 0.0), next(width, 0.0);
  alive[static_cast<std::size_t>(initial_gap)] = 1.0;

  for (int t = 0; t < horizon; ++t) {
    const int top = initial_gap + t;
    visit(t, std::span<const double>(alive.data(), static_cast<std::size_t>(top) + 1));
    std::fill_n(next.begin(), top + 2, 0.0);
    for (int l = 1; l <= top; ++l) {
      const double mass = alive[l];
      if (mass == 0.0) continue;
      next[l + 1] += up * mass;
      next[l - 1] += down * mass;
    }
    absorb(t + 1, next[0]);
    next[0] = 0.0;
    for (int l = 1; l <= top + 1; ++l) {
      if (next[l] < kFlushBelow) next[l] = 0.0;
    }
    std::swap(alive, next);
  }
  visit(horizon, std::span<const double>(alive.data(), static_cast<std::size_t>(initial_gap + horizon) + 1));
}

double sum(std::span<const double> values) {
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

struct ForwardTotals {
  SuccessProbability probability;
  double expected_duration = 0.0;
  double attack_blocks = 0.0;       // expected count
  double corruption_fraction = 0.0;  // in units of phi*gamma*R
  double epsilon_blocks = 0.0;       // expected count of zero-payout attack blocks
};

ForwardTotals forward_totals(const AttackParams& params, const ValueTable* table) {
  ForwardTotals totals;
  const int horizon = params.horizon;
  const double attack = params.attack_probability();
  double absorbed_time = 0.0;
  propagate(
      horizon, params.initial_gap, params.defend_probability(),
      [&](int t, std::span<const double> alive) {
        if (t == horizon) {
          totals.probability.failure = sum(alive);
          return;
        }
        double blocks = 0.0, corruption = 0.0, zero_payout = 0.0;
        for (std::size_t l = 1; l < alive.size(); ++l) {
          if (alive[l] == 0.0) continue;
          const double mass = attack * alive[l];
          blocks += mass;
          if (table != nullptr) {
            const double payout = table->payout_fraction(t, static_cast<int>(l));
            corruption += mass * payout;
            if (payout == 0.0) zero_payout += mass;
          }
        }
        totals.attack_blocks += blocks;
        totals.corruption_fraction += corruption;
        totals.epsilon_blocks += zero_payout;
      },
      [&](int t, double mass) {
        totals.probability.success += mass;
        absorbed_time += t * mass;
      });
  totals.expected_duration = absorbed_time + horizon * totals.probability.failure;
  return totals;
}

void check_same_params(const AttackParams& params, const ValueTable& table) {
  const AttackParams& other = table.params();
  if (other.horizon != params.horizon || other.initial_gap != params.initial_gap || other.gamma != params.gamma ||
      other.g_def != params.g_def || other.phi != params.phi || other.reward != params.reward) {
    throw std::invalid_argument("value table was built from different attack parameters");
  }
}

CostReport cost_from(const AttackParams& params, const ForwardTotals& totals) {
  CostReport report = CostReport::make(params.reward * totals.attack_blocks, params.threshold_stake() * totals.corruption_fraction);
  report.epsilon_payments = params.epsilon_payment * totals.epsilon_blocks;
  report.success_probability = totals.probability.success;
  return report;
}

struct PathValue {
  double corruption = 0.0;  // units of phi*gamma*R
  int blocks = 0;

  friend bool operator<(const PathValue& a, const PathValue& b) {
    return a.corruption < b.corruption || (a.corruption == b.corruption && a.blocks < b.blocks);
  }
};

}  // namespace

ForwardMass::ForwardMass(int horizon, int initial_gap, double up_probability)
    : horizon_(horizon), initial_gap_(initial_gap) {
  if (horizon < 0 || initial_gap < 1) throw std::invalid_argument("forward mass needs horizon >= 0 and initial gap >= 1");
  if (!(up_probability >= 0.0 && up_probability <= 1.0)) throw std::invalid_argument("up probability must lie in [0, 1]");
  row_offset_.resize(static_cast<std::size_t>(horizon) + 2, 0);
  for (int t = 0; t <= horizon; ++t) row_offset_[t + 1] = row_offset_[t] + static_cast<std::size_t>(initial_gap + t) + 1;
  alive_.resize(row_offset_.back(), 0.0);
  absorbed_.assign(static_cast<std::size_t>(horizon) + 1, 0.0);
  propagate(
      horizon, initial_gap, up_probability,
      [&](int t, std::span<const double> alive) { std::copy(alive.begin(), alive.end(), alive_.begin() + static_cast<std::ptrdiff_t>(row_offset_[t])); },
      [&](int t, double mass) { absorbed_[static_cast<std::size_t>(t)] = mass; });
}

double ForwardMass::alive(int t, int gap) const {
  if (t < 0 || t > horizon_) throw std::out_of_range("timestep " + std::to_string(t) + " outside [0, T]");
  if (gap < 0 || gap > initial_gap_ + t) return 0.0;
  return alive_[row_offset_[t] + static_cast<std::size_t>(gap)];
}

double ForwardMass::alive_total(int t) const {
  if (t < 0 || t > horizon_) throw std::out_of_range("timestep " + std::to_string(t) + " outside [0, T]");
  return sum(std::span<const double>(alive_.data() + row_offset_[t], row_offset_[t + 1] - row_offset_[t]));
}

double ForwardMass::absorbed_by(int t) const {
  double total = 0.0;
  for (int i = 0; i <= std::min(t, horizon_); ++i) total += absorbed_[static_cast<std::size_t>(i)];
  return total;
}

SuccessProbability success_probability(const AttackParams& params) {
  params.validate();
  return forward_totals(params, nullptr).probability;
}

double expected_duration(const AttackParams& params) {
  params.validate();
  return forward_totals(params, nullptr).expected_duration;
}

double walk_survival_probability(int horizon, int initial_gap, double up_probability) {
  double survival = 0.0;
  propagate(
      horizon, initial_gap, up_probability,
      [&](int t, std::span<const double> alive) {
        if (t == horizon) survival = sum(alive);
      },
      [](int, double) {});
  return survival;
}

CostReport expected_cost(const AttackParams& params, const ValueTable& table) {
  check_same_params(params, table);
  return cost_from(params, forward_totals(params, &table));
}

WorstCaseReport worst_case_cost(const AttackParams& params, const ValueTable& table) {
  check_same_params(params, table);
  const int horizon = params.horizon;
  const int l0 = params.initial_gap;
  const bool can_defend = params.g_def > 0.0;

  const auto width = static_cast<std::size_t>(l0 + horizon + 3);
  std::vector<PathValue> worst_next(width), best_next(width), worst_row(width), best_row(width);
  // Largest money total per path, corruption and reimbursement together.
  std::vector<Money> total_next(width, 0.0), total_row(width, 0.0);
  const Money stake = params.threshold_stake();
  for (int t = horizon - 1; t >= 0; --t) {
    for (int l = 1; l <= l0 + t; ++l) {
      const double payout = table.payout_fraction(t, l);
      // Reaching gap zero ends the game; next[0] stays {0, 0}.
      PathValue worst_attack{payout + worst_next[l - 1].corruption, 1 + worst_next[l - 1].blocks};
      PathValue best_attack{payout + best_next[l - 1].corruption, 1 + best_next[l - 1].blocks};
      worst_row[l] = worst_attack;
      best_row[l] = best_attack;
      total_row[l] = stake * payout + params.reward + total_next[l - 1];
      if (can_defend) {
        worst_row[l] = std::max(worst_attack, worst_next[l + 1]);
        best_row[l] = std::min(best_attack, best_next[l + 1]);
        total_row[l] = std::max(total_row[l], total_next[l + 1]);
      }
    }
    std::swap(worst_row, worst_next);
    std::swap(best_row, best_next);
    std::swap(total_row, total_next);
  }

  const PathValue worst = worst_next[static_cast<std::size_t>(l0)];
  const PathValue best = best_next[static_cast<std::size_t>(l0)];
  WorstCaseReport report;
  report.worst = CostReport::make(params.reward * worst.blocks, stake * worst.corruption);
  report.best = CostReport::make(params.reward * best.blocks, stake * best.corruption);
  report.worst_attack_blocks = worst.blocks;
  report.best_attack_blocks = best.blocks;
  report.worst_with_horizon_reimbursement = report.worst.corruption + params.reward * horizon;
  report.max_path_total = total_next[static_cast<std::size_t>(l0)];
  return report;
}

CostReport pooled_smoothing_cost([[maybe_unused]] const AttackParams& params, const CostReport& base) {
  CostReport pooled = CostReport::make(2.0 * base.per_block, base.corruption);
  pooled.epsilon_payments = base.epsilon_payments;
  pooled.success = base.success;
  pooled.success_probability = base.success_probability;
  return pooled;
}

ExactAnalysis analyze(const AttackParams& params, const ValueTable& table) {
  check_same_params(params, table);
  const ForwardTotals totals = forward_totals(params, &table);
  ExactAnalysis analysis;
  analysis.probability = totals.probability;
  analysis.expected_duration = totals.expected_duration;
  analysis.expected = cost_from(params, totals);
  analysis.extremes = worst_case_cost(params, table);
  return analysis;
}

}  // namespace bribelab
