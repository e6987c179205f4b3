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

#include "bribelab/value_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bribelab {
namespace {

// Probabilities below this are flushed to zero to stay out of subnormals.
constexpr double kFlushBelow = 1e-300;

double flush(double value) { return value < kFlushBelow ? 0.0 : value; }

int band_width_limit(int horizon, int initial_gap, int t) {
  return std::min(initial_gap + t + 1, horizon - t + 1);
}

std::vector<std::size_t> band_offsets(int horizon, int initial_gap) {
  std::vector<std::size_t> offsets(static_cast<std::size_t>(horizon) + 2);
  offsets[0] = 0;
  for (int t = 0; t <= horizon; ++t) {
    offsets[t + 1] = offsets[t] + static_cast<std::size_t>(band_width_limit(horizon, initial_gap, t)) + 1;
  }
  return offsets;
}

[[noreturn]] void throw_out_of_band(const char* what, int t, int gap) {
  throw std::out_of_range(std::string(what) + ": (t=" + std::to_string(t) + ", l=" + std::to_string(gap) + ") is outside the computed band");
}

}  // namespace

ValueTable::ValueTable(const AttackParams& params) : params_(params) {
  params_.validate();
  const int horizon = params_.horizon;
  const int l0 = params_.initial_gap;
  const double up = params_.threshold_walk_up_probability();
  const double down = 1.0 - up;

  row_offset_ = band_offsets(horizon, l0);
  cells_.resize(row_offset_.back());

  // Two working rows per recursion. Gaps above T - t keep their terminal
  // values (survival 1, hit 0) and gaps above the band are never read.
  const auto width = static_cast<std::size_t>(l0 + horizon + 3);
  std::vector<double> survival_next(width, 1.0), hit_next(width, 0.0);
  survival_next[0] = 0.0;
  hit_next[0] = 1.0;
  std::vector<double> survival_row = survival_next, hit_row = hit_next;

  auto store_row = [&](int t, const std::vector<double>& survival, const std::vector<double>& hit) {
    const int limit = band_limit(t);
    double* out = cells_.data() + row_offset_[t];
    for (int l = 0; l <= limit; ++l) out[l] = survival[l] <= 0.5 ? survival[l] : -hit[l];
  };

  store_row(horizon, survival_next, hit_next);
  for (int t = horizon - 1; t >= 0; --t) {
    const int last = std::min(l0 + t + 1, horizon - t);
    for (int l = 1; l <= last; ++l) {
      survival_row[l] = flush(up * survival_next[l + 1] + down * survival_next[l - 1]);
      hit_row[l] = flush(up * hit_next[l + 1] + down * hit_next[l - 1]);
    }
    store_row(t, survival_row, hit_row);
    std::swap(survival_row, survival_next);
    std::swap(hit_row, hit_next);
  }
}

int ValueTable::band_limit(int t) const {
  if (t < 0 || t > params_.horizon) throw std::out_of_range("timestep " + std::to_string(t) + " outside [0, T]");
  return band_width_limit(params_.horizon, params_.initial_gap, t);
}

bool ValueTable::contains(int t, int gap) const noexcept {
  if (t < 0 || t > params_.horizon || gap < 0) return false;
  if (gap > params_.horizon - t) return true;
  return gap <= band_width_limit(params_.horizon, params_.initial_gap, t);
}

ValueTable::Cell ValueTable::cell(int t, int gap) const {
  if (t < 0 || t > params_.horizon || gap < 0) throw_out_of_band("wmax", t, gap);
  if (gap > 0 && gap > params_.horizon - t) return {0.0, true};
  if (gap > band_width_limit(params_.horizon, params_.initial_gap, t)) throw_out_of_band("wmax", t, gap);
  const double raw = cells_[row_offset_[t] + static_cast<std::size_t>(gap)];
  return {std::abs(raw), std::signbit(raw)};
}

double ValueTable::survival(int t, int gap) const {
  const Cell c = cell(t, gap);
  return c.is_hit ? 1.0 - c.value : c.value;
}

double ValueTable::hit(int t, int gap) const {
  const Cell c = cell(t, gap);
  return c.is_hit ? c.value : 1.0 - c.value;
}

void ValueTable::check_payout_key(int t_prev, int gap) const {
  if (t_prev < 0 || t_prev >= params_.horizon || gap < 1) {
    throw std::out_of_range("payout key (t-1=" + std::to_string(t_prev) + ", l=" + std::to_string(gap) + ") needs 0 <= t-1 < T and l >= 1");
  }
}

double ValueTable::payout_fraction(int t_prev, int gap) const {
  check_payout_key(t_prev, gap);
  const Cell upper = cell(t_prev + 1, gap + 1);
  const Cell lower = cell(t_prev + 1, gap - 1);
  if (upper.is_hit && lower.is_hit) return lower.value - upper.value;
  if (!upper.is_hit && !lower.is_hit) return upper.value - lower.value;
  const double upper_survival = upper.is_hit ? 1.0 - upper.value : upper.value;
  const double lower_survival = lower.is_hit ? 1.0 - lower.value : lower.value;
  return upper_survival - lower_survival;
}

ValueTable build_value_table(const AttackParams& params) { return ValueTable(params); }

Money payout_at(const ValueTable& table, int t_minus_1, int gap) {
  const Money base = table.base_payout(t_minus_1, gap);
  const Money epsilon = table.params().epsilon_payment;
  return (base == 0.0 && epsilon > 0.0) ? epsilon : base;
}

MinerValueTable::MinerValueTable(const ValueTable& table, double share) : table_(&table), share_(share) {
  const AttackParams& params = table.params();
  if (!(share >= 0.0 && share <= params.gamma)) {
    throw std::domain_error("miner share " + std::to_string(share) + " is outside [0, gamma]; the payout rule does not cover larger miners");
  }
  const int horizon = params.horizon;
  const int l0 = params.initial_gap;
  row_offset_ = band_offsets(horizon, l0);
  values_.resize(row_offset_.back());

  const Money stake = params.phi * share * params.reward;
  const double defend = params.g_def;
  const double attack = 1.0 - params.g_def;

  const auto width = static_cast<std::size_t>(l0 + horizon + 3);
  std::vector<Money> next(width, stake), row(width, stake);
  next[0] = row[0] = 0.0;

  auto store_row = [&](int t, const std::vector<Money>& values) {
    const int limit = table.band_limit(t);
    std::copy_n(values.begin(), limit + 1, values_.begin() + static_cast<std::ptrdiff_t>(row_offset_[t]));
  };

  store_row(horizon, next);
  for (int t = horizon - 1; t >= 0; --t) {
    const int last = std::min(l0 + t + 1, horizon - t);
    for (int l = 1; l <= last; ++l) {
      row[l] = defend * next[l + 1] + attack * next[l - 1] + share * table.base_payout(t, l);
    }
    store_row(t, row);
    std::swap(row, next);
  }
}

Money MinerValueTable::value(int t, int gap) const {
  const AttackParams& params = table_->params();
  if (t < 0 || t > params.horizon || gap < 0) throw_out_of_band("miner value", t, gap);
  if (gap > 0 && gap > params.horizon - t) return params.phi * share_ * params.reward;
  if (gap > table_->band_limit(t)) throw_out_of_band("miner value", t, gap);
  return values_[row_offset_[t] + static_cast<std::size_t>(gap)];
}

Money miner_value(const ValueTable& table, double share, const GameState& state) {
  return MinerValueTable(table, share).value(state);
}

EquilibriumAudit audit_equilibrium(const ValueTable& table, std::span<const double> shares) {
  const AttackParams& params = table.params();
  EquilibriumAudit audit;
  audit.tolerance = 1e-12 * params.threshold_stake();

  for (double share : shares) {
    const MinerValueTable miner(table, share);
    ShareAudit result;
    result.share = share;
    result.max_violation = -std::numeric_limits<double>::infinity();
    const bool below_threshold = share < params.gamma;

    for (int t = 1; t <= params.horizon; ++t) {
      // Reachable positive gaps one step earlier, i.e. the states a block is
      // mined from.
      const int prev = t - 1;
      const int lowest = std::max(1, params.initial_gap - prev);
      const int first = (lowest + params.initial_gap + prev) % 2 == 0 ? lowest : lowest + 1;
      for (int l = first; l <= params.initial_gap + prev; l += 2) {
        const Money loss = miner.value(t, l + 1) - miner.value(t, l - 1);
        const Money payout = table.base_payout(prev, l);
        const Money violation = loss - payout;
        result.max_violation = std::max(result.max_violation, violation);
        result.max_abs_slack = std::max(result.max_abs_slack, std::abs(violation));
        ++result.states_checked;
        if (payout == 0.0) ++result.zero_payout_states;
        if (below_threshold && payout > audit.tolerance && loss >= payout) ++result.non_strict_states;
      }
    }
    if (result.states_checked == 0) result.max_violation = 0.0;
    result.pivotal_step_ok = below_threshold ? params.threshold_stake() > params.phi * share * params.reward : true;

    audit.max_violation = audit.shares.empty() ? result.max_violation : std::max(audit.max_violation, result.max_violation);
    audit.passed = audit.passed && result.max_violation <= audit.tolerance && result.pivotal_step_ok && result.non_strict_states == 0;
    audit.shares.push_back(result);
  }
  return audit;
}

std::vector<double> default_share_grid(double gamma, int points) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  for (int i = 1; i <= points; ++i) grid.push_back(i == points ? gamma : gamma * i / points);
  return grid;
}

}  // namespace bribelab
