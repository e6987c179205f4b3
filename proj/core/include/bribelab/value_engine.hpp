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

#ifndef BRIBELAB_VALUE_ENGINE_HPP_
#define BRIBELAB_VALUE_ENGINE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "bribelab/attack_model.hpp"

namespace bribelab {

// Pseudo-value function of a threshold-size miner and the payout schedule
// derived from it.
//
// wmax(t, l) is phi*gamma*R times the probability that a walk started at gap l
// at time t, stepping up with probability g_def + gamma and down otherwise,
// stays positive through time T. The payout for mining an attacking block from
// state (t - 1, l) is wmax(t, l + 1) - wmax(t, l - 1).
//
// Values are stored for gaps 0..min(l0 + t + 1, T - t + 1) of every row, which
// covers both parities of every reachable state. Beyond T - t the walk cannot
// reach zero and wmax is exactly phi*gamma*R; other gaps outside the stored
// band throw std::out_of_range.
class ValueTable {
 public:
  explicit ValueTable(const AttackParams& params);

  const AttackParams& params() const noexcept { return params_; }
  int horizon() const noexcept { return params_.horizon; }

  // Largest gap stored for row t.
  int band_limit(int t) const;
  // True when (t, gap) can be queried.
  bool contains(int t, int gap) const noexcept;

  // wmax / (phi*gamma*R), and its exact complement.
  double survival(int t, int gap) const;
  double hit(int t, int gap) const;
  Money wmax(int t, int gap) const { return params_.threshold_stake() * survival(t, gap); }

  // Payout for the block mined from state (t_prev, gap), in units of
  // phi*gamma*R and in money. Defined for 0 <= t_prev < T and gap >= 1.
  double payout_fraction(int t_prev, int gap) const;
  Money base_payout(int t_prev, int gap) const { return params_.threshold_stake() * payout_fraction(t_prev, gap); }

  std::size_t stored_cells() const noexcept { return cells_.size(); }

 private:
  struct Cell {
    double value;  // min(survival, hit)
    bool is_hit;   // value holds the hit probability
  };
  Cell cell(int t, int gap) const;
  void check_payout_key(int t_prev, int gap) const;

  AttackParams params_;
  std::vector<std::size_t> row_offset_;
  // Each cell keeps the smaller of survival and hit probability, with a
  // negative sign (including -0.0) marking the hit side, so differences of
  // near-one survival values are taken on the small complement.
  std::vector<double> cells_;
};

ValueTable build_value_table(const AttackParams& params);

// Payout c_{t-1,l} including the epsilon payment that replaces a zero base
// payout when params.epsilon_payment > 0. Throws std::out_of_range outside
// 0 <= t_minus_1 < T, gap >= 1.
Money payout_at(const ValueTable& table, int t_minus_1, int gap);

// Expected equilibrium value of a non-committed miner with the given share,
// computed by its own backward recursion (terminal phi*p*R on failure, plus
// p times the payout of every block mined from the state). Equals
// (share / gamma) * wmax.
class MinerValueTable {
 public:
  // Throws std::domain_error if share is outside [0, gamma].
  MinerValueTable(const ValueTable& table, double share);

  double share() const noexcept { return share_; }
  Money value(int t, int gap) const;
  Money value(const GameState& state) const { return value(state.t, state.gap); }

 private:
  const ValueTable* table_;
  double share_;
  std::vector<std::size_t> row_offset_;
  std::vector<Money> values_;
};

Money miner_value(const ValueTable& table, double share, const GameState& state);

struct ShareAudit {
  double share = 0.0;
  std::size_t states_checked = 0;
  // max over states of (marginal loss - payout); <= 0 means participation is
  // weakly preferred everywhere.
  Money max_violation = 0.0;
  // max over states of |marginal loss - payout|; zero up to rounding at the
  // threshold share.
  Money max_abs_slack = 0.0;
  // States with a positive payout where participation is not strictly
  // preferred, for shares below gamma.
  std::size_t non_strict_states = 0;
  // States with zero payout; participation there is only weakly preferred
  // unless an epsilon payment is configured.
  std::size_t zero_payout_states = 0;
  // On a pivotal final block the payout phi*gamma*R beats the miner's stake.
  bool pivotal_step_ok = true;
};

struct EquilibriumAudit {
  std::vector<ShareAudit> shares;
  Money max_violation = 0.0;
  Money tolerance = 0.0;  // 1e-12 * phi*gamma*R
  bool passed = true;
};

// Checks the one-shot participation incentive at every reachable state with a
// positive gap for each share in `shares` (each must be in [0, gamma]).
EquilibriumAudit audit_equilibrium(const ValueTable& table, std::span<const double> shares);

// Evenly spaced shares gamma/n, 2*gamma/n, ..., gamma.
std::vector<double> default_share_grid(double gamma, int points = 10);

}  // namespace bribelab

#endif  // BRIBELAB_VALUE_ENGINE_HPP_
