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

#ifndef BRIBELAB_ATTACK_MODEL_HPP_
#define BRIBELAB_ATTACK_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bribelab {

// Money is always expressed in multiples of the block reward R unless a
// caller converts it for presentation.
using Money = double;

// Raised when a parameter or population violates a domain invariant. The
// field name is kept so front ends can point at the offending key.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Parameters of one block-by-block bribery attack.
//
// The gap starts at `initial_gap` (defending chain minus attacking chain) and
// the attacker wins the first time it reaches zero within `horizon` blocks.
// Honest miners hold `g_def` of the power; every non-committed miner holds at
// most `gamma`.
struct AttackParams {
  int horizon = 1;              // T
  int initial_gap = 1;          // l0
  double gamma = 0.05;          // largest bribed miner share
  double g_def = 0.0;           // honest share
  double phi = 1.0;             // valuation multiplier, in blocks of reward
  Money reward = 1.0;           // R
  Money epsilon_payment = 0.0;  // tie-breaking payment on zero-payout blocks

  // Throws ValidationError naming the first bad field.
  void validate() const;

  // g_def + gamma < 1/2: the attacking walk drifts toward success even against
  // a threshold-size deviant, which the concentration bounds require.
  bool supercritical() const noexcept { return g_def + gamma < 0.5; }

  // Probability that the next block goes to the defending chain when every
  // non-committed miner attacks.
  double defend_probability() const noexcept { return g_def; }
  double attack_probability() const noexcept { return 1.0 - g_def; }

  // Up-step probability of the walk that defines the pseudo-value function.
  double threshold_walk_up_probability() const noexcept { return g_def + gamma; }

  // Terminal value of a threshold-size miner on attack failure.
  Money threshold_stake() const noexcept { return phi * gamma * reward; }
};

// Power shares of the miners taking part in the game, normalized so that all
// shares sum to one. Honest miners always defend; non-committed miners are
// rational and may be bribed.
struct MinerPopulation {
  std::vector<double> honest;
  std::vector<double> noncommitted;

  std::size_t size() const noexcept { return honest.size() + noncommitted.size(); }
  double honest_share() const noexcept;
  double noncommitted_share() const noexcept;

  // Share of miner `index`, honest miners first.
  double share(std::size_t index) const { return index < honest.size() ? honest.at(index) : noncommitted.at(index - honest.size()); }
  bool is_honest(std::size_t index) const noexcept { return index < honest.size(); }

  // One honest bloc of share g_def, and ceil((1 - g_def) / gamma) equal
  // non-committed miners, each no larger than gamma.
  static MinerPopulation equal_split(const AttackParams& params);

  // Throws ValidationError if shares are negative, do not sum to one, disagree
  // with params.g_def, or a non-committed miner exceeds params.gamma.
  void validate(const AttackParams& params) const;
};

// Position in the attack game after t blocks.
struct GameState {
  int t = 0;
  int gap = 0;

  friend auto operator<=>(const GameState&, const GameState&) = default;
};

// Cost of an attack split into the per-block reimbursement (R for every block
// mined on the attacking chain) and the corruption payouts. `total` is always
// the exact sum of the two components.
struct CostReport {
  Money per_block = 0.0;
  Money corruption = 0.0;
  Money total = 0.0;
  // Tie-breaking payments; reported separately and never part of `total`.
  Money epsilon_payments = 0.0;
  // Set for a single trajectory.
  std::optional<bool> success;
  // Set for an aggregate over the attack distribution.
  std::optional<double> success_probability;

  static CostReport make(Money per_block, Money corruption);
};

// States (t, gap) that the game can visit: gap >= 0, |gap - l0| <= t, parity
// matches l0 + t, and a zero gap only at the first time it is hit (t >= l0).
// Sorted by (t, gap). Accepts horizon 0.
std::vector<GameState> reachable_states(int horizon, int initial_gap);
std::vector<GameState> reachable_states(const AttackParams& params);

bool is_reachable(const GameState& state, int horizon, int initial_gap) noexcept;

}  // namespace bribelab

#endif  // BRIBELAB_ATTACK_MODEL_HPP_
