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

// Seeded simulation of the attack game. Each block goes to a miner drawn in
// proportion to power; that miner's strategy then picks a chain. All
// randomness comes from CounterRng keyed by (master seed, trial, step), so a
// trial's trajectory is fixed by its index alone.

#ifndef BRIBELAB_MONTE_CARLO_HPP_
#define BRIBELAB_MONTE_CARLO_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bribelab/attack_model.hpp"
#include "bribelab/value_engine.hpp"

namespace bribelab {

enum class Action { kAttack, kDefend };

struct HonestAlways {};
// Participate on every block, as in the equilibrium.
struct EquilibriumAttack {};
struct DefectAlways {};
// Defend while the gap is at least `gap_threshold`, attack below it.
struct ThresholdDefect {
  int gap_threshold = 1;
};

using Strategy = std::variant<HonestAlways, EquilibriumAttack, DefectAlways, ThresholdDefect>;

Action decide(const Strategy& strategy, std::size_t miner, const GameState& state, const ValueTable& table);
std::string strategy_name(const Strategy& strategy);

// HonestAlways for honest miners, EquilibriumAttack for everyone else.
std::vector<Strategy> equilibrium_strategies(const MinerPopulation& population);

struct TrialRecord {
  std::vector<int> gap_path;                 // gap before the first block, then after each block
  std::vector<std::size_t> miner_sequence;   // population index of each block's miner
  std::vector<Action> actions;               // chain chosen for each block
  std::vector<Money> payouts_paid;           // R + payout on attacking blocks, 0 otherwise
  bool success = false;
  int duration = 0;
  int attack_blocks = 0;
  CostReport cost;
};

// Cost of a recorded trajectory recomputed from its gap path alone.
CostReport recompute_trial_cost(const TrialRecord& record, const ValueTable& table);

// One trajectory; a pure function of its inputs and `seed`.
TrialRecord run_trial(const AttackParams& params, const MinerPopulation& population, const ValueTable& table,
                      const std::vector<Strategy>& strategies, std::uint64_t seed);

struct TrialSummary {
  bool success = false;
  int duration = 0;
  int attack_blocks = 0;
  CostReport cost;
};

struct AggregateReport {
  std::uint64_t master_seed = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  double success_rate_standard_error = 0.0;
  Money mean_per_block = 0.0;
  Money mean_corruption = 0.0;
  Money mean_total = 0.0;
  Money mean_epsilon_payments = 0.0;
  Money corruption_standard_error = 0.0;
  Money total_standard_error = 0.0;
  double mean_duration = 0.0;
  std::map<int, std::size_t> duration_histogram;
  std::vector<TrialSummary> per_trial;  // ordered by trial index
};

// `threads` = 0 uses resolve_thread_count(). Trial i uses counter key
// (master_seed, i, step); results are identical at any thread count.
AggregateReport run_trials(const AttackParams& params, const MinerPopulation& population, const ValueTable& table,
                           const std::vector<Strategy>& strategies, std::uint64_t master_seed, std::size_t n_trials,
                           unsigned threads = 0);

struct DeviationReport {
  std::size_t deviant = 0;  // population index
  double share = 0.0;
  std::size_t trials = 0;
  // Mean utility as in the miner value function: corruption payouts received
  // (plus epsilon payments) and phi * share * R on failure.
  Money mean_utility_participating = 0.0;
  Money mean_utility_defecting = 0.0;
  Money mean_difference = 0.0;  // participating minus defecting
  Money difference_standard_error = 0.0;
  // Sensitivity variant that also credits block rewards: R for each own
  // attacking block, and R for each own defending block when the attack
  // fails. Runs of different length mine different block counts, so this
  // can favor defecting near the threshold share.
  Money mean_difference_with_block_rewards = 0.0;
  Money difference_with_block_rewards_standard_error = 0.0;
  // Fraction of pairs where participating succeeds and defecting fails.
  double flip_probability = 0.0;
  double flip_probability_standard_error = 0.0;
  std::size_t reverse_flips = 0;  // defecting succeeds, participating fails
  std::size_t coupling_violations = 0;
  std::size_t trials_with_deviant_block = 0;
};

// Coupled pairs: the deviant plays EquilibriumAttack in one run and
// DefectAlways in the other, everyone else plays the equilibrium, and both
// runs share every random draw.
DeviationReport deviation_experiment(const AttackParams& params, const MinerPopulation& population, const ValueTable& table,
                                     std::size_t deviant, std::uint64_t master_seed, std::size_t n_trials,
                                     unsigned threads = 0);

struct QuantileEstimate {
  double level = 0.0;
  Money value = 0.0;
  // Fewer than 1 / (1 - level) trials: the estimate is just the sample max.
  bool flagged = false;
};

struct QuantileTable {
  std::vector<QuantileEstimate> quantiles;  // p50, p90, p99, p999
  Money max_observed = 0.0;
};

// Nearest-rank quantiles of the per-trial total cost.
QuantileTable cost_quantiles(const AggregateReport& report);

}  // namespace bribelab

#endif  // BRIBELAB_MONTE_CARLO_HPP_
