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

// Exact forward dynamic programming over the absorbing attack walk. Under the
// participation equilibrium every non-committed miner attacks, so the gap
// falls with probability 1 - g_def and rises with probability g_def until it
// hits zero or the horizon runs out.

#ifndef BRIBELAB_ATTACK_ANALYTICS_HPP_
#define BRIBELAB_ATTACK_ANALYTICS_HPP_

#include <cstddef>
#include <vector>

#include "bribelab/attack_model.hpp"
#include "bribelab/value_engine.hpp"

namespace bribelab {

// Distribution of the absorbing walk started at `initial_gap`: probability of
// being alive at (t, l) and of first hitting zero exactly at t. Masses below
// 1e-300 are flushed to zero.
class ForwardMass {
 public:
  ForwardMass(int horizon, int initial_gap, double up_probability);

  int horizon() const noexcept { return horizon_; }
  int initial_gap() const noexcept { return initial_gap_; }

  double alive(int t, int gap) const;
  double alive_total(int t) const;
  double absorbed_at(int t) const { return absorbed_.at(static_cast<std::size_t>(t)); }
  double absorbed_by(int t) const;

 private:
  int horizon_;
  int initial_gap_;
  std::vector<std::size_t> row_offset_;
  std::vector<double> alive_;
  std::vector<double> absorbed_;
};

struct SuccessProbability {
  double success = 0.0;
  // Accumulated directly from the surviving mass, never as 1 - success.
  double failure = 0.0;
};

SuccessProbability success_probability(const AttackParams& params);

// E[min(first hitting time, T)].
double expected_duration(const AttackParams& params);

// Probability that the walk stepping up with `up_probability` stays positive
// for `horizon` steps from `initial_gap`.
double walk_survival_probability(int horizon, int initial_gap, double up_probability);

// Expected corruption payouts and per-block reimbursements of the equilibrium
// attack. success_probability is filled in; epsilon payments are reported in
// their own field.
CostReport expected_cost(const AttackParams& params, const ValueTable& table);

struct WorstCaseReport {
  // Path maximizing total corruption payouts (ties: more attacking blocks);
  // per_block counts R for each attacking block on that path.
  CostReport worst;
  // Path minimizing corruption payouts (ties: fewer attacking blocks).
  CostReport best;
  int worst_attack_blocks = 0;
  int best_attack_blocks = 0;
  // worst.corruption + T * R: the reimbursement convention that charges R for
  // every block of the horizon.
  Money worst_with_horizon_reimbursement = 0.0;
  // Largest corruption + R * attack blocks over any feasible path. Can exceed
  // worst.total when a slightly cheaper path mines more attacking blocks; it
  // bounds the cost of every simulated trial.
  Money max_path_total = 0.0;
};

// Max- and min-path dynamic programs over trajectories with positive
// probability (defending steps are infeasible when g_def = 0).
WorstCaseReport worst_case_cost(const AttackParams& params, const ValueTable& table);

// Duplicates the defending-chain reimbursement and splits it across the pool
// in proportion to power: per-block cost doubles, corruption is unchanged.
CostReport pooled_smoothing_cost(const AttackParams& params, const CostReport& base);

struct ExactAnalysis {
  SuccessProbability probability;
  double expected_duration = 0.0;
  CostReport expected;
  WorstCaseReport extremes;
};

// All of the above from one table.
ExactAnalysis analyze(const AttackParams& params, const ValueTable& table);

}  // namespace bribelab

#endif  // BRIBELAB_ATTACK_ANALYTICS_HPP_
