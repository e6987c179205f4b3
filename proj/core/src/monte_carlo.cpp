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

#include "bribelab/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bribelab/counter_rng.hpp"
#include "bribelab/parallel.hpp"

namespace bribelab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Maps a uniform draw to a miner with probability proportional to its share.
class MinerSampler {
 public:
  explicit MinerSampler(const MinerPopulation& population) {
    cumulative_.reserve(population.size());
    double running = 0.0;
    for (std::size_t i = 0; i < population.size(); ++i) {
      running += population.share(i);
      cumulative_.push_back(running);
      if (population.share(i) > 0.0) last_positive_ = i;
    }
  }

  std::size_t pick(double u) const {
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    // Shares sum to 1 only up to rounding; a draw past the last boundary goes
    // to the last miner that has power.
    if (it == cumulative_.end()) return last_positive_;
    return static_cast<std::size_t>(it - cumulative_.begin());
  }

 private:
  std::vector<double> cumulative_;
  std::size_t last_positive_ = 0;
};

void validate_strategies(const MinerPopulation& population, const std::vector<Strategy>& strategies) {
  if (strategies.size() != population.size()) {
    throw std::invalid_argument("need one strategy per miner (" + std::to_string(population.size()) + "), got " +
                                std::to_string(strategies.size()));
  }
  for (std::size_t i = 0; i < population.honest.size(); ++i) {
    if (!std::holds_alternative<HonestAlways>(strategies[i])) {
      throw std::invalid_argument("honest miner " + std::to_string(i) + " must use HonestAlways");
    }
  }
}

void validate_inputs(const AttackParams& params, const MinerPopulation& population, const ValueTable& table,
                     const std::vector<Strategy>& strategies) {
  params.validate();
  population.validate(params);
  const AttackParams& built = table.params();
  if (built.horizon != params.horizon || built.initial_gap != params.initial_gap || built.gamma != params.gamma ||
      built.g_def != params.g_def || built.phi != params.phi || built.reward != params.reward) {
    throw std::invalid_argument("value table was built from different attack parameters");
  }
  validate_strategies(population, strategies);
}

struct Playback {
  const AttackParams& params;
  const MinerSampler& sampler;
  const ValueTable& table;
  const std::vector<Strategy>& strategies;
  CounterRng rng;

  // Plays trial `trial`; fills `record` when non-null.
  TrialSummary play(std::uint64_t trial, TrialRecord* record) const {
    int gap = params.initial_gap;
    int t = 0;
    int attack_blocks = 0;
    Money corruption = 0.0;
    Money epsilon = 0.0;
    if (record != nullptr) {
      *record = TrialRecord{};
      record->gap_path.push_back(gap);
    }
    while (t < params.horizon && gap > 0) {
      const std::size_t miner = sampler.pick(rng.uniform(trial, static_cast<std::uint64_t>(t)));
      const Action action = decide(strategies[miner], miner, GameState{t, gap}, table);
      Money paid = 0.0;
      if (action == Action::kAttack) {
        const Money payout = table.base_payout(t, gap);
        corruption += payout;
        if (payout == 0.0) epsilon += params.epsilon_payment;
        paid = params.reward + payout;
        ++attack_blocks;
        --gap;
      } else {
        ++gap;
      }
      ++t;
      if (record != nullptr) {
        record->miner_sequence.push_back(miner);
        record->actions.push_back(action);
        record->payouts_paid.push_back(paid);
        record->gap_path.push_back(gap);
      }
    }
    TrialSummary summary;
    summary.success = gap == 0;
    summary.duration = t;
    summary.attack_blocks = attack_blocks;
    summary.cost = CostReport::make(params.reward * attack_blocks, corruption);
    summary.cost.epsilon_payments = epsilon;
    summary.cost.success = summary.success;
    if (record != nullptr) {
      record->success = summary.success;
      record->duration = summary.duration;
      record->attack_blocks = summary.attack_blocks;
      record->cost = summary.cost;
    }
    return summary;
  }
};

struct MeanAndError {
  double mean = 0.0;
  double standard_error = 0.0;
};

template <typename Get>
MeanAndError mean_and_error(std::size_t n, Get&& get) {
  MeanAndError result;
  if (n == 0) return result;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += get(i);
  result.mean = total / static_cast<double>(n);
  if (n < 2) return result;
  double squares = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = get(i) - result.mean;
    squares += d * d;
  }
  result.standard_error = std::sqrt(squares / static_cast<double>(n - 1) / static_cast<double>(n));
  return result;
}

}  // namespace

Action decide(const Strategy& strategy, [[maybe_unused]] std::size_t miner, const GameState& state,
              [[maybe_unused]] const ValueTable& table) {
  return std::visit(Overloaded{
                        [](const HonestAlways&) { return Action::kDefend; },
                        [](const EquilibriumAttack&) { return Action::kAttack; },
                        [](const DefectAlways&) { return Action::kDefend; },
                        [&](const ThresholdDefect& rule) { return state.gap >= rule.gap_threshold ? Action::kDefend : Action::kAttack; },
                    },
                    strategy);
}

std::string strategy_name(const Strategy& strategy) {
  return std::visit(Overloaded{
                        [](const HonestAlways&) { return std::string("honest-always"); },
                        [](const EquilibriumAttack&) { return std::string("equilibrium-attack"); },
                        [](const DefectAlways&) { return std::string("defect-always"); },
                        [](const ThresholdDefect& rule) { return "threshold-defect(" + std::to_string(rule.gap_threshold) + ")"; },
                    },
                    strategy);
}

std::vector<Strategy> equilibrium_strategies(const MinerPopulation& population) {
  std::vector<Strategy> strategies(population.honest.size(), HonestAlways{});
  strategies.resize(population.size(), EquilibriumAttack{});
  return strategies;
}

CostReport recompute_trial_cost(const TrialRecord& record, const ValueTable& table) {
  const AttackParams& params = table.params();
  int attack_blocks = 0;
  Money corruption = 0.0;
  Money epsilon = 0.0;
  for (std::size_t s = 0; s + 1 < record.gap_path.size(); ++s) {
    const int gap = record.gap_path[s];
    const int next = record.gap_path[s + 1];
    if (std::abs(next - gap) != 1) throw std::invalid_argument("gap path steps must be +-1");
    if (next < gap) {
      const Money payout = table.base_payout(static_cast<int>(s), gap);
      corruption += payout;
      if (payout == 0.0) epsilon += params.epsilon_payment;
      ++attack_blocks;
    }
  }
  CostReport cost = CostReport::make(params.reward * attack_blocks, corruption);
  cost.epsilon_payments = epsilon;
  cost.success = !record.gap_path.empty() && record.gap_path.back() == 0;
  return cost;
}

TrialRecord run_trial(const AttackParams& params, const MinerPopulation& population, const ValueTable& table,
                      const std::vector<Strategy>& strategies, std::uint64_t seed) {
  validate_inputs(params, population, table, strategies);
  const MinerSampler sampler(population);
  const Playback playback{params, sampler, table, strategies, CounterRng(seed)};
  TrialRecord record;
  playback.play(0, &record);
  return record;
}

AggregateReport run_trials(const AttackParams& params, const MinerPopulation& population, const ValueTable& table,
                           const std::vector<Strategy>& strategies, std::uint64_t master_seed, std::size_t n_trials,
                           unsigned threads) {
  if (n_trials < 1) throw std::invalid_argument("need at least one trial");
  validate_inputs(params, population, table, strategies);
  const MinerSampler sampler(population);
  const Playback playback{params, sampler, table, strategies, CounterRng(master_seed)};

  AggregateReport report;
  report.master_seed = master_seed;
  report.trials = n_trials;
  report.per_trial.resize(n_trials);
  parallel_for(n_trials, resolve_thread_count(threads), [&](std::size_t i) { report.per_trial[i] = playback.play(i, nullptr); });

  // Reductions run in trial order on one thread.
  const auto& trials = report.per_trial;
  for (const TrialSummary& trial : trials) {
    if (trial.success) ++report.successes;
    ++report.duration_histogram[trial.duration];
  }
  const MeanAndError success = mean_and_error(n_trials, [&](std::size_t i) { return trials[i].success ? 1.0 : 0.0; });
  const MeanAndError corruption = mean_and_error(n_trials, [&](std::size_t i) { return trials[i].cost.corruption; });
  const MeanAndError total = mean_and_error(n_trials, [&](std::size_t i) { return trials[i].cost.total; });
  report.success_rate = success.mean;
  report.success_rate_standard_error = success.standard_error;
  report.mean_corruption = corruption.mean;
  report.corruption_standard_error = corruption.standard_error;
  report.mean_total = total.mean;
  report.total_standard_error = total.standard_error;
  report.mean_per_block = mean_and_error(n_trials, [&](std::size_t i) { return trials[i].cost.per_block; }).mean;
  report.mean_epsilon_payments = mean_and_error(n_trials, [&](std::size_t i) { return trials[i].cost.epsilon_payments; }).mean;
  report.mean_duration = mean_and_error(n_trials, [&](std::size_t i) { return static_cast<double>(trials[i].duration); }).mean;
  return report;
}

DeviationReport deviation_experiment(const AttackParams& params, const MinerPopulation& population, const ValueTable& table,
                                     std::size_t deviant, std::uint64_t master_seed, std::size_t n_trials, unsigned threads) {
  if (n_trials < 1) throw std::invalid_argument("need at least one trial");
  if (deviant >= population.size() || population.is_honest(deviant)) {
    throw std::invalid_argument("deviant must be a non-committed miner");
  }
  const double share = population.share(deviant);
  if (share > params.gamma) throw std::invalid_argument("deviant share exceeds gamma");

  std::vector<Strategy> participating = equilibrium_strategies(population);
  std::vector<Strategy> defecting = participating;
  defecting[deviant] = DefectAlways{};
  validate_inputs(params, population, table, participating);

  const MinerSampler sampler(population);
  const CounterRng rng(master_seed);
  const Playback with_deviant{params, sampler, table, participating, rng};
  const Playback without_deviant{params, sampler, table, defecting, rng};
  const Money stake = params.phi * share * params.reward;

  auto utility = [&](const TrialRecord& record) {
    Money total = record.success ? 0.0 : stake;
    for (std::size_t s = 0; s < record.miner_sequence.size(); ++s) {
      if (record.miner_sequence[s] == deviant && record.actions[s] == Action::kAttack) {
        total += payout_at(table, static_cast<int>(s), record.gap_path[s]);
      }
    }
    return total;
  };
  auto block_rewards = [&](const TrialRecord& record) {
    Money total = 0.0;
    for (std::size_t s = 0; s < record.miner_sequence.size(); ++s) {
      if (record.miner_sequence[s] != deviant) continue;
      if (record.actions[s] == Action::kAttack || !record.success) total += params.reward;
    }
    return total;
  };

  struct PairOutcome {
    Money participating = 0.0;
    Money defecting = 0.0;
    Money reward_difference = 0.0;
    bool flip = false;
    bool reverse_flip = false;
    bool coupled = true;
    bool deviant_mined = false;
  };
  std::vector<PairOutcome> pairs(n_trials);
  parallel_for(n_trials, resolve_thread_count(threads), [&](std::size_t i) {
    TrialRecord a, b;
    with_deviant.play(i, &a);
    without_deviant.play(i, &b);
    PairOutcome& out = pairs[i];
    out.participating = utility(a);
    out.defecting = utility(b);
    out.reward_difference = block_rewards(a) - block_rewards(b);
    out.flip = a.success && !b.success;
    out.reverse_flip = b.success && !a.success;

    // Both runs must agree on every draw, and on the trajectory up to and
    // including the deviant's first block.
    const std::size_t common = std::min(a.miner_sequence.size(), b.miner_sequence.size());
    const auto first = std::find(a.miner_sequence.begin(), a.miner_sequence.end(), deviant);
    out.deviant_mined = first != a.miner_sequence.end();
    const auto split = static_cast<std::size_t>(first - a.miner_sequence.begin());
    out.coupled = std::equal(a.miner_sequence.begin(), a.miner_sequence.begin() + static_cast<std::ptrdiff_t>(common), b.miner_sequence.begin());
    if (out.deviant_mined) {
      out.coupled = out.coupled && split < b.gap_path.size() &&
                    std::equal(a.gap_path.begin(), a.gap_path.begin() + static_cast<std::ptrdiff_t>(split) + 1, b.gap_path.begin());
    } else {
      out.coupled = out.coupled && a.gap_path == b.gap_path;
    }
  });

  DeviationReport report;
  report.deviant = deviant;
  report.share = share;
  report.trials = n_trials;
  for (const PairOutcome& pair : pairs) {
    if (pair.reverse_flip) ++report.reverse_flips;
    if (!pair.coupled) ++report.coupling_violations;
    if (pair.deviant_mined) ++report.trials_with_deviant_block;
  }
  report.mean_utility_participating = mean_and_error(n_trials, [&](std::size_t i) { return pairs[i].participating; }).mean;
  report.mean_utility_defecting = mean_and_error(n_trials, [&](std::size_t i) { return pairs[i].defecting; }).mean;
  const MeanAndError difference = mean_and_error(n_trials, [&](std::size_t i) { return pairs[i].participating - pairs[i].defecting; });
  report.mean_difference = difference.mean;
  report.difference_standard_error = difference.standard_error;
  const MeanAndError with_rewards = mean_and_error(
      n_trials, [&](std::size_t i) { return pairs[i].participating - pairs[i].defecting + pairs[i].reward_difference; });
  report.mean_difference_with_block_rewards = with_rewards.mean;
  report.difference_with_block_rewards_standard_error = with_rewards.standard_error;
  const MeanAndError flips = mean_and_error(n_trials, [&](std::size_t i) { return pairs[i].flip ? 1.0 : 0.0; });
  report.flip_probability = flips.mean;
  report.flip_probability_standard_error = flips.standard_error;
  return report;
}

QuantileTable cost_quantiles(const AggregateReport& report) {
  if (report.per_trial.empty()) throw std::invalid_argument("no trials to summarize");
  std::vector<Money> totals;
  totals.reserve(report.per_trial.size());
  for (const TrialSummary& trial : report.per_trial) totals.push_back(trial.cost.total);
  std::sort(totals.begin(), totals.end());
  const auto n = static_cast<double>(totals.size());

  QuantileTable table;
  for (double level : {0.5, 0.9, 0.99, 0.999}) {
    const auto rank = static_cast<std::size_t>(std::max(1.0, std::ceil(level * n)));
    QuantileEstimate estimate;
    estimate.level = level;
    estimate.value = totals[std::min(rank, totals.size()) - 1];
    estimate.flagged = n * (1.0 - level) < 1.0 - 1e-9;
    table.quantiles.push_back(estimate);
  }
  table.max_observed = totals.back();
  return table;
}

}  // namespace bribelab
