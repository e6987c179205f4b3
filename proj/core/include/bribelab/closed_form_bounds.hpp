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

// Closed-form costs and bounds for bribery attacks. Bounds whose hypotheses
// can fail on ordinary inputs return a result with no value instead of
// throwing, so parameter sweeps never abort; malformed arguments still throw
// std::domain_error.

#ifndef BRIBELAB_CLOSED_FORM_BOUNDS_HPP_
#define BRIBELAB_CLOSED_FORM_BOUNDS_HPP_

#include <functional>
#include <optional>
#include <string>

#include "bribelab/attack_model.hpp"

namespace bribelab {

struct BoundResult {
  std::optional<double> value;  // absent when the hypotheses fail
  std::string hypothesis_note;
  bool clamped = false;  // a probability bound was clipped to [0, 1]

  bool valid() const noexcept { return value.has_value(); }
};

struct CostBound {
  std::optional<Money> total;
  std::optional<Money> per_block;
  std::optional<Money> corruption;
  std::string hypothesis_note;
  // Valid but no better than the trivial T * phi*gamma*R corruption bound.
  bool vacuous = false;

  bool valid() const noexcept { return total.has_value(); }
};

// Paying every miner its full expected loss: (T + phi) * R in total and
// (T + phi) * share * R to one miner.
Money budish_total_cost(int horizon, double phi, Money reward);
Money budish_miner_cost(int horizon, double phi, double share, Money reward);

// Expected loss of a miner whose participation moves success probability by
// at most epsilon: u + epsilon * U.
Money participation_loss_bound(Money immediate_loss, Money future_value, double epsilon);

// Thresholding attack paying (T + f_max * phi) * share * R to each
// participant.
Money thresholding_cost(int horizon, double f_max, double phi, Money reward);
Money thresholding_miner_cost(int horizon, double f_max, double phi, double share, Money reward);

struct FmaxSelection {
  bool feasible = false;
  double f_max = 1.0;
  double covered_share = 0.0;  // share of miners whose flip bound is <= f_max
};

// Smallest f such that non-committed miners with pivot probability <= f hold
// at least `coverage_target` of the power. `pivot_probability` maps a share to
// that miner's flip probability and must be monotone in the share.
FmaxSelection select_fmax(const MinerPopulation& population, const std::function<double(double)>& pivot_probability,
                          double coverage_target);

// Hoeffding bound on the chance that the counterfactual walk (never absorbed)
// still has a positive gap after T steps; valid for T > l0 / (1 - 2 g_def).
BoundResult failure_upper_bound(const AttackParams& params);
BoundResult success_lower_bound(const AttackParams& params);

// Expected hitting time of zero for the unbounded walk: l0 / (1 - 2 g_def).
double expected_stopping_time_bound(int initial_gap, double g_def);

// Upper bound on Pr[X_tau in {1, 2}] for the threshold walk, `steps` = tau - t:
// (1 - g - gamma)^{5/2} / (sqrt(2 pi) (g + gamma)^{7/2} sqrt(steps)), clamped
// to 1.
BoundResult level_hit_probability_bound(int steps, double g_def, double gamma);

// Upper bound on the chance that tau is the minimizer of the threshold walk
// over the remaining `tail_steps` = T - tau steps:
// exp(-(T - tau) (1 - 2 g - 2 gamma)^2 / 2). Needs 1 - 2 g - 2 gamma > 0.
BoundResult argmin_tail_bound(int tail_steps, double g_def, double gamma);

// Bound on sum_{i=t}^{T} exp(-a (T - i)) / max(sqrt(i - t), 1) in the form
// min(2 / sqrt(m - 2 ln(1 + sqrt m) / a), 1 + 1 / (1 - e^{-a})), m = T + 1 - t,
// dropping the first branch when its radicand is not positive.
double decayed_harmonic_sum_bound(double a, int t, int horizon);

// Same sum, bounded by the form that keeps the geometric factor
// 1 / (1 - e^{-a}) on the tail term:
// min(1 / (1 + sqrt m) + 1 / ((1 - e^{-a}) sqrt(m - 2 ln(1 + sqrt m) / a)), 1 + 1 / (1 - e^{-a})).
double decayed_harmonic_sum_bound_with_tail_factor(double a, int t, int horizon);

// Bound on the worst-case cost over every trajectory: T R plus
// phi gamma R [4 ln(1 + sqrt T) / (1 - 2g - 2gamma)
//              + sqrt(2/pi) (1-g-gamma)^{5/2} / (g+gamma)^{7/2} * 2 sqrt T].
CostBound worst_case_cost_bound(const AttackParams& params);

// Bound on the expected cost: R (l0/2 + l0 / (2 (1 - 2g))) plus
// phi gamma R T exp(-((1 - 2g - 2gamma)^2 T / 2 - (1 - 2g) l0) / 2).
CostBound expected_cost_bound(const AttackParams& params);

}  // namespace bribelab

#endif  // BRIBELAB_CLOSED_FORM_BOUNDS_HPP_
