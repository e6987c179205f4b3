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

// Slow reference implementations used only by the tests. None of them share
// code with the library: paths are enumerated explicitly, tables are built
// over the full rectangle, and the game tree is expanded history by history.

#ifndef BRIBELAB_TESTS_ORACLES_HPP_
#define BRIBELAB_TESTS_ORACLES_HPP_

#include <cstdint>
#include <vector>

#include "bribelab/attack_model.hpp"
#include "bribelab/value_engine.hpp"

namespace bribelab::oracle {

// Full rectangle t in [0, T], l in [0, width) of wmax / (phi*gamma*R), using
// the honest/bribed/threshold form of the recursion.
struct RectangleTable {
  int horizon = 0;
  int width = 0;
  std::vector<std::vector<double>> survival;  // [t][l]
  double at(int t, int l) const { return survival.at(static_cast<std::size_t>(t)).at(static_cast<std::size_t>(l)); }
};
RectangleTable rectangle_table(const AttackParams& params, int width);

// Probability that the walk started at (t, l) with up-probability `up`
// stays strictly positive through step T; every path is enumerated.
double enumerated_survival(int horizon, int t, int l, double up);

// Probability that the minimum over {t, ..., T} of the unabsorbed walk from
// (t, start) lies in {1, 2}; every path is enumerated.
double enumerated_min_in_one_two(int horizon, int t, int start, double up);

// Exact quantities of the absorbing attack walk (up-probability g_def) by
// enumerating every path, using payouts from `table`.
struct PathSummary {
  double success = 0.0;
  double failure = 0.0;
  double expected_duration = 0.0;
  double expected_attack_blocks = 0.0;
  Money expected_corruption = 0.0;
  Money max_corruption = 0.0;  // over positive-probability paths
  Money min_corruption = 0.0;
  Money max_total = 0.0;  // corruption + R * attack blocks, maximized separately
  std::uint64_t paths = 0;
};
PathSummary enumerate_attack_paths(const AttackParams& params, const ValueTable& table);

// max over k of the Binomial(steps, down) mass: the largest probability, over
// all starting gaps, that the walk sits in {1, 2} after `steps` steps.
double binomial_mode_mass(int steps, double up);

// Pr[tau is an argmin of the unabsorbed walk from (t, start) on {t..T} |
// X_tau in {1, 2}], ties counting as argmin; 0 when the condition is null.
double conditional_argmin_probability(int horizon, int t, int start, int tau, double up);

// sum_{i=t}^{T} e^{-a (T - i)} / max(sqrt(i - t), 1).
double decayed_harmonic_sum(double a, int t, int horizon);

// Exhaustive game tree for a single deviant of share `share`: every history
// is expanded, and at each node where the deviant mines it may attack or
// defend. Reports whether attacking is optimal at every reachable node.
struct GameTreeVerdict {
  std::uint64_t decision_nodes = 0;
  std::uint64_t strict_nodes = 0;  // attack strictly better
  Money worst_margin = 0.0;        // min over nodes of attack value - defend value
  Money root_value = 0.0;          // deviant's value with full participation
};
GameTreeVerdict game_tree(const AttackParams& params, double share);

}  // namespace bribelab::oracle

#endif  // BRIBELAB_TESTS_ORACLES_HPP_
