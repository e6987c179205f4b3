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

// One-parameter sweeps: every grid point gets the exact analysis, all cost
// and probability bounds, and a dominance flag. Rows keep grid order.

#ifndef BRIBELAB_TOOLS_SWEEP_HPP_
#define BRIBELAB_TOOLS_SWEEP_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bribelab/attack_model.hpp"

namespace bribelab::cli {

struct SweepSpec {
  std::string vary;  // T, l0, gamma, g_def or phi
  std::vector<double> values;
  AttackParams baseline;
};

// from, from + step, ... up to `to` inclusive (within step * 1e-9).
std::vector<double> sweep_grid(double from, double to, double step);
// Throws std::invalid_argument for an unknown parameter or a bad range.
SweepSpec make_sweep(const std::string& vary, double from, double to, double step, const AttackParams& baseline);

struct SweepRow {
  std::string vary;
  double value = 0.0;
  AttackParams params;
  bool valid = false;
  std::string note;
  bool supercritical = false;
  double success_probability = 0.0;
  double failure_probability = 0.0;
  double expected_duration = 0.0;
  Money expected_per_block = 0.0;
  Money expected_corruption = 0.0;
  Money expected_total = 0.0;
  double corruption_over_phi_gamma_R = 0.0;
  Money worst_case_cost = 0.0;
  Money worst_case_corruption = 0.0;
  Money worst_case_with_horizon = 0.0;
  std::optional<Money> worst_case_bound;
  bool worst_case_bound_vacuous = false;
  std::optional<Money> expected_cost_bound;
  bool expected_cost_bound_vacuous = false;
  Money budish_cost = 0.0;
  std::optional<double> hoeffding_success_bound;
  // Exact values sit inside every bound that is defined at this point.
  bool dominance_ok = false;
};

// Evaluates one point; invalid parameters give a row with valid = false.
SweepRow evaluate_point(const std::string& vary, double value, const AttackParams& baseline);
// Points run concurrently on resolve_thread_count(threads) workers.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

std::vector<std::string> sweep_csv_header();
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows);

// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

}  // namespace bribelab::cli

#endif  // BRIBELAB_TOOLS_SWEEP_HPP_
