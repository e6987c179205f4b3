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

#include "sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "bribelab/attack_analytics.hpp"
#include "bribelab/closed_form_bounds.hpp"
#include "bribelab/parallel.hpp"
#include "bribelab/value_engine.hpp"
#include "json.hpp"

namespace bribelab::cli {
namespace {

constexpr const char* kParameters[] = {"T", "l0", "gamma", "g_def", "phi"};

bool is_integral_parameter(const std::string& name) { return name == "T" || name == "l0"; }

std::string csv_safe(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

std::string optional_number(const std::optional<double>& value) { return value ? format_number(*value) : std::string(); }

const char* flag(bool value) { return value ? "true" : "false"; }

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::vector<double> sweep_grid(double from, double to, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("--step must be positive");
  if (!(to >= from)) throw std::invalid_argument("--to must not be below --from");
  std::vector<double> values;
  const double slack = step * 1e-9;
  for (long long i = 0;; ++i) {
    const double value = from + static_cast<double>(i) * step;
    if (value > to + slack) break;
    values.push_back(value);
    if (values.size() > 1000000) throw std::invalid_argument("sweep grid exceeds one million points");
  }
  return values;
}

SweepSpec make_sweep(const std::string& vary, double from, double to, double step, const AttackParams& baseline) {
  if (std::find(std::begin(kParameters), std::end(kParameters), vary) == std::end(kParameters)) {
    throw std::invalid_argument("cannot vary '" + vary + "'; choose one of T, l0, gamma, g_def, phi");
  }
  return SweepSpec{vary, sweep_grid(from, to, step), baseline};
}

SweepRow evaluate_point(const std::string& vary, double value, const AttackParams& baseline) {
  SweepRow row;
  row.vary = vary;
  row.value = value;
  row.params = baseline;
  AttackParams& p = row.params;
  if (is_integral_parameter(vary) && (value != std::floor(value) || std::abs(value) > 1e9)) {
    row.note = vary + " must be an integer";
    return row;
  }
  if (vary == "T") p.horizon = static_cast<int>(value);
  if (vary == "l0") p.initial_gap = static_cast<int>(value);
  if (vary == "gamma") p.gamma = value;
  if (vary == "g_def") p.g_def = value;
  if (vary == "phi") p.phi = value;
  try {
    p.validate();
  } catch (const ValidationError& e) {
    row.note = csv_safe(e.what());
    return row;
  }

  const ValueTable table = build_value_table(p);
  const ExactAnalysis exact = analyze(p, table);
  row.valid = true;
  row.supercritical = p.supercritical();
  row.success_probability = exact.probability.success;
  row.failure_probability = exact.probability.failure;
  row.expected_duration = exact.expected_duration;
  row.expected_per_block = exact.expected.per_block;
  row.expected_corruption = exact.expected.corruption;
  row.expected_total = exact.expected.total;
  row.corruption_over_phi_gamma_R = exact.expected.corruption / p.threshold_stake();
  row.worst_case_cost = exact.extremes.worst.total;
  row.worst_case_corruption = exact.extremes.worst.corruption;
  row.worst_case_with_horizon = exact.extremes.worst_with_horizon_reimbursement;
  row.budish_cost = budish_total_cost(p.horizon, p.phi, p.reward);

  const CostBound worst_bound = worst_case_cost_bound(p);
  const CostBound expected_bound = expected_cost_bound(p);
  const BoundResult hoeffding = success_lower_bound(p);
  row.worst_case_bound = worst_bound.total;
  row.worst_case_bound_vacuous = worst_bound.vacuous;
  row.expected_cost_bound = expected_bound.total;
  row.expected_cost_bound_vacuous = expected_bound.vacuous;
  row.hoeffding_success_bound = hoeffding.value;

  bool ok = true;
  // The expected-cost bound is tight in T once the walk has surely stopped,
  // so totals are compared with a 1e-12 relative rounding margin.
  const double slack = 1.0 + 1e-12;
  if (row.worst_case_bound) ok = ok && row.worst_case_with_horizon <= *row.worst_case_bound * slack;
  if (row.expected_cost_bound) {
    ok = ok && row.expected_corruption <= *row.expected_cost_bound * slack && row.expected_total <= *row.expected_cost_bound * slack;
  }
  // Compared on the failure side: the exact failure mass keeps precision that
  // 1 - failure loses once it drops below machine epsilon.
  const BoundResult failure_bound = failure_upper_bound(p);
  if (failure_bound.value) ok = ok && row.failure_probability <= *failure_bound.value;
  row.dominance_ok = ok;
  if (!row.supercritical) row.note = "not supercritical; cost bounds undefined";
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads) {
  std::vector<SweepRow> rows(spec.values.size());
  parallel_for(rows.size(), resolve_thread_count(threads),
               [&](std::size_t i) { rows[i] = evaluate_point(spec.vary, spec.values[i], spec.baseline); });
  return rows;
}

std::vector<std::string> sweep_csv_header() {
  return {"vary",
          "value",
          "valid",
          "T",
          "l0",
          "gamma",
          "g_def",
          "phi",
          "reward",
          "supercritical",
          "success_probability",
          "failure_probability",
          "expected_duration",
          "expected_per_block_cost",
          "expected_corruption_cost",
          "expected_total_cost",
          "corruption_over_phi_gamma_R",
          "worst_case_cost",
          "worst_case_corruption",
          "worst_case_with_horizon_reimbursement",
          "worst_case_bound",
          "worst_case_bound_vacuous",
          "expected_cost_bound",
          "expected_cost_bound_vacuous",
          "budish_cost",
          "hoeffding_success_bound",
          "dominance_ok",
          "note"};
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  const auto header = sweep_csv_header();
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const SweepRow& r : rows) {
    const AttackParams& p = r.params;
    out << r.vary << ',' << format_number(r.value) << ',' << flag(r.valid) << ',' << p.horizon << ',' << p.initial_gap << ','
        << format_number(p.gamma) << ',' << format_number(p.g_def) << ',' << format_number(p.phi) << ',' << format_number(p.reward)
        << ',';
    if (r.valid) {
      out << flag(r.supercritical) << ',' << format_number(r.success_probability) << ',' << format_number(r.failure_probability) << ','
          << format_number(r.expected_duration) << ',' << format_number(r.expected_per_block) << ','
          << format_number(r.expected_corruption) << ',' << format_number(r.expected_total) << ','
          << format_number(r.corruption_over_phi_gamma_R) << ',' << format_number(r.worst_case_cost) << ','
          << format_number(r.worst_case_corruption) << ',' << format_number(r.worst_case_with_horizon) << ','
          << optional_number(r.worst_case_bound) << ',' << (r.worst_case_bound ? flag(r.worst_case_bound_vacuous) : "") << ','
          << optional_number(r.expected_cost_bound) << ',' << (r.expected_cost_bound ? flag(r.expected_cost_bound_vacuous) : "") << ','
          << format_number(r.budish_cost) << ',' << optional_number(r.hoeffding_success_bound) << ',' << flag(r.dominance_ok);
    } else {
      out << std::string(17, ',');
    }
    out << ',' << csv_safe(r.note) << '\n';
  }
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  using nlohmann::json;
  auto optional = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  json doc = json::array();
  for (const SweepRow& r : rows) {
    json item = {{"vary", r.vary}, {"value", r.value}, {"valid", r.valid}, {"note", r.note},
                 {"params", {{"T", r.params.horizon}, {"l0", r.params.initial_gap}, {"gamma", r.params.gamma},
                             {"g_def", r.params.g_def}, {"phi", r.params.phi}, {"reward", r.params.reward}}}};
    if (r.valid) {
      item["supercritical"] = r.supercritical;
      item["success_probability"] = r.success_probability;
      item["failure_probability"] = r.failure_probability;
      item["expected_duration"] = r.expected_duration;
      item["expected_per_block_cost"] = r.expected_per_block;
      item["expected_corruption_cost"] = r.expected_corruption;
      item["expected_total_cost"] = r.expected_total;
      item["corruption_over_phi_gamma_R"] = r.corruption_over_phi_gamma_R;
      item["worst_case_cost"] = r.worst_case_cost;
      item["worst_case_corruption"] = r.worst_case_corruption;
      item["worst_case_with_horizon_reimbursement"] = r.worst_case_with_horizon;
      item["worst_case_bound"] = optional(r.worst_case_bound);
      item["worst_case_bound_vacuous"] = r.worst_case_bound_vacuous;
      item["expected_cost_bound"] = optional(r.expected_cost_bound);
      item["expected_cost_bound_vacuous"] = r.expected_cost_bound_vacuous;
      item["budish_cost"] = r.budish_cost;
      item["hoeffding_success_bound"] = optional(r.hoeffding_success_bound);
      item["dominance_ok"] = r.dominance_ok;
    }
    doc.push_back(std::move(item));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace bribelab::cli
