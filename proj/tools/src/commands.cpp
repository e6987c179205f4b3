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

#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "bribelab/attack_analytics.hpp"
#include "bribelab/closed_form_bounds.hpp"
#include "bribelab/config.hpp"
#include "bribelab/monte_carlo.hpp"
#include "bribelab/value_engine.hpp"
#include "json.hpp"
#include "presets.hpp"
#include "svg_plot.hpp"
#include "sweep.hpp"

namespace bribelab::cli {
namespace {

using nlohmann::ordered_json;

// Raised for failures that are not the user's input, e.g. unwritable files.
class RuntimeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kCsv, kJson };

// Ordered key/value report printed as aligned text, a one-row CSV, or a JSON
// object.
class Report {
 public:
  void add(std::string key, ordered_json value) { entries_.emplace_back(std::move(key), std::move(value)); }
  void add_optional(std::string key, const std::optional<double>& value) {
    add(std::move(key), value ? ordered_json(*value) : ordered_json(nullptr));
  }

  void print(std::ostream& out, Format format) const {
    switch (format) {
      case Format::kJson: {
        ordered_json doc = ordered_json::object();
        for (const auto& [key, value] : entries_) doc[key] = value;
        out << doc.dump(2) << '\n';
        break;
      }
      case Format::kCsv: {
        for (std::size_t i = 0; i < entries_.size(); ++i) out << (i ? "," : "") << entries_[i].first;
        out << '\n';
        for (std::size_t i = 0; i < entries_.size(); ++i) out << (i ? "," : "") << render(entries_[i].second, true);
        out << '\n';
        break;
      }
      case Format::kText: {
        std::size_t width = 0;
        for (const auto& entry : entries_) width = std::max(width, entry.first.size());
        for (const auto& [key, value] : entries_) {
          out << key << std::string(width - key.size() + 2, ' ') << render(value, false) << '\n';
        }
        break;
      }
    }
  }

 private:
  static std::string render(const ordered_json& value, bool csv) {
    if (value.is_null()) return csv ? "" : "n/a";
    if (value.is_number_float()) return format_number(value.get<double>());
    if (value.is_string()) {
      std::string text = value.get<std::string>();
      if (csv) std::replace(text.begin(), text.end(), ',', ';');
      return text;
    }
    return value.dump();
  }

  std::vector<std::pair<std::string, ordered_json>> entries_;
};

struct GlobalOptions {
  std::string config_path;
  std::string preset;
  std::string format;
  unsigned threads = 0;
};

Format resolve_format(const GlobalOptions& options, Format fallback) {
  if (options.format.empty()) return fallback;
  if (options.format == "csv") return Format::kCsv;
  if (options.format == "json") return Format::kJson;
  return Format::kText;
}

Config resolve_config(const GlobalOptions& options) {
  if (!options.config_path.empty()) return load_config_file(options.config_path);
  if (!options.preset.empty()) {
    if (auto preset = find_preset(options.preset)) return preset->config;
    throw std::invalid_argument("unknown preset '" + options.preset + "'");
  }
  throw std::invalid_argument("this command needs --config <file> or --preset <name>");
}

void add_params(Report& report, const AttackParams& p) {
  report.add("T", p.horizon);
  report.add("l0", p.initial_gap);
  report.add("gamma", p.gamma);
  report.add("g_def", p.g_def);
  report.add("phi", p.phi);
  report.add("reward", p.reward);
  report.add("supercritical", p.supercritical());
}

void add_bounds(Report& report, const AttackParams& p) {
  const BoundResult success = success_lower_bound(p);
  report.add_optional("hoeffding_success_bound", success.value);
  if (!success.valid()) report.add("hoeffding_note", success.hypothesis_note);
  if (p.g_def < 0.5) report.add("stopping_time_bound", expected_stopping_time_bound(p.initial_gap, p.g_def));
  const CostBound worst = worst_case_cost_bound(p);
  report.add_optional("worst_case_bound", worst.total);
  report.add_optional("worst_case_bound_corruption", worst.corruption);
  report.add("worst_case_bound_vacuous", worst.vacuous);
  const CostBound expected = expected_cost_bound(p);
  report.add_optional("expected_cost_bound", expected.total);
  report.add_optional("expected_cost_bound_per_block", expected.per_block);
  report.add_optional("expected_cost_bound_corruption", expected.corruption);
  report.add("expected_cost_bound_vacuous", expected.vacuous);
  if (!expected.hypothesis_note.empty()) report.add("cost_bound_note", expected.hypothesis_note);
  report.add("budish_cost", budish_total_cost(p.horizon, p.phi, p.reward));
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw RuntimeFailure("cannot open '" + path + "' for writing");
  file << contents;
  file.flush();
  if (!file) throw RuntimeFailure("failed writing '" + path + "'");
}

int cmd_case_study(const GlobalOptions& options, const std::string& name, bool btc, std::ostream& out) {
  if (name != "bitcoin-a" && name != "bitcoin-b") throw std::invalid_argument("unknown case study '" + name + "'; choose bitcoin-a or bitcoin-b");
  const Preset preset = *find_preset(name);
  const AttackParams& p = preset.config.params;
  const ValueTable table = build_value_table(p);
  const ExactAnalysis exact = analyze(p, table);

  Report report;
  report.add("case_study", name);
  report.add("description", preset.description);
  add_params(report, p);
  report.add("success_probability", exact.probability.success);
  report.add("failure_probability", exact.probability.failure);
  report.add("expected_duration", exact.expected_duration);
  report.add("expected_per_block_cost", exact.expected.per_block);
  report.add("expected_corruption_cost", exact.expected.corruption);
  report.add("expected_total_cost", exact.expected.total);
  report.add("expected_corruption_over_phi_gamma_R", exact.expected.corruption / p.threshold_stake());
  report.add("pooled_smoothing_total_cost", pooled_smoothing_cost(p, exact.expected).total);
  report.add("worst_case_cost", exact.extremes.worst.total);
  report.add("worst_case_corruption", exact.extremes.worst.corruption);
  report.add("worst_case_attack_blocks", exact.extremes.worst_attack_blocks);
  report.add("worst_case_with_horizon_reimbursement", exact.extremes.worst_with_horizon_reimbursement);
  report.add("worst_case_over_phi_R", exact.extremes.worst.total / (p.phi * p.reward));
  report.add("max_path_total", exact.extremes.max_path_total);
  report.add("best_case_cost", exact.extremes.best.total);
  add_bounds(report, p);
  if (btc) {
    const double rate = kCaseStudyBtcPerBlock / p.reward;
    report.add("expected_total_cost_btc", exact.expected.total * rate);
    report.add("worst_case_cost_btc", exact.extremes.worst.total * rate);
    report.add("budish_cost_btc", budish_total_cost(p.horizon, p.phi, p.reward) * rate);
    report.add("btc_note", kBtcProvenance);
  }
  report.print(out, resolve_format(options, Format::kText));
  return kExitOk;
}

struct SweepOptions {
  std::string vary;
  std::optional<double> from, to, step;
  std::string preset;
  std::string out_csv, out_svg, out_json;
};

int cmd_sweep(const GlobalOptions& options, const SweepOptions& sweep, std::ostream& out, std::ostream& err) {
  std::string vary = sweep.vary;
  double from = 0, to = 0, step = 0;
  AttackParams baseline;
  if (!sweep.preset.empty()) {
    if (sweep.preset != "cost-curve") throw std::invalid_argument("unknown sweep preset '" + sweep.preset + "'; the only one is cost-curve");
    const SweepPreset grid = cost_curve_sweep();
    vary = grid.vary;
    from = grid.from;
    to = grid.to;
    step = grid.step;
    baseline = find_preset("cost-curve")->config.params;
    if (!options.config_path.empty() || !options.preset.empty()) baseline = resolve_config(options).params;
  } else {
    if (vary.empty() || !sweep.from || !sweep.to || !sweep.step) {
      throw std::invalid_argument("sweep needs --vary, --from, --to and --step, or --preset cost-curve");
    }
    baseline = resolve_config(options).params;
  }
  if (sweep.from) from = *sweep.from;
  if (sweep.to) to = *sweep.to;
  if (sweep.step) step = *sweep.step;
  if (!sweep.vary.empty()) vary = sweep.vary;

  const SweepSpec spec = make_sweep(vary, from, to, step, baseline);
  const std::vector<SweepRow> rows = run_sweep(spec, options.threads);

  std::size_t violations = 0;
  for (const SweepRow& row : rows) violations += row.valid && !row.dominance_ok ? 1 : 0;
  if (violations > 0) err << "warning: " << violations << " sweep rows have an exact value outside a bound\n";

  bool wrote_file = false;
  if (!sweep.out_csv.empty()) {
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    write_file(sweep.out_csv, csv.str());
    wrote_file = true;
  }
  if (!sweep.out_json.empty()) {
    std::ostringstream json;
    write_sweep_json(json, rows);
    write_file(sweep.out_json, json.str());
    wrote_file = true;
  }
  if (!sweep.out_svg.empty()) {
    write_file(sweep.out_svg, render_sweep_svg(rows));
    wrote_file = true;
  }
  if (!wrote_file || !options.format.empty()) {
    if (resolve_format(options, Format::kCsv) == Format::kJson) {
      write_sweep_json(out, rows);
    } else {
      write_sweep_csv(out, rows);
    }
  } else {
    err << rows.size() << " sweep rows written\n";
  }
  return kExitOk;
}

int cmd_bounds(const GlobalOptions& options, std::ostream& out) {
  const AttackParams p = resolve_config(options).params;
  Report report;
  add_params(report, p);
  add_bounds(report, p);
  const int T = p.horizon;
  const BoundResult level = level_hit_probability_bound(T, p.g_def, p.gamma);
  report.add_optional("level_hit_bound_at_T", level.value);
  report.add_optional("argmin_tail_bound_at_T", argmin_tail_bound(T, p.g_def, p.gamma).value);
  if (p.supercritical()) {
    const double drift = 1.0 - 2.0 * p.g_def - 2.0 * p.gamma;
    const double a = std::min(1.0, drift * drift / 2.0);
    report.add("decayed_sum_rate", a);
    report.add("decayed_sum_bound_stated", decayed_harmonic_sum_bound(a, 0, T));
    report.add("decayed_sum_bound_with_tail_factor", decayed_harmonic_sum_bound_with_tail_factor(a, 0, T));
  }
  report.print(out, resolve_format(options, Format::kText));
  return kExitOk;
}

int cmd_value_table(const GlobalOptions& options, std::ostream& out) {
  const AttackParams p = resolve_config(options).params;
  const ValueTable table = build_value_table(p);
  const Format format = resolve_format(options, Format::kCsv);
  ordered_json rows = ordered_json::array();
  if (format != Format::kJson) out << "t,l,wmax_over_phi_gamma_R,payout_over_phi_gamma_R,reachable\n";
  for (int t = 0; t <= p.horizon; ++t) {
    for (int l = 0; l <= table.band_limit(t); ++l) {
      std::optional<double> payout;
      if (t < p.horizon && l >= 1 && table.contains(t + 1, l + 1)) payout = table.payout_fraction(t, l);
      const bool reachable = is_reachable(GameState{t, l}, p.horizon, p.initial_gap);
      if (format == Format::kJson) {
        rows.push_back({{"t", t}, {"l", l}, {"wmax_over_phi_gamma_R", table.survival(t, l)},
                        {"payout_over_phi_gamma_R", payout ? ordered_json(*payout) : ordered_json(nullptr)}, {"reachable", reachable}});
      } else {
        out << t << ',' << l << ',' << format_number(table.survival(t, l)) << ',' << (payout ? format_number(*payout) : "") << ','
            << (reachable ? "true" : "false") << '\n';
      }
    }
  }
  if (format == Format::kJson) out << rows.dump(2) << '\n';
  return kExitOk;
}

int cmd_simulate(const GlobalOptions& options, std::size_t trials, std::optional<std::uint64_t> seed, std::ostream& out,
                 std::ostream& err) {
  const Config config = resolve_config(options);
  const AttackParams& p = config.params;
  const ValueTable table = build_value_table(p);
  const std::uint64_t master = seed.value_or(config.seed);
  const AggregateReport report =
      run_trials(p, config.population, table, equilibrium_strategies(config.population), master, trials, options.threads);
  const QuantileTable quantiles = cost_quantiles(report);

  Report summary;
  summary.add("master_seed", master);
  summary.add("trials", report.trials);
  summary.add("success_rate", report.success_rate);
  summary.add("success_rate_standard_error", report.success_rate_standard_error);
  summary.add("mean_per_block_cost", report.mean_per_block);
  summary.add("mean_corruption_cost", report.mean_corruption);
  summary.add("mean_total_cost", report.mean_total);
  summary.add("total_cost_standard_error", report.total_standard_error);
  summary.add("mean_duration", report.mean_duration);
  for (const QuantileEstimate& q : quantiles.quantiles) {
    const std::string key = "total_cost_p" + format_number(q.level * 100);
    summary.add(key, q.value);
    if (q.flagged) summary.add(key + "_flag", "fewer trials than 1/(1-q); value is the sample maximum");
  }
  summary.add("total_cost_max", quantiles.max_observed);

  const Format format = resolve_format(options, Format::kCsv);
  if (format == Format::kText) {
    summary.print(out, Format::kText);
    return kExitOk;
  }
  if (format == Format::kJson) {
    ordered_json doc;
    std::ostringstream text;
    summary.print(text, Format::kJson);
    doc["summary"] = ordered_json::parse(text.str());
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < report.per_trial.size(); ++i) {
      const TrialSummary& t = report.per_trial[i];
      list.push_back({{"trial", i}, {"outcome", t.success ? "success" : "failure"}, {"duration", t.duration},
                      {"attack_blocks", t.attack_blocks}, {"per_block_cost", t.cost.per_block},
                      {"corruption_cost", t.cost.corruption}, {"total_cost", t.cost.total}});
    }
    doc["trials"] = std::move(list);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "trial,outcome,duration,attack_blocks,per_block_cost,corruption_cost,total_cost\n";
  for (std::size_t i = 0; i < report.per_trial.size(); ++i) {
    const TrialSummary& t = report.per_trial[i];
    out << i << ',' << (t.success ? "success" : "failure") << ',' << t.duration << ',' << t.attack_blocks << ','
        << format_number(t.cost.per_block) << ',' << format_number(t.cost.corruption) << ',' << format_number(t.cost.total) << '\n';
  }
  err << "success rate " << format_number(report.success_rate) << ", mean total cost " << format_number(report.mean_total) << " +- "
      << format_number(report.total_standard_error) << '\n';
  return kExitOk;
}

int cmd_equilibrium(const GlobalOptions& options, std::vector<double> shares, int points, std::ostream& out) {
  const AttackParams p = resolve_config(options).params;
  const ValueTable table = build_value_table(p);
  if (shares.empty()) shares = default_share_grid(p.gamma, points);
  const EquilibriumAudit audit = audit_equilibrium(table, shares);
  const Format format = resolve_format(options, Format::kText);
  if (format == Format::kCsv) {
    out << "share,states_checked,max_violation,max_abs_slack,non_strict_states,zero_payout_states,pivotal_step_ok\n";
    for (const ShareAudit& s : audit.shares) {
      out << format_number(s.share) << ',' << s.states_checked << ',' << format_number(s.max_violation) << ','
          << format_number(s.max_abs_slack) << ',' << s.non_strict_states << ',' << s.zero_payout_states << ','
          << (s.pivotal_step_ok ? "true" : "false") << '\n';
    }
  } else {
    Report report;
    report.add("result", audit.passed ? "PASS" : "FAIL");
    report.add("max_violation", audit.max_violation);
    report.add("tolerance", audit.tolerance);
    report.add("shares_checked", audit.shares.size());
    std::size_t states = 0;
    for (const ShareAudit& s : audit.shares) states += s.states_checked;
    report.add("incentive_checks", states);
    if (format == Format::kText) out << (audit.passed ? "PASS" : "FAIL") << '\n';
    report.print(out, format);
  }
  return audit.passed ? kExitOk : kExitRuntime;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"bribelab: bribery-funded majority attack analysis"};
  app.require_subcommand(1);
  GlobalOptions options;
  app.add_option("--config", options.config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--preset", options.preset, "named parameters: bitcoin-a, bitcoin-b, cost-curve");
  app.add_option("--format", options.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--threads", options.threads, "worker threads (0 = all; BRIBELAB_THREADS caps)");

  std::string case_name;
  bool btc = false;
  CLI::App* case_study = app.add_subcommand("case-study", "exact analysis, bounds and comparisons for a published case study");
  case_study->add_option("name", case_name, "bitcoin-a or bitcoin-b")->required();
  case_study->add_flag("--btc", btc, "also quote costs in BTC");

  SweepOptions sweep_options;
  CLI::App* sweep = app.add_subcommand("sweep", "vary one parameter over a grid");
  sweep->add_option("--vary", sweep_options.vary, "T, l0, gamma, g_def or phi");
  sweep->add_option("--from", sweep_options.from);
  sweep->add_option("--to", sweep_options.to);
  sweep->add_option("--step", sweep_options.step);
  sweep->add_option("--preset", sweep_options.preset, "cost-curve: T from 200 to 5000 in steps of 100");
  sweep->add_option("--out-csv", sweep_options.out_csv);
  sweep->add_option("--out-svg", sweep_options.out_svg);
  sweep->add_option("--out-json", sweep_options.out_json);

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form bounds for the configured parameters");
  CLI::App* value_table = app.add_subcommand("value-table", "pseudo-value and payout table as CSV");

  std::size_t trials = 10000;
  std::optional<std::uint64_t> seed;
  CLI::App* simulate = app.add_subcommand("simulate", "seeded Monte Carlo trials of the equilibrium attack");
  simulate->add_option("--trials", trials)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "master seed (default: config seed)");

  std::vector<double> shares;
  int points = 10;
  CLI::App* equilibrium = app.add_subcommand("equilibrium", "audit participation incentives; prints PASS or FAIL");
  equilibrium->add_option("--shares", shares, "miner shares to audit (default: an even grid up to gamma)")->delimiter(',');
  equilibrium->add_option("--points", points, "size of the default share grid")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (*case_study) return cmd_case_study(options, case_name, btc, out);
    if (*sweep) return cmd_sweep(options, sweep_options, out, err);
    if (*bounds) return cmd_bounds(options, out);
    if (*value_table) return cmd_value_table(options, out);
    if (*simulate) return cmd_simulate(options, trials, seed, out, err);
    if (*equilibrium) return cmd_equilibrium(options, shares, points, out);
  } catch (const RuntimeFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ValidationError& e) {
    err << "invalid " << e.field() << ": " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitInvalid;
}

}  // namespace bribelab::cli
