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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bribelab/attack_analytics.hpp"
#include "bribelab/closed_form_bounds.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bribelab;

TEST_SUITE("closed_form_bounds") {
  TEST_CASE("budish cost") {
    CHECK(budish_total_cost(2500, 158000, 1.0) == 160500.0);
    CHECK(budish_total_cost(0, 2e5, 6.25) > 1.2e6);
    CHECK(budish_total_cost(0, 0, 1.0) == 0.0);
    CHECK(budish_miner_cost(2500, 158000, 0.05, 1.0) == doctest::Approx(8025.0));
    CHECK_THROWS_AS(budish_total_cost(-1, 1, 1), std::domain_error);
  }

  TEST_CASE("participation loss") {
    CHECK(participation_loss_bound(3.0, 100.0, 0.0) == 3.0);
    CHECK(participation_loss_bound(0.0, 100.0, 1.0) == 100.0);
    CHECK(participation_loss_bound(1.0, 100.0, 0.01) == doctest::Approx(2.0));
    CHECK_THROWS_AS(participation_loss_bound(1.0, 1.0, 1.5), std::domain_error);
  }

  TEST_CASE("thresholding cost and f_max selection") {
    CHECK(thresholding_cost(2500, 1.0, 158000, 1.0) == budish_total_cost(2500, 158000, 1.0));
    MinerPopulation twenty;
    twenty.noncommitted.assign(20, 0.05);
    const FmaxSelection sel = select_fmax(twenty, [](double p) { return p; }, 0.55);
    CHECK(sel.feasible);
    CHECK(sel.f_max == 0.05);
    CHECK(sel.covered_share == doctest::Approx(1.0));
    CHECK(thresholding_cost(100, sel.f_max, 2000, 1.0) == doctest::Approx(100 + 0.05 * 2000));
    CHECK(thresholding_miner_cost(100, 0.05, 2000, 0.05, 1.0) == doctest::Approx((100 + 0.05 * 2000) * 0.05));

    MinerPopulation mixed;
    mixed.honest = {0.3};
    mixed.noncommitted = {0.3, 0.2, 0.1, 0.05, 0.05};
    const FmaxSelection partial = select_fmax(mixed, [](double p) { return p; }, 0.51);
    // Honest power never counts toward coverage.
    CHECK(partial.feasible);
    CHECK(partial.f_max == 0.3);
    CHECK(partial.covered_share == doctest::Approx(0.7));
    const FmaxSelection short_of = select_fmax(mixed, [](double p) { return p; }, 0.75);
    CHECK_FALSE(short_of.feasible);
    CHECK(short_of.covered_share == doctest::Approx(0.7));
    MinerPopulation bribable;
    bribable.noncommitted = {0.4, 0.3, 0.2, 0.1};
    const FmaxSelection need = select_fmax(bribable, [](double p) { return p; }, 0.55);
    CHECK(need.feasible);
    CHECK(need.f_max == 0.3);
    CHECK(need.covered_share == doctest::Approx(0.6));
    CHECK_THROWS_AS(select_fmax(bribable, [](double p) { return p; }, 0.5), std::domain_error);
  }

  TEST_CASE("hoeffding success bound") {
    const BoundResult b = failure_upper_bound(AttackParams{2500, 150, 0.05, 0.4});
    REQUIRE(b.valid());
    CHECK(*b.value == doctest::Approx(std::exp(-24.5)).epsilon(1e-12));
    CHECK(*b.value == doctest::Approx(2.29e-11).epsilon(0.01));
    CHECK(*success_lower_bound(AttackParams{2500, 150, 0.05, 0.4}).value == doctest::Approx(1.0 - std::exp(-24.5)));
    CHECK_FALSE(success_lower_bound(AttackParams{750, 150, 0.05, 0.4}).valid());
    CHECK_FALSE(success_lower_bound(AttackParams{700, 150, 0.05, 0.4}).valid());
    CHECK_FALSE(success_lower_bound(AttackParams{20, 20, 0.05, 0.0}).valid());
    CHECK(*failure_upper_bound(AttackParams{21, 20, 0.05, 0.0}).value == doctest::Approx(std::exp(-1.0 / 42.0)));
    // Dominance against the exact failure probability.
    for (int T : {800, 1000, 1500, 2500, 4000}) {
      const AttackParams p{T, 150, 0.05, 0.4};
      CHECK(success_probability(p).failure <= *failure_upper_bound(p).value);
    }
  }

  TEST_CASE("expected stopping time") {
    CHECK(expected_stopping_time_bound(150, 0.4) == doctest::Approx(750.0));
    CHECK(expected_stopping_time_bound(150, 0.0) == 150.0);
    CHECK(expected_stopping_time_bound(150, 0.2) == doctest::Approx(250.0));
    CHECK_THROWS_AS(expected_stopping_time_bound(150, 0.5), std::domain_error);
  }

  TEST_CASE("level-hit probability bound") {
    const BoundResult b = level_hit_probability_bound(100, 0.4, 0.05);
    REQUIRE(b.valid());
    CHECK(*b.value == doctest::Approx(0.146410758764643).epsilon(1e-12));
    CHECK(*b.value == doctest::Approx(std::pow(0.55, 2.5) / (std::sqrt(2 * std::numbers::pi) * std::pow(0.45, 3.5)) / 10.0));
    CHECK(*level_hit_probability_bound(2000000000, 0.4, 0.05).value < 1e-4);
    const BoundResult clamped = level_hit_probability_bound(1, 0.05, 0.05);
    CHECK(clamped.clamped);
    CHECK(*clamped.value == 1.0);
    CHECK_THROWS_AS(level_hit_probability_bound(0, 0.4, 0.05), std::domain_error);
    for (int m = 1; m <= 400; m += 13) {
      CHECK(oracle::binomial_mode_mass(m, 0.45) <= *level_hit_probability_bound(m, 0.4, 0.05).value);
    }
  }

  TEST_CASE("argmin tail bound") {
    CHECK(*argmin_tail_bound(0, 0.4, 0.05).value == 1.0);
    CHECK(*argmin_tail_bound(100, 0.4, 0.05).value == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(*argmin_tail_bound(100, 0.4, 0.05).value == doctest::Approx(0.6065).epsilon(1e-4));
    CHECK_FALSE(argmin_tail_bound(10, 0.4, 0.1).valid());
    const AttackParams p{12, 1, 0.05, 0.3};
    const double up = p.threshold_walk_up_probability();
    for (int start = 2; start <= 8; ++start) {
      for (int tau = 0; tau <= p.horizon; ++tau) {
        CHECK(oracle::conditional_argmin_probability(p.horizon, 0, start, tau, up) <=
              *argmin_tail_bound(p.horizon - tau, p.g_def, p.gamma).value + 1e-15);
      }
    }
  }

  TEST_CASE("decayed harmonic sum bound as stated") {
    CHECK(decayed_harmonic_sum_bound(1.0, 5, 5) == doctest::Approx(1.0 + 1.0 / (1.0 - std::exp(-1.0))));
    CHECK(decayed_harmonic_sum_bound(1.0, 5, 5) == doctest::Approx(2.582).epsilon(1e-3));
    CHECK(oracle::decayed_harmonic_sum(1.0, 5, 5) == 1.0);
    CHECK_THROWS_AS(decayed_harmonic_sum_bound(0.0, 0, 5), std::domain_error);
    CHECK_THROWS_AS(decayed_harmonic_sum_bound(1.5, 0, 5), std::domain_error);
    CHECK_THROWS_AS(decayed_harmonic_sum_bound(0.5, 6, 5), std::domain_error);
    // Large spans decay like 2 / sqrt(T - t).
    const double far = decayed_harmonic_sum_bound(0.5, 0, 1000000);
    CHECK(far * std::sqrt(1e6) == doctest::Approx(2.0).epsilon(1e-3));
    // With a = 1 the stated form holds across spans.
    for (int n = 0; n <= 5000; n += 7) CHECK(oracle::decayed_harmonic_sum(1.0, 0, n) <= decayed_harmonic_sum_bound(1.0, 0, n));
  }

  TEST_CASE("decayed harmonic sum: stated form fails for small a, restored tail factor holds") {
    // Known counterexample: a = 0.01, T - t = 681.
    const double direct = oracle::decayed_harmonic_sum(0.01, 0, 681);
    CHECK(direct == doctest::Approx(4.24).epsilon(0.01));
    CHECK(decayed_harmonic_sum_bound(0.01, 0, 681) < direct);
    CHECK(decayed_harmonic_sum_bound_with_tail_factor(0.01, 0, 681) >= direct);
    for (double a : {0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.5, 0.75, 1.0}) {
      for (int n = 0; n <= 5000; n += 11) {
        CHECK(oracle::decayed_harmonic_sum(a, 0, n) <= decayed_harmonic_sum_bound_with_tail_factor(a, 0, n));
      }
    }
  }

  TEST_CASE("worst-case cost bound") {
    const AttackParams p{2500, 150, 0.05, 0.4, 158000};
    const CostBound b = worst_case_cost_bound(p);
    REQUIRE(b.valid());
    CHECK(*b.per_block == 2500.0);
    const double bracket = *b.corruption / p.threshold_stake();
    CHECK(4.0 * std::log1p(50.0) / 0.1 == doctest::Approx(157.3).epsilon(1e-3));
    CHECK(bracket == doctest::Approx(157.3 + 292.6).epsilon(2e-3));
    CHECK_FALSE(b.vacuous);
    CHECK_FALSE(worst_case_cost_bound(AttackParams{2500, 150, 0.1, 0.4}).valid());
    double previous = 0.0;
    for (int T = 1; T <= 5000; T += 99) {
      const double total = *worst_case_cost_bound(AttackParams{T, 150, 0.05, 0.4, 158000}).total;
      CHECK(total > previous);
      previous = total;
    }
    const ValueTable table = build_value_table(p);
    CHECK(worst_case_cost(p, table).worst_with_horizon_reimbursement <= *b.total);
  }

  TEST_CASE("expected cost bound") {
    const CostBound a = expected_cost_bound(AttackParams{2500, 150, 0.05, 0.4, 158000});
    REQUIRE(a.valid());
    CHECK(*a.per_block == doctest::Approx(450.0));
    CHECK(a.vacuous);
    CHECK(a.hypothesis_note == "vacuous regime");
    const AttackParams far{20000, 150, 0.05, 0.4, 158000};
    const CostBound b = expected_cost_bound(far);
    CHECK_FALSE(b.vacuous);
    CHECK(*b.corruption / far.threshold_stake() == doctest::Approx(20000 * std::exp(-35.0)).epsilon(1e-9));
    CHECK(*b.corruption / far.threshold_stake() == doctest::Approx(1.3e-11).epsilon(0.02));
    CHECK_FALSE(expected_cost_bound(AttackParams{2500, 150, 0.25, 0.25}).valid());
  }
}
