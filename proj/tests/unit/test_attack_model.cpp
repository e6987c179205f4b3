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

#include <set>
#include <string>

#include "bribelab/attack_model.hpp"
#include "bribelab/config.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bribelab;

TEST_SUITE("attack_model") {
  TEST_CASE("case study A parameters load and are supercritical") {
    const Config config = load_config(R"({"T":2500,"l0":150,"gamma":0.05,"g_def":0.4,"phi":158000})");
    CHECK(config.params.horizon == 2500);
    CHECK(config.params.initial_gap == 150);
    CHECK(config.params.phi == 158000.0);
    CHECK(config.params.reward == 1.0);
    CHECK(config.params.epsilon_payment == 0.0);
    CHECK(config.params.supercritical());
  }

  TEST_CASE("boundary g_def + gamma = 1/2 is valid but not supercritical") {
    const Config config = load_config(R"({"T":1,"l0":1,"gamma":0.5,"g_def":0.5})");
    CHECK_FALSE(config.params.supercritical());
    CHECK(config.params.phi == 1.0);
  }

  TEST_CASE("omitted miners split into an honest bloc and equal bribable miners") {
    const Config config = load_config(R"({"T":10,"l0":2,"gamma":0.05,"g_def":0.4})");
    REQUIRE(config.population.honest.size() == 1);
    CHECK(config.population.honest[0] == 0.4);
    REQUIRE(config.population.noncommitted.size() == 12);
    for (double share : config.population.noncommitted) CHECK(share == doctest::Approx(0.05).epsilon(1e-15));
    double total = 0.0;
    for (std::size_t i = 0; i < config.population.size(); ++i) total += config.population.share(i);
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }

  TEST_CASE("equal split never exceeds gamma") {
    for (double g : {0.0, 0.1, 0.25, 0.33}) {
      for (double gamma : {0.01, 0.03, 0.07, 0.1, 0.17}) {
        AttackParams p{100, 5, gamma, g};
        const MinerPopulation pop = MinerPopulation::equal_split(p);
        CHECK_NOTHROW(pop.validate(p));
        for (double s : pop.noncommitted) CHECK(s <= gamma);
      }
    }
  }

  TEST_CASE("explicit miners are validated") {
    const char* ok = R"({"T":5,"l0":1,"gamma":0.3,"g_def":0.2,"miners":{"honest":[0.1,0.1],"noncommitted":[0.3,0.3,0.2]}})";
    const Config config = load_config(ok);
    CHECK(config.population.size() == 5);
    CHECK(config.population.is_honest(1));
    CHECK_FALSE(config.population.is_honest(2));
    CHECK(config.population.share(2) == 0.3);

    auto field_of = [](const char* doc) {
      try {
        load_config(doc);
      } catch (const ValidationError& e) {
        return e.field();
      }
      return std::string("<none>");
    };
    CHECK(field_of(R"({"T":5,"l0":1,"gamma":0.3,"g_def":0.2,"miners":{"honest":[0.2],"noncommitted":[0.4,0.4]}})") == "miners.noncommitted");
    CHECK(field_of(R"({"T":5,"l0":1,"gamma":0.3,"g_def":0.2,"miners":{"honest":[0.2],"noncommitted":[0.3,0.3]}})") == "miners");
    CHECK(field_of(R"({"T":5,"l0":1,"gamma":0.3,"g_def":0.2,"miners":{"honest":[0.3],"noncommitted":[0.3,0.3,0.1]}})") == "miners.honest");
    CHECK(field_of(R"({"T":0,"l0":1,"gamma":0.3,"g_def":0.2})") == "T");
    CHECK(field_of(R"({"T":3,"l0":0,"gamma":0.3,"g_def":0.2})") == "l0");
    CHECK(field_of(R"({"T":3,"l0":1,"gamma":0,"g_def":0.2})") == "gamma");
    CHECK(field_of(R"({"T":3,"l0":1,"gamma":0.1,"g_def":1.0})") == "g_def");
    CHECK(field_of(R"({"T":3,"l0":1,"gamma":0.1,"g_def":0.2,"phi":-1})") == "phi");
    CHECK(field_of(R"({"T":3,"l0":1,"gamma":0.1,"g_def":0.2,"epsilon":-1})") == "epsilon");
  }

  TEST_CASE("schema violations are parse errors") {
    CHECK_THROWS_AS(load_config("{"), ConfigError);
    CHECK_THROWS_AS(load_config("[1,2]"), ConfigError);
    CHECK_THROWS_AS(load_config(R"({"T":3,"l0":1,"gamma":0.1,"g_def":0.2,"colour":1})"), ConfigError);
    CHECK_THROWS_AS(load_config(R"({"T":3.5,"l0":1,"gamma":0.1,"g_def":0.2})"), ConfigError);
    CHECK_THROWS_AS(load_config(R"({"T":3,"l0":1,"gamma":"x","g_def":0.2})"), ConfigError);
    CHECK_THROWS_AS(load_config(R"({"l0":1,"gamma":0.1,"g_def":0.2})"), ConfigError);
    CHECK_THROWS_AS(load_config(R"({"T":3,"l0":1,"gamma":0.1,"g_def":0.2,"seed":-4})"), ConfigError);
    CHECK_THROWS_AS(load_config(R"({"T":3,"l0":1,"gamma":0.1,"g_def":0.2,"miners":{"pools":[]}})"), ConfigError);
    CHECK_THROWS_AS(load_config_file("/nonexistent/bribelab.json"), ConfigError);
  }

  TEST_CASE("config round-trips through dump_config") {
    Config config = load_config(R"({"T":40,"l0":3,"gamma":0.07,"g_def":0.21,"phi":12.5,"reward":6.25,"epsilon":1e-9,"seed":18446744073709551615})");
    CHECK(config.seed == 18446744073709551615ULL);
    const Config again = load_config(dump_config(config));
    CHECK(again.params.horizon == 40);
    CHECK(again.params.gamma == config.params.gamma);
    CHECK(again.params.reward == 6.25);
    CHECK(again.params.epsilon_payment == 1e-9);
    CHECK(again.seed == config.seed);
    CHECK(again.population.noncommitted == config.population.noncommitted);
  }

  TEST_CASE("reachable states of small games") {
    using S = std::vector<GameState>;
    CHECK(reachable_states(AttackParams{2, 1, 0.05, 0.4}) == S{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}});
    CHECK(reachable_states(AttackParams{1, 1, 0.05, 0.4}) == S{{0, 1}, {1, 0}, {1, 2}});
    CHECK(reachable_states(0, 4) == S{{0, 4}});
  }

  TEST_CASE("reachable states match path enumeration") {
    for (int T = 1; T <= 10; ++T) {
      for (int l0 = 1; l0 <= 4; ++l0) {
        std::set<std::pair<int, int>> visited;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << T); ++mask) {
          int gap = l0;
          visited.insert({0, gap});
          for (int s = 0; s < T && gap > 0; ++s) {
            gap += ((mask >> s) & 1U) ? 1 : -1;
            visited.insert({s + 1, gap});
          }
        }
        std::set<std::pair<int, int>> listed;
        for (const GameState& s : reachable_states(T, l0)) {
          listed.insert({s.t, s.gap});
          CHECK((s.gap - l0 - s.t) % 2 == 0);
          CHECK(is_reachable(s, T, l0));
        }
        CHECK(listed == visited);
        CHECK_FALSE(is_reachable(GameState{1, l0}, T, l0));
      }
    }
  }

  TEST_CASE("cost report total is the exact sum") {
    const CostReport r = CostReport::make(0.1, 0.2);
    CHECK(r.total == 0.1 + 0.2);
    CHECK(r.per_block == 0.1);
    CHECK(r.corruption == 0.2);
  }
}
