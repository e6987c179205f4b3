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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"
#include "presets.hpp"
#include "sweep.hpp"
#include "svg_plot.hpp"

using namespace bribelab;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bribelab");
  std::vector<const char*> argv;
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  std::ostringstream out, err;
  Run result;
  result.code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 1);
    CHECK(run({"no-such-command"}).code == 1);
    CHECK(run({"--format", "xml", "bounds"}).code == 1);
    CHECK(run({"bounds"}).code == 1);
    CHECK(run({"--preset", "nope", "bounds"}).code == 1);
    CHECK(run({"case-study", "bitcoin-c"}).code == 1);
    CHECK(run({"--config", "/nonexistent/config.json", "bounds"}).code == 1);

    const auto bad = write_temp("bribelab_bad.json", R"({"T":10,"l0":1,"gamma":1.5,"g_def":0.1})");
    const Run invalid = run({"--config", bad.string(), "bounds"});
    CHECK(invalid.code == 1);
    CHECK(invalid.err.find("gamma") != std::string::npos);
    const auto broken = write_temp("bribelab_broken.json", "{not json");
    CHECK(run({"--config", broken.string(), "bounds"}).code == 1);

    CHECK(run({"--preset", "bitcoin-b", "sweep", "--vary", "T", "--from", "10", "--to", "20", "--step", "5", "--out-csv",
               "/nonexistent/dir/out.csv"})
              .code == 2);
    CHECK(run({"--preset", "bitcoin-b", "sweep", "--vary", "x", "--from", "1", "--to", "2", "--step", "1"}).code == 1);
  }

  TEST_CASE("presets") {
    CHECK(cli::preset_names().size() == 3);
    const auto a = cli::find_preset("bitcoin-a");
    REQUIRE(a);
    CHECK(a->config.params.horizon == 2500);
    CHECK(a->config.params.initial_gap == 150);
    CHECK(a->config.params.gamma == 0.05);
    CHECK(a->config.params.g_def == 0.4);
    CHECK(a->config.params.phi == 158000.0);
    const auto b = cli::find_preset("bitcoin-b");
    REQUIRE(b);
    CHECK(b->config.params.horizon == 400);
    CHECK(b->config.params.gamma == 0.03);
    CHECK(b->config.params.g_def == 0.2);
    CHECK_FALSE(cli::find_preset("bitcoin"));
    const cli::SweepPreset grid = cli::cost_curve_sweep();
    CHECK(grid.vary == "T");
    CHECK(cli::sweep_grid(grid.from, grid.to, grid.step).size() == 49);
  }

  TEST_CASE("bounds csv row carries the Budish comparator") {
    const Run result = run({"--preset", "bitcoin-a", "--format", "csv", "bounds"});
    REQUIRE(result.code == 0);
    const auto rows = lines(result.out);
    REQUIRE(rows.size() == 2);
    const auto header = split(rows[0]);
    const auto values = split(rows[1]);
    REQUIRE(header.size() == values.size());
    bool found = false;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == "budish_cost") {
        CHECK(std::stod(values[i]) == 160500.0);
        found = true;
      }
    }
    CHECK(found);
  }

  TEST_CASE("case study text and json") {
    const Run text = run({"case-study", "bitcoin-b", "--btc"});
    REQUIRE(text.code == 0);
    CHECK(text.out.find("expected_total_cost") != std::string::npos);
    CHECK(text.out.find("btc_note") != std::string::npos);
    const Run json = run({"--format", "json", "case-study", "bitcoin-a"});
    REQUIRE(json.code == 0);
    CHECK(json.out.find("\"worst_case_over_phi_R\": 2.38") != std::string::npos);
  }

  TEST_CASE("value table of the two-step toy") {
    const auto toy = write_temp("bribelab_toy.json", R"({"T":2,"l0":1,"gamma":0.05,"g_def":0.4,"phi":3,"reward":2})");
    const Run result = run({"--config", toy.string(), "value-table"});
    REQUIRE(result.code == 0);
    const auto rows = lines(result.out);
    CHECK(rows.front() == "t,l,wmax_over_phi_gamma_R,payout_over_phi_gamma_R,reachable");
    bool found = false;
    for (const std::string& row : rows) {
      const auto fields = split(row);
      if (fields.size() == 5 && fields[0] == "1" && fields[1] == "1") {
        CHECK(std::stod(fields[2]) == doctest::Approx(0.45).epsilon(1e-12));
        CHECK(std::stod(fields[3]) == doctest::Approx(1.0).epsilon(1e-12));  // the last block decides the attack
        CHECK(fields[4] == "false");
        found = true;
      }
      if (fields.size() == 5 && fields[0] == "2") CHECK(fields[3].empty());
      if (fields.size() == 5 && fields[0] == "0" && fields[1] == "1") {
        CHECK(std::stod(fields[3]) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(fields[4] == "true");
      }
    }
    CHECK(found);
  }

  TEST_CASE("sweep csv columns are consistent") {
    const Run result = run({"--preset", "bitcoin-a", "sweep", "--vary", "T", "--from", "100", "--to", "1000", "--step", "100"});
    REQUIRE(result.code == 0);
    const auto rows = lines(result.out);
    REQUIRE(rows.size() == 11);
    const auto header = split(rows[0]);
    CHECK(header.size() == 28);
    const auto column = [&](const std::string& name) {
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
      }
      FAIL("missing column " << name);
      return std::size_t{0};
    };
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const auto f = split(rows[r]);
      REQUIRE(f.size() == header.size());
      const double T = std::stod(f[column("T")]);
      const double phi = std::stod(f[column("phi")]);
      const double gamma = std::stod(f[column("gamma")]);
      const double reward = std::stod(f[column("reward")]);
      const double per_block = std::stod(f[column("expected_per_block_cost")]);
      const double corruption = std::stod(f[column("expected_corruption_cost")]);
      CHECK(std::stod(f[column("expected_total_cost")]) == doctest::Approx(per_block + corruption).epsilon(1e-12));
      CHECK(std::stod(f[column("corruption_over_phi_gamma_R")]) == doctest::Approx(corruption / (phi * gamma * reward)).epsilon(1e-12));
      CHECK(std::stod(f[column("budish_cost")]) == (T + phi) * reward);
      CHECK(f[column("dominance_ok")] == "true");
      CHECK(T == 100.0 * static_cast<double>(r));
    }
  }

  TEST_CASE("sweep keeps invalid points as rows") {
    const Run result = run({"--preset", "bitcoin-a", "sweep", "--vary", "gamma", "--from", "0.0", "--to", "0.2", "--step", "0.1"});
    REQUIRE(result.code == 0);
    const auto rows = lines(result.out);
    REQUIRE(rows.size() == 4);
    const auto first = split(rows[1]);
    CHECK(first.size() == 28);
    CHECK(first[2] == "false");
    CHECK_FALSE(first.back().empty());
    CHECK(split(rows[2])[2] == "true");
  }

  TEST_CASE("sweep writes files and a well-formed svg") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto csv = dir / "bribelab_curve.csv";
    const auto svg = dir / "bribelab_curve.svg";
    const auto json = dir / "bribelab_curve.json";
    const Run result = run({"sweep", "--preset", "cost-curve", "--to", "1000", "--out-csv", csv.string(), "--out-svg", svg.string(),
                            "--out-json", json.string()});
    REQUIRE(result.code == 0);
    CHECK(result.out.empty());
    CHECK(lines([&] {
            std::ifstream in(csv);
            return std::string(std::istreambuf_iterator<char>(in), {});
          }())
              .size() == 10);
    std::ifstream in(svg);
    const std::string text(std::istreambuf_iterator<char>(in), {});
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("</svg>") != std::string::npos);
    CHECK(text.find("<polyline") != std::string::npos);
    CHECK(std::filesystem::file_size(json) > 0);
  }

  TEST_CASE("simulate is reproducible") {
    const auto toy = write_temp("bribelab_sim.json", R"({"T":40,"l0":3,"gamma":0.1,"g_def":0.3,"phi":50})");
    const Run first = run({"--config", toy.string(), "simulate", "--trials", "200", "--seed", "9"});
    const Run second = run({"--config", toy.string(), "--threads", "3", "simulate", "--trials", "200", "--seed", "9"});
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    const auto rows = lines(first.out);
    CHECK(rows.size() == 201);
    CHECK(rows[0] == "trial,outcome,duration,attack_blocks,per_block_cost,corruption_cost,total_cost");
    CHECK(first.err.find("success rate") != std::string::npos);
    CHECK(run({"--config", toy.string(), "simulate", "--trials", "0"}).code == 1);
  }

  TEST_CASE("equilibrium audit passes") {
    const auto toy = write_temp("bribelab_eq.json", R"({"T":60,"l0":5,"gamma":0.1,"g_def":0.3,"phi":100})");
    const Run result = run({"--config", toy.string(), "equilibrium", "--shares", "0.02,0.05,0.1"});
    CHECK(result.code == 0);
    CHECK(result.out.rfind("PASS", 0) == 0);
    CHECK(run({"--config", toy.string(), "equilibrium", "--shares", "0.2"}).code == 1);
  }
}
