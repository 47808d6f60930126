// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <json.hpp>

#include "qroute/circuit.hpp"
#include "qroute/harness.hpp"

namespace qroute {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qroute_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI inside the scratch directory; returns its exit status.
  int run(const std::string& args) {
    const std::string cmd = "cd '" + dir_.string() + "' && '" QROUTE_CLI_PATH "' " + args + " > stdout.txt 2> stderr.txt";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(Cli, GenWritesCircuitFile) {
  ASSERT_EQ(run("--seed 3 --out c.txt gen --qubits 8 --gates 25"), 0);
  std::ifstream in(dir_ / "c.txt");
  const Circuit c = read_circuit(in);
  EXPECT_EQ(c.num_qubits(), 8u);
  EXPECT_EQ(c.size(), 25u);
  ASSERT_EQ(run("--seed 3 --out d.txt gen --qubits 8 --gates 25"), 0);
  EXPECT_EQ(read("c.txt"), read("d.txt"));
}

TEST_F(Cli, RouteEmitsStatsRecord) {
  ASSERT_EQ(run("--seed 4 --out c.txt gen --qubits 9 --gates 30"), 0);
  for (const char* h : {"basic", "lookahead", "lookahead-decay", "basic-decay", "naive"}) {
    ASSERT_EQ(run(std::string("--seed 2 route --circuit c.txt --connectivity square --heuristic ") + h +
                  " --out routed.txt"),
              0)
        << read("stderr.txt");
    const auto stats = nlohmann::json::parse(read("stdout.txt"));
    for (const char* key : {"S", "D_tilde", "G", "N", "heuristic", "seed"}) EXPECT_TRUE(stats.contains(key)) << key;
    EXPECT_EQ(stats["G"], 30);
    EXPECT_EQ(stats["N"], 9);
    EXPECT_EQ(stats["heuristic"], h);
    std::ifstream in(dir_ / "routed.txt");
    const Circuit routed = read_circuit(in);
    EXPECT_EQ(routed.count(GateKind::InsertedSwap), stats["S"].get<std::size_t>());
    EXPECT_EQ(compute_layers(routed).depth, stats["D_tilde"].get<std::size_t>());
  }
}

TEST_F(Cli, InvalidInputExitsWithOne) {
  ASSERT_EQ(run("--out c.txt gen --qubits 5 --gates 5"), 0);
  EXPECT_EQ(run("route --circuit c.txt --heuristic nonsense"), 1);
  EXPECT_EQ(run("route --circuit missing.txt"), 1);
  EXPECT_EQ(run("route --circuit c.txt --connectivity ring"), 1);
  EXPECT_EQ(run("gen --qubits 1 --gates 4"), 1);
  EXPECT_EQ(run("frobnicate"), 1);
  std::ofstream(dir_ / "bad.cfg") << "qubits = 10\ncolour = red\n";
  EXPECT_EQ(run("bench --config bad.cfg"), 1);
  std::ofstream(dir_ / "bad2.cfg") << "heuristics = basic, sabre\n";
  EXPECT_EQ(run("bench --config bad2.cfg"), 1);
}

TEST_F(Cli, RuntimeFailureExitsWithTwo) {
  std::ofstream(dir_ / "aggregate.csv") << "not,a,summary\n";
  EXPECT_EQ(run("report --csv aggregate.csv"), 2);
}

TEST_F(Cli, BenchFitCrossoverReportPipeline) {
  std::ofstream(dir_ / "exp.cfg") << "connectivity = square\nqubits = 9,16,25,36,49\ncircuits = 2\n"
                                     "heuristics = lookahead-decay, basic-decay\n";
  ASSERT_EQ(run("--jobs 2 --seed 5 --out res bench --config exp.cfg --circuits 3"), 0) << read("stderr.txt");
  ASSERT_TRUE(fs::exists(dir_ / "res" / "aggregate.csv"));
  EXPECT_NE(read("res/config.txt").find("circuits = 3"), std::string::npos);
  EXPECT_NE(read("res/config.txt").find("seed = 5"), std::string::npos);

  ASSERT_EQ(run("fit --csv res/aggregate.csv --model swap-2d --heuristics basic-decay"), 0) << read("stderr.txt");
  const auto fitted = nlohmann::json::parse(read("stdout.txt"));
  EXPECT_EQ(fitted["heuristic"], "basic-decay");
  EXPECT_EQ(fitted["params"].size(), 2u);
  EXPECT_EQ(run("fit --csv res/aggregate.csv --model cubic"), 1);

  ASSERT_EQ(run("--out grid.csv crossover --runs res/runs_square_basic-decay.jsonl "
                "res/runs_square_lookahead-decay.jsonl --tqg-fidelity 0.999,0.9999 --idling-fidelity 0.99999 "
                "--lo 9 --hi 100"),
            0)
      << read("stderr.txt");
  const std::string grid = read("grid.csv");
  EXPECT_EQ(grid.rfind("tqg_fidelity,idling_fidelity,crossover_n\n", 0), 0u);
  EXPECT_EQ(std::count(grid.begin(), grid.end(), '\n'), 3);

  ASSERT_EQ(run("--out plots report --csv res/aggregate.csv"), 0);
  EXPECT_TRUE(fs::exists(dir_ / "plots" / "series_square_basic-decay.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "plots" / "series_square_lookahead-decay.csv"));
}

TEST_F(Cli, GSweepDefaultsToFourGateCounts) {
  ASSERT_EQ(run("--out gs gsweep --connectivity path --qubits 12 --circuits 2 --heuristics basic"), 0)
      << read("stderr.txt");
  std::ifstream in(dir_ / "gs" / "aggregate.csv");
  const auto rows = read_summary_csv(in);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].g, 24u);
  EXPECT_EQ(rows[3].g, 240u);
}

}  // namespace
}  // namespace qroute
