// Copyright 2026 The spectator Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spectator/device.hpp"
#include "spectator/hilbert.hpp"

namespace fs = std::filesystem;

namespace {

std::string config(const std::string &name) {
    return std::string(SPECTATOR_CONFIG_DIR) + "/" + name;
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("spectator_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }

    int run(const std::string &args) {
        std::string cmd = std::string(SPECTATOR_CLI_PATH) + " " + args + " > " + (dir_ / "stdout").string() +
                          " 2> " + (dir_ / "stderr").string();
        int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string read(const fs::path &p) const {
        std::ifstream in(p, std::ios::binary);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }

    fs::path dir_;
};

size_t count_lines(const std::string &text) {
    return static_cast<size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_F(Cli, SpectrumOfChainHasOneRowPerBasisState) {
    ASSERT_EQ(run("spectrum --device " + config("chain014.json") + " --phi01 0.3229 --phi14 0.322 --out " +
                  path("spec")),
              0);
    std::string csv = read(path("spec.csv"));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "label,energy_ghz,overlap,ambiguous");
    EXPECT_EQ(count_lines(csv), 243u + 1);
    auto manifest = nlohmann::json::parse(read(path("spec.manifest.json")));
    EXPECT_EQ(manifest["command"], "spectrum");
    EXPECT_EQ(manifest["output_paths"][0], path("spec.csv"));
    EXPECT_EQ(manifest["parameters"]["--levels"], "3");
}

TEST_F(Cli, UncoupledSpectrumIsBare) {
    std::ofstream(path("dev.json")) << R"({"nodes": [
        {"label": "A", "omega_max_ghz": 5.0, "anharmonicity_ghz": -0.2},
        {"label": "C", "omega_max_ghz": 8.0, "anharmonicity_ghz": -0.3, "tunable": true, "asymmetry_d": 0.1}]})";
    ASSERT_EQ(run("spectrum --device " + path("dev.json") + " --flux C=0.2 --levels 2 --out " + path("s")), 0);
    spectator::DeviceGraph d = spectator::load_device_file(path("dev.json"));
    spectator::FluxPoint f{{{"C", 0.2}}};
    std::istringstream csv(read(path("s.csv")));
    std::string line;
    std::getline(csv, line);
    int rows = 0;
    while (std::getline(csv, line)) {
        std::string label = line.substr(0, line.find(','));
        double energy = std::stod(line.substr(line.find(',') + 1));
        spectator::Occupation occ = {label[0] - '0', label[2] - '0'};
        EXPECT_NEAR(energy, spectator::bare_energy(occ, d, f), 1e-9);
        rows++;
    }
    EXPECT_EQ(rows, 4);
}

TEST_F(Cli, ExitCodes) {
    std::ofstream(path("bad.json")) << "{\"nodes\": [";
    EXPECT_EQ(run("spectrum --device " + path("bad.json") + " --out " + path("x")), 2);
    EXPECT_NE(read(path("stderr")).find("parse error"), std::string::npos);
    EXPECT_EQ(run("spectrum --device " + path("missing.json") + " --out " + path("x")), 4);
    EXPECT_EQ(run("spectrum --device " + config("chain014.json") + " --out " + path("nodir/x")), 4);
    EXPECT_EQ(run("spectrum --device " + config("chain014.json") + " --flux Q0=0.1 --out " + path("x")), 2);
    EXPECT_EQ(run("spectrum --out " + path("x")), 2);
    // No crossing in this window: a physics error.
    EXPECT_EQ(run("gap-sweep --device " + config("chain014.json") +
                  " --phi14 0.322 --pair Q0,Q1 --gate-coupler C14 --gate-from 0.0 --gate-to 0.05"
                  " --spectator Q4 --coupler C01 --from 0.3 --to 0.31 --points 2 --out " +
                  path("g")),
              3);
    EXPECT_FALSE(fs::exists(path("g.csv")));
    std::string lz = "lz --device " + config("chain014.json") +
                     " --phi14 0.322 --gate-coupler C14 --amplitude 0.07 --source Q0 --target Q1 --tau-ns 10 --out " +
                     path("l");
    EXPECT_EQ(run(lz + " --companion C01=0.01:10"), 2);
    EXPECT_EQ(run(lz + " --companion C14=0.01:10:0"), 2);
}

TEST_F(Cli, OutputsAreDeterministic) {
    std::string args = "zz-sweep --device " + config("chain014.json") +
                       " --phi14 0.322 --pair Q0,Q1 --coupler C01 --from 0.25 --to 0.35 --points 6 --workers 3 --out ";
    ASSERT_EQ(run(args + path("a")), 0);
    ASSERT_EQ(run(args + path("b")), 0);
    EXPECT_EQ(read(path("a.csv")), read(path("b.csv")));
    EXPECT_EQ(count_lines(read(path("a.csv"))), 7u);
    // Re-running from the manifest's argv reproduces the CSV.
    auto m = nlohmann::json::parse(read(path("a.manifest.json")));
    std::string replay;
    for (size_t k = 1; k < m["argv"].size(); k++) {
        replay += " " + m["argv"][k].get<std::string>();
    }
    fs::rename(path("a.csv"), path("a_first.csv"));
    ASSERT_EQ(run(replay), 0);
    EXPECT_EQ(read(path("a.csv")), read(path("a_first.csv")));
}

TEST_F(Cli, GapSweepHasBothConditions) {
    ASSERT_EQ(run("gap-sweep --device " + config("chain014.json") +
                  " --phi14 0.322 --pair Q0,Q1 --gate-coupler C14 --gate-from 0.33 --gate-to 0.41"
                  " --spectator Q4 --states 0,1 --coupler C01 --from 0.29 --to 0.33 --points 3 --out " +
                  path("gap")),
              0);
    std::string csv = read(path("gap.csv"));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "bias,spectator_state,phi_resonance,gap_ghz,coupling_ghz");
    EXPECT_EQ(count_lines(csv), 7u);
}

TEST_F(Cli, LzAndCompensateOnIdealDevice) {
    std::string common = " --device " + config("chain014_ideal.json") +
                         " --phi01 0.3229357 --phi14 0.322 --gate-coupler C14 --amplitude 0.074 --rise-ns 30"
                         " --hold-ns 138 --source Q0 --target Q1 --spectator Q4=0";
    ASSERT_EQ(run("lz" + common + " --tau-from 0 --tau-to 20 --tau-points 3 --out " + path("lz")), 0);
    EXPECT_EQ(count_lines(read(path("lz.csv"))), 4u);
    ASSERT_EQ(run("compensate" + common + " --comp-coupler C01 --tau-from 0 --tau-to 20 --tau-points 3 --out " +
                  path("comp")),
              0);
    auto j = nlohmann::json::parse(read(path("comp.json")));
    EXPECT_EQ(j["status"], "nothing_to_calibrate");
    EXPECT_EQ(j["amplitude"], 0.0);
    EXPECT_TRUE(fs::exists(path("comp.manifest.json")));
}

TEST_F(Cli, ParallelRejectsConflictingTracks) {
    std::ofstream(path("gates.json")) << R"({"gates": [
        {"pair": ["Q1", "Q4"], "coupler": "C14", "pulse": {"amplitude": 0.07, "rise_ns": 30, "hold_ns": 10},
         "compensations": [{"coupler": "C01", "amplitude": 0.01}]},
        {"pair": ["Q0", "Q3"], "coupler": "C01", "pulse": {"amplitude": 0.07, "rise_ns": 30, "hold_ns": 10}}]})";
    EXPECT_EQ(run("parallel --device " + config("chain014.json") + " --gates " + path("gates.json") + " --out " +
                  path("p")),
              2);
}
