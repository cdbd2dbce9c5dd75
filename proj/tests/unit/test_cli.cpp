// Copyright 2026 The stabtherm Authors
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

// Runs the stabtherm binary end to end.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run(const std::string& args) {
    std::string cmd = std::string(STABTHERM_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string l; std::getline(ss, l);) out.push_back(l);
    return out;
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("stabtherm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

}  // namespace

TEST_F(Cli, ThermoCsvSchema) {
    fs::path csv = dir_ / "haah.csv";
    CliResult r = run("thermo --model haah --L 3 --beta 0.1:2.0:50 --out " + csv.string());
    ASSERT_EQ(r.code, 0);
    auto rows = lines(slurp(csv));
    ASSERT_EQ(rows.size(), 51u);
    EXPECT_EQ(rows[0], "beta,logZ,f,u,c,flags");
    EXPECT_DOUBLE_EQ(std::stod(rows[1].substr(0, rows[1].find(','))), 0.1);
    EXPECT_NE(rows[1].find("one_sided"), std::string::npos);
    EXPECT_NE(rows[25].find(",ok"), std::string::npos);
}

TEST_F(Cli, ThermoIsDeterministic) {
    fs::path one = dir_ / "one.csv", two = dir_ / "two.csv";
    ASSERT_EQ(run("thermo --model toric4d --L 2 --beta 0.1:1.0:7 --threads 1 --out " + one.string()).code, 0);
    ASSERT_EQ(run("thermo --model toric4d --L 2 --beta 0.1:1.0:7 --threads 3 --out " + two.string()).code, 0);
    EXPECT_EQ(slurp(one), slurp(two));
}

TEST_F(Cli, ThermoSinglePointAndNormalization) {
    CliResult r = run("thermo --model haah --L 3 --beta 1.0:1.0:1 --normalize qubits");
    ASSERT_EQ(r.code, 0);
    auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_NE(rows[1].find("no_derivative"), std::string::npos);
}

TEST_F(Cli, SeriesDualityReport) {
    fs::path csv = dir_ / "series.csv";
    CliResult r = run("duality --check 4dtc-ising --L 2 --out " + csv.string());
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("matched: true"), std::string::npos);
    EXPECT_NE(r.out.find("cutoff: 8"), std::string::npos);
    EXPECT_NE(slurp(csv).find("8,24,16"), std::string::npos);
}

TEST_F(Cli, OtherDualityChecks) {
    for (const char* check : {"homology", "bound", "bath-vx", "bath-vy"}) {
        CliResult r = run(std::string("duality --check ") + check + " --L 2");
        EXPECT_EQ(r.code, 0) << check;
    }
    CliResult chains = run("duality --check haah-chains --L 5 --beta 0.1:3:20 --a 1 --b 0.4");
    EXPECT_EQ(chains.code, 0);
    EXPECT_NE(chains.out.find("matched: true"), std::string::npos);
}

TEST_F(Cli, GsdHaah15) {
    CliResult r = run("gsd --model haah --L 15");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("rank_a: 3350"), std::string::npos);
    EXPECT_NE(r.out.find("rank_b: 3350"), std::string::npos);
    EXPECT_NE(r.out.find("log2_gsd: 50"), std::string::npos);
    EXPECT_EQ(r.out.find("gsd: 4\n"), std::string::npos);
}

TEST_F(Cli, EnumerateFullAndTruncated) {
    CliResult full = run("enumerate --model toric4d --L 2 --side B");
    ASSERT_EQ(full.code, 0);
    auto rows = lines(full.out);
    ASSERT_EQ(rows.size(), 66u);
    EXPECT_EQ(rows[9], "8,24");
    CliResult part = run("enumerate --model toric4d --L 2 --side A --max-weight 12");
    ASSERT_EQ(part.code, 0);
    EXPECT_EQ(lines(part.out).back(), "12,32");
}

TEST_F(Cli, OracleCompareAndLogicals) {
    CliResult r = run("oracle-compare --model toric2d --L 2 --beta 0.25:1.0:4");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("matched: true"), std::string::npos);
    EXPECT_EQ(run("logicals --model toric4d --L 2").code, 0);
    EXPECT_EQ(run("logicals --model haah --L 3").code, 0);
}

TEST_F(Cli, ConfigFileWithFlagOverride) {
    fs::path cfg = dir_ / "run.json";
    std::ofstream(cfg) << R"({"model": "haah", "L": 4, "beta": "0.2:1.0:5"})";
    CliResult from_file = run("gsd --config " + cfg.string());
    ASSERT_EQ(from_file.code, 0);
    EXPECT_NE(from_file.out.find("log2_gsd: 14"), std::string::npos);
    CliResult overridden = run("gsd --config " + cfg.string() + " --L 3");
    ASSERT_EQ(overridden.code, 0);
    EXPECT_NE(overridden.out.find("log2_gsd: 2"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run("gsd --model xcube --L 3").code, 2);
    EXPECT_EQ(run("gsd --model haah --L 1").code, 2);
    EXPECT_EQ(run("thermo --model haah --L 3 --beta 0:1:5").code, 2);
    EXPECT_EQ(run("thermo --model haah --L 3 --beta 1:2").code, 2);
    EXPECT_EQ(run("gsd").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("duality --check nonsense --L 2").code, 2);

    fs::path cfg = dir_ / "bad.json";
    std::ofstream(cfg) << R"({"model": "haah", "colour": 3})";
    EXPECT_EQ(run("gsd --config " + cfg.string()).code, 2);
    std::ofstream(dir_ / "broken.json") << "{\"model\": ";
    EXPECT_EQ(run("gsd --config " + (dir_ / "broken.json").string()).code, 2);

    EXPECT_EQ(run("enumerate --model toric4d --L 2 --cap 10").code, 3);
    EXPECT_EQ(run("duality --check 4dtc-ising --L 3").code, 3);
    EXPECT_EQ(run("oracle-compare --model toric2d --L 3 --beta 0.5:1:3").code, 3);

    // A tolerance no floating-point result can meet.
    EXPECT_EQ(run("oracle-compare --model toric2d --L 2 --beta 0.25:1.0:3 --tol -1").code, 4);
}
