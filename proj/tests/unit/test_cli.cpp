// Copyright 2026 The gadgetc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "gadgetc/pauli.hpp"

namespace fs = std::filesystem;
using gadgetc::cli::run;

namespace {

const std::string kData = GADGETC_TEST_DATA;

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    Outcome o;
    o.code = run(args, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

std::string data(const std::string &name) { return kData + "/" + name; }

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> csvRows(const std::string &text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            rows.push_back(line);
        }
    }
    return rows;
}

std::vector<double> column(const std::vector<std::string> &rows, std::size_t idx) {
    std::vector<double> values;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        std::istringstream in(rows[r]);
        std::string cell;
        for (std::size_t c = 0; c <= idx; ++c) {
            std::getline(in, cell, ',');
        }
        values.push_back(std::stod(cell));
    }
    return values;
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("gadgetc_cli_" + std::string(
                                     ::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }
    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(dir_ / name) << text;
        return path(name);
    }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, CompileOutputPassesValidation) {
    const auto out = path("compiled.ham");
    auto r = call({"compile", "--model", "zzxx", "--eps", "0.1", data("target_zx.ham"), "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto v = call({"validate", "--model", "zzxx", out});
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_NE(v.out.find("valid: zzxx"), std::string::npos);
    const std::string report = slurp(out + ".report");
    EXPECT_NE(report.find("ancillas: 1"), std::string::npos);
    EXPECT_NE(report.find("seed=24301"), std::string::npos);
    EXPECT_EQ(gadgetc::readHamiltonianFile(out).numQubits(), 3);
}

TEST_F(CliTest, CompileToZxModel) {
    const auto out = path("zz.ham");
    ASSERT_EQ(call({"compile", "--model", "zx", "--eps", "0.05", data("target_zz.ham"), "--out", out}).code, 0);
    EXPECT_EQ(call({"validate", "--model", "zx", out}).code, 0);
    EXPECT_EQ(call({"validate", "--model", "zzxx", out}).code, 3);
}

TEST_F(CliTest, CompileRefusesYY) {
    const auto r = call({"compile", "--model", "zzxx", data("target_yy.ham"), "--out", path("o.ham")});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("YY"), std::string::npos) << r.err;
    EXPECT_FALSE(fs::exists(path("o.ham")));
}

TEST_F(CliTest, CompileNativeTargetUnchanged) {
    const auto out = path("native.ham");
    ASSERT_EQ(call({"compile", "--model", "zzxx", data("target_zzxx_native.ham"), "--out", out}).code, 0);
    const auto original = gadgetc::canonicalize(gadgetc::readHamiltonianFile(data("target_zzxx_native.ham")));
    const auto compiled = gadgetc::readHamiltonianFile(out);
    ASSERT_EQ(compiled.size(), original.size());
    for (std::size_t t = 0; t < compiled.size(); ++t) {
        EXPECT_EQ(compiled.terms()[t].word(), original.terms()[t].word());
        EXPECT_EQ(compiled.terms()[t].coefficient(), original.terms()[t].coefficient());
    }
    EXPECT_NE(slurp(out + ".report").find("ancillas: 0"), std::string::npos);
}

TEST_F(CliTest, CompileCircuitInput) {
    const auto out = path("hist.ham");
    ASSERT_EQ(call({"compile", "--model", "zx", "--eps", "0.2", data("x_gate.circ"), "--out", out}).code, 0);
    EXPECT_EQ(call({"validate", "--model", "zx", out}).code, 0);
}

TEST_F(CliTest, CompileUnknownModelIsParseError) {
    EXPECT_EQ(call({"compile", "--model", "xyz", data("target_zx.ham")}).code, 2);
    EXPECT_EQ(call({"compile", "--model", "zzxx", path("missing.ham")}).code, 2);
}

TEST_F(CliTest, ValidateListsViolations) {
    const auto r = call({"validate", "--model", "real", data("target_yy.ham")});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("violation: 0.3 YY"), std::string::npos) << r.out;
    EXPECT_EQ(call({"validate", "--model", "real", data("target_zz.ham")}).code, 0);
    const auto z = call({"validate", "--model", "zx", data("target_zz.ham")});
    EXPECT_EQ(z.code, 3);
    EXPECT_NE(z.out.find("violation: 1 ZZ"), std::string::npos) << z.out;
}

TEST_F(CliTest, VerifyHistorySingleX) {
    const auto r = call({"verify-history", data("x_gate.circ"), "--input", "0"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    const auto pos = r.out.find("\nresidual: ");
    ASSERT_NE(pos, std::string::npos);
    EXPECT_LE(std::stod(r.out.substr(pos + 11)), 1e-12);
    EXPECT_NE(r.out.find("verdict: PASS"), std::string::npos);
}

TEST_F(CliTest, VerifyHistoryClockInitFails) {
    const auto r = call({"verify-history", data("x_gate.circ"), "--input", "0", "--include-clockinit"});
    EXPECT_EQ(r.code, 1);
    const auto pos = r.out.find("\nresidual: ");
    ASSERT_NE(pos, std::string::npos);
    EXPECT_GT(std::stod(r.out.substr(pos + 11)), 1e-3);
    EXPECT_NE(r.out.find("verdict: FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifyHistoryMalformedCircuit) {
    const auto r = call({"verify-history", data("malformed.circ")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("16"), std::string::npos) << r.err;
}

TEST_F(CliTest, VerifyHistoryOversize) {
    ::setenv("GADGETC_DENSE_LIMIT", "1", 1);
    const auto r = call({"verify-history", data("x_gate.circ")});
    ::unsetenv("GADGETC_DENSE_LIMIT");
    EXPECT_EQ(r.code, 4) << r.err;
}

TEST_F(CliTest, VerifyHistoryRandomSuite) {
    const auto r = call({"verify-history", "--random", "10", "--seed", "7"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("passed: 10/10"), std::string::npos);
    EXPECT_NE(r.out.find("seed=7"), std::string::npos);
}

TEST_F(CliTest, VerifyHistoryNeedsInput) {
    EXPECT_EQ(call({"verify-history"}).code, 2);
}

TEST_F(CliTest, HistoryEmitsParsableHamiltonian) {
    const auto out = path("h.ham");
    ASSERT_EQ(call({"history", data("xx_gates.circ"), "--input", "1", "--out", out}).code, 0);
    const auto h = gadgetc::readHamiltonianFile(out);
    EXPECT_EQ(h.numQubits(), 3);
    EXPECT_NE(slurp(out).find("seed="), std::string::npos);
}

TEST_F(CliTest, SweepEpsilonZzxx) {
    const auto r = call({"sweep-epsilon", "--kind", "zx_from_zzxx", "--coef", "1", "--eps", "0.2,0.1,0.05"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csvRows(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "epsilon,delta,lambda_target,lambda_gadget,abs_error,overlap");
    const auto err = column(rows, 4);
    for (std::size_t t = 1; t < err.size(); ++t) {
        EXPECT_LE(err[t], err[t - 1] + 1e-12);
    }
    EXPECT_NE(r.out.find("# non_increasing=true"), std::string::npos);
    EXPECT_EQ(r.out.rfind("# gadgetc sweep-epsilon", 0), 0u);
}

TEST_F(CliTest, SweepEpsilonZzWithinTenEps) {
    const auto r = call({"sweep-epsilon", "--kind", "zz_from_zx", "--coef", "1", "--eps", "0.1,0.05,0.025",
                         "--tol-factor", "10"});
    ASSERT_EQ(r.code, 0) << r.out;
    const auto rows = csvRows(r.out);
    const auto eps = column(rows, 0);
    const auto err = column(rows, 4);
    ASSERT_EQ(err.size(), 3u);
    for (std::size_t t = 0; t < err.size(); ++t) {
        EXPECT_LE(err[t], 10 * eps[t]);
    }
    EXPECT_NE(r.out.find("# within_10_eps=true"), std::string::npos);
}

TEST_F(CliTest, SweepEpsilonTightFactorFails) {
    const auto r = call({"sweep-epsilon", "--kind", "zz_from_zx", "--eps", "0.1,0.05", "--tol-factor", "0.01"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("# within_0.01_eps=false"), std::string::npos);
}

TEST_F(CliTest, SweepEpsilonBadLists) {
    EXPECT_EQ(call({"sweep-epsilon", "--kind", "zz_from_zx", "--eps", ""}).code, 2);
    EXPECT_EQ(call({"sweep-epsilon", "--kind", "zz_from_zx", "--eps", "0.05,0.1"}).code, 2);
    EXPECT_EQ(call({"sweep-epsilon", "--kind", "zz_from_zx", "--eps", "1.5"}).code, 2);
    EXPECT_EQ(call({"sweep-epsilon", "--kind", "zz_from_zx", "--eps", "0.1,x"}).code, 2);
    EXPECT_EQ(call({"sweep-epsilon", "--kind", "yy", "--eps", "0.1"}).code, 2);
}

TEST_F(CliTest, GapSweepTwoLevel) {
    const auto r = call({"gap-sweep", data("two_level_hi.ham"), data("two_level_hf.ham")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csvRows(r.out);
    ASSERT_EQ(rows.size(), 102u);
    EXPECT_EQ(rows[0], "s,gap");
    const auto s = column(rows, 0);
    const auto gap = column(rows, 1);
    for (std::size_t t = 0; t < s.size(); ++t) {
        EXPECT_NEAR(gap[t], 2 * std::sqrt(s[t] * s[t] + (1 - s[t]) * (1 - s[t])), 1e-6);
    }
    const auto pos = r.out.find("# min s=0.5 gap=");
    ASSERT_NE(pos, std::string::npos) << r.out;
    EXPECT_NEAR(std::stod(r.out.substr(pos + 16)), std::sqrt(2.0), 1e-6);
}

TEST_F(CliTest, GapSweepConstant) {
    const auto r = call({"gap-sweep", data("two_level_hf.ham"), data("two_level_hf.ham"), "--grid", "5"});
    ASSERT_EQ(r.code, 0);
    for (double g : column(csvRows(r.out), 1)) {
        EXPECT_EQ(g, 2.0);
    }
}

TEST_F(CliTest, GapSweepMismatch) {
    EXPECT_EQ(call({"gap-sweep", data("two_level_hi.ham"), data("target_zz.ham")}).code, 3);
    EXPECT_EQ(call({"gap-sweep", data("two_level_hi.ham"), data("two_level_hf.ham"), "--grid", "1"}).code, 2);
}

TEST_F(CliTest, TwelveSignificantDigits) {
    const auto r = call({"gap-sweep", data("two_level_hi.ham"), data("two_level_hf.ham"), "--grid", "4"});
    // s = 1/3 printed with 12 significant digits
    EXPECT_NE(r.out.find("\n0.333333333333,"), std::string::npos) << r.out;
}

TEST_F(CliTest, DeterministicOutputs) {
    const std::vector<std::vector<std::string>> commands{
        {"compile", "--model", "zzxx", "--eps", "0.1", data("target_zx.ham"), "--out", path("a.ham")},
        {"sweep-epsilon", "--kind", "xx_from_zx", "--eps", "0.1,0.05", "--out", path("a.csv")},
        {"gap-sweep", data("two_level_hi.ham"), data("two_level_hf.ham"), "--out", path("g.csv")},
        {"verify-history", "--random", "5", "--seed", "11", "--out", path("v.txt")},
        {"history", data("mixed.circ"), "--out", path("h.ham")}};
    for (const auto &cmd : commands) {
        ASSERT_EQ(call(cmd).code, 0);
        const std::string first = slurp(cmd.back());
        ASSERT_EQ(call(cmd).code, 0);
        EXPECT_EQ(slurp(cmd.back()), first) << cmd.front();
        EXPECT_NE(first.find("seed="), std::string::npos) << cmd.front();
    }
}

TEST_F(CliTest, HelpAndUnknownOptions) {
    EXPECT_EQ(call({"--help"}).code, 0);
    EXPECT_EQ(call({"--version"}).code, 0);
    EXPECT_EQ(call({"compile", "--bogus"}).code, 2);
    EXPECT_EQ(call({}).code, 2);
}
