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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "gadgetc/circuits.hpp"
#include "gadgetc/errors.hpp"
#include "gadgetc/pauli.hpp"
#include "oracle.hpp"

using namespace gadgetc;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix4d cnotMatrix() {
    Eigen::Matrix4d m;
    m << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
    return m;
}

double maxDiff(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace

TEST(RGate, HalfPiIsCnot) {
    EXPECT_LE(maxDiff(rGate(kPi / 2, 1, 2).realMatrix(), cnotMatrix()), 1e-15);
}

TEST(RGate, ZeroIsControlledZ) {
    const Eigen::Vector4d diag(1, 1, 1, -1);
    EXPECT_LE(maxDiff(rGate(0.0, 1, 2).realMatrix(), Eigen::MatrixXd(diag.asDiagonal())),
              1e-15);
}

TEST(RGate, MatchesDefinitionAndSquaresToIdentity) {
    const double phi = 0.3;
    const Eigen::MatrixXd expected =
        oracle::kron(Eigen::MatrixXd(oracle::ketBra(0, 0)), oracle::identity(1)) +
        oracle::kron(Eigen::MatrixXd(oracle::ketBra(1, 1)),
                     Eigen::MatrixXd(std::sin(phi) * oracle::word("X").real() +
                                     std::cos(phi) * oracle::word("Z").real()));
    const auto g = rGate(phi, 1, 2);
    EXPECT_LE(maxDiff(g.realMatrix(), expected), 1e-15);
    EXPECT_LE(maxDiff(g.realMatrix() * g.realMatrix(), oracle::identity(2)), 1e-12);
    EXPECT_TRUE(validateGate(g).ok());
}

TEST(RGate, RejectsSameQubit) {
    EXPECT_THROW((void)rGate(0.3, 2, 2), std::invalid_argument);
    EXPECT_THROW((void)cnotGate(1, 1), std::invalid_argument);
}

TEST(XZMix, Endpoints) {
    EXPECT_LE(maxDiff(xzMixGate(0.0, 1).realMatrix(), oracle::word("X").real()), 1e-15);
    EXPECT_LE(maxDiff(xzMixGate(kPi / 2, 1).realMatrix(), oracle::word("Z").real()), 1e-15);
}

TEST(XZMix, PiOverThree) {
    const double psi = kPi / 3;
    Eigen::Matrix2d expected;
    expected << std::sin(psi), std::cos(psi), std::cos(psi), -std::sin(psi);
    const Eigen::MatrixXd m = xzMixGate(psi, 1).realMatrix();
    EXPECT_LE(maxDiff(m, expected), 1e-15);
    EXPECT_LE(maxDiff(m * m, Eigen::Matrix2d::Identity()), 1e-12);
}

TEST(ValidateGate, Verdicts) {
    EXPECT_TRUE(validateGate(xGate(1)).ok());
    const auto y = customGate(oracle::word("Y"), {1});
    EXPECT_FALSE(validateGate(y).real);
    EXPECT_FALSE(validateGate(y).ok());
    Eigen::MatrixXcd h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    EXPECT_TRUE(validateGate(customGate(h, {1})).ok());
    Eigen::MatrixXcd s(2, 2);
    s << 1, 0.5, 0, 1;
    EXPECT_FALSE(validateGate(customGate(s, {1})).selfInverse);
}

TEST(Bitstring, ParseIndexAndErrors) {
    const auto b = Bitstring::parse("101");
    EXPECT_EQ(b.size(), 3);
    EXPECT_EQ(b.bit(1), 1);
    EXPECT_EQ(b.bit(2), 0);
    EXPECT_EQ(b.index(), 5u);
    EXPECT_EQ(b.str(), "101");
    EXPECT_THROW((void)Bitstring::parse("10a"), ParseError);
}

TEST(ApplyCircuit, PrefixZeroIsInput) {
    const Circuit c(2, {xGate(1)});
    const auto states = applyCircuit(c, Bitstring::parse("01"));
    ASSERT_EQ(states.size(), 2u);
    EXPECT_TRUE(states[0].isApprox(oracle::ket("01")));
    EXPECT_TRUE(states[1].isApprox(oracle::ket("11")));
}

TEST(ApplyCircuit, CnotOnOneZero) {
    const Circuit c(2, {cnotGate(1, 2)});
    EXPECT_TRUE(applyCircuit(c, Bitstring::parse("10"))[1].isApprox(oracle::ket("11")));
}

TEST(ApplyCircuit, RHalfPiOnOneZero) {
    const Circuit c(2, {rGate(kPi / 2, 1, 2)});
    EXPECT_LE((applyCircuit(c, Bitstring::parse("10"))[1] - oracle::ket("11"))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-15);
}

TEST(ApplyCircuit, ReversedControlOrder) {
    const Circuit c(3, {cnotGate(3, 1)});
    EXPECT_TRUE(applyCircuit(c, Bitstring::parse("001"))[1].isApprox(oracle::ket("101")));
}

TEST(ApplyCircuit, LengthMismatch) {
    const Circuit c(2, {xGate(1)});
    EXPECT_THROW((void)applyCircuit(c, Bitstring::parse("1")), std::invalid_argument);
}

TEST(ApplyCircuit, MatchesEmbeddedMatricesOnRandomCircuits) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const Circuit c = randomCircuit(3, 4, rng);
        const auto states = applyCircuit(c, Bitstring::parse("110"));
        Eigen::VectorXd ref = oracle::ket("110");
        for (int t = 1; t <= c.depth(); ++t) {
            ref = embedOperator(c.gate(t).realMatrix(), c.gate(t).qubits, 3) * ref;
            EXPECT_LE((states[static_cast<std::size_t>(t)] - ref).cwiseAbs().maxCoeff(),
                      1e-12);
            EXPECT_NEAR(states[static_cast<std::size_t>(t)].norm(), 1.0, 1e-12);
        }
    }
}

TEST(ApplyCircuit, RepeatedGateRestoresState) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const Circuit one = randomCircuit(3, 1, rng);
        const Circuit twice(3, {one.gate(1), one.gate(1)});
        const auto states = applyCircuit(twice, Bitstring::parse("011"));
        EXPECT_LE((states[2] - states[0]).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Circuit, RejectsBadIndicesAndEmptyList) {
    EXPECT_THROW(Circuit(1, {}), std::invalid_argument);
    EXPECT_THROW(Circuit(1, {xGate(2)}), std::invalid_argument);
}

TEST(Circuit, RequireSelfInverse) {
    const Circuit ok(1, {xGate(1)});
    EXPECT_NO_THROW(ok.requireSelfInverse());
    const Circuit bad(1, {customGate(oracle::word("Y"), {1})});
    EXPECT_THROW(bad.requireSelfInverse(), ValidationError);
}

TEST(RandomCircuit, UsesAllowedKindsAndAngles) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 3;
        const Circuit c = randomCircuit(n, 4, rng);
        for (const auto &g : c.gates()) {
            EXPECT_TRUE(validateGate(g).ok());
            EXPECT_NE(g.kind, GateKind::Custom);
            if (n == 1) {
                EXPECT_EQ(g.arity(), 1);
            }
            if (g.kind == GateKind::XZMix || g.kind == GateKind::R) {
                EXPECT_GT(g.angle, 0.0);
                EXPECT_LT(g.angle, kPi);
            }
            if (g.kind == GateKind::XZMix) {
                const double q = g.angle / (kPi / 4);
                EXPECT_GT(std::abs(q - std::round(q)), 1e-3);
            }
        }
    }
}

TEST(ParseAngle, Forms) {
    EXPECT_DOUBLE_EQ(parseAngle("0.25"), 0.25);
    EXPECT_DOUBLE_EQ(parseAngle("pi"), kPi);
    EXPECT_DOUBLE_EQ(parseAngle("pi/2"), kPi / 2);
    EXPECT_DOUBLE_EQ(parseAngle("3*pi/4"), 3 * kPi / 4);
    EXPECT_DOUBLE_EQ(parseAngle("-pi/3"), -kPi / 3);
    EXPECT_THROW((void)parseAngle("tau"), ParseError);
}

TEST(ParseGateMatrix, RealAndComplexEntries) {
    const auto m = parseGateMatrix("0 (0,-1)\n(0,1) 0");
    EXPECT_LE((m - oracle::word("Y")).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_THROW((void)parseGateMatrix("1 0 0"), ParseError);
}

TEST(ParseCircuit, AllGateKinds) {
    const Circuit c = readCircuitFile(GADGETC_TEST_DATA "/mixed.circ");
    ASSERT_EQ(c.depth(), 4);
    EXPECT_EQ(c.gate(1).kind, GateKind::R);
    EXPECT_DOUBLE_EQ(c.gate(1).angle, kPi / 2);
    EXPECT_EQ(c.gate(2).kind, GateKind::XZMix);
    EXPECT_EQ(c.gate(3).kind, GateKind::CNOT);
    EXPECT_EQ(c.gate(3).qubits, (std::vector<int>{2, 1}));
    EXPECT_EQ(c.gate(4).kind, GateKind::Custom);
    EXPECT_NO_THROW(c.requireSelfInverse());
}

TEST(ParseCircuit, NonSelfInverseCustomParsesButFailsValidation) {
    const Circuit c = readCircuitFile(GADGETC_TEST_DATA "/pauli_y.circ");
    EXPECT_THROW(c.requireSelfInverse(), ValidationError);
}

TEST(ParseCircuit, ErrorsCarryLineNumbers) {
    try {
        (void)readCircuitFile(GADGETC_TEST_DATA "/malformed.circ");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 16);
    }
    EXPECT_THROW((void)parseCircuit("X 1\n"), ParseError);
    EXPECT_THROW((void)parseCircuit("qubits 1\n"), ParseError);
    EXPECT_THROW((void)parseCircuit("qubits 1\nX 2\n"), ParseError);
    EXPECT_THROW((void)parseCircuit("qubits 2\nCNOT 1\n"), ParseError);
    EXPECT_THROW((void)readCircuitFile("/nonexistent/file.circ"), ParseError);
}

TEST(ParseCircuit, SerializeRoundTrip) {
    const Circuit c(2, {rGate(0.3, 2, 1), xzMixGate(1.1, 1), cnotGate(1, 2), xGate(2)});
    const Circuit back = parseCircuit(serializeCircuit(c));
    ASSERT_EQ(back.depth(), c.depth());
    for (int t = 1; t <= c.depth(); ++t) {
        EXPECT_EQ(back.gate(t).kind, c.gate(t).kind);
        EXPECT_EQ(back.gate(t).qubits, c.gate(t).qubits);
        EXPECT_LE((back.gate(t).matrix - c.gate(t).matrix).cwiseAbs().maxCoeff(), 0.0);
    }
}
