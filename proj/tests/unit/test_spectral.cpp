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
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "gadgetc/errors.hpp"
#include "gadgetc/gadgets.hpp"
#include "gadgetc/history.hpp"
#include "gadgetc/spectral.hpp"
#include "oracle.hpp"

using namespace gadgetc;
namespace sp = gadgetc::spectral;

namespace {

OperatorSum single(int n, double c, const char *w) {
    OperatorSum h(n);
    h.add(c, w);
    return h;
}

OperatorSum isingChain(int n, double field) {
    OperatorSum h(n);
    for (int q = 1; q <= n; ++q) {
        std::string x(static_cast<std::size_t>(n), 'I');
        x[static_cast<std::size_t>(q - 1)] = 'X';
        h.add(-field, x);
        std::string z(static_cast<std::size_t>(n), 'I');
        z[static_cast<std::size_t>(q - 1)] = 'Z';
        h.add(0.1 * q, z);
        if (q < n) {
            std::string zz(static_cast<std::size_t>(n), 'I');
            zz[static_cast<std::size_t>(q - 1)] = 'Z';
            zz[static_cast<std::size_t>(q)] = 'Z';
            h.add(-1.0, zz);
        }
    }
    return h;
}

/// Tr(P M) / dim for a Pauli word P on the low-subspace register.
double pauliCoefficient(const Eigen::MatrixXd &m, const std::string &word) {
    const Eigen::MatrixXcd p = oracle::word(word);
    return (p * m.cast<std::complex<double>>()).trace().real() / static_cast<double>(m.rows());
}

Eigen::MatrixXd randomSymmetric(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    Eigen::MatrixXd a(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            a(r, c) = d(rng);
        }
    }
    return 0.5 * (a + a.transpose());
}

} // namespace

TEST(Eigensolve, PauliZ) {
    const auto r = sp::eigensolve(single(1, 1.0, "Z"));
    ASSERT_EQ(r.eigenvalues.size(), 2u);
    EXPECT_NEAR(r.eigenvalues[0], -1.0, 1e-14);
    EXPECT_NEAR(r.eigenvalues[1], 1.0, 1e-14);
    EXPECT_NEAR(r.gap, 2.0, 1e-14);
    EXPECT_NEAR(std::abs(r.groundVector()(1)), 1.0, 1e-14);
}

TEST(Eigensolve, ClockDegeneracy) {
    const auto h = history::buildHClock({0, 3});
    sp::EigenOptions o;
    o.count = 5;
    const auto r = sp::eigensolve(h, o);
    for (int t = 0; t < 4; ++t) {
        EXPECT_NEAR(r.eigenvalues[static_cast<std::size_t>(t)], 0.0, 1e-12);
    }
    EXPECT_GT(r.eigenvalues[4], 0.5);
    EXPECT_EQ(sp::groundSpace(h).cols(), 4);
}

TEST(Eigensolve, ZzxxGadgetGroundNearTarget) {
    const double eps = 0.1;
    const auto g = buildZxFromZzxx(
        1.0, 1, 2, 3, GadgetParams::forEpsilon(GadgetKind::ZxFromZzxx, eps), OperatorSum(3));
    EXPECT_LE(std::abs(sp::eigensolve(g.hamiltonian()).ground() + 1.0), 2 * eps);
}

TEST(Eigensolve, LanczosMatchesDense) {
    for (int n : {10, 11}) {
        const auto h = isingChain(n, 0.7);
        sp::EigenOptions dense;
        dense.count = 3;
        dense.backend = sp::Backend::Dense;
        sp::EigenOptions lz = dense;
        lz.backend = sp::Backend::Lanczos;
        const auto a = sp::eigensolve(h, dense);
        const auto b = sp::eigensolve(h, lz);
        EXPECT_EQ(b.backend, sp::Backend::Lanczos);
        for (std::size_t k = 0; k < 3; ++k) {
            EXPECT_NEAR(a.eigenvalues[k], b.eigenvalues[k], 1e-8) << "n=" << n;
        }
        EXPECT_NEAR(std::abs(a.groundVector().dot(b.groundVector())), 1.0, 1e-8);
    }
}

TEST(Eigensolve, LanczosHandlesDegenerateGround) {
    const auto h = history::buildHClock({0, 5});
    sp::EigenOptions o;
    o.count = 6;
    o.backend = sp::Backend::Lanczos;
    const auto r = sp::eigensolve(h, o);
    for (std::size_t t = 0; t < 6; ++t) {
        EXPECT_NEAR(r.eigenvalues[t], 0.0, 1e-8);
    }
}

TEST(Eigensolve, LanczosBudgetExhausted) {
    sp::EigenOptions o;
    o.backend = sp::Backend::Lanczos;
    o.maxIterations = 5;
    try {
        (void)sp::eigensolve(isingChain(10, 0.7), o);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError &e) {
        EXPECT_GE(e.iterations(), 1);
    }
}

TEST(Eigensolve, RejectsNonSymmetric) {
    Eigen::MatrixXd m(2, 2);
    m << 0, 1, 0, 0;
    EXPECT_THROW((void)sp::eigensolve(m), std::invalid_argument);
}

TEST(Overlap, ReferenceStates) {
    const Eigen::MatrixXd h = -oracle::word("Z").real();
    EXPECT_NEAR(sp::groundOverlap(h, oracle::ket("0")), 1.0, 1e-14);
    const Eigen::VectorXd plus = (oracle::ket("0") + oracle::ket("1")) / std::sqrt(2.0);
    EXPECT_NEAR(sp::groundOverlap(h, plus), 0.5, 1e-14);
}

TEST(Overlap, DegenerateGroundUsesWholeSpace) {
    const Eigen::MatrixXd h = -oracle::word("ZI").real();
    const Eigen::VectorXd zeroPlus = (oracle::ket("00") + oracle::ket("01")) / std::sqrt(2.0);
    const Eigen::VectorXd plusOne = (oracle::ket("01") + oracle::ket("11")) / std::sqrt(2.0);
    EXPECT_NEAR(sp::groundOverlap(h, zeroPlus), 1.0, 1e-12);
    EXPECT_NEAR(sp::groundOverlap(h, plusOne), 0.5, 1e-12);
}

TEST(Overlap, RequiresUnitReference) {
    const Eigen::MatrixXd h = -oracle::word("Z").real();
    EXPECT_THROW((void)sp::groundOverlap(h, 2.0 * oracle::ket("0")), std::invalid_argument);
}

TEST(Overlap, SubspaceFidelityAndNorm) {
    const Eigen::MatrixXd a = oracle::ket("00");
    Eigen::MatrixXd b(4, 2);
    b.col(0) = oracle::ket("00");
    b.col(1) = oracle::ket("01");
    EXPECT_NEAR(sp::subspaceFidelity(a, b), 1.0, 1e-15);
    EXPECT_NEAR(sp::subspaceFidelity(b, a), 0.5, 1e-15);
    EXPECT_NEAR(sp::operatorNorm(3.0 * oracle::word("XZ").real()), 3.0, 1e-12);
}

TEST(SelfEnergy, NoPerturbationGivesPenaltyBlock) {
    const OperatorSum penalty = single(2, 5.0, "IZ") + single(2, 5.0, "II");
    const SubspaceSpec low{2, Basis::Z, 1};
    const auto r = sp::perturbativeSelfEnergy(penalty, OperatorSum(2), low, 0.0);
    EXPECT_LE(r.exact.cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE(r.residual, 1e-14);
}

TEST(SelfEnergy, BlockDiagonalHamiltonian) {
    OperatorSum h(2);
    h.add(1.0, "XI");
    h.add(1.0, "IZ");
    h.add(0.5, "ZZ");
    const Eigen::MatrixXd m = realizeRealMatrix(h);
    const SubspaceSpec low{2, Basis::Z, 0};
    const Eigen::MatrixXd expected =
        oracle::word("X").real() + 0.5 * oracle::word("Z").real() + oracle::identity(1);
    for (double z : {-3.0, 0.0, 0.4}) {
        EXPECT_LE((sp::exactSelfEnergy(m, 2, low, z) - expected).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(SelfEnergy, SchurEqualsResolvent) {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 5; ++trial) {
        const Eigen::MatrixXd h = randomSymmetric(8, rng);
        for (auto low : {SubspaceSpec{1, Basis::Z, 0}, SubspaceSpec{3, Basis::X, 1}}) {
            const double z = 0.3719 + trial;
            const Eigen::MatrixXd a = sp::exactSelfEnergy(h, 3, low, z);
            const Eigen::MatrixXd b = sp::resolventSelfEnergy(h, 3, low, z);
            EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-8);
        }
    }
}

TEST(SelfEnergy, SingularBlockThrows) {
    // The kept block is qubit 2 = |0>; H_++ = Z_1 is singular at z = -1.
    const Eigen::MatrixXd h = realizeRealMatrix(single(2, 1.0, "ZI"));
    EXPECT_THROW((void)sp::exactSelfEnergy(h, 2, {2, Basis::Z, 0}, -1.0), std::domain_error);
    EXPECT_THROW((void)sp::resolventSelfEnergy(h, 2, {2, Basis::Z, 0}, 1.0), std::domain_error);
}

TEST(SelfEnergy, ZzxxSecondAndThirdOrderForms) {
    const double eps = 0.05;
    const auto g = buildZxFromZzxx(
        1.0, 1, 2, 3, GadgetParams::forEpsilon(GadgetKind::ZxFromZzxx, eps), OperatorSum(3));
    const auto r = sp::perturbativeSelfEnergy(g.penalty, g.perturbation(), g.lowSubspace(), 0.0);
    const double d = g.params.delta;
    const auto [a, b, c, dd] = g.couplings;
    // -B^2 (X_j + 1)^2 / delta
    EXPECT_NEAR(pauliCoefficient(r.orders[2], "IX"), -2 * b * b / d, 1e-10);
    EXPECT_NEAR(pauliCoefficient(r.orders[2], "II"), -2 * b * b / d, 1e-10);
    EXPECT_NEAR(pauliCoefficient(r.orders[2], "ZX"), 0.0, 1e-10);
    // B^2 (X_j + 1)(D (X_j + 1) + C Z_i)(X_j + 1) / delta^2
    EXPECT_NEAR(pauliCoefficient(r.orders[3], "ZX"), 2 * b * b * c / (d * d), 1e-10);
    EXPECT_NEAR(pauliCoefficient(r.orders[3], "ZI"), 2 * b * b * c / (d * d), 1e-10);
    EXPECT_NEAR(pauliCoefficient(r.orders[3], "IX"), 4 * dd * b * b / (d * d), 1e-10);
    EXPECT_NEAR(pauliCoefficient(r.orders[3], "II"), 4 * dd * b * b / (d * d), 1e-10);
    EXPECT_NEAR(4 * dd * b * b / (d * d), 8 * eps, 1e-12);
    // Through third order the local Z_i field cancels and Z_i X_j is alpha.
    Eigen::MatrixXd total = r.orders[0];
    for (std::size_t k = 1; k < r.orders.size(); ++k) {
        total += r.orders[k];
    }
    EXPECT_NEAR(pauliCoefficient(total, "ZI"), 0.0, 1e-10);
    EXPECT_NEAR(pauliCoefficient(total, "ZX"), 1.0, 1e-10);
    EXPECT_NEAR(pauliCoefficient(total, "IX"), 8 * eps, 1e-10);
    EXPECT_LE((total - r.series).cwiseAbs().maxCoeff(), 1e-12);
    (void)a;
}

TEST(SelfEnergy, ZzxxExactInducedCoupling) {
    for (double eps : {0.1, 0.05}) {
        const auto g = buildZxFromZzxx(
            1.0, 1, 2, 3, GadgetParams::forEpsilon(GadgetKind::ZxFromZzxx, eps), OperatorSum(3));
        const Eigen::MatrixXd sigma = sp::exactSelfEnergy(realizeRealMatrix(g.hamiltonian()), 3,
                                                          g.lowSubspace(), 0.0);
        EXPECT_NEAR(pauliCoefficient(sigma, "ZX"), 1.0, 2 * eps);
    }
}

TEST(SelfEnergy, ZzSecondOrderForm) {
    const auto g = buildZzFromZx(0.8, 1, 2, 3, GadgetParams::forEpsilon(GadgetKind::ZzFromZx, 0.1),
                                 OperatorSum(3));
    const auto r = sp::perturbativeSelfEnergy(g.penalty, g.perturbation(), g.lowSubspace(), 0.0);
    EXPECT_NEAR(pauliCoefficient(r.orders[2], "ZZ"), 0.8, 1e-12);
    EXPECT_NEAR(pauliCoefficient(r.orders[2], "II"), -0.8, 1e-12);
    EXPECT_LE(r.orders[3].cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SelfEnergy, ResidualWithinFourthOrderBound) {
    for (auto kind : {GadgetKind::ZxFromZzxx, GadgetKind::ZzFromZx, GadgetKind::XxFromZx}) {
        for (double eps : {0.2, 0.1, 0.05}) {
            const auto g = buildGadget(kind, 1.0, 1, 2, 3, GadgetParams::forEpsilon(kind, eps),
                                       OperatorSum(3));
            const auto r =
                sp::perturbativeSelfEnergy(g.penalty, g.perturbation(), g.lowSubspace(), 0.0);
            const double v = sp::operatorNorm(realizeRealMatrix(g.perturbation()));
            const double d = g.params.delta;
            EXPECT_LE(r.residual, 2 * std::pow(v, 4) / std::pow(d, 3))
                << gadgetKindName(kind) << " eps=" << eps;
        }
    }
}

TEST(SelfEnergy, PenaltyMustBeBlockDiagonal) {
    const OperatorSum penalty = single(2, 1.0, "IX");
    EXPECT_THROW((void)sp::perturbativeSelfEnergy(penalty, OperatorSum(2), {2, Basis::Z, 0}, 0.0),
                 std::invalid_argument);
}

TEST(GapSweep, Grid) {
    const auto g = sp::uniformGrid(101);
    ASSERT_EQ(g.size(), 101u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_NEAR(g[50], 0.5, 1e-15);
    EXPECT_THROW((void)sp::uniformGrid(1), std::invalid_argument);
}

TEST(GapSweep, TwoLevelOracle) {
    const auto sweep = sp::gapSweep(single(1, -1.0, "X"), single(1, -1.0, "Z"),
                                    sp::uniformGrid(101));
    for (const auto &p : sweep.points) {
        EXPECT_NEAR(p.gap, 2 * std::sqrt(p.s * p.s + (1 - p.s) * (1 - p.s)), 1e-6);
    }
    EXPECT_NEAR(sweep.minimum().s, 0.5, 1e-15);
    EXPECT_NEAR(sweep.minimum().gap, std::sqrt(2.0), 1e-12);
}

TEST(GapSweep, ConstantPath) {
    const auto h = single(2, -1.0, "ZI") + single(2, 0.5, "IZ");
    for (const auto &p : sp::gapSweep(h, h, sp::uniformGrid(11)).points) {
        EXPECT_NEAR(p.gap, 1.0, 1e-12);
    }
}

TEST(GapSweep, DegenerateReportsZero) {
    const auto sweep = sp::gapSweep(single(2, -1.0, "ZI"), single(2, -1.0, "ZI"),
                                    sp::uniformGrid(3));
    for (const auto &p : sweep.points) {
        EXPECT_EQ(p.gap, 0.0);
    }
}

TEST(GapSweep, HistoryPathStaysGapped) {
    const history::Problem p(Circuit(1, {xGate(1), xzMixGate(0.4, 1)}), Bitstring::parse("0"));
    const auto sweep = sp::gapSweep(history::buildInitial(p), history::buildTotal(p, false),
                                    sp::uniformGrid(21));
    EXPECT_GT(sweep.minimum().gap, 1e-3);
}

TEST(GapSweep, QubitMismatch) {
    EXPECT_THROW((void)sp::gapSweep(single(1, 1.0, "X"), single(2, 1.0, "ZZ"),
                                    sp::uniformGrid(5)),
                 ValidationError);
}
