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
/**
 * @file
 * Eigenanalysis: dense and Lanczos extremal eigensolvers, self-energy
 * operators, interpolation gap sweeps and ground-state overlaps.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gadgetc/pauli.hpp"

namespace gadgetc::spectral {

/// Eigenvalues within this distance of the lowest count as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-9;

enum class Backend { Auto, Dense, Lanczos };

struct EigenOptions {
    /// Number of lowest eigenpairs; at least two are always computed so the
    /// gap is defined.
    int count = 2;
    Backend backend = Backend::Auto;
    double residualTolerance = 1e-8;
    /// Matrix-vector budget for Lanczos; 0 means 10 * dim.
    long maxIterations = 0;
    /// Auto picks Dense at or below this many qubits; <= 0 reads
    /// denseQubitLimit().
    int denseQubitLimit = 0;
    std::uint64_t seed = 0x5eed;
};

struct SpectralReport {
    std::vector<double> eigenvalues;
    /// Columns are eigenvectors matching `eigenvalues`.
    Eigen::MatrixXd vectors;
    double gap = 0.0;
    std::vector<std::pair<std::string, double>> overlaps;
    std::vector<std::pair<std::string, double>> residuals;
    long iterations = 0;
    Backend backend = Backend::Dense;

    [[nodiscard]] double ground() const { return eigenvalues.front(); }
    [[nodiscard]] Eigen::VectorXd groundVector() const { return vectors.col(0); }
};

/// y = H x on vectors of dimension `dim`.
using LinearOperator =
    std::function<void(const Eigen::VectorXd &, Eigen::VectorXd &)>;

/// Lowest eigenpairs of a real symmetric matrix. Throws
/// std::invalid_argument when the matrix is not symmetric.
[[nodiscard]] SpectralReport eigensolve(const Eigen::MatrixXd &h,
                                        const EigenOptions &options = {});
/// Lowest eigenpairs of a real operator, dense or Lanczos per options.
[[nodiscard]] SpectralReport eigensolve(const OperatorSum &h,
                                        const EigenOptions &options = {});
/// Restarted Lanczos with full reorthogonalization and deflation.
[[nodiscard]] SpectralReport lanczos(const LinearOperator &op, Eigen::Index dim,
                                     const EigenOptions &options = {});

/// All eigenvalues of a Hermitian operator, including ones with odd Y count.
[[nodiscard]] std::vector<double> hermitianEigenvalues(const OperatorSum &h);

/// Orthonormal basis (columns) of the eigenspace within kDegeneracyTolerance
/// of the lowest eigenvalue.
[[nodiscard]] Eigen::MatrixXd groundSpace(const Eigen::MatrixXd &h);
[[nodiscard]] Eigen::MatrixXd groundSpace(const OperatorSum &h,
                                          const EigenOptions &options = {});

/// ||P psi||^2 for the orthogonal projector P onto span(basis).
[[nodiscard]] double projectionWeight(const Eigen::MatrixXd &basis,
                                      const Eigen::VectorXd &psi);

/// |<psi_0|psi_ref>|^2, or the weight of psi_ref in the ground space when the
/// lowest level is degenerate.
[[nodiscard]] double groundOverlap(const Eigen::MatrixXd &h,
                                   const Eigen::VectorXd &reference);
[[nodiscard]] double groundOverlap(const OperatorSum &h,
                                   const Eigen::VectorXd &reference,
                                   const EigenOptions &options = {});

/// Tr(P_a P_b) / dim(a): mean weight of subspace a inside subspace b.
[[nodiscard]] double subspaceFidelity(const Eigen::MatrixXd &basisA,
                                      const Eigen::MatrixXd &basisB);

/// Largest singular value.
[[nodiscard]] double operatorNorm(const Eigen::MatrixXd &m);

// -- self-energy ---------------------------------------------------------------

/// Sigma(z) = H_-- + H_-+ (z - H_++)^{-1} H_+- on the kept subspace, which
/// equals z - [P_- (z - H)^{-1} P_-]^{-1} whenever the latter exists.
/// Throws std::domain_error when z - H_++ is singular.
[[nodiscard]] Eigen::MatrixXd exactSelfEnergy(const Eigen::MatrixXd &h, int n,
                                              const SubspaceSpec &low, double z);

/// The resolvent route z - [P_- (z - H)^{-1} P_-]^{-1}. Throws
/// std::domain_error when z is an eigenvalue of H.
[[nodiscard]] Eigen::MatrixXd resolventSelfEnergy(const Eigen::MatrixXd &h,
                                                  int n,
                                                  const SubspaceSpec &low,
                                                  double z);

struct SelfEnergyResult {
    double z = 0.0;
    /// orders[k] is the k-th order contribution on the low subspace.
    std::vector<Eigen::MatrixXd> orders;
    Eigen::MatrixXd series;
    Eigen::MatrixXd exact;
    /// ||exact - series|| (operator norm).
    double residual = 0.0;
};

/// Self-energy series through `maxOrder` (<= 3) with G_++(z) = (z - H_p++)^{-1}:
/// H_p-- + V-- + V-+ G V+- + V-+ G V++ G V+-.
[[nodiscard]] SelfEnergyResult perturbativeSelfEnergy(const OperatorSum &penalty,
                                                      const OperatorSum &perturbation,
                                                      const SubspaceSpec &low,
                                                      double z, int maxOrder = 3);

// -- gap sweeps ----------------------------------------------------------------

struct GapPoint {
    double s = 0.0;
    double gap = 0.0;
};

struct GapSweep {
    std::vector<GapPoint> points;
    std::size_t argmin = 0;
    [[nodiscard]] const GapPoint &minimum() const { return points.at(argmin); }
};

/// `points` evenly spaced values covering [0, 1] inclusive.
[[nodiscard]] std::vector<double> uniformGrid(int points);

/// gap(s) = lambda_1 - lambda_0 of (1 - s) H_i + s H_f. A degenerate ground
/// level reports gap 0.
[[nodiscard]] GapSweep gapSweep(const OperatorSum &initial,
                                const OperatorSum &final,
                                const std::vector<double> &grid,
                                const EigenOptions &options = {});

} // namespace gadgetc::spectral
