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
#include "gadgetc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gadgetc/errors.hpp"

namespace gadgetc::spectral {

namespace {

constexpr Eigen::Index kKrylovDimension = 64;

void fixSign(Eigen::Ref<Eigen::VectorXd> v) {
    Eigen::Index idx = 0;
    v.cwiseAbs().maxCoeff(&idx);
    if (v(idx) < 0.0) {
        v = -v;
    }
}

void checkSymmetric(const Eigen::MatrixXd &h) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("operator is not square");
    }
    if (h.size() == 0) {
        throw std::invalid_argument("empty operator");
    }
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
        throw std::invalid_argument("operator is not Hermitian");
    }
}

int resolveDenseLimit(const EigenOptions &options) {
    return options.denseQubitLimit > 0 ? options.denseQubitLimit
                                       : denseQubitLimit();
}

bool useDense(const EigenOptions &options, int n) {
    switch (options.backend) {
    case Backend::Dense:
        return true;
    case Backend::Lanczos:
        return false;
    case Backend::Auto:
        break;
    }
    return n <= resolveDenseLimit(options);
}

LinearOperator operatorAction(const OperatorSum &h) {
    return [&h](const Eigen::VectorXd &in, Eigen::VectorXd &out) {
        out.resize(in.size());
        apply(h,
              std::span<const double>(in.data(),
                                      static_cast<std::size_t>(in.size())),
              std::span<double>(out.data(), static_cast<std::size_t>(out.size())));
    };
}

void finishReport(SpectralReport &report, const LinearOperator &op) {
    const auto k = static_cast<Eigen::Index>(report.eigenvalues.size());
    report.residuals.clear();
    Eigen::VectorXd hv;
    for (Eigen::Index i = 0; i < k; ++i) {
        op(report.vectors.col(i), hv);
        const double r =
            (hv - report.eigenvalues[static_cast<std::size_t>(i)] *
                      report.vectors.col(i))
                .norm();
        report.residuals.emplace_back("pair " + std::to_string(i), r);
    }
    report.gap = k >= 2 ? std::max(0.0, report.eigenvalues[1] -
                                            report.eigenvalues[0])
                        : 0.0;
}

} // namespace

SpectralReport eigensolve(const Eigen::MatrixXd &h, const EigenOptions &options) {
    checkSymmetric(h);
    const Eigen::Index dim = h.rows();
    const Eigen::Index k =
        std::min<Eigen::Index>(std::max(options.count, 2), dim);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("dense eigensolver failed", 0);
    }
    SpectralReport report;
    report.backend = Backend::Dense;
    report.vectors = solver.eigenvectors().leftCols(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        report.eigenvalues.push_back(solver.eigenvalues()(i));
        fixSign(report.vectors.col(i));
    }
    finishReport(report, [&h](const Eigen::VectorXd &in, Eigen::VectorXd &out) {
        out = h * in;
    });
    return report;
}

SpectralReport eigensolve(const OperatorSum &h, const EigenOptions &options) {
    if (!h.isReal()) {
        throw std::invalid_argument(
            "eigensolve needs a real operator; use hermitianEigenvalues for "
            "terms with an odd number of Y letters");
    }
    if (useDense(options, h.numQubits())) {
        return eigensolve(realizeRealMatrix(h), options);
    }
    return lanczos(operatorAction(h), Eigen::Index{1} << h.numQubits(), options);
}

SpectralReport lanczos(const LinearOperator &op, Eigen::Index dim,
                       const EigenOptions &options) {
    if (dim < 1) {
        throw std::invalid_argument("empty operator");
    }
    const Eigen::Index k =
        std::min<Eigen::Index>(std::max(options.count, 2), dim);
    const long budget =
        options.maxIterations > 0 ? options.maxIterations : 10L * dim;
    const double tol = options.residualTolerance;

    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal;

    std::vector<Eigen::VectorXd> locked;
    std::vector<double> values;
    long matvecs = 0;

    auto deflate = [&](Eigen::VectorXd &v) {
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &q : locked) {
                v -= q.dot(v) * q;
            }
        }
    };
    auto applyOp = [&](const Eigen::VectorXd &in, Eigen::VectorXd &out) {
        op(in, out);
        ++matvecs;
    };

    Eigen::VectorXd w(dim);
    Eigen::VectorXd hx(dim);
    while (static_cast<Eigen::Index>(locked.size()) < k) {
        const Eigen::Index available =
            dim - static_cast<Eigen::Index>(locked.size());
        Eigen::VectorXd v(dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            v(i) = normal(rng);
        }
        deflate(v);
        v.normalize();

        for (;;) {
            // Keep each cycle inside the remaining matrix-vector budget.
            const Eigen::Index remaining =
                std::max<Eigen::Index>(budget - matvecs - 1, 2);
            const Eigen::Index m =
                std::min({kKrylovDimension, available, remaining});
            Eigen::MatrixXd basis(dim, m);
            Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m);
            Eigen::VectorXd beta = Eigen::VectorXd::Zero(m);
            basis.col(0) = v;
            Eigen::Index used = m;
            double scale = 0.0;
            for (Eigen::Index j = 0; j < m; ++j) {
                applyOp(basis.col(j), w);
                deflate(w);
                alpha(j) = basis.col(j).dot(w);
                w -= alpha(j) * basis.col(j);
                if (j > 0) {
                    w -= beta(j - 1) * basis.col(j - 1);
                }
                for (int pass = 0; pass < 2; ++pass) {
                    w -= basis.leftCols(j + 1) *
                         (basis.leftCols(j + 1).transpose() * w);
                }
                deflate(w);
                beta(j) = w.norm();
                scale = std::max(scale, std::abs(alpha(j)) + beta(j));
                if (j + 1 == m) {
                    break;
                }
                if (beta(j) <= 1e-12 * std::max(scale, 1.0)) {
                    used = j + 1;
                    break;
                }
                basis.col(j + 1) = w / beta(j);
            }

            Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(used, used);
            for (Eigen::Index j = 0; j < used; ++j) {
                tri(j, j) = alpha(j);
                if (j + 1 < used) {
                    tri(j, j + 1) = beta(j);
                    tri(j + 1, j) = beta(j);
                }
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(tri);
            const double theta = small.eigenvalues()(0);
            Eigen::VectorXd x = basis.leftCols(used) * small.eigenvectors().col(0);
            deflate(x);
            x.normalize();

            applyOp(x, hx);
            const double residual = (hx - theta * x).norm();
            if (residual <= tol) {
                fixSign(x);
                locked.push_back(x);
                values.push_back(theta);
                break;
            }
            if (matvecs >= budget) {
                throw ConvergenceError(
                    "Lanczos did not reach residual " + formatReport(tol) +
                        " (last " + formatReport(residual) + ")",
                    matvecs);
            }
            v = x;
        }
    }

    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return values[a] < values[b];
                     });
    SpectralReport report;
    report.backend = Backend::Lanczos;
    report.iterations = matvecs;
    report.vectors.resize(dim, static_cast<Eigen::Index>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i) {
        report.eigenvalues.push_back(values[order[i]]);
        report.vectors.col(static_cast<Eigen::Index>(i)) = locked[order[i]];
    }
    finishReport(report, op);
    return report;
}

std::vector<double> hermitianEigenvalues(const OperatorSum &h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        realizeMatrix(h), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("dense eigensolver failed", 0);
    }
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

Eigen::MatrixXd groundSpace(const Eigen::MatrixXd &h) {
    checkSymmetric(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    const auto &ev = solver.eigenvalues();
    Eigen::Index count = 1;
    while (count < ev.size() && ev(count) - ev(0) <= kDegeneracyTolerance) {
        ++count;
    }
    return solver.eigenvectors().leftCols(count);
}

Eigen::MatrixXd groundSpace(const OperatorSum &h, const EigenOptions &options) {
    if (useDense(options, h.numQubits())) {
        return groundSpace(realizeRealMatrix(h));
    }
    EigenOptions opts = options;
    const Eigen::Index dim = Eigen::Index{1} << h.numQubits();
    opts.count = std::max(opts.count, 2);
    for (;;) {
        const auto report = eigensolve(h, opts);
        const auto &ev = report.eigenvalues;
        Eigen::Index count = 1;
        while (count < static_cast<Eigen::Index>(ev.size()) &&
               ev[static_cast<std::size_t>(count)] - ev[0] <=
                   kDegeneracyTolerance) {
            ++count;
        }
        if (count < static_cast<Eigen::Index>(ev.size()) ||
            static_cast<Eigen::Index>(ev.size()) == dim) {
            return report.vectors.leftCols(count);
        }
        opts.count *= 2;
    }
}

double projectionWeight(const Eigen::MatrixXd &basis, const Eigen::VectorXd &psi) {
    if (basis.rows() != psi.size()) {
        throw std::invalid_argument("projectionWeight: dimension mismatch");
    }
    return std::clamp((basis.transpose() * psi).squaredNorm(), 0.0, 1.0);
}

namespace {

void requireUnit(const Eigen::VectorXd &v) {
    if (std::abs(v.norm() - 1.0) > 1e-8) {
        throw std::invalid_argument("reference state must have unit norm");
    }
}

} // namespace

double groundOverlap(const Eigen::MatrixXd &h, const Eigen::VectorXd &reference) {
    requireUnit(reference);
    return projectionWeight(groundSpace(h), reference);
}

double groundOverlap(const OperatorSum &h, const Eigen::VectorXd &reference,
                     const EigenOptions &options) {
    requireUnit(reference);
    return projectionWeight(groundSpace(h, options), reference);
}

double subspaceFidelity(const Eigen::MatrixXd &basisA,
                        const Eigen::MatrixXd &basisB) {
    if (basisA.rows() != basisB.rows() || basisA.cols() == 0) {
        throw std::invalid_argument("subspaceFidelity: dimension mismatch");
    }
    const double overlap = (basisB.transpose() * basisA).squaredNorm();
    return std::clamp(overlap / static_cast<double>(basisA.cols()), 0.0, 1.0);
}

double operatorNorm(const Eigen::MatrixXd &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues()(0);
}

// -- self-energy ---------------------------------------------------------------

namespace {

struct Blocks {
    Eigen::MatrixXd lowLow;
    Eigen::MatrixXd lowHigh;
    Eigen::MatrixXd highLow;
    Eigen::MatrixXd highHigh;
};

Blocks partition(const Eigen::MatrixXd &h, int n, const SubspaceSpec &low) {
    const Eigen::MatrixXd wl = subspaceIsometry(n, low);
    const Eigen::MatrixXd wh = subspaceIsometry(n, low.complement());
    return {wl.transpose() * h * wl, wl.transpose() * h * wh,
            wh.transpose() * h * wl, wh.transpose() * h * wh};
}

Eigen::MatrixXd invertOrThrow(const Eigen::MatrixXd &m, const char *what) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible()) {
        throw std::domain_error(what);
    }
    return lu.inverse();
}

} // namespace

Eigen::MatrixXd exactSelfEnergy(const Eigen::MatrixXd &h, int n,
                                const SubspaceSpec &low, double z) {
    const auto b = partition(h, n, low);
    const auto dimHigh = b.highHigh.rows();
    const Eigen::MatrixXd resolvent = invertOrThrow(
        z * Eigen::MatrixXd::Identity(dimHigh, dimHigh) - b.highHigh,
        "z is an eigenvalue of the high-energy block");
    return b.lowLow + b.lowHigh * resolvent * b.highLow;
}

Eigen::MatrixXd resolventSelfEnergy(const Eigen::MatrixXd &h, int n,
                                    const SubspaceSpec &low, double z) {
    const Eigen::MatrixXd wl = subspaceIsometry(n, low);
    const Eigen::MatrixXd green = invertOrThrow(
        z * Eigen::MatrixXd::Identity(h.rows(), h.cols()) - h,
        "z is an eigenvalue of the full operator");
    const Eigen::MatrixXd projected = wl.transpose() * green * wl;
    const auto dimLow = projected.rows();
    return z * Eigen::MatrixXd::Identity(dimLow, dimLow) -
           invertOrThrow(projected, "projected resolvent is singular");
}

SelfEnergyResult perturbativeSelfEnergy(const OperatorSum &penalty,
                                        const OperatorSum &perturbation,
                                        const SubspaceSpec &low, double z,
                                        int maxOrder) {
    if (maxOrder < 0 || maxOrder > 3) {
        throw std::invalid_argument("self-energy series is available to order 3");
    }
    if (penalty.numQubits() != perturbation.numQubits()) {
        throw std::invalid_argument("penalty and perturbation registers differ");
    }
    const int n = penalty.numQubits();
    const Eigen::MatrixXd hp = realizeRealMatrix(penalty);
    const Eigen::MatrixXd v = realizeRealMatrix(perturbation);
    const auto p = partition(hp, n, low);
    if (p.lowHigh.cwiseAbs().maxCoeff() >
        1e-12 * std::max(1.0, hp.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument(
            "penalty couples the low and high subspaces");
    }
    const auto dimHigh = p.highHigh.rows();
    const Eigen::MatrixXd green = invertOrThrow(
        z * Eigen::MatrixXd::Identity(dimHigh, dimHigh) - p.highHigh,
        "z is an eigenvalue of the penalty's high block");
    const auto b = partition(v, n, low);

    SelfEnergyResult result;
    result.z = z;
    result.orders.push_back(p.lowLow);
    result.orders.push_back(b.lowLow);
    result.orders.push_back(b.lowHigh * green * b.highLow);
    result.orders.push_back(b.lowHigh * green * b.highHigh * green * b.highLow);
    result.series = Eigen::MatrixXd::Zero(p.lowLow.rows(), p.lowLow.cols());
    for (int k = 0; k <= maxOrder; ++k) {
        result.series += result.orders[static_cast<std::size_t>(k)];
    }
    result.orders.resize(static_cast<std::size_t>(maxOrder) + 1);
    result.exact = exactSelfEnergy(hp + v, n, low, z);
    result.residual = operatorNorm(result.exact - result.series);
    return result;
}

// -- gap sweeps ----------------------------------------------------------------

std::vector<double> uniformGrid(int points) {
    if (points < 2) {
        throw std::invalid_argument("a sweep grid needs at least two points");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] =
            static_cast<double>(i) / static_cast<double>(points - 1);
    }
    grid.back() = 1.0;
    return grid;
}

GapSweep gapSweep(const OperatorSum &initial, const OperatorSum &final,
                  const std::vector<double> &grid, const EigenOptions &options) {
    if (initial.numQubits() != final.numQubits()) {
        throw ValidationError("initial and final Hamiltonians act on " +
                              std::to_string(initial.numQubits()) + " and " +
                              std::to_string(final.numQubits()) + " qubits");
    }
    if (grid.empty()) {
        throw std::invalid_argument("empty sweep grid");
    }
    GapSweep sweep;
    sweep.points.reserve(grid.size());
    const int n = initial.numQubits();
    if (useDense(options, n)) {
        const Eigen::MatrixXd hi = realizeRealMatrix(initial);
        const Eigen::MatrixXd hf = realizeRealMatrix(final);
        for (double s : grid) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
                (1.0 - s) * hi + s * hf, Eigen::EigenvaluesOnly);
            const auto &ev = solver.eigenvalues();
            double gap = ev.size() >= 2 ? ev(1) - ev(0) : 0.0;
            sweep.points.push_back(
                {s, gap <= kDegeneracyTolerance ? 0.0 : gap});
        }
    } else {
        EigenOptions opts = options;
        opts.count = 2;
        for (double s : grid) {
            const OperatorSum h =
                canonicalize((1.0 - s) * initial + s * final);
            const auto report = eigensolve(h, opts);
            sweep.points.push_back(
                {s, report.gap <= kDegeneracyTolerance ? 0.0 : report.gap});
        }
    }
    for (std::size_t i = 1; i < sweep.points.size(); ++i) {
        if (sweep.points[i].gap < sweep.points[sweep.argmin].gap) {
            sweep.argmin = i;
        }
    }
    return sweep;
}

} // namespace gadgetc::spectral
