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
 * Perturbative gadgets that realize Z_i X_j in the ZZXX model and Z_i Z_j,
 * X_i X_j in the ZX model, plus whole-Hamiltonian compilation.
 *
 * Every gadget uses one ancilla k with penalty H_p = delta P_high and
 * perturbation V. Coupling strengths follow the standard parameter blocks:
 *
 *   ZX from ZZXX:  A = alpha, B = (delta/E)^{2/3} E, C = (alpha/2)(delta/E)^{2/3},
 *                  D = 2 delta^{1/3} E^{2/3}, delta >= E eps^-3
 *   ZZ/XX from ZX: A = |beta|, B = sqrt(|beta| delta / 2), delta >= E eps^-1
 */
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gadgetc/pauli.hpp"

namespace gadgetc {

enum class GadgetKind { ZxFromZzxx, ZzFromZx, XxFromZx };

[[nodiscard]] std::string_view gadgetKindName(GadgetKind kind);
/// Accepts "zx_from_zzxx", "zz_from_zx" and "xx_from_zx".
[[nodiscard]] GadgetKind parseGadgetKind(std::string_view name);
/// r in delta >= E eps^-r: 3 for the ZZXX gadget, 1 for the ZX-model ones.
[[nodiscard]] int errorExponent(GadgetKind kind);
/// Interaction set the gadget's H_p + V lives in.
[[nodiscard]] InteractionModel nativeModel(GadgetKind kind);

struct GadgetParams {
    double delta = 1.0;
    double energyScale = 1.0;
    double epsilon = 0.1;
    /// Self-energy evaluation point; 0 unless studying Sigma(z).
    double z = 0.0;

    /// delta = E eps^-r for the given kind.
    static GadgetParams forEpsilon(GadgetKind kind, double epsilon,
                                   double energyScale = 1.0);
    /// Throws ValidationError unless delta, E > 0, 0 < eps < 1 and
    /// delta >= E eps^-r (up to a relative 1e-12).
    void check(GadgetKind kind) const;
};

struct Couplings {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
};

struct GadgetInstance {
    GadgetKind kind;
    int i = 0;
    int j = 0;
    int k = 0;
    GadgetParams params;
    Couplings couplings;
    double targetCoefficient = 0.0;
    /// +1, or -1 when a negative ZZ/XX coefficient flips the sign in V_2.
    int sign = 1;
    /// Pre-existing physical couplings on {i, j}.
    OperatorSum physical;
    OperatorSum penalty;
    /// V_1, V_2 (and V_3 for the ZZXX gadget).
    std::vector<OperatorSum> parts;
    /// Constant carried by V's identity term (D, or A/2).
    double identityOffset = 0.0;
    /// Constant of the self-energy up to second order at params.z; the
    /// compiled spectrum minus this approximates the target spectrum.
    double declaredShift = 0.0;

    [[nodiscard]] int numQubits() const { return penalty.numQubits(); }
    [[nodiscard]] OperatorSum perturbation() const;
    /// Canonical H_p + V.
    [[nodiscard]] OperatorSum hamiltonian() const;
    /// Ancilla in |0> (z basis) or |+> (XX gadget).
    [[nodiscard]] SubspaceSpec lowSubspace() const;
    /// The induced term alone: alpha Z_i X_j, beta Z_i Z_j or gamma X_i X_j.
    [[nodiscard]] OperatorSum targetTerm() const;
};

/// `physical` fixes the register size; its support must lie in {i, j}.
/// Throws ValidationError for a bad bound, non-native Y or clashing qubits.
[[nodiscard]] GadgetInstance buildZxFromZzxx(double alpha, int i, int j, int k,
                                             const GadgetParams &params,
                                             const OperatorSum &physical);
[[nodiscard]] GadgetInstance buildZzFromZx(double beta, int i, int j, int k,
                                           const GadgetParams &params,
                                           const OperatorSum &physical);
[[nodiscard]] GadgetInstance buildXxFromZx(double gamma, int i, int j, int k,
                                           const GadgetParams &params,
                                           const OperatorSum &physical);
[[nodiscard]] GadgetInstance buildGadget(GadgetKind kind, double coefficient,
                                         int i, int j, int k,
                                         const GadgetParams &params,
                                         const OperatorSum &physical);

/// Closed-form dressed couplings Y -> Y~ at evaluation point z with
/// g = 2B^2/(z - delta)^2.
struct DressedCouplings {
    /// Named coefficients of Y~ on {i, j} before and after dressing.
    std::vector<std::pair<std::string, double>> before;
    std::vector<std::pair<std::string, double>> after;
    /// Terms absent from the named table (identity, Z_i X_j).
    OperatorSum extras;
    /// Y~ as one operator on the gadget register.
    OperatorSum dressed;
};

/// Throws ValidationError when Y is not native or leaves {i, j}.
[[nodiscard]] DressedCouplings dressedCouplings(const GadgetInstance &g,
                                                const OperatorSum &physical,
                                                double z);

// -- compilation ---------------------------------------------------------------

struct CompiledHamiltonian {
    InteractionModel model;
    int systemQubits = 0;
    OperatorSum hamiltonian;
    /// Replaced target term and its ancilla, in canonical target order.
    std::vector<std::pair<PauliString, int>> ancillas;
    std::vector<GadgetInstance> gadgets;
    double totalShift = 0.0;
    double totalIdentityOffset = 0.0;
};

/// Replace every non-native term of `target` with a gadget on a fresh
/// ancilla (ancillas follow the system block in canonical term order).
/// Throws ValidationError when the target leaves the real 2-local set.
[[nodiscard]] CompiledHamiltonian compileHamiltonian(const OperatorSum &target,
                                                     InteractionModel model,
                                                     double epsilon,
                                                     double energyScale = 1.0);

/// Structured sidecar text listing parameters, ancillas and shifts.
[[nodiscard]] std::string compileReport(const CompiledHamiltonian &compiled,
                                        double epsilon, double energyScale);

// -- error sweeps --------------------------------------------------------------

struct SweepRow {
    double epsilon = 0.0;
    double delta = 0.0;
    double lambdaTarget = 0.0;
    double lambdaGadget = 0.0;
    double absError = 0.0;
    double overlap = 0.0;
};

/// Single 3-qubit gadget (i = 1, j = 2, k = 3, Y = 0) at delta = E eps^-r:
/// lowest-eigenvalue error against the target term and the ground-space
/// fidelity with ground(target) (x) |low>_k.
[[nodiscard]] SweepRow gadgetErrorRow(GadgetKind kind, double coefficient,
                                      double epsilon, double energyScale = 1.0);

/// True when each error is at most the previous one plus `slack`.
[[nodiscard]] bool nonIncreasing(const std::vector<double> &values,
                                 double slack = 1e-12);

} // namespace gadgetc
