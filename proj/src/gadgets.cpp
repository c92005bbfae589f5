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
#include "gadgetc/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gadgetc/errors.hpp"
#include "gadgetc/spectral.hpp"

namespace gadgetc {

std::string_view gadgetKindName(GadgetKind kind) {
    switch (kind) {
    case GadgetKind::ZxFromZzxx:
        return "zx_from_zzxx";
    case GadgetKind::ZzFromZx:
        return "zz_from_zx";
    case GadgetKind::XxFromZx:
        return "xx_from_zx";
    }
    return "unknown";
}

GadgetKind parseGadgetKind(std::string_view name) {
    for (auto kind :
         {GadgetKind::ZxFromZzxx, GadgetKind::ZzFromZx, GadgetKind::XxFromZx}) {
        if (name == gadgetKindName(kind)) {
            return kind;
        }
    }
    throw ParseError("unknown gadget kind '" + std::string(name) + "'");
}

int errorExponent(GadgetKind kind) {
    return kind == GadgetKind::ZxFromZzxx ? 3 : 1;
}

InteractionModel nativeModel(GadgetKind kind) {
    return kind == GadgetKind::ZxFromZzxx ? InteractionModel::ZZXX
                                          : InteractionModel::ZX;
}

GadgetParams GadgetParams::forEpsilon(GadgetKind kind, double epsilon,
                                      double energyScale) {
    GadgetParams p;
    p.epsilon = epsilon;
    p.energyScale = energyScale;
    p.delta = energyScale * std::pow(1.0 / epsilon, errorExponent(kind));
    return p;
}

void GadgetParams::check(GadgetKind kind) const {
    if (!(energyScale > 0.0)) {
        throw ValidationError("energy scale must be positive");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw ValidationError("epsilon must lie in (0, 1), got " +
                              formatReport(epsilon));
    }
    if (!(delta > 0.0)) {
        throw ValidationError("penalty gap delta must be positive");
    }
    const double bound =
        energyScale * std::pow(1.0 / epsilon, errorExponent(kind));
    if (delta < bound * (1.0 - 1e-12)) {
        throw ValidationError("error-bound violation: delta = " +
                              formatReport(delta) + " < E eps^-" +
                              std::to_string(errorExponent(kind)) + " = " +
                              formatReport(bound));
    }
}

namespace {

PauliString term(int n, std::initializer_list<std::pair<int, Pauli>> letters,
                 double c) {
    return PauliString::fromSparse(n, letters, c);
}

void checkQubits(int n, int i, int j, int k) {
    for (int q : {i, j, k}) {
        if (q < 1 || q > n) {
            throw ValidationError("gadget qubit " + std::to_string(q) +
                                  " outside a " + std::to_string(n) +
                                  "-qubit register");
        }
    }
    if (i == j || i == k || j == k) {
        throw ValidationError("gadget qubits i, j, k must be distinct");
    }
}

void checkPhysical(const OperatorSum &y, GadgetKind kind, int i, int j) {
    for (int q : y.support()) {
        if (q != i && q != j) {
            throw ValidationError("physical couplings act on qubit " +
                                  std::to_string(q) +
                                  " outside the gadget pair");
        }
    }
    const auto result = validateInteractionSet(y, nativeModel(kind));
    if (!result.ok()) {
        throw ValidationError("physical coupling " +
                              result.violations.front().word() +
                              " is not native to the " +
                              std::string(modelName(nativeModel(kind))) +
                              " model");
    }
}

GadgetInstance prepare(GadgetKind kind, double coefficient, int i, int j, int k,
                       const GadgetParams &params, const OperatorSum &physical) {
    const int n = physical.numQubits();
    checkQubits(n, i, j, k);
    params.check(kind);
    checkPhysical(physical, kind, i, j);
    return GadgetInstance{kind,
                          i,
                          j,
                          k,
                          params,
                          {},
                          coefficient,
                          1,
                          canonicalize(physical),
                          OperatorSum(n),
                          {},
                          0.0,
                          0.0};
}

/// Shared body of the two ZX-model gadgets; `field` is Z for ZZ, X for XX and
/// `mediator` the ancilla letter in V_2.
GadgetInstance buildPairGadget(GadgetKind kind, double coefficient, int i,
                               int j, int k, const GadgetParams &params,
                               const OperatorSum &physical, Pauli field,
                               Pauli mediator) {
    auto g = prepare(kind, coefficient, i, j, k, params, physical);
    const int n = g.numQubits();
    const double delta = params.delta;
    const double a = std::abs(coefficient);
    const double b = std::sqrt(a * delta / 2.0);
    g.sign = coefficient < 0.0 ? -1 : 1;
    g.couplings = {a, b, 0.0, 0.0};

    // H_p = (delta/2)(1 - P_k) with P the ancilla's penalty-basis letter.
    const Pauli basis = kind == GadgetKind::ZzFromZx ? Pauli::Z : Pauli::X;
    g.penalty.add(PauliString::identity(n, delta / 2.0));
    g.penalty.add(term(n, {{k, basis}}, -delta / 2.0));

    // V_1 = Y + A |low><low|_k
    OperatorSum v1 = g.physical;
    v1.add(PauliString::identity(n, a / 2.0));
    v1.add(term(n, {{k, basis}}, a / 2.0));

    // V_2 = B (P_i - s P_j) M_k
    OperatorSum v2(n);
    v2.add(term(n, {{i, field}, {k, mediator}}, b));
    v2.add(term(n, {{j, field}, {k, mediator}}, -g.sign * b));

    g.parts = {v1, v2};
    g.identityOffset = a / 2.0;
    g.declaredShift = a + 2.0 * b * b / (params.z - delta);
    return g;
}

std::string termLabel(const PauliString &p) {
    std::ostringstream out;
    const auto support = p.support();
    for (int q : support) {
        out << pauliLetter(p.letter(q)) << q;
    }
    return support.empty() ? "I" : out.str();
}

} // namespace

OperatorSum GadgetInstance::perturbation() const {
    OperatorSum v(numQubits());
    for (const auto &part : parts) {
        v += part;
    }
    return canonicalize(v);
}

OperatorSum GadgetInstance::hamiltonian() const {
    return canonicalize(penalty + perturbation());
}

SubspaceSpec GadgetInstance::lowSubspace() const {
    return {k, kind == GadgetKind::XxFromZx ? Basis::X : Basis::Z, 0};
}

OperatorSum GadgetInstance::targetTerm() const {
    const int n = numQubits();
    OperatorSum t(n);
    switch (kind) {
    case GadgetKind::ZxFromZzxx:
        t.add(term(n, {{i, Pauli::Z}, {j, Pauli::X}}, targetCoefficient));
        break;
    case GadgetKind::ZzFromZx:
        t.add(term(n, {{i, Pauli::Z}, {j, Pauli::Z}}, targetCoefficient));
        break;
    case GadgetKind::XxFromZx:
        t.add(term(n, {{i, Pauli::X}, {j, Pauli::X}}, targetCoefficient));
        break;
    }
    return canonicalize(t);
}

GadgetInstance buildZxFromZzxx(double alpha, int i, int j, int k,
                               const GadgetParams &params,
                               const OperatorSum &physical) {
    auto g = prepare(GadgetKind::ZxFromZzxx, alpha, i, j, k, params, physical);
    const int n = g.numQubits();
    const double delta = params.delta;
    const double e = params.energyScale;
    const double ratio = std::cbrt(delta / e);
    Couplings c;
    c.A = alpha;
    c.B = ratio * ratio * e;
    c.C = (alpha / 2.0) * ratio * ratio;
    c.D = 2.0 * std::cbrt(delta) * std::cbrt(e * e);
    g.couplings = c;

    g.penalty.add(PauliString::identity(n, delta / 2.0));
    g.penalty.add(term(n, {{k, Pauli::Z}}, -delta / 2.0));

    // V_1 = Y + D (X_j + 1) - A Z_i |0><0|_k
    OperatorSum v1 = g.physical;
    v1.add(term(n, {{j, Pauli::X}}, c.D));
    v1.add(PauliString::identity(n, c.D));
    v1.add(term(n, {{i, Pauli::Z}}, -c.A / 2.0));
    v1.add(term(n, {{i, Pauli::Z}, {k, Pauli::Z}}, -c.A / 2.0));

    // V_2 = B (X_j + 1) X_k
    OperatorSum v2(n);
    v2.add(term(n, {{j, Pauli::X}, {k, Pauli::X}}, c.B));
    v2.add(term(n, {{k, Pauli::X}}, c.B));

    // V_3 = C Z_i |1><1|_k
    OperatorSum v3(n);
    v3.add(term(n, {{i, Pauli::Z}}, c.C / 2.0));
    v3.add(term(n, {{i, Pauli::Z}, {k, Pauli::Z}}, -c.C / 2.0));

    g.parts = {v1, v2, v3};
    g.identityOffset = c.D;
    g.declaredShift = c.D + 2.0 * c.B * c.B / (params.z - delta);
    return g;
}

GadgetInstance buildZzFromZx(double beta, int i, int j, int k,
                             const GadgetParams &params,
                             const OperatorSum &physical) {
    return buildPairGadget(GadgetKind::ZzFromZx, beta, i, j, k, params,
                           physical, Pauli::Z, Pauli::X);
}

GadgetInstance buildXxFromZx(double gamma, int i, int j, int k,
                             const GadgetParams &params,
                             const OperatorSum &physical) {
    return buildPairGadget(GadgetKind::XxFromZx, gamma, i, j, k, params,
                           physical, Pauli::X, Pauli::Z);
}

GadgetInstance buildGadget(GadgetKind kind, double coefficient, int i, int j,
                           int k, const GadgetParams &params,
                           const OperatorSum &physical) {
    switch (kind) {
    case GadgetKind::ZxFromZzxx:
        return buildZxFromZzxx(coefficient, i, j, k, params, physical);
    case GadgetKind::ZzFromZx:
        return buildZzFromZx(coefficient, i, j, k, params, physical);
    case GadgetKind::XxFromZx:
        return buildXxFromZx(coefficient, i, j, k, params, physical);
    }
    throw std::invalid_argument("unknown gadget kind");
}

DressedCouplings dressedCouplings(const GadgetInstance &g,
                                  const OperatorSum &physical, double z) {
    const int n = physical.numQubits();
    if (n != g.numQubits()) {
        throw ValidationError("physical couplings and gadget registers differ");
    }
    checkPhysical(physical, g.kind, g.i, g.j);
    const OperatorSum y = canonicalize(physical);
    const double b = g.couplings.B;
    const double gf = 2.0 * b * b / ((z - g.params.delta) * (z - g.params.delta));
    const int i = g.i;
    const int j = g.j;
    auto coef = [&](std::initializer_list<std::pair<int, Pauli>> letters) {
        return y.coefficientOf(term(n, letters, 1.0).word());
    };

    DressedCouplings out{{}, {}, OperatorSum(n), OperatorSum(n)};
    const double hi = coef({{i, Pauli::Z}});
    const double hj = coef({{j, Pauli::Z}});
    const double di = coef({{i, Pauli::X}});
    const double dj = coef({{j, Pauli::X}});
    const double constant = coef({});

    std::vector<std::pair<std::string, PauliString>> named;
    std::vector<double> after;
    if (g.kind == GadgetKind::ZxFromZzxx) {
        const double jj = coef({{i, Pauli::Z}, {j, Pauli::Z}});
        const double kk = coef({{i, Pauli::X}, {j, Pauli::X}});
        named = {{"h_i", term(n, {{i, Pauli::Z}}, 1.0)},
                 {"h_j", term(n, {{j, Pauli::Z}}, 1.0)},
                 {"Delta_i", term(n, {{i, Pauli::X}}, 1.0)},
                 {"Delta_j", term(n, {{j, Pauli::X}}, 1.0)},
                 {"J", term(n, {{i, Pauli::Z}, {j, Pauli::Z}}, 1.0)},
                 {"K", term(n, {{i, Pauli::X}, {j, Pauli::X}}, 1.0)}};
        out.before = {{"h_i", hi}, {"h_j", hj}, {"Delta_i", di},
                      {"Delta_j", dj}, {"J", jj}, {"K", kk}};
        after = {hi * (1.0 + gf),      hj,
                 di * (1.0 + gf) + gf * kk, dj * (1.0 + gf),
                 jj,                   kk * (1.0 + gf) + gf * di};
        out.extras.add(PauliString::identity(n, gf * dj));
        out.extras.add(term(n, {{i, Pauli::Z}, {j, Pauli::X}}, gf * hi));
    } else {
        const double zx = coef({{i, Pauli::Z}, {j, Pauli::X}});
        const double xz = coef({{i, Pauli::X}, {j, Pauli::Z}});
        named = {{"h_i", term(n, {{i, Pauli::Z}}, 1.0)},
                 {"h_j", term(n, {{j, Pauli::Z}}, 1.0)},
                 {"Delta_i", term(n, {{i, Pauli::X}}, 1.0)},
                 {"Delta_j", term(n, {{j, Pauli::X}}, 1.0)},
                 {"ZX", term(n, {{i, Pauli::Z}, {j, Pauli::X}}, 1.0)},
                 {"XZ", term(n, {{i, Pauli::X}, {j, Pauli::Z}}, 1.0)}};
        out.before = {{"h_i", hi}, {"h_j", hj}, {"Delta_i", di},
                      {"Delta_j", dj}, {"ZX", zx}, {"XZ", xz}};
        const double s = g.sign;
        double hi2 = hi, hj2 = hj, di2 = di, dj2 = dj;
        if (g.kind == GadgetKind::ZzFromZx) {
            hi2 = hi + gf * (hi - s * hj);
            hj2 = hj + gf * (hj - s * hi);
        } else {
            di2 = di + gf * (di - s * dj);
            dj2 = dj + gf * (dj - s * di);
        }
        after = {hi2, hj2, di2, dj2, zx, xz};
    }

    for (std::size_t t = 0; t < named.size(); ++t) {
        out.after.emplace_back(named[t].first, after[t]);
        out.dressed.add(named[t].second.withCoefficient(after[t]));
    }
    out.dressed.add(PauliString::identity(n, constant));
    out.dressed += out.extras;
    out.extras = canonicalize(out.extras, 0.0);
    out.dressed = canonicalize(out.dressed, 0.0);
    return out;
}

// -- compilation ---------------------------------------------------------------

CompiledHamiltonian compileHamiltonian(const OperatorSum &target,
                                       InteractionModel model, double epsilon,
                                       double energyScale) {
    if (model == InteractionModel::RealSubset) {
        throw ValidationError("compile target model must be zzxx or zx");
    }
    const OperatorSum t = canonicalize(target);
    const auto real = validateInteractionSet(t, InteractionModel::RealSubset);
    if (!real.ok()) {
        std::string names;
        for (const auto &v : real.violations) {
            names += (names.empty() ? "" : ", ") + v.word();
        }
        throw ValidationError("terms outside the real 2-local set: " + names);
    }

    const auto native = InteractionSet::of(model);
    const int n = t.numQubits();
    std::vector<PauliString> replaced;
    for (const auto &p : t.terms()) {
        if (!p.isIdentity() && !native.allows(p)) {
            replaced.push_back(p);
        }
    }
    const int total = n + static_cast<int>(replaced.size());
    if (total > kMaxQubits) {
        throw SizeLimitError("compiled register exceeds " +
                             std::to_string(kMaxQubits) + " qubits");
    }

    CompiledHamiltonian out{model, n, OperatorSum(total), {}, {}, 0.0, 0.0};
    for (const auto &p : t.terms()) {
        if (p.isIdentity() || native.allows(p)) {
            out.hamiltonian.add(p.extended(total));
        }
    }
    const OperatorSum none(total);
    int k = n;
    for (const auto &p : replaced) {
        ++k;
        const auto support = p.support();
        const std::string pattern = p.pattern();
        GadgetKind kind;
        int i = support[0];
        int j = support[1];
        if (pattern == "ZX" || pattern == "XZ") {
            kind = GadgetKind::ZxFromZzxx;
            if (pattern == "XZ") {
                std::swap(i, j);
            }
        } else if (pattern == "ZZ") {
            kind = GadgetKind::ZzFromZx;
        } else {
            kind = GadgetKind::XxFromZx;
        }
        const auto params = GadgetParams::forEpsilon(kind, epsilon, energyScale);
        auto g = buildGadget(kind, p.coefficient(), i, j, k, params, none);
        out.hamiltonian += g.hamiltonian();
        out.totalShift += g.declaredShift;
        out.totalIdentityOffset += g.identityOffset;
        out.ancillas.emplace_back(p, k);
        out.gadgets.push_back(std::move(g));
    }
    out.hamiltonian = canonicalize(out.hamiltonian);
    if (!validateInteractionSet(out.hamiltonian, model).ok()) {
        throw std::logic_error("compiled Hamiltonian left the target model");
    }
    return out;
}

std::string compileReport(const CompiledHamiltonian &compiled, double epsilon,
                          double energyScale) {
    std::ostringstream out;
    out << "model: " << modelName(compiled.model) << '\n';
    out << "epsilon: " << formatReport(epsilon) << '\n';
    out << "energy_scale: " << formatReport(energyScale) << '\n';
    out << "system_qubits: " << compiled.systemQubits << '\n';
    out << "total_qubits: " << compiled.hamiltonian.numQubits() << '\n';
    out << "ancillas: " << compiled.gadgets.size() << '\n';
    out << "terms: " << compiled.hamiltonian.size() << '\n';
    out << "declared_shift: " << formatReport(compiled.totalShift) << '\n';
    out << "identity_offset: " << formatReport(compiled.totalIdentityOffset)
        << '\n';
    for (std::size_t idx = 0; idx < compiled.gadgets.size(); ++idx) {
        const auto &g = compiled.gadgets[idx];
        out << "gadget " << idx + 1 << ":\n";
        out << "  kind: " << gadgetKindName(g.kind) << '\n';
        out << "  target: " << formatReport(g.targetCoefficient) << ' '
            << termLabel(compiled.ancillas[idx].first) << '\n';
        out << "  qubits: i=" << g.i << " j=" << g.j << " k=" << g.k << '\n';
        out << "  delta: " << formatReport(g.params.delta) << '\n';
        out << "  A: " << formatReport(g.couplings.A) << '\n';
        out << "  B: " << formatReport(g.couplings.B) << '\n';
        if (g.kind == GadgetKind::ZxFromZzxx) {
            out << "  C: " << formatReport(g.couplings.C) << '\n';
            out << "  D: " << formatReport(g.couplings.D) << '\n';
        } else {
            out << "  sign: " << g.sign << '\n';
        }
        out << "  low_subspace: ancilla "
            << (g.kind == GadgetKind::XxFromZx ? "|+>" : "|0>") << '\n';
        out << "  identity_offset: " << formatReport(g.identityOffset) << '\n';
        out << "  declared_shift: " << formatReport(g.declaredShift) << '\n';
    }
    return out.str();
}

// -- error sweeps --------------------------------------------------------------

SweepRow gadgetErrorRow(GadgetKind kind, double coefficient, double epsilon,
                        double energyScale) {
    const auto params = GadgetParams::forEpsilon(kind, epsilon, energyScale);
    const auto g =
        buildGadget(kind, coefficient, 1, 2, 3, params, OperatorSum(3));
    const Eigen::MatrixXd h = realizeRealMatrix(g.hamiltonian());
    const Eigen::MatrixXd target = realizeRealMatrix(g.targetTerm());
    const auto low = g.lowSubspace();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> hs(h, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ts(target,
                                                      Eigen::EigenvaluesOnly);
    const Eigen::MatrixXd isometry = subspaceIsometry(3, low);
    const Eigen::MatrixXd targetGround =
        isometry *
        spectral::groundSpace(Eigen::MatrixXd(isometry.transpose() * target *
                                              isometry));

    SweepRow row;
    row.epsilon = epsilon;
    row.delta = params.delta;
    row.lambdaTarget = ts.eigenvalues()(0);
    row.lambdaGadget = hs.eigenvalues()(0) - g.declaredShift;
    row.absError = std::abs(row.lambdaGadget - row.lambdaTarget);
    row.overlap =
        spectral::subspaceFidelity(spectral::groundSpace(h), targetGround);
    return row;
}

bool nonIncreasing(const std::vector<double> &values, double slack) {
    for (std::size_t t = 1; t < values.size(); ++t) {
        if (values[t] > values[t - 1] + slack) {
            return false;
        }
    }
    return true;
}

} // namespace gadgetc
