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
#include "gadgetc/history.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gadgetc/errors.hpp"

namespace gadgetc::history {

namespace {

/// c0 * 1 + c1 * P_q on an n-qubit register.
OperatorSum affine(int n, double c0, double c1, int qubit, Pauli p) {
    OperatorSum out(n);
    out.add(PauliString::identity(n, c0));
    out.add(PauliString::fromSparse(n, {{qubit, p}}, c1));
    return out;
}

OperatorSum single(int n, int qubit, Pauli p, double c = 1.0) {
    OperatorSum out(n);
    out.add(PauliString::fromSparse(n, {{qubit, p}}, c));
    return out;
}

OperatorSum gateOperator(const Gate &g, int n) {
    const auto check = validateGate(g);
    if (!check.ok()) {
        throw ValidationError("H_prop requires real self-inverse gates; got " +
                              std::string(gateKindName(g.kind)));
    }
    return pauliDecompose(g.realMatrix().cast<Complex>(), g.qubits, n);
}

Eigen::MatrixXd kron(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

Eigen::Matrix2d ketbra(int row, int col) {
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
    m(row, col) = 1.0;
    return m;
}

/// |bits><bits'| on m qubits, most significant first.
Eigen::MatrixXd ketbraWord(const std::vector<int> &rowBits,
                           const std::vector<int> &colBits) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Ones(1, 1);
    for (std::size_t a = 0; a < rowBits.size(); ++a) {
        out = kron(out, ketbra(rowBits[a], colBits[a]));
    }
    return out;
}

} // namespace

std::string Layout::describe() const {
    std::ostringstream os;
    os << "logical qubits [1.." << logical << "], clock qubits [" << logical + 1
       << ".." << total() << "]";
    return os.str();
}

bool isLegalClock(const Bitstring &clock) {
    bool seenZero = false;
    for (int q = 1; q <= clock.size(); ++q) {
        if (clock.bit(q) == 0) {
            seenZero = true;
        } else if (seenZero) {
            return false;
        }
    }
    return true;
}

Bitstring clockWord(int t, int clockQubits) {
    if (t < 0 || t > clockQubits) {
        throw std::invalid_argument("clock time outside [0, T]");
    }
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(clockQubits), 0);
    for (int q = 0; q < t; ++q) {
        bits[static_cast<std::size_t>(q)] = 1;
    }
    return Bitstring(std::move(bits));
}

Problem::Problem(Circuit c, Bitstring x)
    : circuit(std::move(c)), input(std::move(x)) {
    if (input.size() != circuit.numQubits()) {
        throw std::invalid_argument(
            "input has " + std::to_string(input.size()) + " bits for a " +
            std::to_string(circuit.numQubits()) + "-qubit circuit");
    }
    circuit.requireSelfInverse();
}

OperatorSum buildHIn(const Bitstring &x, int clockQubits) {
    if (clockQubits < 1) {
        throw std::invalid_argument("H_in needs at least one clock qubit");
    }
    if (x.size() < 1) {
        throw std::invalid_argument("H_in needs at least one logical qubit");
    }
    const Layout layout{x.size(), clockQubits};
    const int n = layout.total();
    const auto clockFactor = affine(n, 1.0, 1.0, layout.clockQubit(1), Pauli::Z);
    OperatorSum out(n);
    for (int i = 1; i <= x.size(); ++i) {
        const double sign = x.bit(i) == 0 ? 1.0 : -1.0;
        out += 0.25 * multiplyDisjoint(affine(n, 1.0, -sign, i, Pauli::Z),
                                       clockFactor);
    }
    return canonicalize(out);
}

OperatorSum buildHClock(const Layout &layout) {
    const int n = layout.total();
    const int clocks = layout.clock;
    if (clocks < 1) {
        throw std::invalid_argument("H_clock needs at least one clock qubit");
    }
    OperatorSum out(n);
    out.add(PauliString::identity(n, 0.25 * (clocks - 1)));
    out.add(PauliString::fromSparse(n, {{layout.clockQubit(1), Pauli::Z}}, 0.25));
    out.add(PauliString::fromSparse(n, {{layout.clockQubit(clocks), Pauli::Z}},
                                    -0.25));
    for (int t = 1; t < clocks; ++t) {
        out.add(PauliString::fromSparse(n,
                                        {{layout.clockQubit(t), Pauli::Z},
                                         {layout.clockQubit(t + 1), Pauli::Z}},
                                        -0.25));
    }
    return canonicalize(out);
}

OperatorSum buildHClockInit(const Layout &layout) {
    if (layout.clock < 1) {
        throw std::invalid_argument("H_clockinit needs a clock qubit");
    }
    return canonicalize(
        affine(layout.total(), 0.5, -0.5, layout.clockQubit(1), Pauli::Z));
}

OperatorSum buildHPropTerm(const Circuit &c, int t) {
    const Layout layout{c.numQubits(), c.depth()};
    const int T = layout.clock;
    if (t < 1 || t > T) {
        throw std::invalid_argument("propagation step outside [1, T]");
    }
    const int n = layout.total();
    const auto u = gateOperator(c.gate(t), n);
    const int ct = layout.clockQubit(t);

    OperatorSum diagonal(n);
    OperatorSum hop(n);
    if (T == 1) {
        // 1 - U (x) X_1
        diagonal.add(PauliString::identity(n));
        hop = single(n, ct, Pauli::X);
    } else if (t == 1) {
        // (1/2)(1 + Z_2) - U (x) (1/2)(X_1 + X_1 Z_2)
        const int next = layout.clockQubit(2);
        diagonal = 0.5 * affine(n, 1.0, 1.0, next, Pauli::Z);
        hop = 0.5 * multiplyDisjoint(single(n, ct, Pauli::X),
                                     affine(n, 1.0, 1.0, next, Pauli::Z));
    } else if (t == T) {
        // (1/2)(1 - Z_{T-1}) - U (x) (1/2)(X_T - Z_{T-1} X_T)
        const int prev = layout.clockQubit(T - 1);
        diagonal = 0.5 * affine(n, 1.0, -1.0, prev, Pauli::Z);
        hop = 0.5 * multiplyDisjoint(affine(n, 1.0, -1.0, prev, Pauli::Z),
                                     single(n, ct, Pauli::X));
    } else {
        // (1/4)(1 - Z_{t-1})(1 + Z_{t+1}) - (U/4)(1 - Z_{t-1}) X_t (1 + Z_{t+1})
        const int prev = layout.clockQubit(t - 1);
        const int next = layout.clockQubit(t + 1);
        const auto window =
            multiplyDisjoint(affine(n, 1.0, -1.0, prev, Pauli::Z),
                             affine(n, 1.0, 1.0, next, Pauli::Z));
        diagonal = 0.25 * window;
        hop = 0.25 * multiplyDisjoint(window, single(n, ct, Pauli::X));
    }
    return canonicalize(diagonal - multiplyDisjoint(u, hop));
}

OperatorSum buildHProp(const Circuit &c) {
    const int n = c.numQubits() + c.depth();
    OperatorSum out(n);
    for (int t = 1; t <= c.depth(); ++t) {
        out += buildHPropTerm(c, t);
    }
    return canonicalize(out);
}

OperatorSum buildTotal(const Problem &p, bool includeClockInit) {
    const auto layout = p.layout();
    OperatorSum out = buildHIn(p.input, layout.clock);
    out += buildHClock(layout);
    out += buildHProp(p.circuit);
    if (includeClockInit) {
        out += buildHClockInit(layout);
    }
    return canonicalize(out);
}

OperatorSum buildInitial(const Problem &p) {
    const auto layout = p.layout();
    OperatorSum out = buildHIn(p.input, layout.clock);
    out += buildHClock(layout);
    out += buildHClockInit(layout);
    return canonicalize(out);
}

Eigen::VectorXd buildHistoryState(const Problem &p) {
    const auto partials = applyCircuit(p.circuit, p.input);
    const auto layout = p.layout();
    const int T = layout.clock;
    const auto dim = Eigen::Index{1} << layout.total();
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(T + 1));
    for (int t = 0; t <= T; ++t) {
        const auto clockIndex =
            static_cast<Eigen::Index>(((std::uint64_t{1} << t) - 1) << (T - t));
        const auto &partial = partials[static_cast<std::size_t>(t)];
        for (Eigen::Index b = 0; b < partial.size(); ++b) {
            psi((b << T) | clockIndex) += norm * partial(b);
        }
    }
    return psi;
}

Eigen::MatrixXd projectorHIn(const Bitstring &x, int clockQubits) {
    const Layout layout{x.size(), clockQubits};
    const int n = layout.total();
    const auto dim = Eigen::Index{1} << n;
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
    const Eigen::Matrix2d clockZero = ketbra(0, 0);
    for (int i = 1; i <= x.size(); ++i) {
        // 1 - |x_i><x_i| is the projector on the wrong value.
        const int wrong = 1 - x.bit(i);
        const std::vector<int> qubits{i, layout.clockQubit(1)};
        out += embedOperator(kron(ketbra(wrong, wrong), clockZero), qubits, n);
    }
    return out;
}

Eigen::MatrixXd projectorHClock(const Layout &layout) {
    const int n = layout.total();
    const auto dim = Eigen::Index{1} << n;
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
    const auto pattern = ketbraWord({0, 1}, {0, 1});
    for (int t = 1; t < layout.clock; ++t) {
        const std::vector<int> qubits{layout.clockQubit(t),
                                      layout.clockQubit(t + 1)};
        out += embedOperator(pattern, qubits, n);
    }
    return out;
}

Eigen::MatrixXd projectorHPropTerm(const Circuit &c, int t) {
    const Layout layout{c.numQubits(), c.depth()};
    const int T = layout.clock;
    if (t < 1 || t > T) {
        throw std::invalid_argument("propagation step outside [1, T]");
    }
    const Gate &g = c.gate(t);
    if (!validateGate(g).real) {
        throw ValidationError("projector form needs a real gate");
    }
    const int n = layout.total();

    // Clock window (t-1, t, t+1) restricted to [1, T]; |t-1> = 1 0 0 and
    // |t> = 1 1 0 on the window.
    std::vector<int> qubits;
    std::vector<int> before;
    std::vector<int> after;
    if (t - 1 >= 1) {
        qubits.push_back(layout.clockQubit(t - 1));
        before.push_back(1);
        after.push_back(1);
    }
    qubits.push_back(layout.clockQubit(t));
    before.push_back(0);
    after.push_back(1);
    if (t + 1 <= T) {
        qubits.push_back(layout.clockQubit(t + 1));
        before.push_back(0);
        after.push_back(0);
    }
    const auto stay0 = embedOperator(ketbraWord(before, before), qubits, n);
    const auto stay1 = embedOperator(ketbraWord(after, after), qubits, n);
    const auto forward = embedOperator(ketbraWord(after, before), qubits, n);
    const auto backward = embedOperator(ketbraWord(before, after), qubits, n);
    const Eigen::MatrixXd u = embedOperator(g.realMatrix(), g.qubits, n);
    const Eigen::MatrixXd uDagger =
        embedOperator(g.realMatrix().transpose(), g.qubits, n);
    return stay0 - u * forward - uDagger * backward + stay1;
}

std::string describeProblem(const Problem &p) {
    const auto layout = p.layout();
    std::ostringstream os;
    os << "history Hamiltonian n=" << layout.logical << " T=" << layout.clock
       << " x=" << p.input.str() << "\nlayout: " << layout.describe();
    return os.str();
}

} // namespace gadgetc::history
