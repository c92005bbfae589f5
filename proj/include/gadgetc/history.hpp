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
 * History-state (Feynman-Kitaev clock) Hamiltonians for real self-inverse
 * circuits.
 *
 * Register layout: logical qubits occupy [1, n], clock qubit t occupies
 * n + t for t in [1, T]. Clock time t is the unary word 1^t 0^(T-t).
 *
 * The Pauli-form builders return OperatorSum values. The `projector*`
 * functions build the same operators directly from basis-state projectors
 * as dense matrices; they exist so the two forms can be checked against
 * each other.
 */
#pragma once

#include <string>

#include <Eigen/Dense>

#include "gadgetc/circuits.hpp"
#include "gadgetc/pauli.hpp"

namespace gadgetc::history {

struct Layout {
    int logical = 0;
    int clock = 0;

    [[nodiscard]] int total() const { return logical + clock; }
    /// Global index of clock qubit t (1-based).
    [[nodiscard]] int clockQubit(int t) const { return logical + t; }
    [[nodiscard]] std::string describe() const;
};

/// True iff the word is 1^t 0^(T-t) for some t.
[[nodiscard]] bool isLegalClock(const Bitstring &clock);
/// Unary clock word for time t.
[[nodiscard]] Bitstring clockWord(int t, int clockQubits);

struct Problem {
    Circuit circuit;
    Bitstring input;

    Problem(Circuit c, Bitstring x);
    [[nodiscard]] Layout layout() const {
        return {circuit.numQubits(), circuit.depth()};
    }
};

/// sum_i (1/4)(1 - (-1)^{x_i} Z_i)(1 + Z_clock1).
[[nodiscard]] OperatorSum buildHIn(const Bitstring &x, int clockQubits);
/// (1/4)[(T-1) 1 + Z_1 - Z_T - sum_t Z_t Z_{t+1}] on the clock block.
/// Zero operator for T = 1.
[[nodiscard]] OperatorSum buildHClock(const Layout &layout);
/// |1><1| on clock qubit 1.
[[nodiscard]] OperatorSum buildHClockInit(const Layout &layout);
/// Propagation check for step t in Pauli form (boundary forms at t = 1, T).
[[nodiscard]] OperatorSum buildHPropTerm(const Circuit &c, int t);
/// sum_t H_prop,t. Throws ValidationError for non-self-inverse gates.
[[nodiscard]] OperatorSum buildHProp(const Circuit &c);

/// H_in + H_clock + H_prop (+ H_clockinit when requested), canonicalized.
[[nodiscard]] OperatorSum buildTotal(const Problem &p, bool includeClockInit);
/// H_in + H_clock + H_clockinit: unique ground state |x>|0...0>, the start
/// of the adiabatic path toward buildTotal(p, false).
[[nodiscard]] OperatorSum buildInitial(const Problem &p);

/// (T+1)^{-1/2} sum_t (U_t...U_1|x>) (x) |1^t 0^(T-t)>.
[[nodiscard]] Eigen::VectorXd buildHistoryState(const Problem &p);

[[nodiscard]] Eigen::MatrixXd projectorHIn(const Bitstring &x, int clockQubits);
[[nodiscard]] Eigen::MatrixXd projectorHClock(const Layout &layout);
/// 1 (x) |t-1><t-1| - U (x) |t><t-1| - U^T (x) |t-1><t| + 1 (x) |t><t| on
/// clock qubits (t-1, t, t+1), dropping the ones outside [1, T].
[[nodiscard]] Eigen::MatrixXd projectorHPropTerm(const Circuit &c, int t);

/// Header comment for emitted Hamiltonian files.
[[nodiscard]] std::string describeProblem(const Problem &p);

} // namespace gadgetc::history
