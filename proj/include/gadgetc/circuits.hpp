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
 * Real self-inverse gates, circuits and state-vector simulation.
 *
 * Two-qubit gate matrices are written in the basis |q_a q_b> where q_a is the
 * first listed qubit (control for CNOT and R).
 */
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace gadgetc {

enum class GateKind { X, CNOT, XZMix, R, Custom };

[[nodiscard]] std::string_view gateKindName(GateKind kind);

struct Gate {
    GateKind kind;
    /// 2x2 or 4x4; complex so that invalid custom gates stay representable.
    Eigen::MatrixXcd matrix;
    /// 1-based logical qubits, most significant first.
    std::vector<int> qubits;
    /// phi for R, psi for XZMix, unused otherwise.
    double angle = 0.0;

    [[nodiscard]] int arity() const { return static_cast<int>(qubits.size()); }
    /// Real part of the matrix; meaningful once validateGate passes.
    [[nodiscard]] Eigen::MatrixXd realMatrix() const { return matrix.real(); }
};

[[nodiscard]] Gate xGate(int qubit);
[[nodiscard]] Gate cnotGate(int control, int target);
/// |0><0|_c (x) 1 + |1><1|_c (x) (sin(phi) X_t + cos(phi) Z_t).
/// Both Paulis act on the target, which keeps the gate self-inverse;
/// R(pi/2) is CNOT.
[[nodiscard]] Gate rGate(double phi, int control, int target);
/// cos(psi) X + sin(psi) Z.
[[nodiscard]] Gate xzMixGate(double psi, int qubit);
[[nodiscard]] Gate customGate(Eigen::MatrixXcd matrix, std::vector<int> qubits);

struct GateCheck {
    bool real = false;
    bool selfInverse = false;
    bool shapeOk = false;
    [[nodiscard]] bool ok() const { return real && selfInverse && shapeOk; }
};

/// Entries real and g^2 = 1, both to `tolerance`.
[[nodiscard]] GateCheck validateGate(const Gate &g, double tolerance = 1e-12);

/// Classical input string; bit 0 belongs to qubit 1.
class Bitstring {
  public:
    Bitstring() = default;
    explicit Bitstring(std::vector<std::uint8_t> bits);
    /// Parses a string of '0'/'1'.
    static Bitstring parse(std::string_view text);
    static Bitstring zeros(int n);

    [[nodiscard]] int size() const { return static_cast<int>(bits_.size()); }
    /// Value of qubit q (1-based).
    [[nodiscard]] int bit(int qubit) const { return bits_.at(qubit - 1); }
    /// Computational basis index with qubit 1 most significant.
    [[nodiscard]] std::uint64_t index() const;
    [[nodiscard]] std::string str() const;

  private:
    std::vector<std::uint8_t> bits_;
};

class Circuit {
  public:
    /// Throws std::invalid_argument on an empty gate list or qubit indices
    /// outside [1, n].
    Circuit(int numQubits, std::vector<Gate> gates);

    [[nodiscard]] int numQubits() const { return n_; }
    [[nodiscard]] int depth() const { return static_cast<int>(gates_.size()); }
    [[nodiscard]] const std::vector<Gate> &gates() const { return gates_; }
    /// Gate U_t with t in [1, T].
    [[nodiscard]] const Gate &gate(int t) const { return gates_.at(t - 1); }

    /// Throws ValidationError naming the first gate that is not real and
    /// self-inverse.
    void requireSelfInverse() const;

  private:
    int n_;
    std::vector<Gate> gates_;
};

/// |basis> in an n-qubit register.
[[nodiscard]] Eigen::VectorXd basisState(std::uint64_t index, int n);

/// Applies a validated gate to a real state in place.
void applyGate(const Gate &g, Eigen::VectorXd &state, int n);

/// Partial states U_t...U_1|x> for t = 0..T (T + 1 entries).
[[nodiscard]] std::vector<Eigen::VectorXd> applyCircuit(const Circuit &c,
                                                        const Bitstring &x);

/// Circuit file: `qubits <n>` header, then one gate per line. CUSTOM matrix
/// paths resolve relative to `baseDir`.
[[nodiscard]] Circuit parseCircuit(std::string_view text,
                                   const std::string &baseDir = ".");
[[nodiscard]] Circuit readCircuitFile(const std::string &path);

/// Whitespace-separated entries, row major, 4 or 16 of them; each entry is
/// `re` or `(re,im)`.
[[nodiscard]] Eigen::MatrixXcd parseGateMatrix(std::string_view text);

/// Angle token: a number or an expression `[k*]pi[/m]`.
[[nodiscard]] double parseAngle(std::string_view token);

[[nodiscard]] std::string serializeCircuit(const Circuit &c);

/// Depth-T circuit on n qubits with gates drawn uniformly from
/// {CNOT, X, XZ(psi), R(phi)} (single-qubit kinds only when n = 1). Angles
/// are uniform in (0, pi); psi stays away from multiples of pi/4.
[[nodiscard]] Circuit randomCircuit(int n, int depth, std::mt19937_64 &rng);

} // namespace gadgetc
