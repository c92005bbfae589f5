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
 * Real-coefficient Pauli-string algebra and operator realization.
 *
 * Qubits are numbered from 1. In a letter word the leftmost letter acts on
 * qubit 1, and qubit 1 is the most significant bit of a computational basis
 * index, so `ZX` realizes the Kronecker product Z (x) X.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace gadgetc {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I, X, Y, Z };

[[nodiscard]] char pauliLetter(Pauli p);
[[nodiscard]] Pauli pauliFromLetter(char c);

/// Maximum number of qubits a PauliString can address (bitmask width).
inline constexpr int kMaxQubits = 62;

/// Default cap on dense realization; GADGETC_DENSE_LIMIT overrides it.
inline constexpr int kDefaultDenseQubitLimit = 14;

/// Current dense-realization cap in qubits.
[[nodiscard]] int denseQubitLimit();

/// Bit of the basis index that carries `qubit` (1-based) in an n-qubit
/// register.
[[nodiscard]] constexpr std::uint64_t qubitBit(int qubit, int n) {
    return std::uint64_t{1} << static_cast<unsigned>(n - qubit);
}

/**
 * A real coefficient times a tensor product of single-qubit Paulis.
 */
class PauliString {
  public:
    PauliString(double coefficient, std::string_view word);

    static PauliString identity(int n, double coefficient = 1.0);
    /// `letters` maps 1-based qubits to Paulis; unlisted qubits get I.
    static PauliString
    fromSparse(int n, std::initializer_list<std::pair<int, Pauli>> letters,
               double coefficient = 1.0);

    [[nodiscard]] double coefficient() const noexcept { return coefficient_; }
    [[nodiscard]] const std::string &word() const noexcept { return word_; }
    [[nodiscard]] int numQubits() const noexcept {
        return static_cast<int>(word_.size());
    }
    [[nodiscard]] Pauli letter(int qubit) const;

    [[nodiscard]] std::uint64_t xMask() const noexcept { return xMask_; }
    [[nodiscard]] std::uint64_t zMask() const noexcept { return zMask_; }
    [[nodiscard]] int yCount() const noexcept { return yCount_; }
    /// True when the realized matrix has only real entries (even Y count).
    [[nodiscard]] bool isReal() const noexcept { return yCount_ % 2 == 0; }
    [[nodiscard]] bool isIdentity() const noexcept {
        return (xMask_ | zMask_) == 0;
    }

    /// Qubits carrying a non-identity letter, ascending.
    [[nodiscard]] std::vector<int> support() const;
    /// Non-identity letters in qubit order, e.g. "ZX" for Z_1 X_3.
    [[nodiscard]] std::string pattern() const;
    [[nodiscard]] int weight() const { return static_cast<int>(support().size()); }

    [[nodiscard]] PauliString withCoefficient(double c) const;
    /// Same letters on a larger register; new qubits get I.
    [[nodiscard]] PauliString extended(int n) const;

    /// Phase and coefficient of P|b>, returning the image basis index.
    [[nodiscard]] std::pair<std::uint64_t, Complex>
    actOnBasis(std::uint64_t basis) const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    double coefficient_;
    std::string word_;
    std::uint64_t xMask_ = 0;
    std::uint64_t zMask_ = 0;
    int yCount_ = 0;
};

/// Product of two Pauli strings: a complex coefficient on a letter word.
struct PauliProduct {
    Complex coefficient;
    std::string word;
};

[[nodiscard]] PauliProduct multiply(const PauliString &a, const PauliString &b);

/**
 * A Hamiltonian: a sum of Pauli strings over a fixed register.
 */
class OperatorSum {
  public:
    explicit OperatorSum(int n);
    OperatorSum(int n, std::vector<PauliString> terms);

    [[nodiscard]] int numQubits() const noexcept { return n_; }
    [[nodiscard]] const std::vector<PauliString> &terms() const noexcept {
        return terms_;
    }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    void add(PauliString term);
    void add(double coefficient, std::string_view word);

    OperatorSum &operator+=(const OperatorSum &other);
    OperatorSum &operator*=(double factor);

    [[nodiscard]] bool isReal() const;
    /// Coefficient of `word` after merging duplicates (0 if absent).
    [[nodiscard]] double coefficientOf(std::string_view word) const;
    /// Same operator on a larger register, identity on the new qubits.
    [[nodiscard]] OperatorSum extended(int n) const;
    /// Union of the term supports.
    [[nodiscard]] std::vector<int> support() const;

  private:
    int n_;
    std::vector<PauliString> terms_;
};

[[nodiscard]] OperatorSum operator+(OperatorSum a, const OperatorSum &b);
[[nodiscard]] OperatorSum operator-(OperatorSum a, const OperatorSum &b);
[[nodiscard]] OperatorSum operator*(double factor, OperatorSum a);

/// Product of two operators with disjoint supports (a tensor product).
[[nodiscard]] OperatorSum multiplyDisjoint(const OperatorSum &a,
                                           const OperatorSum &b);

/// Merge duplicate words, drop terms with |c| <= dropTolerance and sort
/// lexicographically by word.
[[nodiscard]] OperatorSum canonicalize(const OperatorSum &h,
                                       double dropTolerance = 0.0);

/// sum_t c_t (x) P_t as a dense matrix. Throws SizeLimitError above the cap.
[[nodiscard]] Eigen::MatrixXcd realizeMatrix(const OperatorSum &h);
/// Real dense realization. Throws std::invalid_argument if any term has an
/// odd number of Y letters.
[[nodiscard]] Eigen::MatrixXd realizeRealMatrix(const OperatorSum &h);

/// out = H in, term by term, without materializing the matrix.
void apply(const OperatorSum &h, std::span<const double> in,
           std::span<double> out);
void apply(const OperatorSum &h, std::span<const Complex> in,
           std::span<Complex> out);
[[nodiscard]] Eigen::VectorXd apply(const OperatorSum &h,
                                    const Eigen::VectorXd &in);

/// Embed a 2^m x 2^m operator acting on `qubits` (listed most significant
/// first) into an n-qubit register.
[[nodiscard]] Eigen::MatrixXd embedOperator(const Eigen::MatrixXd &local,
                                            std::span<const int> qubits,
                                            int n);

/// Hermitian matrix on `qubits` expanded in Pauli strings of an n-qubit
/// register. Coefficients with magnitude <= tolerance are dropped.
[[nodiscard]] OperatorSum pauliDecompose(const Eigen::MatrixXcd &local,
                                         std::span<const int> qubits, int n,
                                         double tolerance = 1e-14);

// -- interaction sets -------------------------------------------------------

enum class InteractionModel { ZZXX, ZX, RealSubset };

[[nodiscard]] std::string_view modelName(InteractionModel model);
[[nodiscard]] std::optional<InteractionModel>
parseModelName(std::string_view name);

struct InteractionSet {
    InteractionModel model;
    /// Allowed non-identity letter patterns.
    std::set<std::string> patterns;

    static InteractionSet of(InteractionModel model);
    [[nodiscard]] bool allows(const PauliString &term) const;
};

struct ValidationResult {
    std::vector<PauliString> violations;
    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

/// Identity terms always pass; every other term's pattern must be in the set.
[[nodiscard]] ValidationResult validateInteractionSet(const OperatorSum &h,
                                                      InteractionModel model);

// -- subspace restriction ---------------------------------------------------

enum class Basis { Z, X };

/// Selects one eigenstate of a single qubit: |0>,|1> in the z basis or
/// |+>,|-> in the x basis (keep = 0 or 1 respectively).
struct SubspaceSpec {
    int qubit = 1;
    Basis basis = Basis::Z;
    int keep = 0;

    [[nodiscard]] SubspaceSpec complement() const {
        return {qubit, basis, 1 - keep};
    }
    /// Throws std::invalid_argument for an out-of-range qubit or keep value.
    void check(int n) const;
};

/// 2^n x 2^(n-1) isometry whose columns are the kept basis states. The
/// remaining qubits keep their relative order.
[[nodiscard]] Eigen::MatrixXd subspaceIsometry(int n, const SubspaceSpec &spec);

/// P H P expressed on the kept 2^(n-1)-dimensional subspace.
[[nodiscard]] Eigen::MatrixXd restrictToSubspace(const Eigen::MatrixXd &h,
                                                 int n,
                                                 const SubspaceSpec &spec);
[[nodiscard]] Eigen::MatrixXd restrictToSubspace(const OperatorSum &h,
                                                 const SubspaceSpec &spec);

// -- text format ------------------------------------------------------------

/// One term per line, `<coefficient> <word>`; `#` starts a comment. A
/// `# qubits <n>` comment fixes the register size for empty operators.
[[nodiscard]] OperatorSum parseHamiltonian(std::string_view text);
/// Shortest round-trip decimal coefficients, terms in stored order.
[[nodiscard]] std::string serializeHamiltonian(const OperatorSum &h,
                                               std::string_view header = {});

[[nodiscard]] OperatorSum readHamiltonianFile(const std::string &path);
void writeHamiltonianFile(const std::string &path, const OperatorSum &h,
                          std::string_view header = {});

/// Shortest decimal string that parses back to exactly `value`.
[[nodiscard]] std::string formatExact(double value);
/// `value` with 12 significant digits, for reports and CSV.
[[nodiscard]] std::string formatReport(double value);

} // namespace gadgetc
