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
#include "gadgetc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gadgetc/errors.hpp"

namespace gadgetc {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex powI(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

void checkQubitCount(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(n) +
                                    " outside [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
}

void checkDense(int n) {
    const int limit = denseQubitLimit();
    if (n > limit) {
        throw SizeLimitError("dense realization of " + std::to_string(n) +
                             " qubits exceeds the limit of " +
                             std::to_string(limit));
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> splitWhitespace(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto start = s.find_first_not_of(" \t\r", pos);
        if (start == std::string_view::npos) {
            break;
        }
        auto end = s.find_first_of(" \t\r", start);
        if (end == std::string_view::npos) {
            end = s.size();
        }
        out.push_back(s.substr(start, end - start));
        pos = end;
    }
    return out;
}

std::optional<double> parseDouble(std::string_view token) {
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    double value = 0.0;
    const auto *begin = token.data();
    const auto *end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return value;
}

} // namespace

char pauliLetter(Pauli p) {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    return kLetters[static_cast<int>(p)];
}

Pauli pauliFromLetter(char c) {
    switch (c) {
    case 'I':
        return Pauli::I;
    case 'X':
        return Pauli::X;
    case 'Y':
        return Pauli::Y;
    case 'Z':
        return Pauli::Z;
    default:
        throw std::invalid_argument(std::string("invalid Pauli letter '") +
                                    c + "'");
    }
}

int denseQubitLimit() {
    if (const char *env = std::getenv("GADGETC_DENSE_LIMIT")) {
        int value = 0;
        const std::string_view s{env};
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0) {
            return value;
        }
    }
    return kDefaultDenseQubitLimit;
}

// -- PauliString --------------------------------------------------------------

PauliString::PauliString(double coefficient, std::string_view word)
    : coefficient_(coefficient), word_(word) {
    if (!std::isfinite(coefficient)) {
        throw std::invalid_argument("Pauli coefficient must be finite");
    }
    const int n = numQubits();
    checkQubitCount(n);
    for (int q = 1; q <= n; ++q) {
        const Pauli p = pauliFromLetter(word_[q - 1]);
        const auto bit = qubitBit(q, n);
        if (p == Pauli::X || p == Pauli::Y) {
            xMask_ |= bit;
        }
        if (p == Pauli::Z || p == Pauli::Y) {
            zMask_ |= bit;
        }
        if (p == Pauli::Y) {
            ++yCount_;
        }
    }
}

PauliString PauliString::identity(int n, double coefficient) {
    checkQubitCount(n);
    return {coefficient, std::string(static_cast<std::size_t>(n), 'I')};
}

PauliString
PauliString::fromSparse(int n,
                        std::initializer_list<std::pair<int, Pauli>> letters,
                        double coefficient) {
    checkQubitCount(n);
    std::string word(static_cast<std::size_t>(n), 'I');
    for (const auto &[qubit, p] : letters) {
        if (qubit < 1 || qubit > n) {
            throw std::invalid_argument("qubit " + std::to_string(qubit) +
                                        " outside register of " +
                                        std::to_string(n));
        }
        word[qubit - 1] = pauliLetter(p);
    }
    return {coefficient, word};
}

Pauli PauliString::letter(int qubit) const {
    if (qubit < 1 || qubit > numQubits()) {
        throw std::out_of_range("qubit index out of range");
    }
    return pauliFromLetter(word_[qubit - 1]);
}

std::vector<int> PauliString::support() const {
    std::vector<int> out;
    for (int q = 1; q <= numQubits(); ++q) {
        if (word_[q - 1] != 'I') {
            out.push_back(q);
        }
    }
    return out;
}

std::string PauliString::pattern() const {
    std::string out;
    for (char c : word_) {
        if (c != 'I') {
            out.push_back(c);
        }
    }
    return out;
}

PauliString PauliString::withCoefficient(double c) const {
    return {c, word_};
}

PauliString PauliString::extended(int n) const {
    if (n < numQubits()) {
        throw std::invalid_argument("cannot shrink a Pauli string");
    }
    return {coefficient_,
            word_ + std::string(static_cast<std::size_t>(n - numQubits()), 'I')};
}

std::pair<std::uint64_t, Complex>
PauliString::actOnBasis(std::uint64_t basis) const {
    const int sign = (std::popcount(basis & zMask_) % 2 == 0) ? 1 : -1;
    return {basis ^ xMask_,
            coefficient_ * static_cast<double>(sign) * powI(yCount_)};
}

PauliProduct multiply(const PauliString &a, const PauliString &b) {
    if (a.numQubits() != b.numQubits()) {
        throw std::invalid_argument("Pauli product of mismatched registers");
    }
    // Single-qubit table: P Q = phase * R.
    Complex phase = a.coefficient() * b.coefficient();
    std::string word(a.word().size(), 'I');
    for (std::size_t q = 0; q < word.size(); ++q) {
        const char p = a.word()[q];
        const char r = b.word()[q];
        if (p == 'I') {
            word[q] = r;
        } else if (r == 'I') {
            word[q] = p;
        } else if (p == r) {
            word[q] = 'I';
        } else {
            // XY = iZ, YZ = iX, ZX = iY and the reversed orders carry -i.
            static const std::string kCycle = "XYZ";
            const auto ip = kCycle.find(p);
            const auto ir = kCycle.find(r);
            const auto third = 3 - ip - ir;
            word[q] = kCycle[third];
            phase *= ((ip + 1) % 3 == ir) ? kI : -kI;
        }
    }
    return {phase, word};
}

// -- OperatorSum --------------------------------------------------------------

OperatorSum::OperatorSum(int n) : n_(n) { checkQubitCount(n); }

OperatorSum::OperatorSum(int n, std::vector<PauliString> terms) : n_(n) {
    checkQubitCount(n);
    for (auto &term : terms) {
        add(std::move(term));
    }
}

void OperatorSum::add(PauliString term) {
    if (term.numQubits() != n_) {
        throw std::invalid_argument(
            "term '" + term.word() + "' does not match register of " +
            std::to_string(n_) + " qubits");
    }
    terms_.push_back(std::move(term));
}

void OperatorSum::add(double coefficient, std::string_view word) {
    add(PauliString(coefficient, word));
}

OperatorSum &OperatorSum::operator+=(const OperatorSum &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("adding operators on different registers");
    }
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

OperatorSum &OperatorSum::operator*=(double factor) {
    for (auto &term : terms_) {
        term = term.withCoefficient(term.coefficient() * factor);
    }
    return *this;
}

bool OperatorSum::isReal() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const PauliString &t) { return t.isReal(); });
}

double OperatorSum::coefficientOf(std::string_view word) const {
    double total = 0.0;
    for (const auto &term : terms_) {
        if (term.word() == word) {
            total += term.coefficient();
        }
    }
    return total;
}

OperatorSum OperatorSum::extended(int n) const {
    OperatorSum out(n);
    for (const auto &term : terms_) {
        out.add(term.extended(n));
    }
    return out;
}

std::vector<int> OperatorSum::support() const {
    std::set<int> qubits;
    for (const auto &term : terms_) {
        for (int q : term.support()) {
            qubits.insert(q);
        }
    }
    return {qubits.begin(), qubits.end()};
}

OperatorSum operator+(OperatorSum a, const OperatorSum &b) {
    a += b;
    return a;
}

OperatorSum operator-(OperatorSum a, const OperatorSum &b) {
    OperatorSum negated = b;
    negated *= -1.0;
    a += negated;
    return a;
}

OperatorSum operator*(double factor, OperatorSum a) {
    a *= factor;
    return a;
}

OperatorSum multiplyDisjoint(const OperatorSum &a, const OperatorSum &b) {
    if (a.numQubits() != b.numQubits()) {
        throw std::invalid_argument("product of operators on different registers");
    }
    OperatorSum out(a.numQubits());
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            if ((ta.xMask() | ta.zMask()) & (tb.xMask() | tb.zMask())) {
                throw std::invalid_argument(
                    "multiplyDisjoint: overlapping supports '" + ta.word() +
                    "' and '" + tb.word() + "'");
            }
            std::string word = ta.word();
            for (std::size_t q = 0; q < word.size(); ++q) {
                if (tb.word()[q] != 'I') {
                    word[q] = tb.word()[q];
                }
            }
            out.add(ta.coefficient() * tb.coefficient(), word);
        }
    }
    return out;
}

OperatorSum canonicalize(const OperatorSum &h, double dropTolerance) {
    std::map<std::string, double> merged;
    for (const auto &term : h.terms()) {
        merged[term.word()] += term.coefficient();
    }
    OperatorSum out(h.numQubits());
    for (const auto &[word, c] : merged) {
        if (std::abs(c) > dropTolerance) {
            out.add(c, word);
        }
    }
    return out;
}

// -- realization --------------------------------------------------------------

Eigen::MatrixXcd realizeMatrix(const OperatorSum &h) {
    const int n = h.numQubits();
    checkDense(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    for (const auto &term : h.terms()) {
        for (std::uint64_t b = 0; b < dim; ++b) {
            const auto [row, value] = term.actOnBasis(b);
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(b)) +=
                value;
        }
    }
    return m;
}

Eigen::MatrixXd realizeRealMatrix(const OperatorSum &h) {
    if (!h.isReal()) {
        throw std::invalid_argument(
            "operator has imaginary entries (odd number of Y letters)");
    }
    const int n = h.numQubits();
    checkDense(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
    for (const auto &term : h.terms()) {
        for (std::uint64_t b = 0; b < dim; ++b) {
            const auto [row, value] = term.actOnBasis(b);
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(b)) +=
                value.real();
        }
    }
    return m;
}

namespace {

template <class Scalar>
void applyImpl(const OperatorSum &h, std::span<const Scalar> in,
               std::span<Scalar> out) {
    const std::uint64_t dim = std::uint64_t{1} << h.numQubits();
    if (in.size() != dim || out.size() != dim) {
        throw std::invalid_argument("state dimension does not match operator");
    }
    std::fill(out.begin(), out.end(), Scalar{});
    for (const auto &term : h.terms()) {
        for (std::uint64_t b = 0; b < dim; ++b) {
            const auto [row, value] = term.actOnBasis(b);
            if constexpr (std::is_same_v<Scalar, double>) {
                out[row] += value.real() * in[b];
            } else {
                out[row] += value * in[b];
            }
        }
    }
}

} // namespace

void apply(const OperatorSum &h, std::span<const double> in,
           std::span<double> out) {
    if (!h.isReal()) {
        throw std::invalid_argument("real apply of a complex operator");
    }
    applyImpl<double>(h, in, out);
}

void apply(const OperatorSum &h, std::span<const Complex> in,
           std::span<Complex> out) {
    applyImpl<Complex>(h, in, out);
}

Eigen::VectorXd apply(const OperatorSum &h, const Eigen::VectorXd &in) {
    Eigen::VectorXd out(in.size());
    apply(h, std::span<const double>(in.data(), static_cast<std::size_t>(in.size())),
          std::span<double>(out.data(), static_cast<std::size_t>(out.size())));
    return out;
}

Eigen::MatrixXd embedOperator(const Eigen::MatrixXd &local,
                              std::span<const int> qubits, int n) {
    checkQubitCount(n);
    checkDense(n);
    const auto m = static_cast<int>(qubits.size());
    const std::uint64_t localDim = std::uint64_t{1} << m;
    if (static_cast<std::uint64_t>(local.rows()) != localDim ||
        static_cast<std::uint64_t>(local.cols()) != localDim) {
        throw std::invalid_argument("local operator dimension mismatch");
    }
    std::uint64_t targetMask = 0;
    for (int q : qubits) {
        if (q < 1 || q > n) {
            throw std::invalid_argument("embedOperator: qubit out of range");
        }
        if (targetMask & qubitBit(q, n)) {
            throw std::invalid_argument("embedOperator: repeated qubit");
        }
        targetMask |= qubitBit(q, n);
    }
    auto localIndex = [&](std::uint64_t full) {
        std::uint64_t idx = 0;
        for (int a = 0; a < m; ++a) {
            idx = (idx << 1) | ((full & qubitBit(qubits[a], n)) ? 1U : 0U);
        }
        return idx;
    };
    auto scatter = [&](std::uint64_t rest, std::uint64_t idx) {
        std::uint64_t full = rest;
        for (int a = 0; a < m; ++a) {
            if (idx & (std::uint64_t{1} << (m - 1 - a))) {
                full |= qubitBit(qubits[a], n);
            }
        }
        return full;
    };
    const std::uint64_t dim = std::uint64_t{1} << n;
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    for (std::uint64_t col = 0; col < dim; ++col) {
        const auto lc = localIndex(col);
        const auto rest = col & ~targetMask;
        for (std::uint64_t lr = 0; lr < localDim; ++lr) {
            const double v = local(static_cast<Eigen::Index>(lr),
                                   static_cast<Eigen::Index>(lc));
            if (v != 0.0) {
                out(static_cast<Eigen::Index>(scatter(rest, lr)),
                    static_cast<Eigen::Index>(col)) += v;
            }
        }
    }
    return out;
}

OperatorSum pauliDecompose(const Eigen::MatrixXcd &local,
                           std::span<const int> qubits, int n,
                           double tolerance) {
    const auto m = static_cast<int>(qubits.size());
    if (m < 1) {
        throw std::invalid_argument("pauliDecompose needs at least one qubit");
    }
    const std::uint64_t localDim = std::uint64_t{1} << m;
    if (static_cast<std::uint64_t>(local.rows()) != localDim ||
        static_cast<std::uint64_t>(local.cols()) != localDim) {
        throw std::invalid_argument("pauliDecompose: dimension mismatch");
    }
    for (int q : qubits) {
        if (q < 1 || q > n) {
            throw std::invalid_argument("pauliDecompose: qubit out of range");
        }
    }
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    OperatorSum out(n);
    const std::uint64_t words = std::uint64_t{1} << (2 * m);
    for (std::uint64_t code = 0; code < words; ++code) {
        std::string localWord(static_cast<std::size_t>(m), 'I');
        for (int a = 0; a < m; ++a) {
            localWord[a] = kLetters[(code >> (2 * (m - 1 - a))) & 3U];
        }
        const PauliString p(1.0, localWord);
        // Tr(P M) = sum_b <b xor x| M |b> phase(b)
        Complex trace{};
        for (std::uint64_t b = 0; b < localDim; ++b) {
            const auto [row, phase] = p.actOnBasis(b);
            trace += phase * local(static_cast<Eigen::Index>(b),
                                   static_cast<Eigen::Index>(row));
        }
        const Complex c = trace / static_cast<double>(localDim);
        if (std::abs(c.imag()) > std::max(tolerance, 1e-12)) {
            throw std::invalid_argument(
                "pauliDecompose: matrix is not Hermitian");
        }
        if (std::abs(c.real()) <= tolerance) {
            continue;
        }
        std::string word(static_cast<std::size_t>(n), 'I');
        for (int a = 0; a < m; ++a) {
            word[qubits[a] - 1] = localWord[a];
        }
        out.add(c.real(), word);
    }
    return out;
}

// -- interaction sets ---------------------------------------------------------

std::string_view modelName(InteractionModel model) {
    switch (model) {
    case InteractionModel::ZZXX:
        return "zzxx";
    case InteractionModel::ZX:
        return "zx";
    case InteractionModel::RealSubset:
        return "real";
    }
    return "unknown";
}

std::optional<InteractionModel> parseModelName(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "zzxx") {
        return InteractionModel::ZZXX;
    }
    if (lower == "zx") {
        return InteractionModel::ZX;
    }
    if (lower == "real" || lower == "real_subset") {
        return InteractionModel::RealSubset;
    }
    return std::nullopt;
}

InteractionSet InteractionSet::of(InteractionModel model) {
    switch (model) {
    case InteractionModel::ZZXX:
        return {model, {"Z", "X", "ZZ", "XX"}};
    case InteractionModel::ZX:
        return {model, {"Z", "X", "ZX", "XZ"}};
    case InteractionModel::RealSubset:
        return {model, {"Z", "X", "ZZ", "XX", "ZX", "XZ"}};
    }
    throw std::invalid_argument("unknown interaction model");
}

bool InteractionSet::allows(const PauliString &term) const {
    return term.isIdentity() || patterns.contains(term.pattern());
}

ValidationResult validateInteractionSet(const OperatorSum &h,
                                        InteractionModel model) {
    const auto set = InteractionSet::of(model);
    ValidationResult result;
    for (const auto &term : h.terms()) {
        if (!set.allows(term)) {
            result.violations.push_back(term);
        }
    }
    return result;
}

// -- subspaces ----------------------------------------------------------------

void SubspaceSpec::check(int n) const {
    if (n < 2) {
        throw std::invalid_argument(
            "subspace restriction needs at least two qubits");
    }
    if (qubit < 1 || qubit > n) {
        throw std::invalid_argument("subspace qubit " + std::to_string(qubit) +
                                    " outside register of " +
                                    std::to_string(n));
    }
    if (keep != 0 && keep != 1) {
        throw std::invalid_argument("subspace keep value must be 0 or 1");
    }
}

Eigen::MatrixXd subspaceIsometry(int n, const SubspaceSpec &spec) {
    spec.check(n);
    checkDense(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t kept = dim >> 1;
    const auto p = static_cast<unsigned>(n - spec.qubit);
    const std::uint64_t lowMask = (std::uint64_t{1} << p) - 1;
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(kept));
    const double s = 1.0 / std::sqrt(2.0);
    for (std::uint64_t r = 0; r < kept; ++r) {
        const std::uint64_t full0 = ((r & ~lowMask) << 1) | (r & lowMask);
        const std::uint64_t full1 = full0 | (std::uint64_t{1} << p);
        const auto col = static_cast<Eigen::Index>(r);
        if (spec.basis == Basis::Z) {
            w(static_cast<Eigen::Index>(spec.keep == 0 ? full0 : full1), col) =
                1.0;
        } else {
            w(static_cast<Eigen::Index>(full0), col) = s;
            w(static_cast<Eigen::Index>(full1), col) = spec.keep == 0 ? s : -s;
        }
    }
    return w;
}

Eigen::MatrixXd restrictToSubspace(const Eigen::MatrixXd &h, int n,
                                   const SubspaceSpec &spec) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (h.rows() != dim || h.cols() != dim) {
        throw std::invalid_argument("restrictToSubspace: dimension mismatch");
    }
    const Eigen::MatrixXd w = subspaceIsometry(n, spec);
    return w.transpose() * h * w;
}

Eigen::MatrixXd restrictToSubspace(const OperatorSum &h,
                                   const SubspaceSpec &spec) {
    return restrictToSubspace(realizeRealMatrix(h), h.numQubits(), spec);
}

// -- text format --------------------------------------------------------------

std::string formatExact(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("failed to format coefficient");
    }
    return {buf, ptr};
}

std::string formatReport(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

OperatorSum parseHamiltonian(std::string_view text) {
    std::optional<int> declared;
    std::vector<std::pair<PauliString, int>> terms;
    int lineNo = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineNo;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            const auto comment = splitWhitespace(line.substr(hash + 1));
            if (comment.size() == 2 && comment[0] == "qubits") {
                int n = 0;
                auto [ptr, ec] = std::from_chars(
                    comment[1].data(), comment[1].data() + comment[1].size(), n);
                if (ec != std::errc{} ||
                    ptr != comment[1].data() + comment[1].size() || n < 1) {
                    throw ParseError("bad qubit count directive", lineNo);
                }
                declared = n;
            }
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto tokens = splitWhitespace(line);
        if (tokens.size() != 2) {
            throw ParseError("expected '<coefficient> <word>'", lineNo);
        }
        const auto coefficient = parseDouble(tokens[0]);
        if (!coefficient || !std::isfinite(*coefficient)) {
            throw ParseError("bad coefficient '" + std::string(tokens[0]) + "'",
                             lineNo);
        }
        try {
            terms.emplace_back(PauliString(*coefficient, tokens[1]), lineNo);
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what(), lineNo);
        }
    }
    int n = 0;
    if (declared) {
        n = *declared;
    } else if (!terms.empty()) {
        n = terms.front().first.numQubits();
    } else {
        throw ParseError("empty Hamiltonian without a '# qubits <n>' directive");
    }
    OperatorSum out(n);
    for (auto &[term, line] : terms) {
        if (term.numQubits() != n) {
            throw ParseError("word length " + std::to_string(term.numQubits()) +
                                 " does not match " + std::to_string(n) +
                                 " qubits",
                             line);
        }
        out.add(std::move(term));
    }
    return out;
}

std::string serializeHamiltonian(const OperatorSum &h, std::string_view header) {
    std::ostringstream os;
    std::size_t pos = 0;
    while (pos < header.size()) {
        auto end = header.find('\n', pos);
        if (end == std::string_view::npos) {
            end = header.size();
        }
        os << "# " << header.substr(pos, end - pos) << '\n';
        pos = end + 1;
    }
    os << "# qubits " << h.numQubits() << '\n';
    for (const auto &term : h.terms()) {
        os << formatExact(term.coefficient()) << ' ' << term.word() << '\n';
    }
    return os.str();
}

OperatorSum readHamiltonianFile(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open Hamiltonian file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parseHamiltonian(buffer.str());
}

void writeHamiltonianFile(const std::string &path, const OperatorSum &h,
                          std::string_view header) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << serializeHamiltonian(h, header);
}

} // namespace gadgetc
