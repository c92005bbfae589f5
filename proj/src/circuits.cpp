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
#include "gadgetc/circuits.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "gadgetc/errors.hpp"
#include "gadgetc/pauli.hpp"

namespace gadgetc {

namespace {

Eigen::MatrixXcd controlled(const Eigen::Matrix2d &u) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m.block(2, 2, 2, 2) = u.cast<Complex>();
    return m;
}

void checkPair(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("control and target must differ");
    }
}

std::vector<std::string_view> tokenize(std::string_view s) {
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

std::optional<double> toDouble(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v;
}

int toQubit(std::string_view s, int lineNo) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("bad qubit index '" + std::string(s) + "'", lineNo);
    }
    return v;
}

std::string readAll(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

std::string_view gateKindName(GateKind kind) {
    switch (kind) {
    case GateKind::X:
        return "X";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::XZMix:
        return "XZ";
    case GateKind::R:
        return "R";
    case GateKind::Custom:
        return "CUSTOM";
    }
    return "?";
}

Gate xGate(int qubit) {
    Eigen::MatrixXcd m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return {GateKind::X, m, {qubit}};
}

Gate cnotGate(int control, int target) {
    checkPair(control, target);
    Eigen::Matrix2d x;
    x << 0.0, 1.0, 1.0, 0.0;
    return {GateKind::CNOT, controlled(x), {control, target}};
}

Gate rGate(double phi, int control, int target) {
    checkPair(control, target);
    Eigen::Matrix2d u;
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    u << c, s, s, -c;
    return {GateKind::R, controlled(u), {control, target}, phi};
}

Gate xzMixGate(double psi, int qubit) {
    Eigen::MatrixXcd m(2, 2);
    const double s = std::sin(psi);
    const double c = std::cos(psi);
    m << s, c, c, -s;
    return {GateKind::XZMix, m, {qubit}, psi};
}

Gate customGate(Eigen::MatrixXcd matrix, std::vector<int> qubits) {
    if (qubits.size() == 2) {
        checkPair(qubits[0], qubits[1]);
    }
    return {GateKind::Custom, std::move(matrix), std::move(qubits)};
}

GateCheck validateGate(const Gate &g, double tolerance) {
    GateCheck check;
    const auto dim = Eigen::Index{1} << g.arity();
    check.shapeOk = (g.arity() == 1 || g.arity() == 2) &&
                    g.matrix.rows() == dim && g.matrix.cols() == dim;
    if (!check.shapeOk) {
        return check;
    }
    check.real = g.matrix.imag().cwiseAbs().maxCoeff() <= tolerance;
    const Eigen::MatrixXcd square = g.matrix * g.matrix;
    check.selfInverse =
        (square - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() <=
        tolerance;
    return check;
}

// -- Bitstring ----------------------------------------------------------------

Bitstring::Bitstring(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("bit values must be 0 or 1");
        }
    }
}

Bitstring Bitstring::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ParseError("bitstring may only contain 0 and 1");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Bitstring(std::move(bits));
}

Bitstring Bitstring::zeros(int n) {
    return Bitstring(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

std::uint64_t Bitstring::index() const {
    std::uint64_t idx = 0;
    for (auto b : bits_) {
        idx = (idx << 1) | b;
    }
    return idx;
}

std::string Bitstring::str() const {
    std::string out;
    for (auto b : bits_) {
        out.push_back(static_cast<char>('0' + b));
    }
    return out;
}

// -- Circuit ------------------------------------------------------------------

Circuit::Circuit(int numQubits, std::vector<Gate> gates)
    : n_(numQubits), gates_(std::move(gates)) {
    if (n_ < 1) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
    if (gates_.empty()) {
        throw std::invalid_argument("circuit needs at least one gate");
    }
    for (std::size_t t = 0; t < gates_.size(); ++t) {
        for (int q : gates_[t].qubits) {
            if (q < 1 || q > n_) {
                throw std::invalid_argument(
                    "gate " + std::to_string(t + 1) + " acts on qubit " +
                    std::to_string(q) + " outside [1, " + std::to_string(n_) +
                    "]");
            }
        }
    }
}

void Circuit::requireSelfInverse() const {
    for (int t = 1; t <= depth(); ++t) {
        const auto check = validateGate(gate(t));
        if (!check.ok()) {
            throw ValidationError(
                "gate " + std::to_string(t) + " (" +
                std::string(gateKindName(gate(t).kind)) + ") is not " +
                (!check.shapeOk ? "a 1- or 2-qubit matrix"
                 : !check.real  ? "real"
                                : "self-inverse"));
        }
    }
}

Eigen::VectorXd basisState(std::uint64_t index, int n) {
    const auto dim = Eigen::Index{1} << n;
    if (static_cast<Eigen::Index>(index) >= dim) {
        throw std::invalid_argument("basis index outside register");
    }
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return v;
}

void applyGate(const Gate &g, Eigen::VectorXd &state, int n) {
    const auto dim = Eigen::Index{1} << n;
    if (state.size() != dim) {
        throw std::invalid_argument("state dimension does not match register");
    }
    const Eigen::MatrixXd u = g.realMatrix();
    if (g.arity() == 1) {
        const auto bit = static_cast<Eigen::Index>(qubitBit(g.qubits[0], n));
        for (Eigen::Index b = 0; b < dim; ++b) {
            if (b & bit) {
                continue;
            }
            const double a0 = state(b);
            const double a1 = state(b | bit);
            state(b) = u(0, 0) * a0 + u(0, 1) * a1;
            state(b | bit) = u(1, 0) * a0 + u(1, 1) * a1;
        }
        return;
    }
    const auto hi = static_cast<Eigen::Index>(qubitBit(g.qubits[0], n));
    const auto lo = static_cast<Eigen::Index>(qubitBit(g.qubits[1], n));
    for (Eigen::Index b = 0; b < dim; ++b) {
        if (b & (hi | lo)) {
            continue;
        }
        const Eigen::Index idx[4] = {b, b | lo, b | hi, b | hi | lo};
        double in[4];
        for (int r = 0; r < 4; ++r) {
            in[r] = state(idx[r]);
        }
        for (int r = 0; r < 4; ++r) {
            double acc = 0.0;
            for (int c = 0; c < 4; ++c) {
                acc += u(r, c) * in[c];
            }
            state(idx[r]) = acc;
        }
    }
}

std::vector<Eigen::VectorXd> applyCircuit(const Circuit &c, const Bitstring &x) {
    if (x.size() != c.numQubits()) {
        throw std::invalid_argument("input has " + std::to_string(x.size()) +
                                    " bits for a " +
                                    std::to_string(c.numQubits()) +
                                    "-qubit circuit");
    }
    c.requireSelfInverse();
    std::vector<Eigen::VectorXd> partials;
    partials.reserve(static_cast<std::size_t>(c.depth()) + 1);
    Eigen::VectorXd state = basisState(x.index(), c.numQubits());
    partials.push_back(state);
    for (const auto &g : c.gates()) {
        applyGate(g, state, c.numQubits());
        partials.push_back(state);
    }
    return partials;
}

// -- text formats -------------------------------------------------------------

double parseAngle(std::string_view token) {
    if (auto v = toDouble(token)) {
        return *v;
    }
    // [k*]pi[/m]
    double factor = 1.0;
    double divisor = 1.0;
    std::string_view rest = token;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    if (const auto star = rest.find('*'); star != std::string_view::npos) {
        auto k = toDouble(rest.substr(0, star));
        if (!k) {
            throw ParseError("bad angle '" + std::string(token) + "'");
        }
        factor = *k;
        rest = rest.substr(star + 1);
    }
    if (rest.substr(0, 2) != "pi") {
        throw ParseError("bad angle '" + std::string(token) + "'");
    }
    rest.remove_prefix(2);
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw ParseError("bad angle '" + std::string(token) + "'");
        }
        auto m = toDouble(rest.substr(1));
        if (!m || *m == 0.0) {
            throw ParseError("bad angle '" + std::string(token) + "'");
        }
        divisor = *m;
    }
    const double value = factor * std::numbers::pi / divisor;
    return negative ? -value : value;
}

Eigen::MatrixXcd parseGateMatrix(std::string_view text) {
    std::vector<Complex> entries;
    std::string cleaned;
    for (std::size_t pos = 0; pos < text.size();) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(pos, end - pos);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        cleaned.append(line);
        cleaned.push_back('\n');
        pos = end + 1;
    }
    std::istringstream in(cleaned);
    std::string token;
    while (in >> token) {
        std::istringstream entry(token);
        Complex value;
        entry >> value;
        if (entry.fail() || !(entry >> std::ws).eof()) {
            throw ParseError("bad matrix entry '" + token + "'");
        }
        entries.push_back(value);
    }
    Eigen::Index dim = 0;
    if (entries.size() == 4) {
        dim = 2;
    } else if (entries.size() == 16) {
        dim = 4;
    } else {
        throw ParseError("gate matrix needs 4 or 16 entries, got " +
                         std::to_string(entries.size()));
    }
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = entries[static_cast<std::size_t>(r * dim + c)];
        }
    }
    return m;
}

Circuit parseCircuit(std::string_view text, const std::string &baseDir) {
    std::optional<int> n;
    std::vector<Gate> gates;
    int lineNo = 0;
    for (std::size_t pos = 0; pos <= text.size();) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineNo;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tok = tokenize(line);
        if (tok.empty()) {
            continue;
        }
        auto expect = [&](std::size_t lo, std::size_t hi) {
            if (tok.size() < lo || tok.size() > hi) {
                throw ParseError("wrong number of fields for '" +
                                     std::string(tok[0]) + "'",
                                 lineNo);
            }
        };
        const std::string_view op = tok[0];
        if (op == "qubits") {
            expect(2, 2);
            if (n) {
                throw ParseError("duplicate qubits header", lineNo);
            }
            n = toQubit(tok[1], lineNo);
            if (*n < 1) {
                throw ParseError("qubit count must be positive", lineNo);
            }
            continue;
        }
        if (!n) {
            throw ParseError("gate before 'qubits <n>' header", lineNo);
        }
        try {
            if (op == "X") {
                expect(2, 2);
                gates.push_back(xGate(toQubit(tok[1], lineNo)));
            } else if (op == "CNOT") {
                expect(3, 3);
                gates.push_back(
                    cnotGate(toQubit(tok[1], lineNo), toQubit(tok[2], lineNo)));
            } else if (op == "R") {
                expect(4, 4);
                gates.push_back(rGate(parseAngle(tok[1]),
                                      toQubit(tok[2], lineNo),
                                      toQubit(tok[3], lineNo)));
            } else if (op == "XZ") {
                expect(3, 3);
                gates.push_back(
                    xzMixGate(parseAngle(tok[1]), toQubit(tok[2], lineNo)));
            } else if (op == "CUSTOM") {
                expect(3, 4);
                std::filesystem::path file{std::string(tok[1])};
                if (file.is_relative()) {
                    file = std::filesystem::path(baseDir) / file;
                }
                auto matrix = parseGateMatrix(readAll(file.string()));
                std::vector<int> qubits{toQubit(tok[2], lineNo)};
                if (tok.size() == 4) {
                    qubits.push_back(toQubit(tok[3], lineNo));
                }
                if ((Eigen::Index{1} << qubits.size()) != matrix.rows()) {
                    throw ParseError("custom matrix size does not match the "
                                     "number of target qubits",
                                     lineNo);
                }
                gates.push_back(customGate(std::move(matrix), std::move(qubits)));
            } else {
                throw ParseError("unknown gate '" + std::string(op) + "'",
                                 lineNo);
            }
        } catch (const ParseError &e) {
            if (e.line() > 0) {
                throw;
            }
            throw ParseError(e.what(), lineNo);
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what(), lineNo);
        }
    }
    if (!n) {
        throw ParseError("missing 'qubits <n>' header");
    }
    try {
        return Circuit(*n, std::move(gates));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

Circuit readCircuitFile(const std::string &path) {
    const auto base = std::filesystem::path(path).parent_path();
    return parseCircuit(readAll(path), base.empty() ? "." : base.string());
}

std::string serializeCircuit(const Circuit &c) {
    std::ostringstream os;
    os << "qubits " << c.numQubits() << '\n';
    for (const auto &g : c.gates()) {
        switch (g.kind) {
        case GateKind::X:
            os << "X " << g.qubits[0];
            break;
        case GateKind::CNOT:
            os << "CNOT " << g.qubits[0] << ' ' << g.qubits[1];
            break;
        case GateKind::R:
            os << "R " << formatExact(g.angle) << ' ' << g.qubits[0] << ' '
               << g.qubits[1];
            break;
        case GateKind::XZMix:
            os << "XZ " << formatExact(g.angle) << ' ' << g.qubits[0];
            break;
        case GateKind::Custom:
            throw std::invalid_argument(
                "custom gates reference external matrix files");
        }
        os << '\n';
    }
    return os.str();
}

Circuit randomCircuit(int n, int depth, std::mt19937_64 &rng) {
    if (n < 1 || depth < 1) {
        throw std::invalid_argument("random circuit needs n >= 1 and T >= 1");
    }
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    std::uniform_int_distribution<int> qubit(1, n);
    std::uniform_int_distribution<int> kind(0, n == 1 ? 1 : 3);
    auto pair = [&]() {
        const int a = qubit(rng);
        int b = qubit(rng);
        while (b == a) {
            b = qubit(rng);
        }
        return std::pair{a, b};
    };
    std::vector<Gate> gates;
    for (int t = 0; t < depth; ++t) {
        switch (kind(rng)) {
        case 0:
            gates.push_back(xGate(qubit(rng)));
            break;
        case 1: {
            double psi = angle(rng);
            const double quarter = std::numbers::pi / 4.0;
            while (std::abs(psi / quarter - std::round(psi / quarter)) < 1e-3) {
                psi = angle(rng);
            }
            gates.push_back(xzMixGate(psi, qubit(rng)));
            break;
        }
        case 2: {
            const auto [c, q] = pair();
            gates.push_back(cnotGate(c, q));
            break;
        }
        default: {
            const double phi = angle(rng);
            const auto [c, q] = pair();
            gates.push_back(rGate(phi, c, q));
            break;
        }
        }
    }
    return Circuit(n, std::move(gates));
}

} // namespace gadgetc
