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
#include "cli.hpp"

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "gadgetc/circuits.hpp"
#include "gadgetc/errors.hpp"
#include "gadgetc/gadgets.hpp"
#include "gadgetc/history.hpp"
#include "gadgetc/pauli.hpp"
#include "gadgetc/spectral.hpp"

namespace gadgetc::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct Settings {
    std::string model = "zzxx";
    double eps = 0.1;
    double ebar = 1.0;
    int grid = 101;
    std::uint64_t seed = kDefaultSeed;
    bool includeClockInit = false;
    bool initial = false;
    double tolResidual = 1e-10;
    double tolOverlap = 1e-8;
    double tolFactor = 0.0;
    int random = 0;
    std::string out;
    std::string report;
    std::string input;
    std::string kind = "zx_from_zzxx";
    double coefficient = 1.0;
    std::string epsList;
    std::vector<std::string> files;
};

std::string readText(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw gadgetc::ParseError("cannot read '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Writes to `path`, or to `fallback` when the path is empty.
void emit(const std::string &path, const std::string &text,
          std::ostream &fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw gadgetc::ParseError("cannot write '" + path + "'");
    }
    file << text;
}

bool looksLikeCircuit(const std::string &text) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream words(line);
        std::string first;
        if (!(words >> first) || first[0] == '#') {
            continue;
        }
        return first == "qubits";
    }
    return false;
}

InteractionModel requireModel(const std::string &name, bool allowReal) {
    const auto model = parseModelName(name);
    if (!model || (!allowReal && *model == InteractionModel::RealSubset)) {
        throw gadgetc::ParseError("unknown model '" + name + "'");
    }
    return *model;
}

history::Problem loadProblem(const std::string &path, const std::string &input) {
    const std::string text = readText(path);
    const auto dir = std::filesystem::path(path).parent_path().string();
    Circuit c = parseCircuit(text, dir.empty() ? "." : dir);
    Bitstring x = input.empty() ? Bitstring::zeros(c.numQubits())
                                : Bitstring::parse(input);
    return history::Problem(std::move(c), std::move(x));
}

std::vector<double> parseList(const std::string &text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        auto end = text.find(',', pos);
        if (end == std::string::npos) {
            end = text.size();
        }
        const std::string token = text.substr(pos, end - pos);
        double v = 0.0;
        const auto [ptr, ec] =
            std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() ||
            ptr != token.data() + token.size()) {
            throw gadgetc::ParseError("bad number '" + token + "' in list");
        }
        values.push_back(v);
        pos = end + 1;
    }
    if (values.empty()) {
        throw gadgetc::ParseError("empty epsilon list");
    }
    return values;
}

std::string seedLine(const std::string &command, const std::string &extra,
                     std::uint64_t seed) {
    return "gadgetc " + command + (extra.empty() ? "" : " " + extra) +
           " seed=" + std::to_string(seed);
}

// -- commands ------------------------------------------------------------------

int cmdCompile(const Settings &s, std::ostream &out) {
    const auto model = requireModel(s.model, false);
    const std::string text = readText(s.files.at(0));
    OperatorSum target(1);
    if (looksLikeCircuit(text)) {
        const auto p = loadProblem(s.files.at(0), s.input);
        target = history::buildTotal(p, s.includeClockInit);
    } else {
        target = parseHamiltonian(text);
    }
    const auto compiled = compileHamiltonian(target, model, s.eps, s.ebar);
    const std::string header =
        seedLine("compile",
                 "model=" + std::string(modelName(model)) +
                     " eps=" + formatReport(s.eps) +
                     " ebar=" + formatReport(s.ebar),
                 s.seed) +
        "\nancillas=" + std::to_string(compiled.gadgets.size()) +
        " declared_shift=" + formatReport(compiled.totalShift);
    emit(s.out, serializeHamiltonian(compiled.hamiltonian, header), out);

    std::string reportPath = s.report;
    if (reportPath.empty() && !s.out.empty()) {
        reportPath = s.out + ".report";
    }
    if (!reportPath.empty()) {
        emit(reportPath,
             "# " + seedLine("compile", "", s.seed) + "\n" +
                 compileReport(compiled, s.eps, s.ebar),
             out);
    }
    return kOk;
}

int cmdValidate(const Settings &s, std::ostream &out) {
    const auto model = requireModel(s.model, true);
    const auto h = parseHamiltonian(readText(s.files.at(0)));
    const auto result = validateInteractionSet(h, model);
    if (result.ok()) {
        out << "valid: " << modelName(model) << ' ' << h.size() << " terms on "
            << h.numQubits() << " qubits\n";
        return kOk;
    }
    for (const auto &v : result.violations) {
        out << "violation: " << formatReport(v.coefficient()) << ' ' << v.word()
            << " (pattern " << v.pattern() << ") not in " << modelName(model)
            << '\n';
    }
    return kValidationFailure;
}

int cmdHistory(const Settings &s, std::ostream &out) {
    const auto p = loadProblem(s.files.at(0), s.input);
    const auto h = s.initial ? history::buildInitial(p)
                             : history::buildTotal(p, s.includeClockInit);
    std::string header = seedLine(
        "history",
        std::string(s.initial ? "initial" : "final") +
            (s.includeClockInit && !s.initial ? " include_clockinit" : ""),
        s.seed);
    header += "\n" + history::describeProblem(p);
    emit(s.out, serializeHamiltonian(h, header), out);
    return kOk;
}

struct HistoryCheck {
    double residual = 0.0;
    double overlap = 0.0;
    double gap = 0.0;
    double ground = 0.0;
    bool pass = false;
};

HistoryCheck checkHistory(const history::Problem &p, const Settings &s) {
    const int total = p.layout().total();
    if (total > denseQubitLimit()) {
        throw SizeLimitError(std::to_string(total) +
                             " qubits exceed the dense limit of " +
                             std::to_string(denseQubitLimit()));
    }
    const Eigen::MatrixXd h =
        realizeRealMatrix(history::buildTotal(p, s.includeClockInit));
    const Eigen::VectorXd psi = history::buildHistoryState(p);
    spectral::EigenOptions opts;
    opts.seed = s.seed;
    const auto report = spectral::eigensolve(h, opts);
    HistoryCheck c;
    c.residual = (h * psi).norm();
    c.overlap = spectral::groundOverlap(h, psi);
    c.gap = report.gap;
    c.ground = report.ground();
    c.pass = c.residual <= s.tolResidual && c.overlap >= 1.0 - s.tolOverlap;
    return c;
}

int cmdVerifyHistory(const Settings &s, std::ostream &out) {
    std::ostringstream text;
    text << "# " << seedLine("verify-history", "", s.seed) << '\n';
    text << "include_clockinit: " << (s.includeClockInit ? "true" : "false")
         << '\n';
    text << "tol_residual: " << formatReport(s.tolResidual) << '\n';
    text << "tol_overlap: " << formatReport(s.tolOverlap) << '\n';
    bool allPass = true;
    if (s.random > 0) {
        std::mt19937_64 rng(s.seed);
        std::uniform_int_distribution<int> qubits(1, 3);
        std::uniform_int_distribution<int> depth(1, 4);
        std::uniform_int_distribution<int> bit(0, 1);
        int passed = 0;
        for (int idx = 1; idx <= s.random; ++idx) {
            const int n = qubits(rng);
            const int t = depth(rng);
            Circuit c = randomCircuit(n, t, rng);
            std::vector<std::uint8_t> bits;
            for (int q = 0; q < n; ++q) {
                bits.push_back(static_cast<std::uint8_t>(bit(rng)));
            }
            const history::Problem p(std::move(c), Bitstring(std::move(bits)));
            const auto r = checkHistory(p, s);
            passed += r.pass ? 1 : 0;
            allPass = allPass && r.pass;
            text << "case " << idx << ": n=" << n << " T=" << t
                 << " x=" << p.input.str()
                 << " residual=" << formatReport(r.residual)
                 << " overlap=" << formatReport(r.overlap)
                 << " gap=" << formatReport(r.gap) << ' '
                 << (r.pass ? "PASS" : "FAIL") << '\n';
        }
        text << "passed: " << passed << '/' << s.random << '\n';
    } else {
        if (s.files.empty()) {
            throw gadgetc::ParseError("verify-history needs a circuit file or --random N");
        }
        const auto p = loadProblem(s.files.at(0), s.input);
        const auto r = checkHistory(p, s);
        allPass = r.pass;
        text << "circuit: n=" << p.layout().logical << " T=" << p.layout().clock
             << " x=" << p.input.str() << '\n';
        text << "residual: " << formatReport(r.residual) << '\n';
        text << "overlap: " << formatReport(r.overlap) << '\n';
        text << "gap: " << formatReport(r.gap) << '\n';
        text << "ground_energy: " << formatReport(r.ground) << '\n';
    }
    text << "verdict: " << (allPass ? "PASS" : "FAIL") << '\n';
    emit(s.out, text.str(), out);
    return allPass ? kOk : kThresholdFailed;
}

int cmdSweepEpsilon(const Settings &s, std::ostream &out) {
    const GadgetKind kind = parseGadgetKind(s.kind);
    const auto eps = parseList(s.epsList);
    for (std::size_t t = 0; t < eps.size(); ++t) {
        if (!(eps[t] > 0.0 && eps[t] < 1.0)) {
            throw gadgetc::ParseError("epsilon values must lie in (0, 1)");
        }
        if (t > 0 && !(eps[t] < eps[t - 1])) {
            throw gadgetc::ParseError("epsilon values must be descending");
        }
    }
    std::ostringstream csv;
    csv << "# "
        << seedLine("sweep-epsilon",
                    "kind=" + std::string(gadgetKindName(kind)) +
                        " coefficient=" + formatReport(s.coefficient) +
                        " ebar=" + formatReport(s.ebar),
                    s.seed)
        << '\n';
    csv << "epsilon,delta,lambda_target,lambda_gadget,abs_error,overlap\n";
    std::vector<double> errors;
    bool withinFactor = true;
    for (double e : eps) {
        const auto row = gadgetErrorRow(kind, s.coefficient, e, s.ebar);
        errors.push_back(row.absError);
        if (s.tolFactor > 0.0 && row.absError > s.tolFactor * e) {
            withinFactor = false;
        }
        csv << formatReport(row.epsilon) << ',' << formatReport(row.delta) << ','
            << formatReport(row.lambdaTarget) << ','
            << formatReport(row.lambdaGadget) << ','
            << formatReport(row.absError) << ',' << formatReport(row.overlap)
            << '\n';
    }
    const bool monotone = nonIncreasing(errors);
    csv << "# non_increasing=" << (monotone ? "true" : "false") << '\n';
    if (s.tolFactor > 0.0) {
        csv << "# within_" << formatReport(s.tolFactor)
            << "_eps=" << (withinFactor ? "true" : "false") << '\n';
    }
    emit(s.out, csv.str(), out);
    return monotone && withinFactor ? kOk : kThresholdFailed;
}

int cmdGapSweep(const Settings &s, std::ostream &out) {
    if (s.grid < 2) {
        throw gadgetc::ParseError("--grid needs at least two points");
    }
    const auto hi = parseHamiltonian(readText(s.files.at(0)));
    const auto hf = parseHamiltonian(readText(s.files.at(1)));
    spectral::EigenOptions opts;
    opts.seed = s.seed;
    const auto sweep =
        spectral::gapSweep(hi, hf, spectral::uniformGrid(s.grid), opts);
    std::ostringstream csv;
    csv << "# "
        << seedLine("gap-sweep", "grid=" + std::to_string(s.grid), s.seed)
        << '\n';
    csv << "s,gap\n";
    for (const auto &pt : sweep.points) {
        csv << formatReport(pt.s) << ',' << formatReport(pt.gap) << '\n';
    }
    csv << "# min s=" << formatReport(sweep.minimum().s)
        << " gap=" << formatReport(sweep.minimum().gap) << '\n';
    emit(s.out, csv.str(), out);
    return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    Settings s;
    CLI::App app{"Compile, verify and sweep history-state and gadget Hamiltonians",
                 "gadgetc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "gadgetc 1.0.0");
    std::function<int()> action;

    auto positive = CLI::PositiveNumber;
    auto *compile = app.add_subcommand(
        "compile", "Rewrite a Hamiltonian or circuit into the zzxx or zx set");
    compile->add_option("file", s.files, "Hamiltonian or circuit file")
        ->required()
        ->expected(1);
    compile->add_option("--model", s.model, "zzxx or zx")->capture_default_str();
    compile->add_option("--eps", s.eps, "Target error")->capture_default_str();
    compile->add_option("--ebar", s.ebar, "Energy scale")
        ->check(positive)
        ->capture_default_str();
    compile->add_option("--input", s.input, "Circuit input bits");
    compile->add_flag("--include-clockinit", s.includeClockInit);
    compile->add_option("--out", s.out, "Output Hamiltonian file");
    compile->add_option("--report", s.report, "Gadget report file");
    compile->add_option("--seed", s.seed)->capture_default_str();
    compile->callback([&] { action = [&] { return cmdCompile(s, out); }; });

    auto *validate =
        app.add_subcommand("validate", "Check a Hamiltonian against a model");
    validate->add_option("file", s.files)->required()->expected(1);
    validate->add_option("--model", s.model, "zzxx, zx or real")
        ->capture_default_str();
    validate->callback([&] { action = [&] { return cmdValidate(s, out); }; });

    auto *hist =
        app.add_subcommand("history", "Emit the history Hamiltonian of a circuit");
    hist->add_option("file", s.files)->required()->expected(1);
    hist->add_option("--input", s.input, "Input bits (default all zero)");
    hist->add_flag("--include-clockinit", s.includeClockInit);
    hist->add_flag("--initial", s.initial, "Emit H_in + H_clock + H_clockinit");
    hist->add_option("--out", s.out);
    hist->add_option("--seed", s.seed)->capture_default_str();
    hist->callback([&] { action = [&] { return cmdHistory(s, out); }; });

    auto *verify = app.add_subcommand(
        "verify-history", "Check annihilation, overlap and gap of a history state");
    verify->add_option("file", s.files)->expected(0, 1);
    verify->add_option("--input", s.input);
    verify->add_option("--random", s.random, "Check N seeded random circuits")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--include-clockinit", s.includeClockInit);
    verify->add_option("--tol-residual", s.tolResidual)
        ->check(positive)
        ->capture_default_str();
    verify->add_option("--tol-overlap", s.tolOverlap)
        ->check(positive)
        ->capture_default_str();
    verify->add_option("--seed", s.seed)->capture_default_str();
    verify->add_option("--out", s.out);
    verify->callback([&] { action = [&] { return cmdVerifyHistory(s, out); }; });

    auto *sweepEps = app.add_subcommand(
        "sweep-epsilon", "Gadget spectral error and fidelity versus epsilon");
    sweepEps->add_option("--kind", s.kind, "zx_from_zzxx, zz_from_zx or xx_from_zx")
        ->capture_default_str();
    sweepEps->add_option("--coef", s.coefficient, "Target coefficient")
        ->capture_default_str();
    sweepEps->add_option("--eps", s.epsList, "Comma-separated, descending")
        ->required();
    sweepEps->add_option("--ebar", s.ebar)->check(positive)->capture_default_str();
    sweepEps->add_option("--tol-factor", s.tolFactor,
                         "Fail when an error exceeds factor * eps")
        ->check(positive);
    sweepEps->add_option("--seed", s.seed)->capture_default_str();
    sweepEps->add_option("--out", s.out);
    sweepEps->callback([&] { action = [&] { return cmdSweepEpsilon(s, out); }; });

    auto *gap = app.add_subcommand(
        "gap-sweep", "Spectral gap along (1 - s) H_i + s H_f");
    gap->add_option("files", s.files, "H_i and H_f files")->required()->expected(2);
    gap->add_option("--grid", s.grid, "Number of grid points")
        ->capture_default_str();
    gap->add_option("--seed", s.seed)->capture_default_str();
    gap->add_option("--out", s.out);
    gap->callback([&] { action = [&] { return cmdGapSweep(s, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion &) {
        out << app.version() << '\n';
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kParseFailure;
    }

    try {
        return action();
    } catch (const gadgetc::ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kParseFailure;
    } catch (const ValidationError &e) {
        err << "validation error: " << e.what() << '\n';
        return kValidationFailure;
    } catch (const SizeLimitError &e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const ConvergenceError &e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    }
}

} // namespace gadgetc::cli
