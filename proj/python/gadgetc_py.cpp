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
#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "gadgetc/circuits.hpp"
#include "gadgetc/errors.hpp"
#include "gadgetc/gadgets.hpp"
#include "gadgetc/history.hpp"
#include "gadgetc/pauli.hpp"
#include "gadgetc/spectral.hpp"

namespace py = pybind11;
using namespace gadgetc;

namespace {

InteractionModel modelArg(const std::string &name) {
    const auto m = parseModelName(name);
    if (!m) {
        throw ParseError("unknown model '" + name + "'");
    }
    return *m;
}

py::list termList(const OperatorSum &h) {
    py::list out;
    for (const auto &t : h.terms()) {
        out.append(py::make_tuple(t.coefficient(), t.word()));
    }
    return out;
}

OperatorSum fromTerms(int n, const std::vector<std::pair<double, std::string>> &terms) {
    OperatorSum h(n);
    for (const auto &[c, w] : terms) {
        h.add(c, w);
    }
    return h;
}

history::Problem problemFrom(const std::string &circuitText,
                             const std::string &input) {
    Circuit c = parseCircuit(circuitText);
    Bitstring x = input.empty() ? Bitstring::zeros(c.numQubits())
                                : Bitstring::parse(input);
    return history::Problem(std::move(c), std::move(x));
}

} // namespace

PYBIND11_MODULE(_gadgetc, m) {
    m.doc() = "History-state and perturbative-gadget Hamiltonian toolkit";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError",
                                            PyExc_ValueError);
    py::register_exception<SizeLimitError>(m, "SizeLimitError",
                                           PyExc_MemoryError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                             PyExc_RuntimeError);

    py::class_<OperatorSum>(m, "Hamiltonian")
        .def(py::init(&fromTerms), py::arg("num_qubits"),
             py::arg("terms") = std::vector<std::pair<double, std::string>>{})
        .def_static("parse", &parseHamiltonian, py::arg("text"))
        .def_property_readonly("num_qubits", &OperatorSum::numQubits)
        .def_property_readonly("terms", &termList)
        .def("canonical", [](const OperatorSum &h) { return canonicalize(h); })
        .def("coefficient", &OperatorSum::coefficientOf, py::arg("word"))
        .def("matrix", &realizeRealMatrix)
        .def("to_text", &serializeHamiltonian, py::arg("header") = "")
        .def("violations",
             [](const OperatorSum &h, const std::string &model) {
                 std::vector<std::string> words;
                 for (const auto &v :
                      validateInteractionSet(h, modelArg(model)).violations) {
                     words.push_back(v.word());
                 }
                 return words;
             },
             py::arg("model"))
        .def("__len__", &OperatorSum::size)
        .def("__repr__", [](const OperatorSum &h) {
            return "<Hamiltonian " + std::to_string(h.numQubits()) +
                   " qubits, " + std::to_string(h.size()) + " terms>";
        });

    py::class_<Couplings>(m, "Couplings")
        .def_readonly("A", &Couplings::A)
        .def_readonly("B", &Couplings::B)
        .def_readonly("C", &Couplings::C)
        .def_readonly("D", &Couplings::D);

    py::class_<GadgetInstance>(m, "Gadget")
        .def_property_readonly("kind",
                               [](const GadgetInstance &g) {
                                   return std::string(gadgetKindName(g.kind));
                               })
        .def_readonly("i", &GadgetInstance::i)
        .def_readonly("j", &GadgetInstance::j)
        .def_readonly("k", &GadgetInstance::k)
        .def_readonly("couplings", &GadgetInstance::couplings)
        .def_readonly("sign", &GadgetInstance::sign)
        .def_readonly("identity_offset", &GadgetInstance::identityOffset)
        .def_readonly("declared_shift", &GadgetInstance::declaredShift)
        .def_property_readonly("delta",
                               [](const GadgetInstance &g) { return g.params.delta; })
        .def_readonly("penalty", &GadgetInstance::penalty)
        .def("perturbation", &GadgetInstance::perturbation)
        .def("hamiltonian", &GadgetInstance::hamiltonian)
        .def("target", &GadgetInstance::targetTerm);

    m.def(
        "build_gadget",
        [](const std::string &kind, double coefficient, double eps, double ebar) {
            const auto k = parseGadgetKind(kind);
            return buildGadget(k, coefficient, 1, 2, 3,
                               GadgetParams::forEpsilon(k, eps, ebar),
                               OperatorSum(3));
        },
        py::arg("kind"), py::arg("coefficient"), py::arg("eps"),
        py::arg("ebar") = 1.0,
        "Three-qubit gadget (i=1, j=2, ancilla k=3) at delta = ebar eps^-r.");

    m.def(
        "gadget_error",
        [](const std::string &kind, double coefficient, double eps, double ebar) {
            const auto r = gadgetErrorRow(parseGadgetKind(kind), coefficient,
                                          eps, ebar);
            py::dict d;
            d["epsilon"] = r.epsilon;
            d["delta"] = r.delta;
            d["lambda_target"] = r.lambdaTarget;
            d["lambda_gadget"] = r.lambdaGadget;
            d["abs_error"] = r.absError;
            d["overlap"] = r.overlap;
            return d;
        },
        py::arg("kind"), py::arg("coefficient"), py::arg("eps"),
        py::arg("ebar") = 1.0);

    m.def(
        "self_energy_residual",
        [](const std::string &kind, double coefficient, double eps, double z) {
            const auto k = parseGadgetKind(kind);
            const auto g = buildGadget(k, coefficient, 1, 2, 3,
                                       GadgetParams::forEpsilon(k, eps),
                                       OperatorSum(3));
            const auto r = spectral::perturbativeSelfEnergy(
                g.penalty, g.perturbation(), g.lowSubspace(), z);
            return py::make_tuple(r.residual, r.exact, r.series);
        },
        py::arg("kind"), py::arg("coefficient"), py::arg("eps"),
        py::arg("z") = 0.0);

    py::class_<CompiledHamiltonian>(m, "Compiled")
        .def_readonly("hamiltonian", &CompiledHamiltonian::hamiltonian)
        .def_readonly("system_qubits", &CompiledHamiltonian::systemQubits)
        .def_readonly("total_shift", &CompiledHamiltonian::totalShift)
        .def_readonly("gadgets", &CompiledHamiltonian::gadgets)
        .def_property_readonly("ancillas", [](const CompiledHamiltonian &c) {
            py::list out;
            for (const auto &[term, k] : c.ancillas) {
                out.append(py::make_tuple(term.word(), k));
            }
            return out;
        });

    m.def(
        "compile_hamiltonian",
        [](const OperatorSum &target, const std::string &model, double eps,
           double ebar) {
            return compileHamiltonian(target, modelArg(model), eps, ebar);
        },
        py::arg("target"), py::arg("model"), py::arg("eps"),
        py::arg("ebar") = 1.0);

    m.def(
        "eigensolve",
        [](const OperatorSum &h, int count) {
            spectral::EigenOptions opts;
            opts.count = count;
            const auto r = spectral::eigensolve(h, opts);
            return py::make_tuple(r.eigenvalues, r.vectors, r.gap);
        },
        py::arg("hamiltonian"), py::arg("count") = 2,
        "Lowest eigenvalues, eigenvectors (columns) and gap.");

    m.def(
        "gap_sweep",
        [](const OperatorSum &hi, const OperatorSum &hf, int points) {
            std::vector<std::pair<double, double>> rows;
            for (const auto &p :
                 spectral::gapSweep(hi, hf, spectral::uniformGrid(points)).points) {
                rows.emplace_back(p.s, p.gap);
            }
            return rows;
        },
        py::arg("initial"), py::arg("final"), py::arg("points") = 101);

    m.def(
        "history_hamiltonian",
        [](const std::string &circuit, const std::string &input,
           bool includeClockInit) {
            return history::buildTotal(problemFrom(circuit, input),
                                       includeClockInit);
        },
        py::arg("circuit"), py::arg("input") = "",
        py::arg("include_clockinit") = false);

    m.def(
        "history_state",
        [](const std::string &circuit, const std::string &input) {
            return history::buildHistoryState(problemFrom(circuit, input));
        },
        py::arg("circuit"), py::arg("input") = "");

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a gadgetc command; returns (code, stdout, stderr).");
}
