# Copyright 2026 The gadgetc Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""History-state Hamiltonians and perturbative gadgets."""

from ._gadgetc import (
    Compiled,
    ConvergenceError,
    Couplings,
    Gadget,
    Hamiltonian,
    ParseError,
    SizeLimitError,
    ValidationError,
    build_gadget,
    compile_hamiltonian,
    eigensolve,
    gadget_error,
    gap_sweep,
    history_hamiltonian,
    history_state,
    run_cli,
    self_energy_residual,
)

__version__ = "1.0.0"

__all__ = [
    "Compiled",
    "ConvergenceError",
    "Couplings",
    "Gadget",
    "Hamiltonian",
    "ParseError",
    "SizeLimitError",
    "ValidationError",
    "build_gadget",
    "compile_hamiltonian",
    "eigensolve",
    "gadget_error",
    "gap_sweep",
    "history_hamiltonian",
    "history_state",
    "run_cli",
    "self_energy_residual",
]
