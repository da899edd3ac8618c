// Copyright 2026 The vqsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include "vqsim/pauli.hpp"
#include "vqsim/statevector.hpp"

namespace vqs {

/// exp(-H/kT) / Tr exp(-H/kT).
[[nodiscard]] DensityMatrix exact_gibbs(const PauliSum &h, double kT);

/// exp(-H t)|psi0> renormalized.
[[nodiscard]] StateVector exact_ite(const PauliSum &h, const StateVector &psi0,
                                    double t);

/// exp(-i H t)|psi0>.
[[nodiscard]] StateVector exact_rte(const PauliSum &h, const StateVector &psi0,
                                    double t);

/// Smallest eigenvalue of H.
[[nodiscard]] double ground_energy(const PauliSum &h);

} // namespace vqs
