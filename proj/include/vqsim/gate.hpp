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

#include <string>
#include <vector>

#include "vqsim/common.hpp"

namespace vqs {

enum class GateKind { RX, RY, RZ, X, H, CX, CZ, CRY, PHASE, UC_RY };

/// Gate on explicit qubits. Controls come first, the target is last.
/// A rotation either reads parameter `slot` or carries a fixed angle.
/// UC_RY carries one fixed angle per control configuration, indexed by the
/// little-endian value of the control bits.
/// PHASE with no qubits is a global phase e^{i phi}; with one qubit it is
/// diag(1, e^{i phi}).
struct GateDescriptor {
    GateKind kind = GateKind::X;
    std::vector<int> qubits;
    int slot = -1;
    std::vector<double> angles;

    [[nodiscard]] bool parameterized() const { return slot >= 0; }
    [[nodiscard]] bool is_rotation() const;
    [[nodiscard]] double angle(const RVec &omega) const;
};

[[nodiscard]] std::string gate_name(GateKind k);
[[nodiscard]] GateKind gate_kind_from_name(const std::string &name);
/// Number of qubits the gate expects, -1 when variable (UC_RY, PHASE).
[[nodiscard]] int gate_arity(GateKind k);

void validate_gate(const GateDescriptor &g, int n_qubits);

/// In-place kernels on raw amplitude vectors (no normalization checks).
void apply_gate_raw(CVec &amps, int n_qubits, const GateDescriptor &g,
                    double angle);
/// Applies dG/dangle.
void apply_gate_derivative_raw(CVec &amps, int n_qubits,
                               const GateDescriptor &g, double angle);
/// Applies d^2G/dangle^2.
void apply_gate_second_derivative_raw(CVec &amps, int n_qubits,
                                      const GateDescriptor &g, double angle);

} // namespace vqs
