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

#include <cmath>
#include <vector>

#include "vqsim/circuit.hpp"
#include "vqsim/pauli.hpp"

namespace vqs {

enum class GradMethod { ParamShift, LinearCombination, DirectDifferentiation };

struct GradientRequest {
    ParamCircuit circuit;
    StateVector input;
    PauliSum observable;
    GradMethod method = GradMethod::DirectDifferentiation;
    /// Shift for ParamShift; must not be a multiple of pi.
    double shift = M_PI / 2;
};

/// Fubini-Study metric F; the quantum Fisher information is 4 F.
struct MetricResult {
    RMat matrix;
    [[nodiscard]] RMat qfim() const { return 4.0 * matrix; }
};

/// d<O>/d omega_i.
[[nodiscard]] RVec grad_expectation(const GradientRequest &req,
                                    const RVec &omega);
/// d^2 <O>/d omega_i d omega_j.
[[nodiscard]] RMat hessian_expectation(const GradientRequest &req,
                                       const RVec &omega);
[[nodiscard]] MetricResult
fubini_study(const ParamCircuit &circuit, const RVec &omega,
             const StateVector &input,
             GradMethod method = GradMethod::DirectDifferentiation,
             double shift = M_PI / 2);
/// Row i holds d p_b / d omega_i over all basis states b.
[[nodiscard]] RMat
grad_probabilities(const ParamCircuit &circuit, const RVec &omega,
                   const StateVector &input,
                   GradMethod method = GradMethod::ParamShift,
                   double shift = M_PI / 2);

/// Pseudo-inverse of a symmetric matrix; eigenvalues with magnitude at most
/// rcond times the largest are dropped.
[[nodiscard]] RMat pinv_symmetric(const RMat &m, double rcond = 1e-8);

/// omega - eta * pinv(F) * grad.
[[nodiscard]] RVec qng_step(const RVec &omega, const RVec &grad,
                            const MetricResult &metric, double eta,
                            double rcond = 1e-8);

/// Exact state and first derivatives |d_i psi>.
struct Tangent {
    CVec psi;
    std::vector<CVec> dpsi;
};
[[nodiscard]] Tangent state_tangent(const ParamCircuit &circuit,
                                    const RVec &omega,
                                    const StateVector &input);
/// Second derivatives; entry i*k+j holds |d_i d_j psi>.
[[nodiscard]] std::vector<CVec>
state_second_derivatives(const ParamCircuit &circuit, const RVec &omega,
                         const StateVector &input);

/// Circuit variants of the linear-combination gradient framework.
enum class LCMode { FirstImplicit, FirstExplicit, SecondExplicit, Metric };

/// One ancilla-augmented circuit and its measured observable. Ancillas are
/// the qubits above the original register and start in |0>.
struct LCTerm {
    ParamCircuit circuit;
    PauliSum observable;
    double weight = 1.0;
};

struct LCProduct {
    LCTerm a;
    LCTerm b;
    double weight = 1.0;
};

/// value = sum weight <O> + sum weight <O_a><O_b>.
struct LCCircuits {
    std::vector<LCTerm> linear;
    std::vector<LCProduct> products;
    [[nodiscard]] double evaluate(const RVec &omega,
                                  const StateVector &input) const;
};

/// Builds the circuits for parameter i (and j for the second-order and
/// metric modes). FirstImplicit folds the observable into the circuit.
[[nodiscard]] LCCircuits lc_gradient_circuit(const ParamCircuit &circuit,
                                             int i, int j, LCMode mode,
                                             const PauliSum &observable = {});

} // namespace vqs
