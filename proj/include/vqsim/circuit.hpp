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

#include <cstdint>
#include <string>
#include <vector>

#include "vqsim/common.hpp"
#include "vqsim/gate.hpp"
#include "vqsim/statevector.hpp"

namespace vqs {

/// Ordered gate list over symbolic parameter slots 0..n_params-1.
/// A slot may drive several gates; the derivative is then the sum.
class ParamCircuit {
  public:
    ParamCircuit() = default;
    explicit ParamCircuit(int n_qubits, int n_params = 0);

    [[nodiscard]] int n_qubits() const { return n_; }
    [[nodiscard]] int n_params() const { return k_; }
    [[nodiscard]] const std::vector<GateDescriptor> &gates() const {
        return gates_;
    }
    [[nodiscard]] std::size_t size() const { return gates_.size(); }

    /// Appends a gate. A slot equal to n_params opens a new parameter.
    void add(GateDescriptor g);
    /// Adds a rotation on a fresh slot and returns the slot.
    int add_rotation(GateKind kind, std::vector<int> qubits);
    void add_fixed(GateKind kind, std::vector<int> qubits,
                   std::vector<double> angles = {});
    /// Appends `other` with its slots shifted by n_params().
    void append(const ParamCircuit &other);

    /// Replaces every slot by its value; the result has no parameters.
    [[nodiscard]] ParamCircuit bound(const RVec &omega) const;
    /// Adjoint circuit; requires a circuit without slots.
    [[nodiscard]] ParamCircuit inverse() const;
    /// Same gates on a register of `n_qubits` with qubit q mapped to map[q].
    [[nodiscard]] ParamCircuit remapped(const std::vector<int> &map,
                                        int n_qubits) const;

    /// Gate indices driven by each slot.
    [[nodiscard]] std::vector<std::vector<int>> slot_gates() const;

    void run(CVec &amps, const RVec &omega) const;
    [[nodiscard]] StateVector simulate(const RVec &omega,
                                       const StateVector &input) const;
    [[nodiscard]] StateVector simulate(const RVec &omega) const;

    /// Line format: "QUBITS n", "PARAMS k", then one gate per line as
    /// "NAME q0,q1 [$slot | a0,a1,...]"; "-" denotes an empty qubit list.
    [[nodiscard]] std::string to_text() const;
    static ParamCircuit parse(const std::string &text);

  private:
    void check_omega(const RVec &omega) const;
    int n_ = 0;
    int k_ = 0;
    std::vector<GateDescriptor> gates_;
};

/// RY and RZ layers on every qubit with CX chains between repetitions and a
/// closing rotation layer. Slot order: per layer, all RY then all RZ.
[[nodiscard]] ParamCircuit efficient_su2(int n_qubits, int reps);
/// Parameters of efficient_su2 that prepare |+>^n from |0>^n.
[[nodiscard]] RVec efficient_su2_plus_params(int n_qubits, int reps);

/// depth+1 RY layers with CZ rings i -> (i+1) mod n between them.
/// Slot of layer l, qubit q is l*n + q.
[[nodiscard]] ParamCircuit ry_cz_generator(int n_qubits, int depth);

struct Ansatz {
    ParamCircuit circuit;
    RVec omega0;
};

/// 2n-qubit Gibbs ansatz; register a = qubits 0..n-1, b = n..2n-1.
/// RY on all qubits; for depth >= 1 a CX chain and RY layer on a; CX
/// pairing a_i -> b_i; then depth-1 layers of RY, RZ and mirrored CX chains
/// on both registers. omega0 prepares |phi+>^n with pairs (a_i, b_i).
[[nodiscard]] Ansatz gibbs_ansatz(int n, int depth = 2);

enum class InitStrategy { Uniform, Normal, Random };

/// Uniform[-delta, delta] draws.
[[nodiscard]] RVec random_params(int k, double delta, std::uint64_t seed);

/// Amplitudes sqrt(p_j).
[[nodiscard]] StateVector amplitude_encode(const RVec &probabilities);
/// Exact loader from |0>^n built from a cascade of uniformly controlled RY.
[[nodiscard]] ParamCircuit state_loader(const RVec &probabilities);
void check_distribution(const RVec &p, double tol = 1e-9);

/// Log-normal(mu, sigma) mass of each integer 0..n_points-1 after rounding
/// to the nearest integer, renormalized over the grid.
[[nodiscard]] RVec discretized_lognormal(double mu, double sigma,
                                         int n_points);
/// Normal(mean, std) mass per integer after rounding, renormalized.
[[nodiscard]] RVec discretized_normal(double mean, double std, int n_points);

struct FitOptions {
    int max_iterations = 2000;
    double learning_rate = 0.5;
    double tolerance = 1e-10;
    double residual_threshold = 1e-4;
};

struct FitResult {
    RVec omega;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Minimizes sum_i (p_i(omega) - target_i)^2 by gradient descent with
/// backtracking on parameter-shift probability gradients.
[[nodiscard]] FitResult fit_distribution(const RVec &target,
                                         const ParamCircuit &circuit,
                                         const StateVector &input,
                                         const RVec &omega0,
                                         const FitOptions &opts = {});
[[nodiscard]] FitResult fit_distribution(const RVec &target,
                                         const ParamCircuit &circuit,
                                         const StateVector &input,
                                         std::uint64_t seed,
                                         const FitOptions &opts = {});

} // namespace vqs
