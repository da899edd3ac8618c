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

#include "vqsim/circuit.hpp"
#include "vqsim/common.hpp"
#include "vqsim/qgan.hpp"

namespace vqs {

/// Qubit cap for phase estimation: evaluation plus A-operator qubits.
inline constexpr int kMaxQaeQubits = 16;

/// European call on a spot-price grid {0, ..., 2^n - 1} with integer strike.
struct PricingProblem {
    RVec distribution;
    int strike = 0;
    int eval_qubits = 8;

    [[nodiscard]] int n_qubits() const;
    void validate() const;
};

struct PayoffResult {
    std::string method;
    double amplitude = 0.0;
    double payoff = 0.0;
    /// pi/2^m + pi^2/4^m on the amplitude; zero for other methods.
    double grid_error_bound = 0.0;
    /// Payoff interval: 95% normal CI for Monte Carlo, the grid bound for QAE.
    double ci_low = 0.0;
    double ci_high = 0.0;
    /// QAE: selected evaluation outcome y <= 2^(m-1) and its total
    /// probability (y and 2^m - y combined).
    int outcome = -1;
    double outcome_probability = 0.0;
    std::uint64_t shots = 0;
};

/// 2^n - K - 1, the payoff of the top grid point.
[[nodiscard]] double payoff_scale(int n_qubits, int strike);
/// f(i) = max(i - K, 0) / (2^n - K - 1), or 0 when the scale is 0.
[[nodiscard]] double payoff_fraction(int i, int n_qubits, int strike);
/// Sum_i p_i max(i - K, 0).
[[nodiscard]] double analytic_payoff(const PricingProblem &problem);

/// Comparator and payoff rotation on n + 2 qubits: qubit n flips iff i > K,
/// qubit n + 1 gets RY(2 asin sqrt f(i)) controlled on it.
[[nodiscard]] ParamCircuit payoff_circuit(int n_qubits, int strike);
/// A = payoff_circuit . (loader on qubits 0..n-1); loader must be slot-free.
[[nodiscard]] ParamCircuit build_a_operator(const ParamCircuit &loader,
                                            int strike);
/// A with the exact amplitude loader of the problem's distribution.
[[nodiscard]] ParamCircuit build_a_operator(const PricingProblem &problem);

/// Dense unitary of a slot-free circuit.
[[nodiscard]] CMat circuit_unitary(const ParamCircuit &circuit);
/// Q = -A S_0 A^dag S_good, with S_good flipping the sign of states whose
/// last qubit is |1>.
[[nodiscard]] CMat grover_operator(const ParamCircuit &a_operator);

/// Measurement distribution over the m evaluation qubits after controlled
/// Q^(2^j) on evaluation qubit j and the inverse QFT, applied to A|0>.
[[nodiscard]] RVec phase_estimation_distribution(const ParamCircuit &a_operator,
                                                 int eval_qubits);

/// Canonical QAE on an A-operator with n price qubits.
[[nodiscard]] PayoffResult qae_from_a_operator(const ParamCircuit &a_operator,
                                               int n_qubits, int strike,
                                               int eval_qubits);
[[nodiscard]] PayoffResult qae_estimate(const PricingProblem &problem);
/// Exact P[payoff qubit = 1] of A|0>, scaled to the payoff.
[[nodiscard]] PayoffResult exact_a_operator_payoff(const PricingProblem &problem);

/// Mean of max(i - K, 0) over seeded samples with a 95% normal CI.
[[nodiscard]] PayoffResult mc_estimate(const PricingProblem &problem,
                                       std::uint64_t shots,
                                       std::uint64_t seed);

/// QAE with the generator's loader in place of the exact amplitude loader.
[[nodiscard]] PayoffResult price_with_trained_generator(
    const Generator &generator, int strike, int eval_qubits);

/// Truncated log-normal(1, 1) on 2^n grid points.
[[nodiscard]] PricingProblem lognormal_pricing_problem(int n_qubits = 3,
                                                       int strike = 2,
                                                       int eval_qubits = 8);

/// Trained 3-qubit depth-1 log-normal generator parameters, applied to
/// ry_cz_generator(3, 1) on |000>.
[[nodiscard]] RVec published_lognormal_omega();
[[nodiscard]] Generator published_lognormal_generator();

} // namespace vqs
