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

#include "vqsim/circuit.hpp"
#include "vqsim/pauli.hpp"

namespace vqs {

enum class TimeMode { Imaginary, Real };
enum class OdeRhs { Standard, Argmin };
enum class SolverKind { ForwardEuler, RK54 };

struct SolverConfig {
    SolverKind kind = SolverKind::RK54;
    int steps = 100;
    double rtol = 1e-6;
    double atol = 1e-8;
    double min_step = 1e-12;
    int max_steps = 200000;
};

struct VarQTEProblem {
    PauliSum hamiltonian;
    ParamCircuit ansatz;
    StateVector input;
    RVec omega0;
    double T = 1.0;
    TimeMode mode = TimeMode::Imaginary;
    OdeRhs rhs = OdeRhs::Standard;
    SolverConfig solver;
    bool track_error_bound = true;
    /// Compare each checkpoint with the exact evolution of psi(omega0).
    bool track_oracle = true;
    /// Finite step of the error-bound rate, decoupled from the solver.
    double delta_t = 1e-4;
    double rcond = 1e-8;
    int argmin_max_iterations = 200;
};

struct Checkpoint {
    double t = 0.0;
    RVec omega;
    double grad_err = 0.0;
    double eps = 0.0;
    double energy = 0.0;
    double variance = 0.0;
    double zeta = 0.0;
    /// NaN when oracle tracking is off.
    double fidelity_oracle = 0.0;
    double bures_oracle = 0.0;
    bool clipped = false;
    /// d omega / d theta when the chain rule is co-integrated.
    RMat jacobian;
};

struct EvolutionTrace {
    std::vector<Checkpoint> checkpoints;
    bool argmin_cap_hit = false;
    bool eps_clipped = false;
    long rhs_evaluations = 0;
    /// Header t,omega_0..omega_{k-1},grad_err,eps,energy,variance,
    /// fidelity_oracle,bures_oracle.
    [[nodiscard]] std::string to_csv() const;
};

/// Metric and right-hand side of the McLachlan system F omega_dot = rhs.
struct SLE {
    RMat metric;
    RVec rhs;
    double energy = 0.0;
    double variance = 0.0;
    /// <H^2>.
    double h2 = 0.0;
};

[[nodiscard]] SLE mclachlan_sle(const VarQTEProblem &p, const RVec &omega);
/// ||e|| from the metric form; an explicit residual is used as oracle.
[[nodiscard]] double gradient_error_norm(const VarQTEProblem &p,
                                         const RVec &omega,
                                         const RVec &omega_dot);
/// ||e|| from the explicitly constructed residual vector.
[[nodiscard]] double gradient_error_norm_direct(const VarQTEProblem &p,
                                                const RVec &omega,
                                                const RVec &omega_dot);
[[nodiscard]] RVec rhs_standard(const VarQTEProblem &p, const RVec &omega);

struct ArgminResult {
    RVec omega_dot;
    double error = 0.0;
    double seed_error = 0.0;
    int iterations = 0;
    bool cap_hit = false;
};
[[nodiscard]] ArgminResult rhs_argmin(const VarQTEProblem &p,
                                      const RVec &omega);

/// Inputs of the imaginary-time bound at one point.
struct BoundInputs {
    double energy = 0.0;
    double variance = 0.0;
    double h2 = 0.0;
    double norm_h = 0.0;
};

/// Energy-difference bound for Bures distance eps.
[[nodiscard]] double zeta_bound(const BoundInputs &b, double eps);
/// Overlap bound chi together with 1 - chi computed without cancellation.
struct ChiResult {
    double chi = 1.0;
    double one_minus_chi = 0.0;
    double alpha = 0.0;
};
[[nodiscard]] ChiResult chi_bound(const BoundInputs &b, double eps,
                                  double delta);
/// d eps / dt for imaginary time, evaluated at the finite step delta.
[[nodiscard]] double eps_rate_imaginary(double grad_err, const BoundInputs &b,
                                        double eps, double delta);

[[nodiscard]] double error_bound_rate_imaginary(const VarQTEProblem &p,
                                                const RVec &omega,
                                                const RVec &omega_dot,
                                                double eps,
                                                double delta = 1e-4);
[[nodiscard]] double error_bound_rate_real(const VarQTEProblem &p,
                                           const RVec &omega,
                                           const RVec &omega_dot);

[[nodiscard]] EvolutionTrace evolve(const VarQTEProblem &p);

struct ChainRuleResult {
    RVec omega_T;
    /// d omega_T / d theta, k x n_params.
    RMat jacobian;
    EvolutionTrace trace;
};

/// Co-integrates d omega / d theta for H(theta) = hp.bind(theta, x).
/// Supports imaginary time with the standard right-hand side.
[[nodiscard]] ChainRuleResult chain_rule_evolve(VarQTEProblem p,
                                                const ParamHamiltonian &hp,
                                                const RVec &theta,
                                                const RVec &x = {});

/// Time after which imaginary-time evolution from an initial state with
/// ground overlap c/2^n reaches ground probability p0.
[[nodiscard]] double ground_state_time_bound(int n, double gap, double c,
                                             double p0);

} // namespace vqs
