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
#include <cmath>
#include <numeric>

#include "vqsim/gibbs_qbm.hpp"
#include "vqsim/oracles.hpp"

namespace vqs {

double GibbsTask::tau() const {
    require(std::isfinite(kT) && kT > 0.0, Status::InvalidArgument,
            "kT must be positive");
    return 1.0 / (2.0 * kT);
}

GibbsResult prepare_gibbs(const GibbsTask &task) {
    const int n = task.hamiltonian.n_qubits();
    require(n >= 1, Status::InvalidArgument,
            "Gibbs preparation needs at least one qubit");
    Ansatz a = task.ansatz ? *task.ansatz : gibbs_ansatz(n, task.depth);
    require(a.circuit.n_qubits() == 2 * n, Status::DimensionMismatch,
            "Gibbs ansatz must act on 2n qubits");

    VarQTEProblem p;
    p.hamiltonian = task.hamiltonian.extended(n);
    p.ansatz = a.circuit;
    p.input = StateVector::zero(2 * n);
    p.omega0 = a.omega0;
    p.T = task.tau();
    p.mode = TimeMode::Imaginary;
    p.rhs = task.rhs;
    p.solver = task.solver;
    p.track_oracle = false;
    p.track_error_bound = false;

    GibbsResult r;
    r.trace = evolve(p);
    r.omega = r.trace.checkpoints.back().omega;
    const StateVector psi = p.ansatz.simulate(r.omega, p.input);
    std::vector<int> keep(static_cast<std::size_t>(n));
    std::iota(keep.begin(), keep.end(), 0);
    r.state = partial_trace(psi, keep);
    r.fidelity = fidelity(r.state, exact_gibbs(task.hamiltonian, task.kT));
    return r;
}

DiagonalGibbsResult prepare_gibbs_diagonal(const GibbsTask &task) {
    const int n = task.hamiltonian.n_qubits();
    require(n >= 1, Status::InvalidArgument,
            "Gibbs preparation needs at least one qubit");
    require(task.hamiltonian.is_diagonal(), Status::InvalidArgument,
            "diagonal Gibbs preparation needs a Z/I Hamiltonian");
    Ansatz a;
    if (task.ansatz) {
        a = *task.ansatz;
    } else {
        a.circuit = efficient_su2(n, task.depth);
        a.omega0 = efficient_su2_plus_params(n, task.depth);
    }
    require(a.circuit.n_qubits() == n, Status::DimensionMismatch,
            "diagonal Gibbs ansatz must act on n qubits");

    VarQTEProblem p;
    p.hamiltonian = task.hamiltonian;
    p.ansatz = a.circuit;
    p.input = StateVector::zero(n);
    p.omega0 = a.omega0;
    p.T = task.tau();
    p.mode = TimeMode::Imaginary;
    p.rhs = task.rhs;
    p.solver = task.solver;
    p.track_oracle = false;
    p.track_error_bound = false;

    DiagonalGibbsResult r;
    r.trace = evolve(p);
    r.omega = r.trace.checkpoints.back().omega;
    r.distribution =
        measure_distribution(p.ansatz.simulate(r.omega, p.input));
    const RVec target =
        exact_gibbs(task.hamiltonian, task.kT).matrix.diagonal().real();
    r.l1 = (r.distribution.probabilities - target).lpNorm<1>();
    return r;
}

} // namespace vqs
