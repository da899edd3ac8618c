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
#include "vqsim/oracles.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace vqs {

namespace {

Eigen::SelfAdjointEigenSolver<CMat> eigen_of(const PauliSum &h, int n) {
    require(h.empty() || h.n_qubits() == n, Status::DimensionMismatch,
            "Hamiltonian qubit count does not match state");
    if (h.empty()) {
        const Eigen::Index dim = Eigen::Index{1} << n;
        return Eigen::SelfAdjointEigenSolver<CMat>(CMat::Zero(dim, dim));
    }
    return Eigen::SelfAdjointEigenSolver<CMat>(h.to_matrix());
}

} // namespace

DensityMatrix exact_gibbs(const PauliSum &h, double kT) {
    require(kT > 0.0 && std::isfinite(kT), Status::InvalidArgument,
            "temperature must be positive");
    const int n = h.n_qubits();
    const auto es = eigen_of(h, n);
    const RVec &ev = es.eigenvalues();
    const double emin = ev.minCoeff();
    RVec w = (-(ev.array() - emin) / kT).exp();
    w /= w.sum();
    DensityMatrix rho{n, es.eigenvectors() * w.asDiagonal() *
                             es.eigenvectors().adjoint()};
    rho.matrix = 0.5 * (rho.matrix + rho.matrix.adjoint()).eval();
    return rho;
}

StateVector exact_ite(const PauliSum &h, const StateVector &psi0, double t) {
    require(t >= 0.0 && std::isfinite(t), Status::InvalidArgument,
            "evolution time must be nonnegative");
    const auto es = eigen_of(h, psi0.n_qubits());
    const RVec &ev = es.eigenvalues();
    const double emin = ev.minCoeff();
    CVec c = es.eigenvectors().adjoint() * psi0.amplitudes();
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        c[i] *= std::exp(-(ev[i] - emin) * t);
    }
    const double nrm = c.norm();
    require(nrm > 1e-14, Status::Numerical, "imaginary-time norm vanished");
    return StateVector::from_amplitudes(es.eigenvectors() * c, true);
}

StateVector exact_rte(const PauliSum &h, const StateVector &psi0, double t) {
    require(std::isfinite(t), Status::InvalidArgument,
            "evolution time not finite");
    const auto es = eigen_of(h, psi0.n_qubits());
    const RVec &ev = es.eigenvalues();
    CVec c = es.eigenvectors().adjoint() * psi0.amplitudes();
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        c[i] *= std::polar(1.0, -ev[i] * t);
    }
    return StateVector::from_amplitudes(es.eigenvectors() * c, true);
}

double ground_energy(const PauliSum &h) {
    Eigen::SelfAdjointEigenSolver<CMat> es(h.to_matrix(),
                                           Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace vqs
