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
#include <optional>
#include <vector>

#include "vqsim/common.hpp"
#include "vqsim/gate.hpp"

namespace vqs {

class PauliSum;

/// Normalized pure state on n qubits, little-endian basis ordering
/// (qubit 0 is the least significant bit of the basis index).
class StateVector {
  public:
    StateVector() = default;

    static StateVector zero(int n_qubits);
    static StateVector basis(int n_qubits, std::uint64_t index);
    static StateVector plus(int n_qubits);
    /// Takes ownership of amplitudes; throws unless the norm is 1 within
    /// 1e-10. With `normalize` the vector is rescaled first.
    static StateVector from_amplitudes(CVec amplitudes, bool normalize = false);
    /// |a> (low qubits) tensor |b> (high qubits).
    static StateVector tensor(const StateVector &low, const StateVector &high);

    [[nodiscard]] int n_qubits() const { return n_; }
    [[nodiscard]] std::size_t dim() const { return amps_.size(); }
    [[nodiscard]] const CVec &amplitudes() const { return amps_; }
    [[nodiscard]] cplx operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] double norm() const { return amps_.norm(); }

  private:
    StateVector(int n, CVec amps) : n_(n), amps_(std::move(amps)) {}
    int n_ = 0;
    CVec amps_;
};

struct DensityMatrix {
    int n_qubits = 0;
    CMat matrix;

    static DensityMatrix from_pure(const StateVector &psi);
    static DensityMatrix maximally_mixed(int n_qubits);
    /// Checks hermiticity, unit trace and eigenvalues >= -1e-9.
    void validate(double tol = 1e-10) const;
};

struct MeasurementDistribution {
    RVec probabilities;
    std::vector<std::int64_t> counts;
};

void check_qubit_count(int n_qubits);

[[nodiscard]] StateVector apply_gate(const StateVector &state,
                                     const GateDescriptor &gate,
                                     const RVec &omega = RVec());

[[nodiscard]] double expectation(const StateVector &state,
                                 const PauliSum &observable);

/// Exact probabilities when `shots` is empty, otherwise seeded multinomial
/// counts with probabilities equal to the empirical frequencies.
[[nodiscard]] MeasurementDistribution
measure_distribution(const StateVector &state,
                     std::optional<std::int64_t> shots = std::nullopt,
                     std::uint64_t seed = 0);

/// Exact marginal over a subset of qubits; index bit j is qubits[j].
[[nodiscard]] RVec marginal_probabilities(const RVec &probs, int n_qubits,
                                          const std::vector<int> &qubits);

[[nodiscard]] DensityMatrix partial_trace(const StateVector &state,
                                          const std::vector<int> &keep);

[[nodiscard]] double fidelity(const StateVector &a, const StateVector &b);
[[nodiscard]] double fidelity(const DensityMatrix &a, const DensityMatrix &b);
[[nodiscard]] double fidelity(const StateVector &a, const DensityMatrix &b);
[[nodiscard]] double fidelity(const DensityMatrix &a, const StateVector &b);

[[nodiscard]] double bures_distance(const StateVector &a, const StateVector &b);
[[nodiscard]] double bures_distance(const DensityMatrix &a,
                                    const DensityMatrix &b);
[[nodiscard]] double bures_distance(const StateVector &a,
                                    const DensityMatrix &b);
[[nodiscard]] double bures_distance(const DensityMatrix &a,
                                    const StateVector &b);

/// Hermitian positive semidefinite square root with eigenvalues clamped at 0.
[[nodiscard]] CMat psd_sqrt(const CMat &m);

} // namespace vqs
