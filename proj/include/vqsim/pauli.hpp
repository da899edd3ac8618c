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
#include <utility>
#include <vector>

#include "vqsim/common.hpp"
#include "vqsim/statevector.hpp"

namespace vqs {

/// One weighted Pauli string. Character j of the label acts on qubit j.
struct PauliTerm {
    double coeff = 0.0;
    std::string label;
};

/// Hermitian operator as a real-weighted sum of Pauli strings.
class PauliSum {
  public:
    PauliSum() = default;
    explicit PauliSum(int n_qubits);
    explicit PauliSum(std::vector<PauliTerm> terms);

    /// Parses lines (or ';'-separated entries) of the form
    /// "coefficient LABEL". Blank lines and '#' comments are skipped.
    static PauliSum parse(const std::string &text);
    /// One "coefficient LABEL" line per term, 17 significant digits.
    [[nodiscard]] std::string to_text() const;

    void add(double coeff, const std::string &label);

    [[nodiscard]] int n_qubits() const { return n_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const {
        return terms_;
    }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] bool is_diagonal() const;

    [[nodiscard]] CVec apply(const CVec &v) const;
    [[nodiscard]] CMat to_matrix() const;

    /// H on the low qubits, identity on `extra` appended high qubits.
    [[nodiscard]] PauliSum extended(int extra) const;

  private:
    int n_ = 0;
    std::vector<PauliTerm> terms_;
};

/// Applies a single Pauli string to a vector.
void apply_pauli_string(const std::string &label, const CVec &in, CVec &out,
                        cplx scale = 1.0, bool accumulate = false);

[[nodiscard]] double variance(const PauliSum &h, const StateVector &state);

/// Largest absolute eigenvalue, from a dense eigendecomposition.
[[nodiscard]] double spectral_norm(const PauliSum &h);

/// One term of a parameterized Hamiltonian. The weight is
/// offset + sum over (p, f) of theta[p] * (f < 0 ? 1 : x[f]).
struct ParamTerm {
    std::string label;
    double offset = 0.0;
    std::vector<std::pair<int, int>> factors;
};

class ParamHamiltonian {
  public:
    ParamHamiltonian() = default;
    ParamHamiltonian(int n_qubits, int n_params, int n_features = 0);

    void add_term(ParamTerm term);
    /// Adds theta[param] * label.
    void add_linear(int param, const std::string &label);

    [[nodiscard]] int n_qubits() const { return n_; }
    [[nodiscard]] int n_params() const { return k_; }
    [[nodiscard]] int n_features() const { return d_; }
    [[nodiscard]] const std::vector<ParamTerm> &terms() const {
        return terms_;
    }

    [[nodiscard]] RVec weights(const RVec &theta, const RVec &x = {}) const;
    [[nodiscard]] PauliSum bind(const RVec &theta, const RVec &x = {}) const;
    /// d weight_c / d theta_p; independent of theta.
    [[nodiscard]] RMat weight_jacobian(const RVec &x = {}) const;

  private:
    void check(const RVec &theta, const RVec &x) const;
    int n_ = 0;
    int k_ = 0;
    int d_ = 0;
    std::vector<ParamTerm> terms_;
};

} // namespace vqs
