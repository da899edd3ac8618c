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

#include "vqsim/pauli.hpp"

namespace vqs {

/// ZX + XZ + 3 ZZ.
[[nodiscard]] PauliSum h_illustrative();
/// -J (sum_i Z_i Z_{i+1} + g sum_j X_j) on an open chain.
[[nodiscard]] PauliSum h_ising(int n = 3, double J = -0.5, double g = -0.5);
/// Two-qubit hydrogen molecule approximation.
[[nodiscard]] PauliSum h_hydrogen();
/// Gibbs examples H_1 .. H_5.
[[nodiscard]] PauliSum h_gibbs(int index);

/// Looks up "illustrative", "ising", "hydrogen" or "h1".."h5".
[[nodiscard]] PauliSum named_hamiltonian(const std::string &name);
[[nodiscard]] std::vector<std::string> hamiltonian_names();

} // namespace vqs
