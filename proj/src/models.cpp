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

#include "vqsim/models.hpp"

namespace vqs {

PauliSum h_illustrative() { return PauliSum::parse("1 ZX; 1 XZ; 3 ZZ"); }

PauliSum h_ising(int n, double J, double g) {
    require(n >= 2, Status::InvalidArgument, "Ising chain needs two sites");
    PauliSum h(n);
    for (int i = 0; i + 1 < n; ++i) {
        std::string label(static_cast<std::size_t>(n), 'I');
        label[static_cast<std::size_t>(i)] = 'Z';
        label[static_cast<std::size_t>(i + 1)] = 'Z';
        h.add(-J, label);
    }
    for (int j = 0; j < n; ++j) {
        std::string label(static_cast<std::size_t>(n), 'I');
        label[static_cast<std::size_t>(j)] = 'X';
        h.add(-J * g, label);
    }
    return h;
}

PauliSum h_hydrogen() {
    return PauliSum::parse("0.2252 II; 0.5716 ZZ; 0.3435 IZ; -0.4347 ZI; "
                           "0.0910 YY; 0.0910 XX");
}

PauliSum h_gibbs(int index) {
    switch (index) {
    case 1:
        return PauliSum::parse("1 Z");
    case 2:
        return PauliSum::parse("1 ZZ; -0.2 ZI; -0.2 IZ; 0.3 XI; 0.3 IX");
    case 3:
        return PauliSum::parse("2 ZZI; 1 IZZ; -0.5 IZI");
    case 4:
        return PauliSum::parse("2 ZZII; 1 IZZI; -0.5 IZIZ");
    case 5:
        return PauliSum::parse("2 ZZIII; 1 IZZII; -0.5 IZIIZ");
    default:
        fail(Status::InvalidArgument,
             "Gibbs example index must be 1..5, got " + std::to_string(index));
    }
}

PauliSum named_hamiltonian(const std::string &name) {
    if (name == "illustrative") {
        return h_illustrative();
    }
    if (name == "ising") {
        return h_ising();
    }
    if (name == "hydrogen") {
        return h_hydrogen();
    }
    if (name.size() == 2 && name[0] == 'h' && name[1] >= '1' &&
        name[1] <= '5') {
        return h_gibbs(name[1] - '0');
    }
    fail(Status::InvalidArgument, "unknown Hamiltonian '" + name + "'");
}

std::vector<std::string> hamiltonian_names() {
    return {"illustrative", "ising", "hydrogen", "h1", "h2", "h3", "h4", "h5"};
}

} // namespace vqs
