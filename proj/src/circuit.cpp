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
#include "vqsim/circuit.hpp"

#include <cmath>
#include <sstream>

#include "vqsim/rng.hpp"
#include "vqsim/textio.hpp"

namespace vqs {

ParamCircuit::ParamCircuit(int n_qubits, int n_params)
    : n_(n_qubits), k_(n_params) {
    require(n_qubits >= 1, Status::InvalidArgument, "need at least one qubit");
    require(n_params >= 0, Status::InvalidArgument,
            "negative parameter count");
}

void ParamCircuit::add(GateDescriptor g) {
    validate_gate(g, n_);
    if (g.slot >= 0) {
        require(g.is_rotation(), Status::InvalidArgument,
                gate_name(g.kind) + " takes no parameter");
        require(g.slot <= k_, Status::InvalidArgument,
                "parameter slots must be contiguous");
        if (g.slot == k_) {
            ++k_;
        }
    }
    gates_.push_back(std::move(g));
}

int ParamCircuit::add_rotation(GateKind kind, std::vector<int> qubits) {
    const int slot = k_;
    add({kind, std::move(qubits), slot, {}});
    return slot;
}

void ParamCircuit::add_fixed(GateKind kind, std::vector<int> qubits,
                             std::vector<double> angles) {
    add({kind, std::move(qubits), -1, std::move(angles)});
}

void ParamCircuit::append(const ParamCircuit &other) {
    require(other.n_ == n_, Status::DimensionMismatch,
            "appended circuit has a different width");
    const int offset = k_;
    k_ += other.k_;
    for (GateDescriptor g : other.gates_) {
        if (g.slot >= 0) {
            g.slot += offset;
        }
        gates_.push_back(std::move(g));
    }
}

void ParamCircuit::check_omega(const RVec &omega) const {
    require(omega.size() == k_, Status::DimensionMismatch,
            "parameter vector has length " + std::to_string(omega.size()) +
                ", circuit expects " + std::to_string(k_));
    for (Eigen::Index i = 0; i < omega.size(); ++i) {
        require(std::isfinite(omega[i]), Status::InvalidArgument,
                "parameter not finite");
    }
}

ParamCircuit ParamCircuit::bound(const RVec &omega) const {
    check_omega(omega);
    ParamCircuit out(n_);
    for (GateDescriptor g : gates_) {
        if (g.slot >= 0) {
            g.angles = {omega[g.slot]};
            g.slot = -1;
        }
        out.gates_.push_back(std::move(g));
    }
    return out;
}

ParamCircuit ParamCircuit::inverse() const {
    require(k_ == 0, Status::InvalidArgument,
            "inverse needs a circuit without parameter slots");
    ParamCircuit out(n_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        GateDescriptor g = *it;
        if (g.is_rotation() || g.kind == GateKind::UC_RY) {
            for (double &a : g.angles) {
                a = -a;
            }
        }
        out.gates_.push_back(std::move(g));
    }
    return out;
}

ParamCircuit ParamCircuit::remapped(const std::vector<int> &map,
                                    int n_qubits) const {
    require(static_cast<int>(map.size()) == n_, Status::DimensionMismatch,
            "qubit map has wrong length");
    ParamCircuit out(n_qubits, k_);
    for (GateDescriptor g : gates_) {
        for (int &q : g.qubits) {
            q = map[static_cast<std::size_t>(q)];
        }
        out.add(std::move(g));
    }
    return out;
}

std::vector<std::vector<int>> ParamCircuit::slot_gates() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(k_));
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        if (gates_[i].slot >= 0) {
            out[static_cast<std::size_t>(gates_[i].slot)].push_back(
                static_cast<int>(i));
        }
    }
    return out;
}

void ParamCircuit::run(CVec &amps, const RVec &omega) const {
    for (const auto &g : gates_) {
        apply_gate_raw(amps, n_, g, g.angle(omega));
    }
}

StateVector ParamCircuit::simulate(const RVec &omega,
                                   const StateVector &input) const {
    check_omega(omega);
    require(input.n_qubits() == n_, Status::DimensionMismatch,
            "input state width does not match circuit");
    CVec a = input.amplitudes();
    run(a, omega);
    return StateVector::from_amplitudes(std::move(a));
}

StateVector ParamCircuit::simulate(const RVec &omega) const {
    return simulate(omega, StateVector::zero(n_));
}

std::string ParamCircuit::to_text() const {
    std::string s = "QUBITS " + std::to_string(n_) + "\nPARAMS " +
                    std::to_string(k_) + "\n";
    for (const auto &g : gates_) {
        s += gate_name(g.kind) + " ";
        if (g.qubits.empty()) {
            s += "-";
        }
        for (std::size_t i = 0; i < g.qubits.size(); ++i) {
            s += (i ? "," : "") + std::to_string(g.qubits[i]);
        }
        if (g.slot >= 0) {
            s += " $" + std::to_string(g.slot);
        } else if (!g.angles.empty()) {
            s += " ";
            for (std::size_t i = 0; i < g.angles.size(); ++i) {
                s += (i ? "," : "") + format_double(g.angles[i]);
            }
        }
        s += "\n";
    }
    return s;
}

ParamCircuit ParamCircuit::parse(const std::string &text) {
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    int k = -1;
    std::vector<GateDescriptor> gates;
    auto where = [&] { return "circuit line " + std::to_string(lineno) + ": "; };
    while (std::getline(lines, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) {
            continue;
        }
        std::string a;
        std::string b;
        std::string extra;
        ls >> a >> b >> extra;
        require(extra.empty(), Status::Parse, where() + "trailing tokens");
        if (name == "QUBITS" || name == "PARAMS") {
            require(!a.empty() && b.empty(), Status::Parse,
                    where() + name + " expects one integer");
            const auto v = static_cast<int>(parse_int(a));
            (name == "QUBITS" ? n : k) = v;
            continue;
        }
        require(!a.empty(), Status::Parse, where() + "missing qubit list");
        GateDescriptor g;
        g.kind = gate_kind_from_name(name);
        if (a != "-") {
            std::string tok;
            std::istringstream qs(a);
            while (std::getline(qs, tok, ',')) {
                g.qubits.push_back(static_cast<int>(parse_int(tok)));
            }
        }
        if (!b.empty()) {
            if (b[0] == '$') {
                g.slot = static_cast<int>(parse_int(b.substr(1)));
                require(g.slot >= 0, Status::Parse, where() + "negative slot");
            } else {
                std::string tok;
                std::istringstream as(b);
                while (std::getline(as, tok, ',')) {
                    g.angles.push_back(parse_double(tok));
                }
            }
        }
        gates.push_back(std::move(g));
    }
    require(n >= 1, Status::Parse, "circuit text lacks a QUBITS line");
    int max_slot = -1;
    for (const auto &g : gates) {
        max_slot = std::max(max_slot, g.slot);
    }
    if (k < 0) {
        k = max_slot + 1;
    }
    require(max_slot < k, Status::Parse, "slot exceeds declared PARAMS");
    ParamCircuit c(n, k);
    for (auto &g : gates) {
        c.add(std::move(g));
    }
    return c;
}

ParamCircuit efficient_su2(int n, int reps) {
    require(n >= 1 && reps >= 1, Status::InvalidArgument,
            "efficient_su2 needs n >= 1 and reps >= 1");
    check_qubit_count(n);
    ParamCircuit c(n);
    auto rotations = [&] {
        for (int q = 0; q < n; ++q) {
            c.add_rotation(GateKind::RY, {q});
        }
        for (int q = 0; q < n; ++q) {
            c.add_rotation(GateKind::RZ, {q});
        }
    };
    for (int r = 0; r < reps; ++r) {
        rotations();
        for (int q = 0; q + 1 < n; ++q) {
            c.add_fixed(GateKind::CX, {q, q + 1});
        }
    }
    rotations();
    return c;
}

RVec efficient_su2_plus_params(int n, int reps) {
    RVec w = RVec::Zero(2 * n * (reps + 1));
    for (int q = 0; q < n; ++q) {
        w[2 * n * reps + q] = M_PI / 2;
    }
    return w;
}

ParamCircuit ry_cz_generator(int n, int depth) {
    require(n >= 1 && depth >= 0, Status::InvalidArgument,
            "ry_cz_generator needs n >= 1 and depth >= 0");
    check_qubit_count(n);
    ParamCircuit c(n);
    for (int l = 0; l <= depth; ++l) {
        if (l > 0 && n > 1) {
            for (int q = 0; q < n; ++q) {
                const int t = (q + 1) % n;
                if (n == 2 && q == 1) {
                    break;
                }
                c.add_fixed(GateKind::CZ, {q, t});
            }
        }
        for (int q = 0; q < n; ++q) {
            c.add_rotation(GateKind::RY, {q});
        }
    }
    return c;
}

Ansatz gibbs_ansatz(int n, int depth) {
    require(n >= 1 && depth >= 0, Status::InvalidArgument,
            "gibbs_ansatz needs n >= 1 and depth >= 0");
    const int w = 2 * n;
    check_qubit_count(w);
    ParamCircuit c(w);
    for (int q = 0; q < w; ++q) {
        c.add_rotation(GateKind::RY, {q});
    }
    // |+>^n is invariant under CX, so this layer keeps omega0 on |phi+>^n
    // while its tangents reach Z strings on register a.
    if (depth >= 1) {
        for (int i = 0; i + 1 < n; ++i) {
            c.add_fixed(GateKind::CX, {i, i + 1});
        }
        for (int q = 0; q < n; ++q) {
            c.add_rotation(GateKind::RY, {q});
        }
    }
    for (int i = 0; i < n; ++i) {
        c.add_fixed(GateKind::CX, {i, n + i});
    }
    for (int l = 1; l < depth; ++l) {
        for (int q = 0; q < w; ++q) {
            c.add_rotation(GateKind::RY, {q});
        }
        for (int q = 0; q < w; ++q) {
            c.add_rotation(GateKind::RZ, {q});
        }
        for (int i = 0; i + 1 < n; ++i) {
            c.add_fixed(GateKind::CX, {i, i + 1});
            c.add_fixed(GateKind::CX, {n + i, n + i + 1});
        }
    }
    RVec omega0 = RVec::Zero(c.n_params());
    for (int i = 0; i < n; ++i) {
        omega0[i] = M_PI / 2;
    }
    return {std::move(c), std::move(omega0)};
}

RVec random_params(int k, double delta, std::uint64_t seed) {
    Rng rng(seed);
    RVec w(k);
    for (int i = 0; i < k; ++i) {
        w[i] = rng.uniform(-delta, delta);
    }
    return w;
}

} // namespace vqs
