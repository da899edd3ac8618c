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
#include "vqsim/gradients.hpp"

namespace vqs {

namespace {

/// Pauli generator P with dU/dw = (-i/2) P U up to a global phase.
struct Generator {
    char pauli;
    int qubit;
};

Generator generator_of(const GateDescriptor &g) {
    switch (g.kind) {
    case GateKind::RX:
        return {'X', g.qubits[0]};
    case GateKind::RY:
        return {'Y', g.qubits[0]};
    case GateKind::RZ:
        return {'Z', g.qubits[0]};
    case GateKind::PHASE:
        if (g.qubits.size() == 1) {
            return {'Z', g.qubits[0]};
        }
        break;
    default:
        break;
    }
    fail(Status::Unsupported,
         "linear-combination gradients need a Pauli generator; got " +
             gate_name(g.kind));
}

/// Index of the single gate driven by slot i, or -1 if the slot is unused.
int gate_of_slot(const ParamCircuit &c, int i) {
    require(i >= 0 && i < c.n_params(), Status::InvalidArgument,
            "parameter index out of range");
    const auto gates = c.slot_gates()[static_cast<std::size_t>(i)];
    require(gates.size() <= 1, Status::Unsupported,
            "linear-combination gradients need each parameter to drive a "
            "single gate");
    if (gates.empty()) {
        return -1;
    }
    generator_of(c.gates()[static_cast<std::size_t>(gates[0])]);
    return gates[0];
}

void controlled_pauli(ParamCircuit &c, int control, int target, char p,
                      bool on_zero) {
    if (on_zero) {
        c.add_fixed(GateKind::X, {control});
    }
    switch (p) {
    case 'X':
        c.add_fixed(GateKind::CX, {control, target});
        break;
    case 'Z':
        c.add_fixed(GateKind::CZ, {control, target});
        break;
    case 'Y':
        c.add_fixed(GateKind::PHASE, {target}, {-M_PI / 2});
        c.add_fixed(GateKind::CX, {control, target});
        c.add_fixed(GateKind::PHASE, {target}, {M_PI / 2});
        break;
    default:
        break;
    }
    if (on_zero) {
        c.add_fixed(GateKind::X, {control});
    }
}

void copy_gates(ParamCircuit &dst, const ParamCircuit &src, int from,
                int to) {
    for (int g = from; g < to; ++g) {
        dst.add(src.gates()[static_cast<std::size_t>(g)]);
    }
}

PauliSum extend_observable(const PauliSum &o, const std::string &anc) {
    PauliSum out;
    for (const auto &t : o.terms()) {
        out.add(t.coeff, t.label + anc);
    }
    return out;
}

std::string single_pauli(int n, int q, char p) {
    std::string s(static_cast<std::size_t>(n), 'I');
    s[static_cast<std::size_t>(q)] = p;
    return s;
}

/// H and PHASE(pi/2) on the ancilla, controlled generator after gate gi.
ParamCircuit first_order_body(const ParamCircuit &c, int gi, int anc) {
    const int n = c.n_qubits();
    const int total = static_cast<int>(c.size());
    ParamCircuit out(n + 1, c.n_params());
    out.add_fixed(GateKind::H, {anc});
    out.add_fixed(GateKind::PHASE, {anc}, {M_PI / 2});
    copy_gates(out, c, 0, gi + 1);
    const Generator gen = generator_of(c.gates()[static_cast<std::size_t>(gi)]);
    controlled_pauli(out, anc, gen.qubit, gen.pauli, false);
    copy_gates(out, c, gi + 1, total);
    return out;
}

} // namespace

double LCCircuits::evaluate(const RVec &omega, const StateVector &input) const {
    auto value = [&](const LCTerm &t) {
        const int extra = t.circuit.n_qubits() - input.n_qubits();
        require(extra >= 0, Status::DimensionMismatch,
                "input wider than gradient circuit");
        const StateVector in =
            extra == 0 ? input
                       : StateVector::tensor(input, StateVector::zero(extra));
        return expectation(t.circuit.simulate(omega, in), t.observable);
    };
    double v = 0.0;
    for (const auto &t : linear) {
        v += t.weight * value(t);
    }
    for (const auto &p : products) {
        v += p.weight * p.a.weight * p.b.weight * value(p.a) * value(p.b);
    }
    return v;
}

LCCircuits lc_gradient_circuit(const ParamCircuit &c, int i, int j,
                               LCMode mode, const PauliSum &observable) {
    const int n = c.n_qubits();
    const int total = static_cast<int>(c.size());
    LCCircuits out;
    if (mode != LCMode::Metric) {
        require(observable.n_qubits() == n, Status::DimensionMismatch,
                "observable width does not match circuit");
    }
    int gi = gate_of_slot(c, i);
    if (mode == LCMode::FirstExplicit || mode == LCMode::FirstImplicit) {
        if (gi < 0) {
            return out;
        }
        check_qubit_count(n + 1);
        const int anc = n;
        if (mode == LCMode::FirstExplicit) {
            ParamCircuit body = first_order_body(c, gi, anc);
            body.add_fixed(GateKind::H, {anc});
            // <Z_a O> = Re(i <psi|O|P psi_i>) = -d<O>/dw_i.
            out.linear.push_back(
                {std::move(body), extend_observable(observable, "Z"), -1.0});
            return out;
        }
        for (const auto &term : observable.terms()) {
            ParamCircuit body = first_order_body(c, gi, anc);
            body.add_fixed(GateKind::X, {anc});
            for (int q = 0; q < n; ++q) {
                controlled_pauli(body, anc, q,
                                 term.label[static_cast<std::size_t>(q)],
                                 false);
            }
            body.add_fixed(GateKind::X, {anc});
            body.add_fixed(GateKind::H, {anc});
            PauliSum za;
            za.add(1.0, single_pauli(n + 1, anc, 'Z'));
            out.linear.push_back({std::move(body), za, -term.coeff});
        }
        return out;
    }

    int gj = gate_of_slot(c, j);
    if (gi < 0 || gj < 0) {
        return out;
    }
    if (gi > gj) {
        std::swap(gi, gj);
    }
    const Generator pi = generator_of(c.gates()[static_cast<std::size_t>(gi)]);
    const Generator pj = generator_of(c.gates()[static_cast<std::size_t>(gj)]);

    if (mode == LCMode::SecondExplicit) {
        check_qubit_count(n + 2);
        const int a1 = n;
        const int a2 = n + 1;
        ParamCircuit body(n + 2, c.n_params());
        body.add_fixed(GateKind::H, {a1});
        body.add_fixed(GateKind::H, {a2});
        copy_gates(body, c, 0, gi + 1);
        controlled_pauli(body, a1, pi.qubit, pi.pauli, false);
        copy_gates(body, c, gi + 1, gj + 1);
        controlled_pauli(body, a2, pj.qubit, pj.pauli, false);
        copy_gates(body, c, gj + 1, total);
        body.add_fixed(GateKind::CZ, {a1, a2});
        body.add_fixed(GateKind::H, {a1});
        body.add_fixed(GateKind::H, {a2});
        // <Z1 Z2 O> = 1/2 Re(<P_i psi|O|P_j psi> - <P_j P_i psi|O|psi>).
        out.linear.push_back(
            {std::move(body), extend_observable(observable, "ZZ"), 1.0});
        return out;
    }

    // Metric: F = 1/4 (Re<P_i psi|P_j psi> - <P_i><P_j>).
    check_qubit_count(n + 1);
    const int anc = n;
    ParamCircuit body(n + 1, c.n_params());
    body.add_fixed(GateKind::H, {anc});
    copy_gates(body, c, 0, gi + 1);
    controlled_pauli(body, anc, pi.qubit, pi.pauli, true);
    copy_gates(body, c, gi + 1, gj + 1);
    controlled_pauli(body, anc, pj.qubit, pj.pauli, false);
    body.add_fixed(GateKind::H, {anc});
    PauliSum za;
    za.add(1.0, single_pauli(n + 1, anc, 'Z'));
    out.linear.push_back({std::move(body), za, 0.25});

    auto prefix = [&](int g, const Generator &gen) {
        ParamCircuit p(n, c.n_params());
        copy_gates(p, c, 0, g + 1);
        PauliSum o;
        o.add(1.0, single_pauli(n, gen.qubit, gen.pauli));
        return LCTerm{std::move(p), o, 1.0};
    };
    out.products.push_back({prefix(gi, pi), prefix(gj, pj), -0.25});
    return out;
}

} // namespace vqs
