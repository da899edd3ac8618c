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

#include "helpers.hpp"
#include "vqsim/gate.hpp"
#include "vqsim/pauli.hpp"
#include "vqsim/models.hpp"

using namespace vqs;
using namespace vqs::test;
using Catch::Matchers::WithinAbs;

namespace {

GateDescriptor fixed(GateKind k, std::vector<int> q, double angle = 0.0) {
    GateDescriptor g;
    g.kind = k;
    g.qubits = std::move(q);
    if (g.is_rotation()) {
        g.angles = {angle};
    }
    return g;
}

StateVector bell() {
    CVec a = CVec::Zero(4);
    a[0] = a[3] = 1.0 / std::sqrt(2.0);
    return StateVector::from_amplitudes(a);
}

} // namespace

TEST_CASE("gate examples", "[sim_core]") {
    const StateVector one = apply_gate(StateVector::zero(1), fixed(GateKind::X, {0}));
    CHECK(std::abs(one[1] - cplx(1.0)) < 1e-15);

    const StateVector r = apply_gate(StateVector::zero(1),
                                     fixed(GateKind::RY, {0}, M_PI / 2));
    CHECK_THAT(r[0].real(), WithinAbs(1 / std::sqrt(2.0), 1e-15));
    CHECK_THAT(r[1].real(), WithinAbs(1 / std::sqrt(2.0), 1e-15));

    const StateVector psi = random_state(2, 1);
    const StateVector twice = apply_gate(
        apply_gate(psi, fixed(GateKind::CZ, {0, 1})), fixed(GateKind::CZ, {0, 1}));
    CHECK(max_abs(CVec(twice.amplitudes() - psi.amplitudes())) < 1e-15);
}

TEST_CASE("gate errors", "[sim_core]") {
    CHECK_THROWS_AS(apply_gate(StateVector::zero(2), fixed(GateKind::X, {2})),
                    Error);
    CHECK_THROWS_AS(gate_kind_from_name("FOO"), Error);
    GateDescriptor bad = fixed(GateKind::RX, {0});
    bad.angles = {std::nan("")};
    CHECK_THROWS_AS(apply_gate(StateVector::zero(1), bad), Error);
    CHECK_THROWS_AS(StateVector::zero(kMaxQubits + 1), Error);
}

TEST_CASE("norm preservation and linearity of every gate", "[sim_core]") {
    const std::vector<GateDescriptor> gates = {
        fixed(GateKind::RX, {0}, 0.3),  fixed(GateKind::RY, {1}, -1.1),
        fixed(GateKind::RZ, {2}, 2.2),  fixed(GateKind::X, {1}),
        fixed(GateKind::H, {2}),        fixed(GateKind::CX, {2, 0}),
        fixed(GateKind::CZ, {0, 1}),    fixed(GateKind::CRY, {1, 2}, 0.7),
        GateDescriptor{GateKind::UC_RY, {0, 1, 2}, -1, {0.1, 0.2, 0.3, 0.4}},
        GateDescriptor{GateKind::PHASE, {1}, -1, {0.9}}};
    for (const auto &g : gates) {
        const StateVector psi = random_state(3, 7);
        CHECK_THAT(apply_gate(psi, g).norm(), WithinAbs(1.0, 1e-10));

        CVec a = random_vector(8, 11);
        CVec b = random_vector(8, 12);
        const cplx al(0.3, -1.2);
        const cplx be(-0.7, 0.4);
        CVec mix = al * a + be * b;
        validate_gate(g, 3);
        apply_gate_raw(a, 3, g, g.angles.empty() ? 0.0 : g.angles[0]);
        apply_gate_raw(b, 3, g, g.angles.empty() ? 0.0 : g.angles[0]);
        apply_gate_raw(mix, 3, g, g.angles.empty() ? 0.0 : g.angles[0]);
        CHECK(max_abs(CVec(mix - (al * a + be * b))) < 1e-10);
    }
}

TEST_CASE("expectation examples", "[sim_core]") {
    CHECK_THAT(expectation(StateVector::zero(1), PauliSum::parse("1 Z")),
               WithinAbs(1.0, 1e-15));
    CHECK_THAT(expectation(StateVector::plus(1), PauliSum::parse("1 X")),
               WithinAbs(1.0, 1e-15));
    const StateVector psi = random_state(3, 3);
    const PauliSum h = h_ising();
    const CMat m = h.to_matrix();
    const double oracle =
        psi.amplitudes().dot(m * psi.amplitudes()).real();
    CHECK_THAT(expectation(psi, h), WithinAbs(oracle, 1e-10));
    CHECK_THROWS_AS(expectation(StateVector::zero(2), h), Error);
}

TEST_CASE("measurement distribution", "[sim_core]") {
    const auto plus = measure_distribution(StateVector::plus(1));
    CHECK_THAT(plus.probabilities[0], WithinAbs(0.5, 1e-15));
    CHECK_THAT(plus.probabilities[1], WithinAbs(0.5, 1e-15));

    const auto one = measure_distribution(StateVector::basis(1, 1), 100, 5);
    REQUIRE(one.counts.size() == 2);
    CHECK(one.counts[0] == 0);
    CHECK(one.counts[1] == 100);

    const auto b = measure_distribution(bell(), 100000, 42);
    CHECK(std::abs(b.counts[0] / 1e5 - 0.5) < 0.01);
    CHECK(std::abs(b.counts[3] / 1e5 - 0.5) < 0.01);
    CHECK(b.counts[1] + b.counts[2] == 0);
    const auto again = measure_distribution(bell(), 100000, 42);
    CHECK(again.counts == b.counts);

    const StateVector psi = random_state(3, 9);
    const auto exact = measure_distribution(psi);
    const RVec direct = psi.amplitudes().cwiseAbs2();
    for (Eigen::Index i = 0; i < direct.size(); ++i) {
        CHECK(exact.probabilities[i] == direct[i]);
    }
    CHECK_THROWS_AS(measure_distribution(psi, 0, 1), Error);
}

TEST_CASE("partial trace", "[sim_core]") {
    const DensityMatrix r = partial_trace(bell(), {0});
    CHECK(max_abs(CMat(r.matrix - CMat::Identity(2, 2) / 2.0)) < 1e-15);

    const StateVector prod = StateVector::tensor(StateVector::zero(1),
                                                 StateVector::plus(1));
    const DensityMatrix p = partial_trace(prod, {1});
    CHECK(max_abs(CMat(p.matrix - CMat::Constant(2, 2, 0.5))) < 1e-15);

    // Oracle: rho_{ab} = sum_c psi_{a + 4c} conj(psi_{b + 4c}) for keep {0,1}.
    const StateVector psi = random_state(3, 21);
    CMat oracle = CMat::Zero(4, 4);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            for (int c = 0; c < 2; ++c) {
                oracle(a, b) += psi[static_cast<std::size_t>(a + 4 * c)] *
                                std::conj(psi[static_cast<std::size_t>(b + 4 * c)]);
            }
        }
    }
    CHECK(max_abs(CMat(partial_trace(psi, {0, 1}).matrix - oracle)) < 1e-10);

    const CMat full = partial_trace(psi, {0, 1, 2}).matrix;
    CHECK(max_abs(CMat(full - psi.amplitudes() * psi.amplitudes().adjoint())) <
          1e-10);
    CHECK_THROWS_AS(partial_trace(psi, {}), Error);
    CHECK_THROWS_AS(partial_trace(psi, {3}), Error);
}

TEST_CASE("bures distance and fidelity", "[sim_core]") {
    const StateVector z = StateVector::zero(1);
    const StateVector o = StateVector::basis(1, 1);
    CHECK_THAT(bures_distance(z, z), WithinAbs(0.0, 1e-15));
    CHECK_THAT(bures_distance(z, o), WithinAbs(std::sqrt(2.0), 1e-15));
    CVec ph = z.amplitudes() * std::polar(1.0, 1.234);
    CHECK_THAT(bures_distance(z, StateVector::from_amplitudes(ph)),
               WithinAbs(0.0, 1e-12));
    CHECK_THAT(fidelity(StateVector::plus(1), z), WithinAbs(0.5, 1e-15));

    const DensityMatrix rho = partial_trace(random_state(3, 4), {0, 1});
    CHECK_THAT(fidelity(rho, rho), WithinAbs(1.0, 1e-9));

    for (std::uint64_t s = 0; s < 20; ++s) {
        const StateVector a = random_state(2, 100 + s);
        const StateVector b = random_state(2, 200 + s);
        const StateVector c = random_state(2, 300 + s);
        const double B = bures_distance(a, b);
        CHECK_THAT(B * B, WithinAbs(2 - 2 * std::sqrt(fidelity(a, b)), 1e-9));
        CHECK(bures_distance(a, c) <=
              bures_distance(a, b) + bures_distance(b, c) + 1e-8);
        CHECK_THAT(bures_distance(DensityMatrix::from_pure(a), b),
                   WithinAbs(B, 1e-7));
    }
    CHECK_THROWS_AS(fidelity(z, StateVector::zero(2)), Error);
}

TEST_CASE("density matrix validation", "[sim_core]") {
    DensityMatrix::maximally_mixed(3).validate();
    DensityMatrix bad = DensityMatrix::maximally_mixed(1);
    bad.matrix(0, 0) = 2.0;
    CHECK_THROWS_AS(bad.validate(), Error);
}
