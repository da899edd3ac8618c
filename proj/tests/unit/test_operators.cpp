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
#include "vqsim/models.hpp"
#include "vqsim/oracles.hpp"
#include "vqsim/pauli.hpp"

using namespace vqs;
using namespace vqs::test;
using Catch::Matchers::WithinAbs;

TEST_CASE("to_matrix examples", "[operators]") {
    const CMat z = PauliSum::parse("1 Z").to_matrix();
    CHECK(z(0, 0) == cplx(1.0));
    CHECK(z(1, 1) == cplx(-1.0));
    CHECK(z(0, 1) == cplx(0.0));
    const CMat id = PauliSum::parse("0.2252 II").to_matrix();
    CHECK(max_abs(CMat(id - 0.2252 * CMat::Identity(4, 4))) == 0.0);

    const CMat m = h_illustrative().to_matrix();
    const Eigen::SelfAdjointEigenSolver<CMat> es(m);
    CHECK_THAT(ground_energy(h_illustrative()),
               WithinAbs(es.eigenvalues()[0], 1e-12));
}

TEST_CASE("pauli label convention: character j acts on qubit j", "[operators]") {
    const PauliSum h = PauliSum::parse("1 ZI");
    const double e1 = expectation(StateVector::basis(2, 1), h);
    const double e2 = expectation(StateVector::basis(2, 2), h);
    CHECK_THAT(e1, WithinAbs(-1.0, 1e-15));
    CHECK_THAT(e2, WithinAbs(1.0, 1e-15));
}

TEST_CASE("Hamiltonian text round trip is bit exact", "[operators]") {
    PauliSum h(3);
    h.add(0.1 + 0.2, "XYZ");
    h.add(-1.0 / 3.0, "IZI");
    h.add(6.02214076e23, "ZZZ");
    const PauliSum back = PauliSum::parse(h.to_text());
    REQUIRE(back.terms().size() == h.terms().size());
    for (std::size_t i = 0; i < h.terms().size(); ++i) {
        CHECK(back.terms()[i].coeff == h.terms()[i].coeff);
        CHECK(back.terms()[i].label == h.terms()[i].label);
    }
    CHECK_THROWS_AS(PauliSum::parse("1 ZQ"), Error);
    CHECK_THROWS_AS(PauliSum::parse("1 Z; 1 ZZ"), Error);
    CHECK_THROWS_AS(PauliSum::parse("abc Z"), Error);
}

TEST_CASE("apply matches dense matrix", "[operators]") {
    const PauliSum h = h_hydrogen();
    const CVec v = random_vector(4, 3);
    CHECK(max_abs(CVec(h.apply(v) - h.to_matrix() * v)) < 1e-12);
}

TEST_CASE("exact_gibbs", "[operators]") {
    const DensityMatrix z = exact_gibbs(PauliSum::parse("1 Z"), 1.0);
    const double zsum = std::exp(-1.0) + std::exp(1.0);
    CHECK_THAT(z.matrix(0, 0).real(), WithinAbs(std::exp(-1.0) / zsum, 1e-12));
    CHECK_THAT(z.matrix(1, 1).real(), WithinAbs(std::exp(1.0) / zsum, 1e-12));

    const DensityMatrix flat = exact_gibbs(PauliSum::parse("0 ZZI"), 1.0);
    CHECK(max_abs(CMat(flat.matrix - CMat::Identity(8, 8) / 8.0)) < 1e-12);

    const DensityMatrix hot = exact_gibbs(h_gibbs(2), 1e6);
    CHECK(max_abs(CMat(hot.matrix - CMat::Identity(4, 4) / 4.0)) < 1e-5);

    for (int k = 1; k <= 5; ++k) {
        const PauliSum h = h_gibbs(k);
        const DensityMatrix rho = exact_gibbs(h, 0.7);
        rho.validate();
        const CMat m = h.to_matrix();
        CHECK(max_abs(CMat(rho.matrix * m - m * rho.matrix)) < 1e-9);
    }
    CHECK_THROWS_AS(exact_gibbs(PauliSum::parse("1 Z"), 0.0), Error);
    CHECK_THROWS_AS(exact_gibbs(PauliSum::parse("1 Z"), -1.0), Error);
}

TEST_CASE("exact_ite", "[operators]") {
    const StateVector psi = random_state(2, 5);
    CHECK(phase_distance(exact_ite(h_hydrogen(), psi, 0.0).amplitudes(),
                         psi.amplitudes()) < 1e-12);

    const StateVector late =
        exact_ite(PauliSum::parse("1 Z"), StateVector::plus(1), 10.0);
    CHECK(fidelity(late, StateVector::basis(1, 1)) > 1 - 1e-8);

    // Dense oracle: normalized expm(-H t)|++>.
    const StateVector plus = StateVector::plus(2);
    const CMat m = h_hydrogen().to_matrix();
    const Eigen::SelfAdjointEigenSolver<CMat> es(m);
    const RVec decay = (-es.eigenvalues().array()).exp().matrix();
    CVec ref = es.eigenvectors() * decay.asDiagonal() *
               es.eigenvectors().adjoint() * plus.amplitudes();
    ref.normalize();
    CHECK(phase_distance(exact_ite(h_hydrogen(), plus, 1.0).amplitudes(), ref) <
          1e-12);

    const StateVector s3 = random_state(3, 8);
    const StateVector two_step =
        exact_ite(h_ising(), exact_ite(h_ising(), s3, 0.3), 0.5);
    CHECK(phase_distance(two_step.amplitudes(),
                         exact_ite(h_ising(), s3, 0.8).amplitudes()) < 1e-9);
    CHECK_THROWS_AS(exact_ite(h_ising(), s3, -1.0), Error);
}

TEST_CASE("exact_rte", "[operators]") {
    const StateVector z = StateVector::zero(1);
    for (double t : {0.1, 1.0, 7.3}) {
        CHECK_THAT(bures_distance(exact_rte(PauliSum::parse("1 Z"), z, t), z),
                   WithinAbs(0.0, 1e-7));
    }
    const StateVector psi = random_state(2, 6);
    CHECK(max_abs(CVec(exact_rte(h_hydrogen(), psi, 0.0).amplitudes() -
                       psi.amplitudes())) < 1e-12);
    const StateVector z3 = StateVector::zero(3);
    const StateVector e = exact_rte(h_ising(), z3, 1.0);
    CHECK_THAT(e.norm(), WithinAbs(1.0, 1e-12));
    CHECK_THAT(expectation(e, h_ising()),
               WithinAbs(expectation(z3, h_ising()), 1e-10));
}

TEST_CASE("variance", "[operators]") {
    CHECK_THAT(variance(PauliSum::parse("1 Z"), StateVector::zero(1)),
               WithinAbs(0.0, 1e-15));
    CHECK_THAT(variance(PauliSum::parse("1 Z"), StateVector::plus(1)),
               WithinAbs(1.0, 1e-15));
    const StateVector psi = random_state(2, 10);
    const CMat m = h_hydrogen().to_matrix();
    const CVec a = psi.amplitudes();
    const double mean = a.dot(m * a).real();
    const double sq = a.dot(m * (m * a)).real();
    CHECK_THAT(variance(h_hydrogen(), psi), WithinAbs(sq - mean * mean, 1e-9));

    // Zero exactly on eigenvectors.
    const Eigen::SelfAdjointEigenSolver<CMat> es(m);
    for (int k = 0; k < 4; ++k) {
        const StateVector ev = StateVector::from_amplitudes(es.eigenvectors().col(k), true);
        CHECK(std::abs(variance(h_hydrogen(), ev)) < 1e-8);
    }
    CHECK(variance(h_hydrogen(), psi) > 1e-8);
}

TEST_CASE("spectral norm", "[operators]") {
    CHECK_THAT(spectral_norm(PauliSum::parse("1 Z")), WithinAbs(1.0, 1e-12));
    const Eigen::SelfAdjointEigenSolver<CMat> es(h_illustrative().to_matrix());
    CHECK_THAT(spectral_norm(h_illustrative()),
               WithinAbs(es.eigenvalues().cwiseAbs().maxCoeff(), 1e-12));
}

TEST_CASE("parameterized Hamiltonian binding is linear in theta", "[operators]") {
    ParamHamiltonian hp(2, 3);
    hp.add_linear(0, "ZZ");
    hp.add_linear(1, "ZI");
    hp.add_linear(2, "IZ");
    const RVec a = random_vec(3, -1, 1, 1);
    const RVec b = random_vec(3, -1, 1, 2);
    const CMat lhs = hp.bind(0.3 * a + 1.7 * b).to_matrix();
    const CMat rhs =
        0.3 * hp.bind(a).to_matrix() + 1.7 * hp.bind(b).to_matrix();
    CHECK(max_abs(CMat(lhs - rhs)) < 1e-12);
    CHECK(max_abs(RMat(hp.weight_jacobian() - RMat::Identity(3, 3))) == 0.0);

    // f_i(theta, x) = theta_i . x with offsets.
    ParamHamiltonian hx(2, 4, 2);
    hx.add_term({"ZZ", 0.5, {{0, 0}, {1, 1}}});
    hx.add_term({"XI", 0.0, {{2, 0}, {3, 1}}});
    RVec theta(4);
    theta << 1, 2, 3, 4;
    RVec x(2);
    x << 0.5, -1;
    const RVec w = hx.weights(theta, x);
    CHECK_THAT(w[0], WithinAbs(0.5 + 0.5 - 2.0, 1e-15));
    CHECK_THAT(w[1], WithinAbs(1.5 - 4.0, 1e-15));
    CHECK_THROWS_AS(hx.weights(theta), Error);
}
