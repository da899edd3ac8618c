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
#include "vqsim/gradients.hpp"
#include "vqsim/models.hpp"

using namespace vqs;
using namespace vqs::test;
using Catch::Matchers::WithinAbs;

namespace {

ParamCircuit single_ry() {
    ParamCircuit c(1);
    c.add_rotation(GateKind::RY, {0});
    return c;
}

RVec scalar(double w) {
    RVec v(1);
    v << w;
    return v;
}

GradientRequest request(ParamCircuit c, PauliSum o, GradMethod m) {
    GradientRequest r;
    r.input = StateVector::zero(c.n_qubits());
    r.circuit = std::move(c);
    r.observable = std::move(o);
    r.method = m;
    return r;
}

double energy(const GradientRequest &r, const RVec &w) {
    return expectation(r.circuit.simulate(w, r.input), r.observable);
}

RVec fd_grad(const GradientRequest &r, const RVec &w, double h = 1e-5) {
    RVec g(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        RVec p = w;
        RVec m = w;
        p[i] += h;
        m[i] -= h;
        g[i] = (energy(r, p) - energy(r, m)) / (2 * h);
    }
    return g;
}

const GradMethod kMethods[] = {GradMethod::ParamShift,
                               GradMethod::LinearCombination,
                               GradMethod::DirectDifferentiation};

} // namespace

TEST_CASE("first-order gradient examples", "[gradients]") {
    for (GradMethod m : kMethods) {
        const auto r = request(single_ry(), PauliSum::parse("1 Z"), m);
        CHECK_THAT(grad_expectation(r, scalar(0.0))[0], WithinAbs(0.0, 1e-12));
        CHECK_THAT(grad_expectation(r, scalar(M_PI / 2))[0],
                   WithinAbs(-1.0, 1e-12));
    }

    auto r = request(efficient_su2(2, 1), h_hydrogen(),
                     GradMethod::DirectDifferentiation);
    const RVec w = random_vec(8, -M_PI, M_PI, 21);
    const RVec dd = grad_expectation(r, w);
    CHECK(max_abs(RVec(dd - fd_grad(r, w))) < 1e-6);
    r.method = GradMethod::ParamShift;
    CHECK(max_abs(RVec(grad_expectation(r, w) - dd)) < 1e-9);
    r.method = GradMethod::LinearCombination;
    CHECK(max_abs(RVec(grad_expectation(r, w) - dd)) < 1e-9);
}

TEST_CASE("method agreement on library ansatze", "[gradients]") {
    struct Case {
        ParamCircuit c;
        PauliSum o;
    };
    const Case cases[] = {{efficient_su2(2, 1), h_hydrogen()},
                          {efficient_su2(3, 1), h_ising()},
                          {ry_cz_generator(3, 1), h_ising()},
                          {ry_cz_generator(2, 2), h_illustrative()}};
    for (const auto &cs : cases) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const RVec w = random_vec(cs.c.n_params(), -M_PI, M_PI, 100 + seed);
            auto r = request(cs.c, cs.o, GradMethod::DirectDifferentiation);
            const RVec dd = grad_expectation(r, w);
            r.method = GradMethod::ParamShift;
            CHECK(max_abs(RVec(grad_expectation(r, w) - dd)) < 1e-7);
            r.method = GradMethod::LinearCombination;
            CHECK(max_abs(RVec(grad_expectation(r, w) - dd)) < 1e-7);
        }
    }
}

TEST_CASE("general shift rule", "[gradients]") {
    auto r = request(efficient_su2(2, 1), h_hydrogen(), GradMethod::ParamShift);
    const RVec w = random_vec(8, -M_PI, M_PI, 3);
    r.shift = M_PI / 2;
    const RVec ref = grad_expectation(r, w);
    for (double s : {M_PI / 3, 1.0}) {
        r.shift = s;
        CHECK(max_abs(RVec(grad_expectation(r, w) - ref)) < 1e-9);
    }
    r.shift = M_PI;
    CHECK_THROWS_AS(grad_expectation(r, w), Error);
    r.shift = 0.0;
    CHECK_THROWS_AS(grad_expectation(r, w), Error);
}

TEST_CASE("shift rule rejects unsupported generators", "[gradients]") {
    ParamCircuit c(2);
    c.add_rotation(GateKind::CRY, {0, 1});
    auto r = request(c, PauliSum::parse("1 ZZ"), GradMethod::ParamShift);
    try {
        (void)grad_expectation(r, scalar(0.3));
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.status() == Status::Unsupported);
    }
    // Direct differentiation handles any differentiable gate.
    r.method = GradMethod::DirectDifferentiation;
    CHECK(grad_expectation(r, scalar(0.3)).allFinite());
}

TEST_CASE("Hessian", "[gradients]") {
    for (GradMethod m : kMethods) {
        const auto r = request(single_ry(), PauliSum::parse("1 Z"), m);
        CHECK_THAT(hessian_expectation(r, scalar(0.0))(0, 0),
                   WithinAbs(-1.0, 1e-12));
        const auto id = request(efficient_su2(2, 1), PauliSum::parse("1 II"), m);
        CHECK(max_abs(hessian_expectation(id, random_vec(8, -1, 1, 1))) < 1e-12);
    }

    const ParamCircuit c = efficient_su2(2, 1);
    const RVec w = random_vec(8, -M_PI, M_PI, 8);
    auto r = request(c, h_illustrative(), GradMethod::DirectDifferentiation);
    const RMat h = hessian_expectation(r, w);
    CHECK(max_abs(RMat(h - h.transpose())) < 1e-9);
    const double step = 1e-5;
    RMat fd(8, 8);
    for (int i = 0; i < 8; ++i) {
        RVec p = w;
        RVec q = w;
        p[i] += step;
        q[i] -= step;
        fd.col(i) = (grad_expectation(r, p) - grad_expectation(r, q)) / (2 * step);
    }
    CHECK(max_abs(RMat(h - fd)) < 1e-5);
    r.method = GradMethod::ParamShift;
    CHECK(max_abs(RMat(hessian_expectation(r, w) - h)) < 1e-7);
    r.method = GradMethod::LinearCombination;
    CHECK(max_abs(RMat(hessian_expectation(r, w) - h)) < 1e-7);
}

TEST_CASE("Fubini-Study metric", "[gradients]") {
    for (GradMethod m : kMethods) {
        for (double w : {0.0, 0.7, 2.5}) {
            const MetricResult f =
                fubini_study(single_ry(), scalar(w), StateVector::zero(1), m);
            CHECK_THAT(f.matrix(0, 0), WithinAbs(0.25, 1e-10));
            CHECK_THAT(f.qfim()(0, 0), WithinAbs(1.0, 1e-10));
        }
    }

    // Disjoint qubits on a product state: block diagonal.
    ParamCircuit prod(2);
    prod.add_rotation(GateKind::RY, {0});
    prod.add_rotation(GateKind::RX, {0});
    prod.add_rotation(GateKind::RY, {1});
    const MetricResult pf = fubini_study(prod, random_vec(3, -1, 1, 2),
                                         StateVector::zero(2));
    CHECK(std::abs(pf.matrix(0, 2)) < 1e-12);
    CHECK(std::abs(pf.matrix(1, 2)) < 1e-12);

    const ParamCircuit c = efficient_su2(2, 1);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const RVec w = random_vec(8, -M_PI, M_PI, 40 + seed);
        const StateVector in = StateVector::zero(2);
        const RMat dd = fubini_study(c, w, in).matrix;
        CHECK(max_abs(RMat(dd - dd.transpose())) < 1e-9);
        const Eigen::SelfAdjointEigenSolver<RMat> es(dd);
        CHECK(es.eigenvalues().minCoeff() > -1e-8);
        CHECK(max_abs(RMat(fubini_study(c, w, in, GradMethod::ParamShift).matrix -
                           dd)) < 1e-7);
        CHECK(max_abs(RMat(
                  fubini_study(c, w, in, GradMethod::LinearCombination).matrix -
                  dd)) < 1e-7);

        ParamCircuit phased = c;
        phased.add_fixed(GateKind::PHASE, {}, {0.77});
        CHECK(max_abs(RMat(fubini_study(phased, w, in).matrix - dd)) < 1e-9);
    }
}

TEST_CASE("probability gradients", "[gradients]") {
    const RMat g1 = grad_probabilities(single_ry(), scalar(M_PI / 2),
                                       StateVector::zero(1));
    CHECK_THAT(g1(0, 0), WithinAbs(-0.5, 1e-12));
    CHECK_THAT(g1(0, 1), WithinAbs(0.5, 1e-12));

    const ParamCircuit c = ry_cz_generator(3, 1);
    const StateVector in = StateVector::plus(3);
    // Point mass output at all-zero angles from |0>.
    const RMat pm = grad_probabilities(c, RVec::Zero(6), StateVector::zero(3));
    CHECK(pm.rowwise().sum().cwiseAbs().maxCoeff() < 1e-9);

    const RVec w = random_vec(6, -M_PI, M_PI, 17);
    const RMat ps = grad_probabilities(c, w, in);
    CHECK(ps.rowwise().sum().cwiseAbs().maxCoeff() < 1e-9);
    const RMat dd =
        grad_probabilities(c, w, in, GradMethod::DirectDifferentiation);
    CHECK(max_abs(RMat(ps - dd)) < 1e-9);
    const double h = 1e-5;
    for (int i = 0; i < 6; ++i) {
        RVec p = w;
        RVec m = w;
        p[i] += h;
        m[i] -= h;
        const RVec fd = (c.simulate(p, in).amplitudes().cwiseAbs2() -
                         c.simulate(m, in).amplitudes().cwiseAbs2()) /
                        (2 * h);
        CHECK(max_abs(RVec(ps.row(i).transpose() - fd)) < 1e-6);
    }
}

TEST_CASE("linear-combination circuits", "[gradients]") {
    const ParamCircuit c = single_ry();
    const PauliSum z = PauliSum::parse("1 Z");
    auto r = request(c, z, GradMethod::ParamShift);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const RVec w = random_vec(1, -M_PI, M_PI, seed);
        const LCCircuits lc = lc_gradient_circuit(c, 0, 0, LCMode::FirstExplicit, z);
        CHECK_THAT(lc.evaluate(w, StateVector::zero(1)),
                   WithinAbs(grad_expectation(r, w)[0], 1e-9));
        const LCCircuits li = lc_gradient_circuit(c, 0, 0, LCMode::FirstImplicit, z);
        CHECK_THAT(li.evaluate(w, StateVector::zero(1)),
                   WithinAbs(grad_expectation(r, w)[0], 1e-9));
        CHECK_THAT(lc_gradient_circuit(c, 0, 0, LCMode::Metric)
                       .evaluate(w, StateVector::zero(1)),
                   WithinAbs(0.25, 1e-9));
    }

    ParamCircuit two(2);
    two.add_rotation(GateKind::RY, {0});
    two.add_fixed(GateKind::CX, {0, 1});
    two.add_rotation(GateKind::RX, {1});
    const PauliSum o = PauliSum::parse("1 ZZ; 0.5 XI");
    const RVec w = random_vec(2, -M_PI, M_PI, 9);
    const RMat h = hessian_expectation(
        request(two, o, GradMethod::DirectDifferentiation), w);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK_THAT(lc_gradient_circuit(two, i, j, LCMode::SecondExplicit, o)
                           .evaluate(w, StateVector::zero(2)),
                       WithinAbs(h(i, j), 1e-7));
        }
    }
    // Ancilla-augmented circuits act on more qubits than the original.
    const LCCircuits lc = lc_gradient_circuit(two, 0, 0, LCMode::FirstExplicit, o);
    REQUIRE_FALSE(lc.linear.empty());
    CHECK(lc.linear[0].circuit.n_qubits() > 2);
}

TEST_CASE("pseudo-inverse and natural gradient step", "[gradients]") {
    RMat sing(2, 2);
    sing << 1, 1, 1, 1;
    const RMat p = pinv_symmetric(sing);
    CHECK(max_abs(RMat(sing * p * sing - sing)) < 1e-12);
    CHECK_THAT(p(0, 0), WithinAbs(0.25, 1e-12));

    const RVec w = random_vec(3, -1, 1, 1);
    MetricResult id;
    id.matrix = RMat::Identity(3, 3);
    CHECK(max_abs(RVec(qng_step(w, RVec::Zero(3), id, 0.1) - w)) == 0.0);
    const RVec g = random_vec(3, -1, 1, 2);
    CHECK(max_abs(RVec(qng_step(w, g, id, 0.1) - (w - 0.1 * g))) < 1e-15);

    const RVec w0 = scalar(M_PI / 4);
    const auto r = request(single_ry(), PauliSum::parse("1 Z"),
                           GradMethod::ParamShift);
    const MetricResult f = fubini_study(single_ry(), w0, StateVector::zero(1));
    const RVec next = qng_step(w0, grad_expectation(r, w0), f, 0.1);
    CHECK_THAT(next[0], WithinAbs(M_PI / 4 + 0.4 * std::sin(M_PI / 4), 1e-10));
    CHECK_THAT(next[0] - M_PI / 4, WithinAbs(0.2828, 1e-4));
}

TEST_CASE("state derivatives", "[gradients]") {
    const ParamCircuit c = efficient_su2(2, 1);
    const RVec w = random_vec(8, -M_PI, M_PI, 77);
    const StateVector in = random_state(2, 3);
    const Tangent t = state_tangent(c, w, in);
    const double h = 1e-6;
    for (int i = 0; i < 8; ++i) {
        RVec p = w;
        RVec m = w;
        p[i] += h;
        m[i] -= h;
        const CVec fd = (c.simulate(p, in).amplitudes() -
                         c.simulate(m, in).amplitudes()) /
                        (2 * h);
        CHECK(max_abs(CVec(t.dpsi[static_cast<std::size_t>(i)] - fd)) < 1e-8);
    }
    const auto d2 = state_second_derivatives(c, w, in);
    REQUIRE(d2.size() == 64);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            CHECK(max_abs(CVec(d2[static_cast<std::size_t>(i * 8 + j)] -
                               d2[static_cast<std::size_t>(j * 8 + i)])) < 1e-12);
        }
    }
}
