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

#include <numeric>

#include "helpers.hpp"
#include "vqsim/gibbs_qbm.hpp"
#include "vqsim/models.hpp"
#include "vqsim/oracles.hpp"

using namespace vqs;
using namespace vqs::test;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

RVec bell_target() {
    RVec p(4);
    p << 0.5, 0, 0, 0.5;
    return p;
}

QBMModel with_theta(QBMModel m, const RVec &theta) {
    m.theta = theta;
    return m;
}

QBMModel single_feature_model() {
    QBMModel m;
    m.hamiltonian = ParamHamiltonian(1, 1, 1);
    m.hamiltonian.add_term({"Z", 0.0, {{0, 0}}});
    m.theta = RVec::Ones(1);
    m.visible = {0};
    return m;
}

} // namespace

TEST_CASE("AMSGRAD matches a scalar reference recursion", "[gibbs_qbm]") {
    const AmsgradConfig cfg;
    CHECK(cfg.lr == 0.1);
    CHECK(cfg.beta1 == 0.7);
    CHECK(cfg.beta2 == 0.99);

    // First step from a unit gradient moves by lr.
    AmsgradState st = AmsgradState::zeros(1);
    RVec th = RVec::Zero(1);
    th = amsgrad_step(th, RVec::Ones(1), st, cfg);
    CHECK_THAT(th[0], WithinAbs(-0.1, 1e-7));

    const RVec grads = random_vec(20, -2, 2, 5);
    double m = 0, v = 0, vhat = 0, theta = 0.3;
    Amsgrad opt(1, cfg);
    RVec t = RVec::Constant(1, 0.3);
    for (int i = 0; i < grads.size(); ++i) {
        const double g = grads[i];
        m = cfg.beta1 * m + (1 - cfg.beta1) * g;
        v = cfg.beta2 * v + (1 - cfg.beta2) * g * g;
        vhat = std::max(vhat, v);
        const double corr = std::sqrt(1 - std::pow(cfg.beta2, i + 1)) /
                            (1 - std::pow(cfg.beta1, i + 1));
        theta -= cfg.lr * corr * m / (std::sqrt(vhat) + cfg.eps);
        t = opt.step(t, RVec::Constant(1, g));
        CHECK_THAT(t[0], WithinAbs(theta, 1e-14));
    }
    CHECK(opt.state().t == 20);
    opt.reset();
    CHECK(opt.state().t == 0);
}

TEST_CASE("Gibbs preparation of single-qubit and zero Hamiltonians",
          "[gibbs_qbm]") {
    GibbsTask t;
    t.hamiltonian = h_gibbs(1);
    CHECK_THAT(t.tau(), WithinAbs(0.5, 1e-15));
    const GibbsResult r = prepare_gibbs(t);
    CHECK(r.fidelity > 0.99);
    CHECK(r.fidelity <= 1.0);
    CHECK_THAT(r.state.matrix.trace().real(), WithinAbs(1.0, 1e-9));
    CHECK_THAT(r.fidelity, WithinAbs(fidelity(r.state, exact_gibbs(t.hamiltonian, 1.0)),
                                     1e-12));
    CHECK(r.trace.checkpoints.size() == 11);

    GibbsTask z;
    z.hamiltonian = PauliSum::parse("0 ZI");
    const GibbsResult zr = prepare_gibbs(z);
    CHECK(max_abs(CMat(zr.state.matrix - DensityMatrix::maximally_mixed(2).matrix)) <
          1e-14);

    GibbsTask bad;
    bad.hamiltonian = h_gibbs(1);
    bad.kT = 0.0;
    CHECK_THROWS_AS(prepare_gibbs(bad), Error);
}

TEST_CASE("Gibbs preparation on H3", "[gibbs_qbm]") {
    GibbsTask t;
    t.hamiltonian = h_gibbs(3);
    const GibbsResult r = prepare_gibbs(t);
    CHECK(r.fidelity > 0.93);
    CHECK_THAT(r.state.matrix.trace().real(), WithinAbs(1.0, 1e-9));
}

TEST_CASE("diagonal Gibbs preparation", "[gibbs_qbm]") {
    GibbsTask t;
    t.hamiltonian = PauliSum::parse("1 Z");
    const DiagonalGibbsResult r = prepare_gibbs_diagonal(t);
    RVec oracle(2);
    oracle << std::exp(-1.0), std::exp(1.0);
    oracle /= oracle.sum();
    const double l1 = (r.distribution.probabilities - oracle).cwiseAbs().sum();
    CHECK(l1 < 0.02);
    CHECK_THAT(r.l1, WithinAbs(l1, 1e-12));

    t.hamiltonian = PauliSum::parse("0 ZZ");
    const RVec u = prepare_gibbs_diagonal(t).distribution.probabilities;
    CHECK(max_abs(RVec(u - RVec::Constant(4, 0.25))) < 1e-14);

    t.hamiltonian = PauliSum::parse("1 ZZ");
    CHECK(prepare_gibbs_diagonal(t).l1 < 0.05);

    t.hamiltonian = PauliSum::parse("1 ZX");
    CHECK_THROWS_AS(prepare_gibbs_diagonal(t), Error);
}

TEST_CASE("cross-entropy and generative loss", "[gibbs_qbm]") {
    RVec point = RVec::Zero(4);
    point[3] = 1.0;
    CHECK_THAT(cross_entropy(point, point), WithinAbs(0.0, 1e-15));
    const RVec uni = RVec::Constant(4, 0.25);
    CHECK_THAT(cross_entropy(uni, uni), WithinAbs(std::log(4.0), 1e-14));
    CHECK_THAT(cross_entropy(uni, uni, QBMLoss::ModelWeighted),
               WithinAbs(std::log(4.0), 1e-14));
    // Clipping keeps zeros finite.
    CHECK(std::isfinite(cross_entropy(point, uni)));
    CHECK(std::isfinite(cross_entropy(uni, point, QBMLoss::ModelWeighted)));
    CHECK_THAT(cross_entropy(uni, bell_target(), QBMLoss::ModelWeighted),
               WithinAbs(-0.5 * std::log(0.5) - 0.5 * std::log(kLogClip), 1e-12));
    CHECK_THROWS_AS(cross_entropy(uni, RVec::Constant(2, 0.5)), Error);

    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const QBMModel m = with_theta(bell_qbm_model(), random_vec(3, -1, 1, seed));
        const RVec p = qbm_distribution(m).p;
        CHECK_THAT(p.sum(), WithinAbs(1.0, 1e-9));
        double ref = 0.0;
        for (int i = 0; i < 4; ++i) {
            ref -= bell_target()[i] * std::log(std::max(p[i], kLogClip));
        }
        CHECK_THAT(qbm_generative_loss(m, bell_target()), WithinAbs(ref, 1e-10));
    }
}

TEST_CASE("generative loss gradient matches finite differences",
          "[gibbs_qbm]") {
    for (QBMLoss form : {QBMLoss::DataWeighted, QBMLoss::ModelWeighted}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const RVec theta = random_vec(3, -1, 1, 30 + seed);
            const QBMModel m = with_theta(bell_qbm_model(), theta);
            const LossGrad lg = qbm_generative_loss_grad(m, bell_target(), form);
            CHECK_THAT(lg.loss,
                       WithinAbs(qbm_generative_loss(m, bell_target(), form), 1e-12));
            const double h = 1e-4;
            for (int j = 0; j < 3; ++j) {
                RVec tp = theta;
                RVec tm = theta;
                tp[j] += h;
                tm[j] -= h;
                const double fd =
                    (qbm_generative_loss(with_theta(m, tp), bell_target(), form) -
                     qbm_generative_loss(with_theta(m, tm), bell_target(), form)) /
                    (2 * h);
                CHECK(std::abs(lg.grad[j] - fd) <= 1e-3 * std::max(std::abs(fd), 1e-3));
            }
        }
    }
}

TEST_CASE("gradient vanishes when the target is the model distribution",
          "[gibbs_qbm]") {
    const QBMModel m = with_theta(bell_qbm_model(), random_vec(3, -1, 1, 9));
    const RVec p = qbm_distribution(m).p;
    CHECK(qbm_generative_loss_grad(m, p).grad.norm() < 1e-6);
}

TEST_CASE("Bell training reduces the distance to the target", "[gibbs_qbm]") {
    QBMTrainConfig cfg;
    const QBMTrainResult r =
        qbm_train_generative(bell_qbm_model(), bell_target(), cfg, 1);
    REQUIRE(r.record.l1.size() == 51);
    REQUIRE(r.record.loss.size() == 51);
    CHECK(r.record.l1.back() < r.record.l1.front());
    const double entropy = -std::log(0.5);
    CHECK_THAT(r.record.loss.back(), WithinAbs(entropy, 0.05));
    // Same seed, same result.
    const QBMTrainResult again =
        qbm_train_generative(bell_qbm_model(), bell_target(), cfg, 1);
    CHECK(max_abs(RVec(again.theta - r.theta)) == 0.0);
    CHECK(r.record.to_csv() == again.record.to_csv());
}

TEST_CASE("QBM model validation and text round trip", "[gibbs_qbm]") {
    QBMModel m = discriminative_model(DiscVariant::H2, 3);
    CHECK(m.visible == std::vector<int>{0});
    CHECK(m.hidden() == std::vector<int>{1});
    m.theta = random_vec(m.hamiltonian.n_params(), -1, 1, 2);
    const QBMModel r = QBMModel::parse(m.to_text());
    CHECK(r.to_text() == m.to_text());
    CHECK(max_abs(RVec(r.theta - m.theta)) == 0.0);

    QBMModel bad = bell_qbm_model();
    bad.visible = {0, 0};
    CHECK_THROWS_AS(bad.validate(), Error);
    bad.visible = {0, 2};
    CHECK_THROWS_AS(bad.validate(), Error);
    CHECK_THROWS_AS(QBMModel::parse("kT 1\nbogus\n"), Error);
}

TEST_CASE("discriminative Hamiltonian variants", "[gibbs_qbm]") {
    const RVec x = random_vec(2, -1, 1, 4);
    const ParamHamiltonian h0 = discriminative_hamiltonian(DiscVariant::H0, 2);
    const ParamHamiltonian h1 = discriminative_hamiltonian(DiscVariant::H1, 2);
    const ParamHamiltonian h2 = discriminative_hamiltonian(DiscVariant::H2, 2);
    CHECK(h0.n_params() == 6);
    CHECK(h1.n_params() == 6);
    CHECK(h2.n_params() == 10);
    const RVec th = random_vec(6, -1, 1, 5);
    const CMat diff = h1.bind(th, x).to_matrix() - h0.bind(th, x).to_matrix();
    CHECK(max_abs(CMat(diff - PauliSum::parse("0.1 XI; 0.1 IX").to_matrix())) <
          1e-14);
    CHECK(h0.bind(th, x).is_diagonal());
    CHECK_THAT(h0.weights(th, x)[0], WithinAbs(th[0] * x[0] + th[1] * x[1], 1e-15));
}

TEST_CASE("discriminative prediction", "[gibbs_qbm]") {
    QBMModel zero = discriminative_model(DiscVariant::H1, 2);
    const RVec p = qbm_discriminative_predict(zero, random_vec(2, -1, 1, 1));
    CHECK(max_abs(RVec(p - RVec::Constant(2, 0.5))) < 1e-12);

    QBMModel one = single_feature_model();
    one.solver.kind = SolverKind::RK54;
    const RVec q = qbm_discriminative_predict(one, RVec::Ones(1));
    const double expect = std::exp(-1.0) / (std::exp(-1.0) + std::exp(1.0));
    CHECK_THAT(expect, WithinAbs(0.1192, 1e-4));
    CHECK_THAT(q[0], WithinAbs(expect, 1e-3));
    CHECK_THROWS_AS(qbm_discriminative_predict(one, RVec::Ones(2)), Error);
}

TEST_CASE("classification metrics", "[gibbs_qbm]") {
    const auto m = ClassificationMetrics::from_confusion(7, 1, 5, 37);
    CHECK_THAT(m.accuracy, WithinAbs(0.88, 1e-15));
    CHECK_THAT(m.precision, WithinAbs(0.875, 1e-15));
    CHECK_THAT(m.recall, WithinAbs(7.0 / 12.0, 1e-15));
    CHECK_THAT(m.recall, WithinAbs(0.583, 1e-3));
    CHECK_THAT(m.f1, WithinAbs(0.7, 1e-12));
    const auto none = ClassificationMetrics::from_confusion(0, 0, 3, 7);
    CHECK(none.precision == 0.0);
    CHECK(none.f1 == 0.0);

    const std::vector<int> truth = {1, 1, 0, 0, 1};
    const std::vector<int> pred = {1, 0, 0, 1, 1};
    const auto c = classification_metrics(truth, pred);
    CHECK(c.tp == 2);
    CHECK(c.fp == 1);
    CHECK(c.fn == 1);
    CHECK(c.tn == 1);
    CHECK_THROWS_AS(classification_metrics(truth, {1, 0}), Error);
}

TEST_CASE("datasets, standardization and deduplication", "[gibbs_qbm]") {
    const Dataset d = synthetic_fraud_dataset(400, 3);
    CHECK(d.size() == 400);
    CHECK(d.n_features() == 4);
    const int pos = std::accumulate(d.y.begin(), d.y.end(), 0);
    CHECK(pos > 30);
    CHECK(pos < 90);
    const Dataset round = parse_dataset_csv(dataset_to_csv(d));
    CHECK(max_abs(RMat(round.X - d.X)) == 0.0);
    CHECK(round.y == d.y);
    CHECK(dataset_to_csv(d).rfind("feature_0,feature_1,feature_2,feature_3,label\n", 0) == 0);

    const Standardizer s = Standardizer::fit(d.X);
    const RMat z = s.apply(d.X);
    CHECK(z.colwise().mean().cwiseAbs().maxCoeff() < 1e-12);

    const UniqueSamples u = unique_samples(d, 2);
    CHECK(u.X.rows() < d.size());
    CHECK_THAT(u.weight.sum(), WithinAbs(1.0, 1e-12));
    CHECK(max_abs(RVec(u.labels.rowwise().sum() - RVec::Ones(u.X.rows()))) < 1e-12);

    Dataset single = d;
    std::fill(single.y.begin(), single.y.end(), 0);
    CHECK_THROWS_AS(qbm_train_discriminative(discriminative_model(DiscVariant::H1, 4),
                                             single, DiscTrainConfig{}, 1),
                    Error);
    CHECK_THROWS_AS(parse_dataset_csv("a,b\n1,2\n"), Error);
}

TEST_CASE("discriminative loss gradient", "[gibbs_qbm]") {
    Dataset d = separable_dataset(12, 2, 4);
    d.X = Standardizer::fit(d.X).apply(d.X);
    const UniqueSamples u = unique_samples(d, 2);
    QBMModel m = discriminative_model(DiscVariant::H1, 2);
    m.theta = random_vec(6, -1, 1, 8);
    const LossGrad lg = qbm_discriminative_loss_grad(m, u);
    const double h = 1e-4;
    for (int j = 0; j < 6; ++j) {
        RVec tp = m.theta;
        RVec tm = m.theta;
        tp[j] += h;
        tm[j] -= h;
        const double fd = (qbm_discriminative_loss_grad(with_theta(m, tp), u, false).loss -
                           qbm_discriminative_loss_grad(with_theta(m, tm), u, false).loss) /
                          (2 * h);
        CHECK(std::abs(lg.grad[j] - fd) <= 1e-3 * std::max(std::abs(fd), 1e-3));
    }

    // Labels set to the model's own conditional distribution: zero gradient.
    UniqueSamples matched = u;
    for (Eigen::Index i = 0; i < u.X.rows(); ++i) {
        matched.labels.row(i) =
            qbm_discriminative_predict(m, u.X.row(i).transpose()).transpose();
    }
    CHECK(qbm_discriminative_loss_grad(m, matched).grad.norm() < 1e-6);
}

TEST_CASE("discriminative training separates a synthetic set",
          "[gibbs_qbm]") {
    const Dataset all = separable_dataset(150, 2, 7);
    std::vector<int> train(100);
    std::vector<int> test(50);
    std::iota(train.begin(), train.end(), 0);
    std::iota(test.begin(), test.end(), 100);
    const Standardizer s = Standardizer::fit(all.subset(train).X);
    Dataset tr = all.subset(train);
    Dataset te = all.subset(test);
    tr.X = s.apply(tr.X);
    te.X = s.apply(te.X);
    DiscTrainConfig cfg;
    cfg.max_iterations = 40;
    const QBMModel base = discriminative_model(DiscVariant::H0, 2);
    const DiscTrainResult r = qbm_train_discriminative(base, tr, cfg, 3);
    CHECK(r.record.loss.back() < r.record.loss.front());
    const auto m = classification_metrics(te.y, qbm_predict_labels(with_theta(base, r.theta), te.X));
    CHECK(m.accuracy >= 0.9);
}
