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
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "vqsim/gradients.hpp"
#include "vqsim/qgan.hpp"
#include "vqsim/rng.hpp"

namespace vqs {

namespace {

template <class Draw>
std::vector<double> rounded_on_grid(int n, std::uint64_t seed, Draw draw) {
    require(n >= 0, Status::InvalidArgument, "sample count must be >= 0");
    Rng rng(seed);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(out.size()) < n) {
        const double v = std::round(draw(rng));
        if (v >= 0.0 && v <= 7.0) {
            out.push_back(v);
        }
    }
    return out;
}

RVec column_mean(const RMat &X) { return X.colwise().mean().transpose(); }

RVec column_std(const RMat &X, const RVec &mean) {
    RVec s(X.cols());
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
        s[c] = std::sqrt((X.col(c).array() - mean[c]).square().mean());
    }
    return s;
}

} // namespace

double ks_statistic(const std::vector<double> &p_samples,
                    const std::vector<double> &q_samples) {
    require(!p_samples.empty() && !q_samples.empty(), Status::InvalidArgument,
            "KS statistic needs nonempty sample sets");
    std::vector<double> a = p_samples;
    std::vector<double> b = q_samples;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() || j < b.size()) {
        double v = std::numeric_limits<double>::infinity();
        if (i < a.size()) {
            v = a[i];
        }
        if (j < b.size()) {
            v = std::min(v, b[j]);
        }
        while (i < a.size() && a[i] <= v) {
            ++i;
        }
        while (j < b.size() && b[j] <= v) {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    return d;
}

double relative_entropy(const RVec &p, const RVec &q) {
    require(p.size() == q.size(), Status::DimensionMismatch,
            "distribution sizes differ");
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            s += p[i] * std::log(p[i] / std::max(q[i], kGanLogClip));
        }
    }
    return s;
}

std::vector<double> sample_lognormal(int n, std::uint64_t seed, double mu,
                                     double sigma) {
    require(sigma > 0.0, Status::InvalidArgument, "sigma must be positive");
    return rounded_on_grid(
        n, seed, [&](Rng &r) { return std::exp(r.normal(mu, sigma)); });
}

std::vector<double> sample_triangular(int n, std::uint64_t seed, double lo,
                                      double hi, double mode) {
    require(lo < hi && mode >= lo && mode <= hi, Status::InvalidArgument,
            "triangular needs lo <= mode <= hi and lo < hi");
    const double fc = (mode - lo) / (hi - lo);
    return rounded_on_grid(n, seed, [&](Rng &r) {
        const double u = r.uniform();
        return u < fc ? lo + std::sqrt(u * (hi - lo) * (mode - lo))
                      : hi - std::sqrt((1.0 - u) * (hi - lo) * (hi - mode));
    });
}

std::vector<double> sample_bimodal(int n, std::uint64_t seed) {
    return rounded_on_grid(n, seed, [](Rng &r) {
        return r.uniform() < 0.5 ? r.normal(0.5, 1.0) : r.normal(3.5, 0.5);
    });
}

std::vector<double> sample_distribution(const RVec &p, int n,
                                        std::uint64_t seed) {
    check_distribution(p, 1e-6);
    Rng rng(seed);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (auto &v : out) {
        v = static_cast<double>(rng.categorical(p));
    }
    return out;
}

RMat as_column(const std::vector<double> &values) {
    return Eigen::Map<const RVec>(values.data(),
                                  static_cast<Eigen::Index>(values.size()));
}

RVec Generator::probabilities() const {
    return circuit.simulate(omega, input).amplitudes().cwiseAbs2();
}

ParamCircuit Generator::loader() const {
    ParamCircuit c = preparation;
    c.append(circuit.bound(omega));
    return c;
}

Generator init_generator(InitStrategy strategy, const std::vector<int> &qubits,
                         int depth, std::uint64_t seed,
                         const DataStats &stats) {
    require(!qubits.empty(), Status::InvalidArgument,
            "generator needs at least one register");
    int n = 0;
    for (int q : qubits) {
        require(q >= 1, Status::InvalidArgument,
                "registers need at least one qubit");
        n += q;
    }
    check_qubit_count(n);
    require(depth >= 0, Status::InvalidArgument, "depth must be >= 0");
    Generator g;
    g.circuit = ry_cz_generator(n, depth);
    g.preparation = ParamCircuit(n);
    const int k = g.circuit.n_params();
    switch (strategy) {
    case InitStrategy::Uniform:
        for (int q = 0; q < n; ++q) {
            g.preparation.add_fixed(GateKind::H, {q});
        }
        g.input = StateVector::plus(n);
        g.omega = random_params(k, 0.1, seed);
        break;
    case InitStrategy::Random:
        g.input = StateVector::zero(n);
        g.omega = random_params(k, M_PI, seed);
        break;
    case InitStrategy::Normal: {
        const auto d = static_cast<Eigen::Index>(qubits.size());
        require(stats.mean.size() == d && stats.stddev.size() == d,
                Status::InvalidArgument,
                "normal initialization needs mean and std per register");
        RVec target = RVec::Ones(1);
        for (Eigen::Index r = d; r-- > 0;) {
            const RVec pr = discretized_normal(stats.mean[r], stats.stddev[r],
                                               1 << qubits[static_cast<std::size_t>(r)]);
            RVec next(target.size() * pr.size());
            for (Eigen::Index i = 0; i < target.size(); ++i) {
                next.segment(i * pr.size(), pr.size()) = target[i] * pr;
            }
            target = std::move(next);
        }
        const ParamCircuit loader = ry_cz_generator(n, std::max(depth, 2));
        const FitResult fit = fit_distribution(target, loader,
                                               StateVector::zero(n), seed);
        g.preparation = loader.bound(fit.omega);
        g.input = g.preparation.simulate(RVec());
        g.omega = random_params(k, 0.1, seed);
        break;
    }
    }
    return g;
}

int GridMap::total_qubits() const {
    return std::accumulate(qubits.begin(), qubits.end(), 0);
}

RMat GridMap::to_grid(const RMat &samples) const {
    const auto d = static_cast<Eigen::Index>(qubits.size());
    require(samples.cols() == d && lo.size() == d && hi.size() == d,
            Status::DimensionMismatch, "sample dimension differs from grid");
    RMat g(samples.rows(), d);
    for (Eigen::Index c = 0; c < d; ++c) {
        require(hi[c] > lo[c], Status::InvalidArgument,
                "grid range must satisfy hi > lo");
        const double top = static_cast<double>((1 << qubits[static_cast<std::size_t>(c)]) - 1);
        for (Eigen::Index r = 0; r < samples.rows(); ++r) {
            const double v = (samples(r, c) - lo[c]) / (hi[c] - lo[c]) * top;
            g(r, c) = std::clamp(std::round(v), 0.0, top);
        }
    }
    return g;
}

RVec GridMap::point(std::uint64_t b) const {
    RVec p(static_cast<Eigen::Index>(qubits.size()));
    int shift = 0;
    for (std::size_t r = 0; r < qubits.size(); ++r) {
        p[static_cast<Eigen::Index>(r)] =
            static_cast<double>((b >> shift) & ((1ULL << qubits[r]) - 1));
        shift += qubits[r];
    }
    return p;
}

std::uint64_t GridMap::index(const RVec &grid_point) const {
    std::uint64_t b = 0;
    int shift = 0;
    for (std::size_t r = 0; r < qubits.size(); ++r) {
        b |= static_cast<std::uint64_t>(grid_point[static_cast<Eigen::Index>(r)])
             << shift;
        shift += qubits[r];
    }
    return b;
}

QGANResult qgan_train(const QGANConfig &cfg, const RMat &samples) {
    GridMap grid;
    grid.qubits = cfg.qubits;
    const auto d = static_cast<Eigen::Index>(cfg.qubits.size());
    grid.lo = RVec::Zero(d);
    grid.hi.resize(d);
    for (Eigen::Index r = 0; r < d; ++r) {
        grid.hi[r] = static_cast<double>((1 << cfg.qubits[static_cast<std::size_t>(r)]) - 1);
    }
    return qgan_train(cfg, samples, grid);
}

QGANResult qgan_train(const QGANConfig &cfg, const RMat &samples,
                      const GridMap &grid) {
    require(cfg.epochs >= 0, Status::InvalidArgument, "epochs must be >= 0");
    require(cfg.batch_size >= 1, Status::InvalidArgument,
            "batch_size must be >= 1");
    require(cfg.lr > 0.0, Status::InvalidArgument, "lr must be positive");
    require(cfg.disc_lr >= 0.0, Status::InvalidArgument,
            "disc_lr must be >= 0");
    require(cfg.gradient_penalty >= 0.0, Status::InvalidArgument,
            "gradient_penalty must be >= 0");
    require(cfg.ks_samples >= 1, Status::InvalidArgument,
            "ks_samples must be >= 1");
    require(grid.qubits == cfg.qubits, Status::InvalidArgument,
            "grid registers differ from the configuration");
    require(samples.rows() >= 1, Status::InvalidArgument,
            "training needs at least one sample");
    const int n = grid.total_qubits();
    const Eigen::Index dim = Eigen::Index{1} << n;
    const Eigen::Index d = static_cast<Eigen::Index>(cfg.qubits.size());

    const RMat gridded = grid.to_grid(samples);
    std::vector<std::uint64_t> idx(static_cast<std::size_t>(gridded.rows()));
    RVec empirical = RVec::Zero(dim);
    for (Eigen::Index r = 0; r < gridded.rows(); ++r) {
        idx[static_cast<std::size_t>(r)] = grid.index(gridded.row(r).transpose());
        empirical[static_cast<Eigen::Index>(idx[static_cast<std::size_t>(r)])] += 1.0;
    }
    empirical /= static_cast<double>(gridded.rows());
    RVec target = empirical;
    if (cfg.target.size() > 0) {
        require(cfg.target.size() == dim, Status::DimensionMismatch,
                "target distribution size differs from the grid");
        check_distribution(cfg.target, 1e-6);
        target = cfg.target;
    }

    DataStats stats;
    stats.mean = column_mean(gridded);
    stats.stddev = column_std(gridded, stats.mean);

    QGANResult res;
    res.grid = grid;
    res.generator = init_generator(cfg.init, cfg.qubits, cfg.depth,
                                   substream(cfg.seed, 0), stats);
    const bool bits = cfg.disc_input == DiscInput::Bits;
    std::vector<int> sizes{bits ? n : static_cast<int>(d)};
    sizes.insert(sizes.end(), cfg.hidden.begin(), cfg.hidden.end());
    sizes.push_back(1);
    res.discriminator =
        Discriminator(sizes, substream(cfg.seed, 1), cfg.leaky_slope);

    // Discriminator input of each basis state.
    RMat points(dim, bits ? n : d);
    for (Eigen::Index b = 0; b < dim; ++b) {
        if (bits) {
            for (int q = 0; q < n; ++q) {
                points(b, q) = static_cast<double>((b >> q) & 1);
            }
        } else {
            points.row(b) =
                grid.point(static_cast<std::uint64_t>(b)).transpose();
        }
    }
    const AmsgradConfig ocfg{cfg.lr, cfg.beta1, cfg.beta2, 1e-8};
    Amsgrad opt_g(res.generator.circuit.n_params(), ocfg);
    AmsgradConfig dcfg = ocfg;
    if (cfg.disc_lr > 0.0) {
        dcfg.lr = cfg.disc_lr;
    }
    Amsgrad opt_d(res.discriminator.n_params(), dcfg);
    Rng shuffle_rng(substream(cfg.seed, 2));
    const std::vector<double> data_values =
        d == 1 ? std::vector<double>(gridded.data(), gridded.data() + gridded.rows())
               : std::vector<double>{};

    auto ks_now = [&](std::uint64_t stream) {
        if (d != 1) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        const std::vector<double> gen = sample_distribution(
            res.generator.probabilities(), cfg.ks_samples,
            substream(cfg.seed, stream));
        std::vector<double> real = data_values;
        Rng r(substream(cfg.seed, stream + 1));
        r.shuffle(real);
        real.resize(std::min<std::size_t>(real.size(),
                                          static_cast<std::size_t>(cfg.ks_samples)));
        return ks_statistic(gen, real);
    };

    RVec p = res.generator.probabilities();
    res.initial_relative_entropy = relative_entropy(p, target);
    const std::size_t n_samples = idx.size();
    const std::size_t bs =
        std::min(n_samples, static_cast<std::size_t>(cfg.batch_size));
    const std::size_t n_batches = n_samples / bs;
    std::vector<std::size_t> order(n_samples);
    std::iota(order.begin(), order.end(), 0);

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        shuffle_rng.shuffle(order);
        double lg = 0.0, ld = 0.0;
        for (std::size_t b = 0; b < n_batches; ++b) {
            RVec q = RVec::Zero(dim);
            for (std::size_t s = b * bs; s < (b + 1) * bs; ++s) {
                q[static_cast<Eigen::Index>(idx[order[s]])] += 1.0;
            }
            q /= static_cast<double>(bs);

            // Discriminator: real points weighted by q, generated grid
            // weighted by p, gradient penalty at the real points.
            std::vector<Eigen::Index> real;
            for (Eigen::Index j = 0; j < dim; ++j) {
                if (q[j] > 0.0) {
                    real.push_back(j);
                }
            }
            const auto nr = static_cast<Eigen::Index>(real.size());
            RMat inputs(nr + dim, points.cols());
            RVec targets(nr + dim), weights(nr + dim);
            for (Eigen::Index i = 0; i < nr; ++i) {
                inputs.row(i) = points.row(real[static_cast<std::size_t>(i)]);
                targets[i] = 1.0;
                weights[i] = q[real[static_cast<std::size_t>(i)]];
            }
            inputs.bottomRows(dim) = points;
            targets.tail(dim).setZero();
            weights.tail(dim) = p;
            BatchResult br = discriminator_forward_backward(
                res.discriminator, inputs, targets, weights);
            if (cfg.gradient_penalty > 0.0) {
                for (Eigen::Index i = 0; i < nr; ++i) {
                    const auto pen = res.discriminator.input_gradient_penalty(
                        inputs.row(i).transpose());
                    br.loss += cfg.gradient_penalty * weights[i] * pen.value;
                    br.grad += cfg.gradient_penalty * weights[i] * pen.dparams;
                }
            }
            ld = br.loss;
            res.discriminator.set_params(
                opt_d.step(res.discriminator.params(), br.grad));

            // Generator: L_G = -sum_j p_j log D(g_j).
            RVec logd(dim);
            for (Eigen::Index j = 0; j < dim; ++j) {
                logd[j] = std::log(std::max(
                    res.discriminator.forward(points.row(j).transpose()),
                    kGanLogClip));
            }
            lg = -p.dot(logd);
            const RMat gp = grad_probabilities(
                res.generator.circuit, res.generator.omega,
                res.generator.input, GradMethod::ParamShift);
            res.generator.omega = opt_g.step(res.generator.omega, -gp * logd);
            p = res.generator.probabilities();
        }
        require(std::isfinite(lg) && std::isfinite(ld), Status::Numerical,
                "non-finite qGAN loss");
        res.record.loss.push_back(lg);
        res.record.disc_loss.push_back(ld);
        res.record.relative_entropy.push_back(relative_entropy(p, target));
        res.record.params.push_back(p);
        if (cfg.ks_every_epoch) {
            res.record.ks.push_back(
                ks_now(3 + 2 * static_cast<std::uint64_t>(epoch)));
        }
    }
    res.final_relative_entropy = relative_entropy(p, target);
    res.final_ks = ks_now(3 + 2 * static_cast<std::uint64_t>(cfg.epochs));
    return res;
}

} // namespace vqs
