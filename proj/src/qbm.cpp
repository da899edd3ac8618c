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
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "vqsim/gibbs_qbm.hpp"
#include "vqsim/gradients.hpp"
#include "vqsim/rng.hpp"
#include "vqsim/textio.hpp"

namespace vqs {

namespace {

RVec uniform_theta(int k, std::uint64_t seed) {
    Rng rng(seed);
    RVec t(k);
    for (int i = 0; i < k; ++i) {
        t[i] = rng.uniform(-1.0, 1.0);
    }
    return t;
}

void check_probability_vector(const RVec &p, Eigen::Index dim,
                              const std::string &what) {
    require(p.size() == dim, Status::DimensionMismatch,
            what + " has " + std::to_string(p.size()) + " entries, expected " +
                std::to_string(dim));
    require(p.allFinite() && p.minCoeff() >= 0.0, Status::InvalidArgument,
            what + " must be finite and nonnegative");
    require(std::abs(p.sum() - 1.0) <= 1e-6, Status::InvalidArgument,
            what + " must sum to 1");
}

/// d loss / d p for the clipped cross-entropy.
RVec cross_entropy_dp(const RVec &p_model, const RVec &p_data, QBMLoss form) {
    RVec g(p_model.size());
    for (Eigen::Index i = 0; i < p_model.size(); ++i) {
        if (form == QBMLoss::DataWeighted) {
            g[i] = p_model[i] > kLogClip ? -p_data[i] / p_model[i] : 0.0;
        } else {
            g[i] = -std::log(std::max(p_data[i], kLogClip));
        }
    }
    return g;
}

} // namespace

std::vector<int> QBMModel::hidden() const {
    std::vector<int> h;
    for (int q = 0; q < n_qubits(); ++q) {
        if (std::find(visible.begin(), visible.end(), q) == visible.end()) {
            h.push_back(q);
        }
    }
    return h;
}

void QBMModel::validate() const {
    const int n = n_qubits();
    require(n >= 1, Status::InvalidArgument, "QBM needs at least one qubit");
    check_qubit_count(2 * n);
    require(!visible.empty(), Status::InvalidArgument,
            "QBM needs at least one visible qubit");
    std::set<int> seen;
    for (int q : visible) {
        require(q >= 0 && q < n, Status::InvalidArgument,
                "visible qubit out of range");
        require(seen.insert(q).second, Status::InvalidArgument,
                "duplicate visible qubit");
    }
    require(theta.size() == hamiltonian.n_params(), Status::DimensionMismatch,
            "theta has " + std::to_string(theta.size()) +
                " entries, Hamiltonian expects " +
                std::to_string(hamiltonian.n_params()));
    require(std::isfinite(kT) && kT > 0.0, Status::InvalidArgument,
            "kT must be positive");
    require(depth >= 0, Status::InvalidArgument, "depth must be >= 0");
}

std::string QBMModel::to_text() const {
    std::string s;
    s += "n_qubits = " + std::to_string(n_qubits()) + "\n";
    s += "n_params = " + std::to_string(hamiltonian.n_params()) + "\n";
    s += "n_features = " + std::to_string(hamiltonian.n_features()) + "\n";
    s += "kT = " + format_double(kT) + "\n";
    s += "depth = " + std::to_string(depth) + "\n";
    s += "steps = " + std::to_string(solver.steps) + "\n";
    std::string vis;
    for (std::size_t i = 0; i < visible.size(); ++i) {
        vis += (i ? "," : "") + std::to_string(visible[i]);
    }
    s += "visible = " + vis + "\n";
    s += "theta = " + format_vector(theta) + "\n";
    const auto &terms = hamiltonian.terms();
    for (std::size_t c = 0; c < terms.size(); ++c) {
        s += "term_" + std::to_string(c) + " = " + terms[c].label + " " +
             format_double(terms[c].offset);
        for (const auto &[p, f] : terms[c].factors) {
            s += " " + std::to_string(p) + ":" + std::to_string(f);
        }
        s += "\n";
    }
    return s;
}

QBMModel QBMModel::parse(const std::string &text) {
    const KeyValues kv = parse_key_values(text);
    auto get = [&](const std::string &key) -> const std::string & {
        const auto it = kv.find(key);
        require(it != kv.end(), Status::Parse, "missing key '" + key + "'");
        return it->second;
    };
    const int n = static_cast<int>(parse_int(get("n_qubits")));
    const int k = static_cast<int>(parse_int(get("n_params")));
    const int d = static_cast<int>(parse_int(get("n_features")));
    QBMModel m;
    m.hamiltonian = ParamHamiltonian(n, k, d);
    for (int c = 0;; ++c) {
        const auto it = kv.find("term_" + std::to_string(c));
        if (it == kv.end()) {
            break;
        }
        std::istringstream ss(it->second);
        ParamTerm t;
        std::string off;
        require(static_cast<bool>(ss >> t.label >> off), Status::Parse,
                "term needs a label and an offset");
        t.offset = parse_double(off);
        std::string tok;
        while (ss >> tok) {
            const auto colon = tok.find(':');
            require(colon != std::string::npos, Status::Parse,
                    "factor must read param:feature");
            t.factors.emplace_back(
                static_cast<int>(parse_int(tok.substr(0, colon))),
                static_cast<int>(parse_int(tok.substr(colon + 1))));
        }
        m.hamiltonian.add_term(std::move(t));
    }
    m.kT = parse_double(get("kT"));
    m.depth = static_cast<int>(parse_int(get("depth")));
    m.solver.steps = static_cast<int>(parse_int(get("steps")));
    for (double v : parse_vector(get("visible"))) {
        m.visible.push_back(static_cast<int>(v));
    }
    m.theta = parse_vector(get("theta"));
    m.validate();
    return m;
}

QBMDistribution qbm_distribution(const QBMModel &model, const RVec &x,
                                 bool with_gradient) {
    model.validate();
    const int n = model.n_qubits();
    const Ansatz a = gibbs_ansatz(n, model.depth);
    VarQTEProblem p;
    p.ansatz = a.circuit;
    p.input = StateVector::zero(2 * n);
    p.omega0 = a.omega0;
    p.T = 1.0 / (2.0 * model.kT);
    p.solver = model.solver;
    p.track_oracle = false;
    p.track_error_bound = false;

    QBMDistribution out;
    RMat jac;
    if (with_gradient) {
        ChainRuleResult cr =
            chain_rule_evolve(p, model.hamiltonian, model.theta, x);
        out.omega = std::move(cr.omega_T);
        jac = std::move(cr.jacobian);
    } else {
        p.hamiltonian = model.hamiltonian.bind(model.theta, x).extended(n);
        out.omega = evolve(p).checkpoints.back().omega;
    }
    const StateVector psi = p.ansatz.simulate(out.omega, p.input);
    out.p = marginal_probabilities(psi.amplitudes().cwiseAbs2(), 2 * n,
                                   model.visible);
    if (with_gradient) {
        const RMat g = grad_probabilities(p.ansatz, out.omega, p.input,
                                          GradMethod::DirectDifferentiation);
        RMat gv(g.rows(), out.p.size());
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            gv.row(i) =
                marginal_probabilities(g.row(i).transpose(), 2 * n,
                                       model.visible)
                    .transpose();
        }
        out.dp = gv.transpose() * jac;
    }
    return out;
}

double cross_entropy(const RVec &p_model, const RVec &p_data, QBMLoss form) {
    require(p_model.size() == p_data.size(), Status::DimensionMismatch,
            "distribution sizes differ");
    double l = 0.0;
    for (Eigen::Index i = 0; i < p_model.size(); ++i) {
        if (form == QBMLoss::DataWeighted) {
            l -= p_data[i] * std::log(std::max(p_model[i], kLogClip));
        } else {
            l -= p_model[i] * std::log(std::max(p_data[i], kLogClip));
        }
    }
    return l;
}

double qbm_generative_loss(const QBMModel &model, const RVec &p_data,
                           QBMLoss form) {
    const Eigen::Index dim = Eigen::Index{1}
                             << static_cast<int>(model.visible.size());
    check_probability_vector(p_data, dim, "p_data");
    return cross_entropy(qbm_distribution(model).p, p_data, form);
}

LossGrad qbm_generative_loss_grad(const QBMModel &model, const RVec &p_data,
                                  QBMLoss form) {
    const Eigen::Index dim = Eigen::Index{1}
                             << static_cast<int>(model.visible.size());
    check_probability_vector(p_data, dim, "p_data");
    const QBMDistribution d = qbm_distribution(model, {}, true);
    LossGrad r;
    r.p = d.p;
    r.loss = cross_entropy(d.p, p_data, form);
    r.grad = d.dp.transpose() * cross_entropy_dp(d.p, p_data, form);
    return r;
}

QBMTrainResult qbm_train_generative(QBMModel model, const RVec &p_data,
                                    const QBMTrainConfig &cfg,
                                    std::uint64_t seed) {
    require(cfg.iterations >= 0, Status::InvalidArgument,
            "iterations must be >= 0");
    model.theta = uniform_theta(model.hamiltonian.n_params(), seed);
    model.validate();
    Amsgrad opt(model.hamiltonian.n_params(), cfg.optimizer);
    QBMTrainResult out;
    for (int it = 0; it < cfg.iterations; ++it) {
        const LossGrad lg = qbm_generative_loss_grad(model, p_data, cfg.loss);
        out.record.loss.push_back(lg.loss);
        out.record.l1.push_back((lg.p - p_data).lpNorm<1>());
        out.record.params.push_back(model.theta);
        model.theta = opt.step(model.theta, lg.grad);
    }
    const RVec p = qbm_distribution(model).p;
    out.record.loss.push_back(cross_entropy(p, p_data, cfg.loss));
    out.record.l1.push_back((p - p_data).lpNorm<1>());
    out.record.params.push_back(model.theta);
    out.theta = model.theta;
    return out;
}

QBMModel bell_qbm_model(double kT) {
    QBMModel m;
    m.hamiltonian = ParamHamiltonian(2, 3);
    m.hamiltonian.add_linear(0, "ZZ");
    m.hamiltonian.add_linear(1, "ZI");
    m.hamiltonian.add_linear(2, "IZ");
    m.theta = RVec::Zero(3);
    m.visible = {0, 1};
    m.kT = kT;
    return m;
}

ParamHamiltonian discriminative_hamiltonian(DiscVariant v, int n_features) {
    require(n_features >= 1, Status::InvalidArgument,
            "discriminative model needs at least one feature");
    std::vector<std::string> labels = {"ZZ", "ZI", "IZ"};
    if (v == DiscVariant::H2) {
        labels.push_back("XI");
        labels.push_back("IX");
    }
    const int s = n_features;
    ParamHamiltonian h(2, static_cast<int>(labels.size()) * s, s);
    for (std::size_t c = 0; c < labels.size(); ++c) {
        ParamTerm t;
        t.label = labels[c];
        for (int f = 0; f < s; ++f) {
            t.factors.emplace_back(static_cast<int>(c) * s + f, f);
        }
        h.add_term(std::move(t));
    }
    if (v == DiscVariant::H1) {
        h.add_term({"XI", 0.1, {}});
        h.add_term({"IX", 0.1, {}});
    }
    return h;
}

QBMModel discriminative_model(DiscVariant v, int n_features, double kT) {
    QBMModel m;
    m.hamiltonian = discriminative_hamiltonian(v, n_features);
    m.theta = RVec::Zero(m.hamiltonian.n_params());
    m.visible = {0};
    m.kT = kT;
    return m;
}

RVec qbm_discriminative_predict(const QBMModel &model, const RVec &x) {
    require(x.size() == model.hamiltonian.n_features(),
            Status::DimensionMismatch,
            "feature vector has " + std::to_string(x.size()) +
                " entries, model expects " +
                std::to_string(model.hamiltonian.n_features()));
    return qbm_distribution(model, x).p;
}

std::vector<int> qbm_predict_labels(const QBMModel &model, const RMat &X) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(X.rows()));
    for (Eigen::Index r = 0; r < X.rows(); ++r) {
        const RVec p = qbm_discriminative_predict(model, X.row(r).transpose());
        Eigen::Index best = 0;
        p.maxCoeff(&best);
        out.push_back(static_cast<int>(best));
    }
    return out;
}

void Dataset::validate() const {
    require(X.rows() == static_cast<Eigen::Index>(y.size()),
            Status::DimensionMismatch, "feature rows and labels differ");
    require(X.allFinite(), Status::InvalidArgument, "features must be finite");
    for (int v : y) {
        require(v >= 0, Status::InvalidArgument, "labels must be >= 0");
    }
}

Dataset Dataset::subset(const std::vector<int> &rows) const {
    Dataset d;
    d.X.resize(static_cast<Eigen::Index>(rows.size()), X.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i] >= 0 && rows[i] < size(), Status::InvalidArgument,
                "row index out of range");
        d.X.row(static_cast<Eigen::Index>(i)) = X.row(rows[i]);
        d.y.push_back(y[static_cast<std::size_t>(rows[i])]);
    }
    return d;
}

Standardizer Standardizer::fit(const RMat &X) {
    require(X.rows() >= 1, Status::InvalidArgument, "empty feature matrix");
    Standardizer s;
    s.mean = X.colwise().mean().transpose();
    s.stddev.resize(X.cols());
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
        const double var =
            (X.col(c).array() - s.mean[c]).square().sum() /
            static_cast<double>(X.rows());
        s.stddev[c] = var > 1e-24 ? std::sqrt(var) : 1.0;
    }
    return s;
}

RMat Standardizer::apply(const RMat &X) const {
    require(X.cols() == mean.size(), Status::DimensionMismatch,
            "feature count differs from the fitted standardizer");
    RMat out = X;
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
        out.col(c) = (X.col(c).array() - mean[c]) / stddev[c];
    }
    return out;
}

RVec Standardizer::apply(const RVec &x) const {
    return apply(RMat(x.transpose())).row(0).transpose();
}

Dataset parse_dataset_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    auto split = [](const std::string &l) {
        std::vector<std::string> out;
        std::string cell;
        std::istringstream ss(l);
        while (std::getline(ss, cell, ',')) {
            out.push_back(trim(cell));
        }
        return out;
    };
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        if (!trim(line).empty()) {
            header = split(line);
            break;
        }
    }
    require(header.size() >= 2, Status::Parse,
            "CSV header needs feature columns and a label column");
    const std::size_t d = header.size() - 1;
    for (std::size_t f = 0; f < d; ++f) {
        require(header[f] == "feature_" + std::to_string(f), Status::Parse,
                "CSV column " + std::to_string(f) + " must be feature_" +
                    std::to_string(f));
    }
    require(header.back() == "label", Status::Parse,
            "last CSV column must be label");
    std::vector<std::vector<double>> rows;
    Dataset ds;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split(line);
        require(cells.size() == d + 1, Status::Parse,
                "CSV line " + std::to_string(lineno) + " has " +
                    std::to_string(cells.size()) + " cells");
        std::vector<double> r(d);
        for (std::size_t f = 0; f < d; ++f) {
            r[f] = parse_double(cells[f]);
        }
        rows.push_back(std::move(r));
        ds.y.push_back(static_cast<int>(parse_int(cells[d])));
    }
    ds.X.resize(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t f = 0; f < d; ++f) {
            ds.X(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(f)) =
                rows[r][f];
        }
    }
    ds.validate();
    return ds;
}

std::string dataset_to_csv(const Dataset &d) {
    d.validate();
    std::string s;
    for (int f = 0; f < d.n_features(); ++f) {
        s += "feature_" + std::to_string(f) + ",";
    }
    s += "label\n";
    for (int r = 0; r < d.size(); ++r) {
        for (int f = 0; f < d.n_features(); ++f) {
            s += format_double(d.X(r, f)) + ",";
        }
        s += std::to_string(d.y[static_cast<std::size_t>(r)]) + "\n";
    }
    return s;
}

UniqueSamples unique_samples(const Dataset &d, int n_labels) {
    d.validate();
    require(d.size() >= 1, Status::InvalidArgument, "empty dataset");
    std::map<std::vector<double>, int> index;
    std::vector<std::vector<double>> keys;
    std::vector<std::vector<double>> counts;
    for (int r = 0; r < d.size(); ++r) {
        const int label = d.y[static_cast<std::size_t>(r)];
        require(label < n_labels, Status::InvalidArgument,
                "label " + std::to_string(label) + " out of range");
        std::vector<double> key(static_cast<std::size_t>(d.n_features()));
        for (int f = 0; f < d.n_features(); ++f) {
            key[static_cast<std::size_t>(f)] = d.X(r, f);
        }
        auto [it, fresh] =
            index.emplace(key, static_cast<int>(keys.size()));
        if (fresh) {
            keys.push_back(key);
            counts.emplace_back(static_cast<std::size_t>(n_labels), 0.0);
        }
        counts[static_cast<std::size_t>(it->second)]
              [static_cast<std::size_t>(label)] += 1.0;
    }
    UniqueSamples u;
    const auto m = static_cast<Eigen::Index>(keys.size());
    u.X.resize(m, d.n_features());
    u.weight.resize(m);
    u.labels.resize(m, n_labels);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto &cnt = counts[static_cast<std::size_t>(i)];
        const double total = std::accumulate(cnt.begin(), cnt.end(), 0.0);
        u.weight[i] = total / d.size();
        for (int f = 0; f < d.n_features(); ++f) {
            u.X(i, f) = keys[static_cast<std::size_t>(i)]
                            [static_cast<std::size_t>(f)];
        }
        for (int y = 0; y < n_labels; ++y) {
            u.labels(i, y) = cnt[static_cast<std::size_t>(y)] / total;
        }
    }
    return u;
}

ClassificationMetrics ClassificationMetrics::from_confusion(int tp, int fp,
                                                            int fn, int tn) {
    require(tp >= 0 && fp >= 0 && fn >= 0 && tn >= 0,
            Status::InvalidArgument, "confusion counts must be >= 0");
    ClassificationMetrics m{tp, fp, fn, tn};
    const int total = tp + fp + fn + tn;
    auto ratio = [](double a, double b) { return b > 0.0 ? a / b : 0.0; };
    m.accuracy = ratio(tp + tn, total);
    m.precision = ratio(tp, tp + fp);
    m.recall = ratio(tp, tp + fn);
    m.f1 = ratio(2.0 * m.precision * m.recall, m.precision + m.recall);
    return m;
}

ClassificationMetrics classification_metrics(const std::vector<int> &truth,
                                             const std::vector<int> &predicted) {
    require(truth.size() == predicted.size(), Status::DimensionMismatch,
            "label vectors differ in length");
    int tp = 0, fp = 0, fn = 0, tn = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const bool t = truth[i] == 1;
        const bool p = predicted[i] == 1;
        tp += t && p;
        fp += !t && p;
        fn += t && !p;
        tn += !t && !p;
    }
    return ClassificationMetrics::from_confusion(tp, fp, fn, tn);
}

LossGrad qbm_discriminative_loss_grad(const QBMModel &model,
                                      const UniqueSamples &u,
                                      bool with_gradient) {
    const Eigen::Index n_labels = Eigen::Index{1}
                                  << static_cast<int>(model.visible.size());
    require(u.labels.cols() == n_labels, Status::DimensionMismatch,
            "label distribution width differs from the visible space");
    require(u.X.cols() == model.hamiltonian.n_features(),
            Status::DimensionMismatch, "feature count differs from the model");
    LossGrad r;
    r.grad = RVec::Zero(model.hamiltonian.n_params());
    for (Eigen::Index i = 0; i < u.X.rows(); ++i) {
        const RVec x = u.X.row(i).transpose();
        const RVec q = u.labels.row(i).transpose();
        const QBMDistribution d = qbm_distribution(model, x, with_gradient);
        r.loss += u.weight[i] * cross_entropy(d.p, q);
        if (with_gradient) {
            r.grad += u.weight[i] * (d.dp.transpose() *
                                     cross_entropy_dp(d.p, q,
                                                      QBMLoss::DataWeighted));
        }
    }
    return r;
}

DiscTrainResult qbm_train_discriminative(QBMModel model, const Dataset &data,
                                         const DiscTrainConfig &cfg,
                                         std::uint64_t seed) {
    data.validate();
    require(model.visible.size() == 1, Status::InvalidArgument,
            "binary labels need exactly one visible qubit");
    require(data.n_features() == model.hamiltonian.n_features(),
            Status::DimensionMismatch, "feature count differs from the model");
    bool has0 = false, has1 = false;
    for (int v : data.y) {
        require(v == 0 || v == 1, Status::InvalidArgument,
                "labels must be binary");
        has0 = has0 || v == 0;
        has1 = has1 || v == 1;
    }
    require(has0 && has1, Status::InvalidArgument,
            "dataset must contain both classes");
    require(cfg.max_iterations >= 0, Status::InvalidArgument,
            "max_iterations must be >= 0");

    const UniqueSamples u = unique_samples(data, 2);
    model.theta = uniform_theta(model.hamiltonian.n_params(), seed);
    model.validate();
    Amsgrad opt(model.hamiltonian.n_params(), cfg.optimizer);
    DiscTrainResult out;
    for (int it = 0; it < cfg.max_iterations; ++it) {
        const LossGrad lg = qbm_discriminative_loss_grad(model, u);
        out.record.loss.push_back(lg.loss);
        out.record.params.push_back(model.theta);
        if (lg.grad.norm() < cfg.grad_tol) {
            break;
        }
        model.theta = opt.step(model.theta, lg.grad);
        out.iterations = it + 1;
    }
    out.record.loss.push_back(
        qbm_discriminative_loss_grad(model, u, false).loss);
    out.record.params.push_back(model.theta);
    out.theta = model.theta;
    out.metrics =
        classification_metrics(data.y, qbm_predict_labels(model, data.X));
    return out;
}

Dataset synthetic_fraud_dataset(int n, std::uint64_t seed) {
    require(n >= 2, Status::InvalidArgument, "dataset needs at least 2 rows");
    // Class-conditional bin probabilities: time of day, amount, ZIP region,
    // merchant category.
    const std::vector<std::vector<double>> legit = {
        {0.45, 0.35, 0.20},
        {0.50, 0.35, 0.15},
        {0.34, 0.33, 0.33},
        {0.16, 0.15, 0.14, 0.12, 0.11, 0.10, 0.08, 0.06, 0.05, 0.03}};
    const std::vector<std::vector<double>> fraud = {
        {0.20, 0.25, 0.55},
        {0.15, 0.30, 0.55},
        {0.25, 0.30, 0.45},
        {0.03, 0.04, 0.05, 0.06, 0.08, 0.10, 0.12, 0.15, 0.17, 0.20}};
    const int n_pos = std::max(1, static_cast<int>(std::lround(0.15 * n)));
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::fill(labels.begin(), labels.begin() + n_pos, 1);
    Rng rng(seed);
    rng.shuffle(labels);
    Dataset d;
    d.X.resize(n, 4);
    d.y = labels;
    for (int r = 0; r < n; ++r) {
        const auto &table = labels[static_cast<std::size_t>(r)] ? fraud : legit;
        for (int f = 0; f < 4; ++f) {
            d.X(r, f) = static_cast<double>(
                rng.categorical(table[static_cast<std::size_t>(f)]));
        }
    }
    return d;
}

Dataset separable_dataset(int n, int n_features, std::uint64_t seed,
                          double separation) {
    require(n >= 2 && n_features >= 1, Status::InvalidArgument,
            "dataset needs n >= 2 and at least one feature");
    Rng rng(seed);
    RVec u(n_features);
    for (int f = 0; f < n_features; ++f) {
        u[f] = rng.normal();
    }
    u.normalize();
    Dataset d;
    d.X.resize(n, n_features);
    for (int r = 0; r < n; ++r) {
        const int y = r % 2;
        d.y.push_back(y);
        const double sign = y ? 1.0 : -1.0;
        for (int f = 0; f < n_features; ++f) {
            d.X(r, f) = sign * 0.5 * separation * u[f] + rng.normal();
        }
    }
    return d;
}

} // namespace vqs
