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

#include "vqsim/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <utility>

#include "vqsim/circuit.hpp"
#include "vqsim/gibbs_qbm.hpp"
#include "vqsim/models.hpp"
#include "vqsim/oracles.hpp"
#include "vqsim/qae.hpp"
#include "vqsim/qgan.hpp"
#include "vqsim/rng.hpp"
#include "vqsim/varqte.hpp"

namespace vqs {

const char *version_string() { return VQSIM_VERSION; }

// ---------------------------------------------------------------- RunParams

RunParams::RunParams(KeyValues given) : given_(std::move(given)) {}

const std::string *RunParams::lookup(const std::string &key) {
    used_.insert(key);
    const auto it = given_.find(key);
    return it == given_.end() ? nullptr : &it->second;
}

std::string RunParams::str(const std::string &key,
                           const std::string &fallback) {
    const std::string *v = lookup(key);
    return resolved_[key] = v ? *v : fallback;
}

std::string RunParams::required(const std::string &key) {
    const std::string *v = lookup(key);
    require(v != nullptr && !v->empty(), Status::Parse,
            "missing required key '" + key + "'");
    return resolved_[key] = *v;
}

double RunParams::num(const std::string &key, double fallback) {
    const std::string *v = lookup(key);
    const double x = v ? parse_double(*v) : fallback;
    resolved_[key] = format_double(x);
    return x;
}

long long RunParams::integer(const std::string &key, long long fallback) {
    const std::string *v = lookup(key);
    const long long x = v ? parse_int(*v) : fallback;
    resolved_[key] = std::to_string(x);
    return x;
}

bool RunParams::flag(const std::string &key, bool fallback) {
    const std::string *v = lookup(key);
    bool x = fallback;
    if (v) {
        if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") {
            x = true;
        } else if (*v == "false" || *v == "0" || *v == "no" || *v == "off") {
            x = false;
        } else {
            fail(Status::Parse, "key '" + key + "' expects a boolean");
        }
    }
    resolved_[key] = x ? "true" : "false";
    return x;
}

std::vector<int> RunParams::int_list(const std::string &key,
                                     const std::vector<int> &fallback) {
    const std::string *v = lookup(key);
    std::vector<int> out = fallback;
    if (v) {
        out.clear();
        for (double x : parse_vector(*v)) {
            require(x == std::floor(x), Status::Parse,
                    "key '" + key + "' expects integers");
            out.push_back(static_cast<int>(x));
        }
    }
    std::string s;
    for (std::size_t i = 0; i < out.size(); ++i) {
        s += (i ? "," : "") + std::to_string(out[i]);
    }
    resolved_[key] = s;
    return out;
}

std::string RunParams::choice(const std::string &key,
                              const std::vector<std::string> &choices) {
    const std::string v = str(key, choices.front());
    if (std::find(choices.begin(), choices.end(), v) == choices.end()) {
        std::string all;
        for (const auto &c : choices) {
            all += (all.empty() ? "" : "|") + c;
        }
        fail(Status::Parse, "key '" + key + "' must be one of " + all);
    }
    return v;
}

void RunParams::finish() const {
    for (const auto &[k, v] : given_) {
        require(used_.count(k) != 0, Status::Parse,
                "unknown key '" + k + "'");
    }
}

// ------------------------------------------------------------------ output

namespace {

std::string json_string(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\t':
            out += "\\t";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + "\"";
}

std::string json_number(double v) {
    return std::isfinite(v) ? format_double(v) : "null";
}

std::string json_array(const RVec &v) {
    std::string s = "[";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + json_number(v[i]);
    }
    return s + "]";
}

/// Insertion-ordered JSON object with pre-rendered values.
class JsonObject {
  public:
    JsonObject &num(const std::string &k, double v) {
        return raw(k, json_number(v));
    }
    JsonObject &integer(const std::string &k, long long v) {
        return raw(k, std::to_string(v));
    }
    JsonObject &str(const std::string &k, const std::string &v) {
        return raw(k, json_string(v));
    }
    JsonObject &boolean(const std::string &k, bool v) {
        return raw(k, v ? "true" : "false");
    }
    JsonObject &vec(const std::string &k, const RVec &v) {
        return raw(k, json_array(v));
    }
    JsonObject &raw(const std::string &k, std::string rendered) {
        fields_.emplace_back(k, std::move(rendered));
        return *this;
    }
    [[nodiscard]] std::string dump(int indent = 0) const {
        if (fields_.empty()) {
            return "{}";
        }
        const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
        std::string s = "{\n";
        for (std::size_t i = 0; i < fields_.size(); ++i) {
            s += pad + json_string(fields_[i].first) + ": " + fields_[i].second;
            s += i + 1 < fields_.size() ? ",\n" : "\n";
        }
        return s + std::string(static_cast<std::size_t>(indent), ' ') + "}";
    }

  private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

struct Context {
    std::string pipeline;
    RunParams params;
    std::uint64_t seed = 0;
    std::vector<Artifact> artifacts;

    [[nodiscard]] std::string text_header() const {
        std::string s = "# vqsim " + std::string(version_string()) + "\n";
        s += "# pipeline = " + pipeline + "\n";
        for (const auto &[k, v] : params.resolved()) {
            s += "# " + k + " = " + v + "\n";
        }
        return s;
    }

    [[nodiscard]] std::string json_meta() const {
        JsonObject cfg;
        for (const auto &[k, v] : params.resolved()) {
            cfg.str(k, v);
        }
        JsonObject meta;
        meta.str("version", version_string())
            .str("pipeline", pipeline)
            .integer("seed", static_cast<long long>(seed))
            .raw("config", cfg.dump(4));
        return meta.dump(2);
    }

    void add_text(const std::string &name, const std::string &body) {
        artifacts.push_back({name, text_header() + body});
    }

    /// Summary JSON; placed first among the artifacts.
    void add_summary(const std::string &name, JsonObject body) {
        JsonObject top;
        top.raw("meta", json_meta());
        std::string s = top.dump();
        const std::string rest = body.dump();
        if (rest != "{}") {
            s.pop_back();
            s.pop_back();
            s += ",\n" + rest.substr(2);
        }
        artifacts.insert(artifacts.begin(), {name, s + "\n"});
    }
};

bool is_file(const std::string &value) {
    std::error_code ec;
    return value.find('\n') == std::string::npos &&
           std::filesystem::is_regular_file(value, ec);
}

std::string text_or_file(const std::string &value) {
    return is_file(value) ? read_file(value) : value;
}

SolverKind solver_kind(const std::string &s) {
    return s == "euler" ? SolverKind::ForwardEuler : SolverKind::RK54;
}

OdeRhs ode_rhs(const std::string &s) {
    return s == "argmin" ? OdeRhs::Argmin : OdeRhs::Standard;
}

std::string state_csv(const CVec &amps) {
    std::string s = "index,re,im\n";
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        s += std::to_string(i) + "," + format_double(amps[i].real()) + "," +
             format_double(amps[i].imag()) + "\n";
    }
    return s;
}

std::string matrix_csv(const CMat &m) {
    std::string s = "row,col,re,im\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            s += std::to_string(r) + "," + std::to_string(c) + "," +
                 format_double(m(r, c).real()) + "," +
                 format_double(m(r, c).imag()) + "\n";
        }
    }
    return s;
}

double max_grad_err(const EvolutionTrace &trace) {
    double m = 0.0;
    for (const auto &c : trace.checkpoints) {
        m = std::max(m, c.grad_err);
    }
    return m;
}

// ---------------------------------------------------------------- varqte

void run_varqte(Context &ctx) {
    RunParams &P = ctx.params;
    VarQTEProblem p;
    p.hamiltonian = resolve_hamiltonian(P.required("ham"));
    const int n = p.hamiltonian.n_qubits();
    p.mode = P.choice("mode", {"imag", "real"}) == "imag" ? TimeMode::Imaginary
                                                          : TimeMode::Real;
    p.solver.kind = solver_kind(P.choice("solver", {"rk54", "euler"}));
    p.rhs = ode_rhs(P.choice("ode", {"standard", "argmin"}));
    p.T = P.num("T", 1.0);
    p.solver.steps = static_cast<int>(P.integer("steps", 100));
    p.solver.rtol = P.num("rtol", 1e-6);
    p.solver.atol = P.num("atol", 1e-8);
    p.delta_t = P.num("delta", 1e-4);
    p.track_error_bound = P.flag("bound", true);
    p.track_oracle = P.flag("oracle", true);
    const int reps = static_cast<int>(P.integer("reps", 1));
    p.ansatz = efficient_su2(n, reps);
    p.input = StateVector::zero(n);
    const std::string init =
        P.choice("init", {"plus", "zero", "phase", "random"});
    const std::string explicit_omega = P.str("omega", "");
    const int k = p.ansatz.n_params();
    if (!explicit_omega.empty()) {
        p.omega0 = parse_vector(text_or_file(explicit_omega));
        require(p.omega0.size() == k, Status::DimensionMismatch,
                "omega needs " + std::to_string(k) + " entries");
    } else if (init == "plus") {
        p.omega0 = efficient_su2_plus_params(n, reps);
    } else if (init == "zero") {
        p.omega0 = RVec::Zero(k);
    } else if (init == "phase") {
        // Last RZ layer drawn from (0, pi/2]: a global phase on |0...0>.
        p.omega0 = RVec::Zero(k);
        Rng rng(ctx.seed);
        for (int q = 0; q < n; ++q) {
            p.omega0[k - n + q] = M_PI / 2 * (1.0 - rng.uniform());
        }
    } else {
        p.omega0 = random_params(k, M_PI, ctx.seed);
    }
    P.finish();

    const EvolutionTrace trace = evolve(p);
    const Checkpoint &last = trace.checkpoints.back();
    JsonObject out;
    out.num("T", last.t)
        .num("eps_T", last.eps)
        .num("bures_oracle_T", last.bures_oracle)
        .num("fidelity_oracle_T", last.fidelity_oracle)
        .num("energy_T", last.energy)
        .num("max_grad_err", max_grad_err(trace))
        .boolean("eps_clipped", trace.eps_clipped)
        .boolean("argmin_cap_hit", trace.argmin_cap_hit)
        .integer("checkpoints", static_cast<long long>(trace.checkpoints.size()))
        .integer("rhs_evaluations", trace.rhs_evaluations)
        .vec("omega_T", last.omega);
    ctx.add_text("varqte_trace.csv", trace.to_csv());
    ctx.add_summary("varqte.json", out);
}

// ----------------------------------------------------------------- gibbs

void run_gibbs(Context &ctx) {
    RunParams &P = ctx.params;
    GibbsTask task;
    task.hamiltonian = resolve_hamiltonian(P.required("ham"));
    task.kT = P.num("kT", 1.0);
    task.depth = static_cast<int>(P.integer("depth", 2));
    task.solver.kind = solver_kind(P.choice("solver", {"euler", "rk54"}));
    task.solver.steps = static_cast<int>(P.integer("steps", 10));
    task.rhs = ode_rhs(P.choice("ode", {"standard", "argmin"}));
    P.finish();

    const GibbsResult r = prepare_gibbs(task);
    const DensityMatrix exact = exact_gibbs(task.hamiltonian, task.kT);
    RVec diag(r.state.matrix.rows());
    RVec exact_diag(diag.size());
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        diag[i] = r.state.matrix(i, i).real();
        exact_diag[i] = exact.matrix(i, i).real();
    }
    JsonObject out;
    out.num("fidelity", r.fidelity)
        .num("tau", task.tau())
        .num("bures", bures_distance(r.state, exact))
        .vec("diagonal", diag)
        .vec("exact_diagonal", exact_diag)
        .vec("omega", r.omega);
    ctx.add_text("gibbs_trace.csv", r.trace.to_csv());
    ctx.add_text("gibbs_state.csv", matrix_csv(r.state.matrix));
    ctx.add_summary("gibbs.json", out);
}

// ---------------------------------------------------------------- qbm-gen

AmsgradConfig amsgrad_from(RunParams &P, double lr) {
    AmsgradConfig c;
    c.lr = P.num("lr", lr);
    c.beta1 = P.num("beta1", 0.7);
    c.beta2 = P.num("beta2", 0.99);
    return c;
}

void run_qbm_gen(Context &ctx) {
    RunParams &P = ctx.params;
    const std::string model_src = P.str("model", "bell");
    const double kT = P.num("kT", 1.0);
    QBMModel model =
        model_src == "bell" ? bell_qbm_model(kT)
                            : QBMModel::parse(read_file(model_src));
    model.kT = kT;
    model.solver.steps = static_cast<int>(P.integer("steps", 10));
    model.depth = static_cast<int>(P.integer("depth", 2));
    const std::string target = P.str("target", "0.5,0,0,0.5");
    const RVec p_data = parse_vector(text_or_file(target));
    QBMTrainConfig cfg;
    cfg.optimizer = amsgrad_from(P, 0.1);
    cfg.iterations = static_cast<int>(P.integer("iterations", 50));
    cfg.loss = P.choice("loss", {"data", "model"}) == "data"
                   ? QBMLoss::DataWeighted
                   : QBMLoss::ModelWeighted;
    P.finish();
    require(p_data.size() == (Eigen::Index{1} << model.visible.size()),
            Status::DimensionMismatch,
            "target length must be 2^(visible qubits)");
    check_distribution(p_data, 1e-6);

    const QBMTrainResult r = qbm_train_generative(model, p_data, cfg, ctx.seed);
    model.theta = r.theta;
    const RVec p = qbm_distribution(model).p;
    JsonObject out;
    out.num("initial_l1", r.record.l1.front())
        .num("final_l1", r.record.l1.back())
        .num("final_loss", r.record.loss.back())
        .vec("distribution", p)
        .vec("target", p_data)
        .vec("theta", r.theta);
    ctx.add_text("qbm_gen_record.csv", r.record.to_csv());
    ctx.add_text("qbm_gen_model.txt", model.to_text());
    ctx.add_summary("qbm_gen.json", out);
}

// --------------------------------------------------------------- qbm-disc

JsonObject metrics_json(const ClassificationMetrics &m) {
    JsonObject o;
    o.integer("tp", m.tp)
        .integer("fp", m.fp)
        .integer("fn", m.fn)
        .integer("tn", m.tn)
        .num("accuracy", m.accuracy)
        .num("precision", m.precision)
        .num("recall", m.recall)
        .num("f1", m.f1);
    return o;
}

void run_qbm_disc(Context &ctx) {
    RunParams &P = ctx.params;
    const std::string source = P.str("dataset", "synthetic-fraud");
    const int n_samples = static_cast<int>(P.integer("samples", 200));
    Dataset data;
    if (source == "synthetic-fraud") {
        data = synthetic_fraud_dataset(n_samples, substream(ctx.seed, 10));
    } else if (source == "separable") {
        const int d = static_cast<int>(P.integer("features", 2));
        data = separable_dataset(n_samples, d, substream(ctx.seed, 10),
                                 P.num("separation", 4.0));
    } else {
        data = parse_dataset_csv(read_file(source));
    }
    const std::string variant = P.choice("variant", {"H1", "H0", "H2"});
    const DiscVariant v = variant == "H0"   ? DiscVariant::H0
                          : variant == "H1" ? DiscVariant::H1
                                            : DiscVariant::H2;
    QBMModel model = discriminative_model(v, data.n_features(),
                                          P.num("kT", 1.0));
    model.solver.steps = static_cast<int>(P.integer("steps", 10));
    model.depth = static_cast<int>(P.integer("depth", 2));
    DiscTrainConfig cfg;
    cfg.optimizer = amsgrad_from(P, 0.1);
    cfg.max_iterations = static_cast<int>(P.integer("iterations", 100));
    cfg.grad_tol = P.num("grad_tol", 1e-6);
    const double test_fraction = P.num("test_fraction", 0.25);
    const bool standardize = P.flag("standardize", true);
    P.finish();
    data.validate();
    require(test_fraction >= 0.0 && test_fraction < 1.0,
            Status::InvalidArgument, "test_fraction must lie in [0, 1)");

    std::vector<int> rows(static_cast<std::size_t>(data.size()));
    std::iota(rows.begin(), rows.end(), 0);
    Rng rng(substream(ctx.seed, 11));
    rng.shuffle(rows);
    const auto n_test = static_cast<std::size_t>(
        std::lround(test_fraction * static_cast<double>(rows.size())));
    Dataset test = data.subset({rows.begin(), rows.begin() + static_cast<long>(n_test)});
    Dataset train = data.subset({rows.begin() + static_cast<long>(n_test), rows.end()});
    if (standardize) {
        const Standardizer st = Standardizer::fit(train.X);
        train.X = st.apply(train.X);
        if (test.size() > 0) {
            test.X = st.apply(test.X);
        }
    }

    const DiscTrainResult r = qbm_train_discriminative(model, train, cfg, ctx.seed);
    model.theta = r.theta;
    JsonObject out;
    out.integer("train_size", train.size())
        .integer("test_size", test.size())
        .integer("iterations", r.iterations)
        .num("final_loss", r.record.loss.back())
        .raw("train_metrics", metrics_json(r.metrics).dump(2));
    if (test.size() > 0) {
        out.raw("test_metrics",
                metrics_json(classification_metrics(
                                 test.y, qbm_predict_labels(model, test.X)))
                    .dump(2));
    }
    out.vec("theta", r.theta);
    ctx.add_text("qbm_disc_record.csv", r.record.to_csv());
    ctx.add_text("qbm_disc_model.txt", model.to_text());
    ctx.add_summary("qbm_disc.json", out);
}

// ------------------------------------------------------------------- qgan

void run_qgan(Context &ctx) {
    RunParams &P = ctx.params;
    QGANConfig cfg;
    cfg.seed = ctx.seed;
    const std::string target =
        P.choice("target", {"lognormal", "triangular", "bimodal"});
    const int n_samples = static_cast<int>(P.integer("samples", 20000));
    const auto data_seed = static_cast<std::uint64_t>(
        P.integer("data_seed", static_cast<long long>(ctx.seed)));
    const int n = static_cast<int>(P.integer("qubits", 3));
    cfg.qubits = {n};
    cfg.depth = static_cast<int>(P.integer("depth", cfg.depth));
    const std::string init = P.choice("init", {"uniform", "normal", "random"});
    cfg.init = init == "uniform"  ? InitStrategy::Uniform
               : init == "normal" ? InitStrategy::Normal
                                  : InitStrategy::Random;
    cfg.epochs = static_cast<int>(P.integer("epochs", cfg.epochs));
    cfg.batch_size = static_cast<int>(P.integer("batch", cfg.batch_size));
    cfg.lr = P.num("lr", cfg.lr);
    cfg.disc_lr = P.num("disc_lr", cfg.disc_lr);
    cfg.beta1 = P.num("beta1", cfg.beta1);
    cfg.beta2 = P.num("beta2", cfg.beta2);
    cfg.gradient_penalty = P.num("gp", cfg.gradient_penalty);
    cfg.leaky_slope = P.num("slope", cfg.leaky_slope);
    cfg.hidden = P.int_list("hidden", cfg.hidden);
    cfg.disc_input = P.choice("input", {"bits", "value"}) == "bits"
                         ? DiscInput::Bits
                         : DiscInput::Value;
    cfg.ks_samples = static_cast<int>(P.integer("ks_samples", cfg.ks_samples));
    cfg.ks_every_epoch = P.flag("ks_every_epoch", cfg.ks_every_epoch);
    P.finish();

    std::vector<double> data;
    if (target == "lognormal") {
        data = sample_lognormal(n_samples, data_seed);
    } else if (target == "triangular") {
        data = sample_triangular(n_samples, data_seed);
    } else {
        data = sample_bimodal(n_samples, data_seed);
    }
    GridMap grid;
    grid.qubits = {n};
    grid.lo = RVec::Constant(1, 0.0);
    grid.hi = RVec::Constant(1, 7.0);
    if (target == "lognormal" && n == 3) {
        cfg.target = discretized_lognormal(1.0, 1.0, 8);
    }
    const QGANResult r = qgan_train(cfg, as_column(data), grid);

    JsonObject out;
    out.num("final_ks", r.final_ks)
        .num("initial_relative_entropy", r.initial_relative_entropy)
        .num("final_relative_entropy", r.final_relative_entropy)
        .boolean("ks_accepted", r.final_ks <= 0.0859)
        .str("relative_entropy_reference",
             cfg.target.size() > 0 ? "exact" : "empirical")
        .vec("probabilities", r.generator.probabilities())
        .vec("omega", r.generator.omega);
    ctx.add_text("qgan_record.csv", r.record.to_csv());
    ctx.add_text("qgan_generator.txt", r.generator.circuit.to_text());
    ctx.add_text("qgan_input.txt", r.generator.preparation.to_text());
    ctx.add_text("qgan_omega.txt",
                 "omega = " + format_vector(r.generator.omega) + "\n");
    ctx.add_summary("qgan.json", out);
}

// -------------------------------------------------------------- qae-price

Generator generator_from_files(const std::string &circuit,
                               const std::string &omega,
                               const std::string &input) {
    Generator g;
    g.circuit = ParamCircuit::parse(read_file(circuit));
    const KeyValues kv = parse_key_values(read_file(omega));
    const auto it = kv.find("omega");
    require(it != kv.end(), Status::Parse, "omega file lacks 'omega ='");
    g.omega = parse_vector(it->second);
    const int n = g.circuit.n_qubits();
    g.preparation =
        input.empty() ? ParamCircuit(n) : ParamCircuit::parse(read_file(input));
    require(g.preparation.n_qubits() == n && g.preparation.n_params() == 0,
            Status::DimensionMismatch,
            "input circuit must be slot-free on the generator qubits");
    g.input = g.preparation.simulate(RVec());
    return g;
}

void run_qae_price(Context &ctx) {
    RunParams &P = ctx.params;
    const std::string method =
        P.choice("method", {"qae", "mc", "exact", "generator"});
    const std::string dist = P.str("distribution", "lognormal");
    const int n = static_cast<int>(P.integer("n", 3));
    PricingProblem prob;
    if (dist == "lognormal") {
        const double mu = P.num("mu", 1.0);
        const double sigma = P.num("sigma", 1.0);
        prob.distribution = discretized_lognormal(mu, sigma, 1 << n);
    } else {
        prob.distribution = parse_vector(text_or_file(dist));
    }
    prob.strike = static_cast<int>(P.integer("strike", 2));
    prob.eval_qubits = static_cast<int>(P.integer("m", 8));
    const auto shots = static_cast<std::uint64_t>(P.integer("shots", 1024));
    std::string gen_circuit;
    std::string gen_omega;
    std::string gen_input;
    if (method == "generator") {
        gen_circuit = P.str("generator", "published");
        if (gen_circuit != "published") {
            gen_omega = P.required("generator_omega");
            gen_input = P.str("generator_input", "");
        }
    }
    P.finish();
    prob.validate();

    PayoffResult r;
    if (method == "qae") {
        r = qae_estimate(prob);
    } else if (method == "mc") {
        r = mc_estimate(prob, shots, ctx.seed);
    } else if (method == "exact") {
        r = exact_a_operator_payoff(prob);
    } else {
        const Generator g =
            gen_circuit == "published"
                ? published_lognormal_generator()
                : generator_from_files(gen_circuit, gen_omega, gen_input);
        r = price_with_trained_generator(g, prob.strike, prob.eval_qubits);
    }
    JsonObject out;
    out.str("method", r.method)
        .num("amplitude", r.amplitude)
        .num("payoff", r.payoff)
        .num("grid_error_bound", r.grid_error_bound)
        .num("ci_low", r.ci_low)
        .num("ci_high", r.ci_high)
        .num("analytic_payoff", analytic_payoff(prob));
    if (r.outcome >= 0) {
        out.integer("outcome", r.outcome)
            .num("outcome_probability", r.outcome_probability);
    }
    if (r.shots > 0) {
        out.integer("shots", static_cast<long long>(r.shots));
    }
    ctx.add_summary("qae_price.json", out);
}

// ----------------------------------------------------------------- oracle

void run_oracle(Context &ctx) {
    RunParams &P = ctx.params;
    const std::string kind = P.choice("kind", {"ite", "rte", "gibbs", "ground"});
    const PauliSum h = resolve_hamiltonian(P.required("ham"));
    const int n = h.n_qubits();
    JsonObject out;
    out.str("kind", kind).integer("n_qubits", n);
    if (kind == "ite" || kind == "rte") {
        const double T = P.num("T", 1.0);
        const std::string init = P.choice("init", {"plus", "zero"});
        P.finish();
        const StateVector psi0 =
            init == "plus" ? StateVector::plus(n) : StateVector::zero(n);
        const StateVector s =
            kind == "ite" ? exact_ite(h, psi0, T) : exact_rte(h, psi0, T);
        out.num("T", T).num("energy", expectation(s, h));
        ctx.add_text("oracle_state.csv", state_csv(s.amplitudes()));
    } else if (kind == "gibbs") {
        const double kT = P.num("kT", 1.0);
        P.finish();
        const DensityMatrix rho = exact_gibbs(h, kT);
        out.num("kT", kT).num("energy",
                              (rho.matrix * h.to_matrix()).trace().real());
        ctx.add_text("oracle_state.csv", matrix_csv(rho.matrix));
    } else {
        P.finish();
        const Eigen::SelfAdjointEigenSolver<CMat> es(h.to_matrix());
        out.num("energy", es.eigenvalues()[0]);
        if (es.eigenvalues().size() > 1) {
            out.num("gap", es.eigenvalues()[1] - es.eigenvalues()[0]);
        }
        ctx.add_text("oracle_state.csv", state_csv(es.eigenvectors().col(0)));
    }
    ctx.add_summary("oracle.json", out);
}

using PipelineFn = std::function<void(Context &)>;

const std::map<std::string, PipelineFn> &registry() {
    static const std::map<std::string, PipelineFn> r = {
        {"varqte", run_varqte},   {"gibbs", run_gibbs},
        {"qbm-gen", run_qbm_gen}, {"qbm-disc", run_qbm_disc},
        {"qgan", run_qgan},       {"qae-price", run_qae_price},
        {"oracle", run_oracle}};
    return r;
}

} // namespace

PauliSum resolve_hamiltonian(const std::string &value) {
    const auto names = hamiltonian_names();
    if (std::find(names.begin(), names.end(), value) != names.end()) {
        return named_hamiltonian(value);
    }
    return PauliSum::parse(text_or_file(value));
}

std::vector<std::string> pipeline_names() {
    std::vector<std::string> out;
    for (const auto &[k, v] : registry()) {
        out.push_back(k);
    }
    return out;
}

RunOutput run_pipeline(const std::string &pipeline, const KeyValues &config) {
    const auto it = registry().find(pipeline);
    require(it != registry().end(), Status::Parse,
            "unknown pipeline '" + pipeline + "'");
    Context ctx{pipeline, RunParams(config), 0, {}};
    ctx.seed = static_cast<std::uint64_t>(ctx.params.integer("seed", 0));
    it->second(ctx);
    RunOutput out;
    out.pipeline = pipeline;
    out.config = ctx.params.resolved();
    out.artifacts = std::move(ctx.artifacts);
    return out;
}

} // namespace vqs
