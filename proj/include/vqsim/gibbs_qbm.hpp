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
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vqsim/circuit.hpp"
#include "vqsim/optim.hpp"
#include "vqsim/pauli.hpp"
#include "vqsim/statevector.hpp"
#include "vqsim/varqte.hpp"

namespace vqs {

struct GibbsTask {
    /// System Hamiltonian on n qubits.
    PauliSum hamiltonian;
    double kT = 1.0;
    /// Variational depth of the default ansatz.
    int depth = 2;
    SolverConfig solver{.kind = SolverKind::ForwardEuler, .steps = 10};
    OdeRhs rhs = OdeRhs::Standard;
    /// Replaces the default ansatz (gibbs_ansatz on 2n qubits for
    /// prepare_gibbs, efficient_su2 on n qubits for prepare_gibbs_diagonal).
    std::optional<Ansatz> ansatz;

    /// Imaginary evolution time 1 / (2 kT).
    [[nodiscard]] double tau() const;
};

struct GibbsResult {
    /// Reduced state on the system register (qubits 0..n-1).
    DensityMatrix state;
    /// Uhlmann fidelity to exact_gibbs.
    double fidelity = 0.0;
    RVec omega;
    EvolutionTrace trace;
};

/// Evolves the Bell-pair purification under H tensor I for tau and traces
/// out the ancilla register.
[[nodiscard]] GibbsResult prepare_gibbs(const GibbsTask &task);

struct DiagonalGibbsResult {
    MeasurementDistribution distribution;
    /// l1 distance to the diagonal of exact_gibbs.
    double l1 = 0.0;
    RVec omega;
    EvolutionTrace trace;
};

/// Evolves |+>^n under a diagonal H; the sampling distribution approximates
/// the Gibbs diagonal.
[[nodiscard]] DiagonalGibbsResult
prepare_gibbs_diagonal(const GibbsTask &task);

/// Parameterized Hamiltonian with visible and hidden qubits.
struct QBMModel {
    ParamHamiltonian hamiltonian;
    RVec theta;
    std::vector<int> visible;
    double kT = 1.0;
    int depth = 2;
    SolverConfig solver{.kind = SolverKind::ForwardEuler, .steps = 10};

    [[nodiscard]] int n_qubits() const { return hamiltonian.n_qubits(); }
    [[nodiscard]] std::vector<int> hidden() const;
    void validate() const;

    /// Structured text: kT, depth, steps, visible, theta and one line per
    /// term "TERM label offset p:f ...".
    [[nodiscard]] std::string to_text() const;
    static QBMModel parse(const std::string &text);
};

/// Visible-marginal Gibbs distribution of a model.
struct QBMDistribution {
    /// Index bit j is visible[j].
    RVec p;
    /// d p / d theta, rows over visible configurations. Empty unless
    /// requested.
    RMat dp;
    RVec omega;
};

[[nodiscard]] QBMDistribution qbm_distribution(const QBMModel &model,
                                               const RVec &x = {},
                                               bool with_gradient = false);

/// Clip applied to probabilities before the logarithm.
inline constexpr double kLogClip = 1e-8;

enum class QBMLoss {
    /// -sum p_data log p(theta); zero gradient when p(theta) = p_data.
    DataWeighted,
    /// -sum p(theta) log p_data.
    ModelWeighted,
};

[[nodiscard]] double cross_entropy(const RVec &p_model, const RVec &p_data,
                                   QBMLoss form = QBMLoss::DataWeighted);
[[nodiscard]] double qbm_generative_loss(const QBMModel &model,
                                         const RVec &p_data,
                                         QBMLoss form = QBMLoss::DataWeighted);

struct LossGrad {
    double loss = 0.0;
    RVec grad;
    /// Model distribution at which the loss was evaluated.
    RVec p;
};
[[nodiscard]] LossGrad qbm_generative_loss_grad(
    const QBMModel &model, const RVec &p_data,
    QBMLoss form = QBMLoss::DataWeighted);

struct QBMTrainConfig {
    AmsgradConfig optimizer{};
    int iterations = 50;
    QBMLoss loss = QBMLoss::DataWeighted;
};

struct QBMTrainResult {
    RVec theta;
    /// loss and l1 hold iterations + 1 entries, the last at the final theta.
    TrainRecord record;
};

/// Starts from theta ~ U[-1, 1] drawn with seed.
[[nodiscard]] QBMTrainResult qbm_train_generative(QBMModel model,
                                                  const RVec &p_data,
                                                  const QBMTrainConfig &cfg,
                                                  std::uint64_t seed);

/// Fully visible model theta0 ZZ + theta1 ZI + theta2 IZ.
[[nodiscard]] QBMModel bell_qbm_model(double kT = 1.0);

/// Off-diagonal variants of the two-qubit discriminative Hamiltonian. With
/// f_i = theta_i . x: H0 = f0 ZZ + f1 ZI + f2 IZ, H1 = H0 + 0.1 (XI + IX),
/// H2 = H0 + f3 XI + f4 IX.
enum class DiscVariant { H0, H1, H2 };

[[nodiscard]] ParamHamiltonian discriminative_hamiltonian(DiscVariant v,
                                                          int n_features);
/// Qubit 0 visible (label), qubit 1 hidden; theta zero.
[[nodiscard]] QBMModel discriminative_model(DiscVariant v, int n_features,
                                            double kT = 1.0);

/// Label distribution p(y | x) over visible configurations.
[[nodiscard]] RVec qbm_discriminative_predict(const QBMModel &model,
                                              const RVec &x);

struct Dataset {
    /// One sample per row.
    RMat X;
    std::vector<int> y;
    [[nodiscard]] int size() const { return static_cast<int>(y.size()); }
    [[nodiscard]] int n_features() const { return static_cast<int>(X.cols()); }
    void validate() const;
    [[nodiscard]] Dataset subset(const std::vector<int> &rows) const;
};

/// Per-feature x' = (x - mean) / std; constant columns keep std 1.
struct Standardizer {
    RVec mean;
    RVec stddev;
    static Standardizer fit(const RMat &X);
    [[nodiscard]] RMat apply(const RMat &X) const;
    [[nodiscard]] RVec apply(const RVec &x) const;
};

/// CSV with header feature_0,...,feature_{d-1},label.
[[nodiscard]] Dataset parse_dataset_csv(const std::string &text);
[[nodiscard]] std::string dataset_to_csv(const Dataset &d);

/// Unique feature rows with their frequency and empirical label
/// distribution.
struct UniqueSamples {
    RMat X;
    RVec weight;
    /// Row i holds p_data(y | x_i).
    RMat labels;
};
[[nodiscard]] UniqueSamples unique_samples(const Dataset &d, int n_labels);

struct ClassificationMetrics {
    int tp = 0;
    int fp = 0;
    int fn = 0;
    int tn = 0;
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    /// Undefined ratios are reported as 0.
    static ClassificationMetrics from_confusion(int tp, int fp, int fn,
                                                int tn);
};
[[nodiscard]] ClassificationMetrics
classification_metrics(const std::vector<int> &truth,
                       const std::vector<int> &predicted);

[[nodiscard]] std::vector<int> qbm_predict_labels(const QBMModel &model,
                                                  const RMat &X);

/// Conditional cross-entropy over unique samples and its gradient.
[[nodiscard]] LossGrad qbm_discriminative_loss_grad(const QBMModel &model,
                                                    const UniqueSamples &u,
                                                    bool with_gradient = true);

struct DiscTrainConfig {
    AmsgradConfig optimizer{};
    int max_iterations = 100;
    /// Stops once the gradient norm falls below this value.
    double grad_tol = 1e-6;
};

struct DiscTrainResult {
    RVec theta;
    TrainRecord record;
    ClassificationMetrics metrics;
    int iterations = 0;
};

/// Expects standardized features. Starts from theta ~ U[-1, 1].
[[nodiscard]] DiscTrainResult
qbm_train_discriminative(QBMModel model, const Dataset &data,
                         const DiscTrainConfig &cfg, std::uint64_t seed);

/// Seeded stand-in for a card-transaction set: time, amount and ZIP in 3
/// bins each, merchant category in 10 bins; 15% positive.
[[nodiscard]] Dataset synthetic_fraud_dataset(int n, std::uint64_t seed);
/// Two Gaussian clusters centred at +mu and -mu along a random direction.
[[nodiscard]] Dataset separable_dataset(int n, int n_features,
                                        std::uint64_t seed,
                                        double separation = 4.0);

} // namespace vqs
