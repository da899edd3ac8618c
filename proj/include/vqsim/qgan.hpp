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

#include <cstdint>
#include <vector>

#include "vqsim/circuit.hpp"
#include "vqsim/optim.hpp"
#include "vqsim/statevector.hpp"

namespace vqs {

/// Fully connected network with LeakyReLU hidden layers and a sigmoid output.
class Discriminator {
  public:
    Discriminator() = default;
    /// sizes = {d_in, hidden..., 1}. Weights are Glorot-uniform, biases 0.
    Discriminator(std::vector<int> sizes, std::uint64_t seed,
                  double slope = 0.2);
    /// All weights and biases zero.
    static Discriminator zeros(std::vector<int> sizes, double slope = 0.2);

    [[nodiscard]] const std::vector<int> &sizes() const { return sizes_; }
    [[nodiscard]] int input_dim() const { return sizes_.front(); }
    [[nodiscard]] double slope() const { return slope_; }
    [[nodiscard]] int n_params() const { return static_cast<int>(p_.size()); }
    /// Per layer: row-major weights (out x in), then biases.
    [[nodiscard]] const RVec &params() const { return p_; }
    void set_params(const RVec &p);

    [[nodiscard]] double forward(const RVec &x) const;

    struct Eval {
        double output = 0.0;
        /// d D / d params.
        RVec dparams;
        /// d D / d x.
        RVec dinput;
    };
    [[nodiscard]] Eval evaluate(const RVec &x) const;

    struct Penalty {
        /// |d D / d x|^2.
        double value = 0.0;
        /// Its derivative with respect to the parameters.
        RVec dparams;
    };
    [[nodiscard]] Penalty input_gradient_penalty(const RVec &x) const;

  private:
    [[nodiscard]] RMat weight(std::size_t l) const;
    [[nodiscard]] RVec bias(std::size_t l) const;
    std::vector<int> sizes_;
    std::vector<Eigen::Index> offsets_;
    double slope_ = 0.2;
    RVec p_;
};

[[nodiscard]] double leaky_relu(double z, double slope);

/// Outputs and parameter gradient of
/// -sum_i w_i [t_i log D(x_i) + (1 - t_i) log(1 - D(x_i))], logs clipped.
struct BatchResult {
    RVec outputs;
    double loss = 0.0;
    RVec grad;
};
[[nodiscard]] BatchResult discriminator_forward_backward(const Discriminator &d,
                                                         const RMat &inputs,
                                                         const RVec &targets,
                                                         const RVec &weights);

/// Clip applied to discriminator outputs before logarithms.
inline constexpr double kGanLogClip = 1e-12;

/// Two-sample Kolmogorov-Smirnov statistic.
[[nodiscard]] double ks_statistic(const std::vector<double> &p_samples,
                                  const std::vector<double> &q_samples);
/// sum p log(p / q) with q clipped at 1e-12.
[[nodiscard]] double relative_entropy(const RVec &p, const RVec &q);

/// Seeded integer samples on [0, 7]: rounded draws outside the range are
/// redrawn.
[[nodiscard]] std::vector<double> sample_lognormal(int n, std::uint64_t seed,
                                                   double mu = 1.0,
                                                   double sigma = 1.0);
[[nodiscard]] std::vector<double> sample_triangular(int n, std::uint64_t seed,
                                                    double lo = 0.0,
                                                    double hi = 7.0,
                                                    double mode = 2.0);
/// Equal mixture of N(0.5, 1) and N(3.5, 0.5).
[[nodiscard]] std::vector<double> sample_bimodal(int n, std::uint64_t seed);

/// Draws n grid indices from a distribution.
[[nodiscard]] std::vector<double> sample_distribution(const RVec &p, int n,
                                                      std::uint64_t seed);

struct Generator {
    ParamCircuit circuit;
    RVec omega;
    StateVector input;
    /// Slot-free circuit preparing `input` from |0...0>.
    ParamCircuit preparation;
    [[nodiscard]] RVec probabilities() const;
    /// Slot-free circuit preparing the generator state from |0...0>.
    [[nodiscard]] ParamCircuit loader() const;
};

struct DataStats {
    RVec mean;
    RVec stddev;
};

/// Uniform: |+>^n input, omega ~ U[-0.1, 0.1]. Normal: input fitted to the
/// moment-matched discretized normal, omega ~ U[-0.1, 0.1]. Random: |0>^n,
/// omega ~ U[-pi, pi]. Registers hold qubits[r] qubits each; the circuit
/// is ry_cz_generator over all of them.
[[nodiscard]] Generator init_generator(InitStrategy strategy,
                                       const std::vector<int> &qubits,
                                       int depth, std::uint64_t seed,
                                       const DataStats &stats = {});

/// Affine map of samples (one row per sample) onto the integer grid
/// 0..2^{n_r}-1 of each register.
struct GridMap {
    RVec lo;
    RVec hi;
    std::vector<int> qubits;
    [[nodiscard]] RMat to_grid(const RMat &samples) const;
    /// Grid values of basis index b, one entry per register.
    [[nodiscard]] RVec point(std::uint64_t b) const;
    /// Basis index of a grid point.
    [[nodiscard]] std::uint64_t index(const RVec &grid_point) const;
    [[nodiscard]] int total_qubits() const;
};

/// Discriminator input per sample: the n bits of its basis index, or its
/// grid value per register.
enum class DiscInput { Bits, Value };

struct QGANConfig {
    std::vector<int> qubits{3};
    int depth = 1;
    InitStrategy init = InitStrategy::Uniform;
    int epochs = 2000;
    int batch_size = 2000;
    double lr = 1e-4;
    /// Discriminator learning rate; lr when zero.
    double disc_lr = 0.0;
    double beta1 = 0.7;
    double beta2 = 0.99;
    double gradient_penalty = 1.0;
    double leaky_slope = 0.2;
    std::vector<int> hidden{50, 20};
    DiscInput disc_input = DiscInput::Bits;
    std::uint64_t seed = 0;
    /// Reference distribution Q of the per-epoch D_RE(generator || Q); the
    /// empirical training distribution when empty.
    RVec target;
    /// Samples drawn from each side for the final KS statistic (1-D only).
    int ks_samples = 500;
    /// Record D_KS every epoch instead of only at the end.
    bool ks_every_epoch = false;
};

struct QGANResult {
    /// loss = L_G, disc_loss = L_D, relative_entropy, ks per epoch;
    /// params holds the generator probabilities per epoch.
    TrainRecord record;
    Generator generator;
    Discriminator discriminator;
    GridMap grid;
    double final_ks = 0.0;
    double initial_relative_entropy = 0.0;
    double final_relative_entropy = 0.0;
};

/// samples: one row per sample, one column per register, already on the
/// range [lo, hi] of the grid (the default grid is 0..2^n-1).
[[nodiscard]] QGANResult qgan_train(const QGANConfig &cfg,
                                    const RMat &samples);
[[nodiscard]] QGANResult qgan_train(const QGANConfig &cfg,
                                    const RMat &samples, const GridMap &grid);

/// Column of 1-D samples.
[[nodiscard]] RMat as_column(const std::vector<double> &values);

} // namespace vqs
