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

#include <string>
#include <vector>

#include "vqsim/common.hpp"

namespace vqs {

struct AmsgradConfig {
    double lr = 0.1;
    double beta1 = 0.7;
    double beta2 = 0.99;
    double eps = 1e-8;
};

/// Moment state of AMSGRAD.
struct AmsgradState {
    RVec m;
    RVec v;
    RVec vhat;
    long t = 0;
    static AmsgradState zeros(int n_params);
};

/// One update: m and v are exponential averages of g and g^2, vhat their
/// running maximum, and the step is
/// lr * sqrt(1 - beta2^t) / (1 - beta1^t) * m / (sqrt(vhat) + eps).
[[nodiscard]] RVec amsgrad_step(const RVec &theta, const RVec &grad,
                                AmsgradState &state, const AmsgradConfig &cfg);

class Amsgrad {
  public:
    Amsgrad() = default;
    Amsgrad(int n_params, AmsgradConfig cfg);

    [[nodiscard]] RVec step(const RVec &theta, const RVec &grad);
    [[nodiscard]] const AmsgradConfig &config() const { return cfg_; }
    [[nodiscard]] const AmsgradState &state() const { return state_; }
    void reset();

  private:
    AmsgradConfig cfg_;
    AmsgradState state_;
};

/// Per-iteration training history. Unused series stay empty.
struct TrainRecord {
    std::vector<double> loss;
    std::vector<double> disc_loss;
    std::vector<double> ks;
    std::vector<double> relative_entropy;
    std::vector<double> l1;
    std::vector<RVec> params;
    /// Header iteration,loss,disc_loss,ks,relative_entropy,l1.
    [[nodiscard]] std::string to_csv() const;
};

} // namespace vqs
