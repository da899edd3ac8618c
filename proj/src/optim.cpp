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
#include "vqsim/optim.hpp"

#include <algorithm>
#include <cmath>

#include "vqsim/textio.hpp"

namespace vqs {

namespace {

void check_config(const AmsgradConfig &cfg) {
    require(cfg.lr > 0.0, Status::InvalidArgument, "learning rate must be > 0");
    require(cfg.beta1 >= 0.0 && cfg.beta1 < 1.0 && cfg.beta2 >= 0.0 &&
                cfg.beta2 < 1.0,
            Status::InvalidArgument, "momenta must lie in [0, 1)");
    require(cfg.eps >= 0.0, Status::InvalidArgument, "eps must be >= 0");
}

} // namespace

AmsgradState AmsgradState::zeros(int n_params) {
    require(n_params >= 0, Status::InvalidArgument, "negative parameter count");
    return {RVec::Zero(n_params), RVec::Zero(n_params), RVec::Zero(n_params),
            0};
}

RVec amsgrad_step(const RVec &theta, const RVec &grad, AmsgradState &state,
                  const AmsgradConfig &cfg) {
    check_config(cfg);
    require(theta.size() == state.m.size() && grad.size() == state.m.size(),
            Status::DimensionMismatch, "optimizer size mismatch");
    require(grad.allFinite(), Status::Numerical, "non-finite gradient");
    state.t += 1;
    state.m = cfg.beta1 * state.m + (1.0 - cfg.beta1) * grad;
    state.v = cfg.beta2 * state.v + (1.0 - cfg.beta2) * grad.cwiseAbs2();
    state.vhat = state.vhat.cwiseMax(state.v);
    const double t = static_cast<double>(state.t);
    const double lr = cfg.lr * std::sqrt(1.0 - std::pow(cfg.beta2, t)) /
                      (1.0 - std::pow(cfg.beta1, t));
    RVec out = theta;
    for (Eigen::Index i = 0; i < theta.size(); ++i) {
        out[i] -= lr * state.m[i] / (std::sqrt(state.vhat[i]) + cfg.eps);
    }
    return out;
}

Amsgrad::Amsgrad(int n_params, AmsgradConfig cfg)
    : cfg_(cfg), state_(AmsgradState::zeros(n_params)) {
    check_config(cfg);
}

void Amsgrad::reset() { state_ = AmsgradState::zeros(static_cast<int>(state_.m.size())); }

RVec Amsgrad::step(const RVec &theta, const RVec &grad) {
    return amsgrad_step(theta, grad, state_, cfg_);
}

std::string TrainRecord::to_csv() const {
    const std::vector<const std::vector<double> *> cols = {
        &loss, &disc_loss, &ks, &relative_entropy, &l1};
    std::size_t rows = 0;
    for (const auto *c : cols) {
        rows = std::max(rows, c->size());
    }
    std::string s = "iteration,loss,disc_loss,ks,relative_entropy,l1\n";
    for (std::size_t r = 0; r < rows; ++r) {
        s += std::to_string(r);
        for (const auto *c : cols) {
            s += ",";
            if (r < c->size()) {
                s += format_double((*c)[r]);
            }
        }
        s += "\n";
    }
    return s;
}

} // namespace vqs
