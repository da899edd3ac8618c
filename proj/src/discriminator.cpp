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
#include <cmath>

#include "vqsim/qgan.hpp"
#include "vqsim/rng.hpp"

namespace vqs {

namespace {

double sigmoid(double z) {
    return z >= 0.0 ? 1.0 / (1.0 + std::exp(-z))
                    : std::exp(z) / (1.0 + std::exp(z));
}

void check_sizes(const std::vector<int> &sizes) {
    require(sizes.size() >= 2, Status::InvalidArgument,
            "discriminator needs input and output layers");
    for (int s : sizes) {
        require(s >= 1, Status::InvalidArgument, "layer sizes must be >= 1");
    }
    require(sizes.back() == 1, Status::InvalidArgument,
            "discriminator output layer must have one node");
}

} // namespace

double leaky_relu(double z, double slope) { return z >= 0.0 ? z : slope * z; }

Discriminator Discriminator::zeros(std::vector<int> sizes, double slope) {
    check_sizes(sizes);
    Discriminator d;
    d.sizes_ = std::move(sizes);
    d.slope_ = slope;
    Eigen::Index off = 0;
    for (std::size_t l = 1; l < d.sizes_.size(); ++l) {
        d.offsets_.push_back(off);
        off += static_cast<Eigen::Index>(d.sizes_[l]) * (d.sizes_[l - 1] + 1);
    }
    d.p_ = RVec::Zero(off);
    return d;
}

Discriminator::Discriminator(std::vector<int> sizes, std::uint64_t seed,
                             double slope)
    : Discriminator(zeros(std::move(sizes), slope)) {
    Rng rng(seed);
    for (std::size_t l = 1; l < sizes_.size(); ++l) {
        const double lim = std::sqrt(6.0 / (sizes_[l] + sizes_[l - 1]));
        const Eigen::Index nw =
            static_cast<Eigen::Index>(sizes_[l]) * sizes_[l - 1];
        for (Eigen::Index i = 0; i < nw; ++i) {
            p_[offsets_[l - 1] + i] = rng.uniform(-lim, lim);
        }
    }
}

void Discriminator::set_params(const RVec &p) {
    require(p.size() == p_.size(), Status::DimensionMismatch,
            "discriminator parameter count mismatch");
    p_ = p;
}

RMat Discriminator::weight(std::size_t l) const {
    const int out = sizes_[l + 1];
    const int in = sizes_[l];
    return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                          Eigen::Dynamic, Eigen::RowMajor>>(
        p_.data() + offsets_[l], out, in);
}

RVec Discriminator::bias(std::size_t l) const {
    const int out = sizes_[l + 1];
    const int in = sizes_[l];
    return p_.segment(offsets_[l] + static_cast<Eigen::Index>(out) * in, out);
}

double Discriminator::forward(const RVec &x) const {
    require(x.size() == sizes_.front(), Status::DimensionMismatch,
            "discriminator input dimension mismatch");
    RVec a = x;
    const std::size_t L = sizes_.size() - 1;
    for (std::size_t l = 0; l < L; ++l) {
        RVec z = weight(l) * a + bias(l);
        if (l + 1 < L) {
            for (Eigen::Index i = 0; i < z.size(); ++i) {
                z[i] = leaky_relu(z[i], slope_);
            }
        }
        a = std::move(z);
    }
    return sigmoid(a[0]);
}

Discriminator::Eval Discriminator::evaluate(const RVec &x) const {
    require(x.size() == sizes_.front(), Status::DimensionMismatch,
            "discriminator input dimension mismatch");
    const std::size_t L = sizes_.size() - 1;
    std::vector<RVec> acts{x};
    std::vector<RVec> slopes;
    for (std::size_t l = 0; l < L; ++l) {
        RVec z = weight(l) * acts.back() + bias(l);
        if (l + 1 < L) {
            RVec d(z.size());
            for (Eigen::Index i = 0; i < z.size(); ++i) {
                d[i] = z[i] >= 0.0 ? 1.0 : slope_;
                z[i] = leaky_relu(z[i], slope_);
            }
            slopes.push_back(std::move(d));
        }
        acts.push_back(std::move(z));
    }
    Eval e;
    e.output = sigmoid(acts.back()[0]);
    e.dparams = RVec::Zero(p_.size());
    // delta = d D / d z_l, walking backwards from the output.
    RVec delta = RVec::Constant(1, e.output * (1.0 - e.output));
    for (std::size_t l = L; l-- > 0;) {
        const int out = sizes_[l + 1];
        const int in = sizes_[l];
        Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>(
            e.dparams.data() + offsets_[l], out, in) =
            delta * acts[l].transpose();
        e.dparams.segment(offsets_[l] + static_cast<Eigen::Index>(out) * in,
                          out) = delta;
        RVec back = weight(l).transpose() * delta;
        if (l > 0) {
            back = back.cwiseProduct(slopes[l - 1]);
        }
        delta = std::move(back);
    }
    e.dinput = std::move(delta);
    return e;
}

Discriminator::Penalty
Discriminator::input_gradient_penalty(const RVec &x) const {
    // D = s(z_L) with d z_L / d x = u = W_1^T S_1 ... W_L^T; the LeakyReLU
    // slopes S_l are piecewise constant, so |u|^2 depends on the weights
    // only.
    const Eval e = evaluate(x);
    const double s = e.output;
    const double ds = s * (1.0 - s);
    const double dds = ds * (1.0 - 2.0 * s);
    const RVec u = e.dinput / ds;
    const double q = u.squaredNorm();

    const std::size_t L = sizes_.size() - 1;
    std::vector<RVec> slopes;
    {
        RVec a = x;
        for (std::size_t l = 0; l + 1 < L; ++l) {
            RVec z = weight(l) * a + bias(l);
            RVec d(z.size());
            for (Eigen::Index i = 0; i < z.size(); ++i) {
                d[i] = z[i] >= 0.0 ? 1.0 : slope_;
                z[i] = leaky_relu(z[i], slope_);
            }
            slopes.push_back(std::move(d));
            a = std::move(z);
        }
    }
    // right[l] = S_{l-1} W_{l-1} ... S_0 W_0 (sizes_[l] x d_in).
    std::vector<RMat> right(L);
    right[0] = RMat::Identity(sizes_[0], sizes_[0]);
    for (std::size_t l = 1; l < L; ++l) {
        right[l] = slopes[l - 1].asDiagonal() * (weight(l - 1) * right[l - 1]);
    }
    // left[l] = W_{L-1} S_{L-2} ... W_{l+1} S_l as a row (1 x sizes_[l+1]).
    std::vector<RVec> left(L);
    left[L - 1] = RVec::Ones(1);
    for (std::size_t l = L - 1; l-- > 0;) {
        left[l] = (left[l + 1].transpose() * weight(l + 1)).transpose();
        left[l] = left[l].cwiseProduct(slopes[l]);
    }

    Penalty pen;
    pen.value = ds * ds * q;
    // d(ds^2)/d params = 2 ds dds dz_L/d params = 2 dds dD/d params.
    pen.dparams = (2.0 * q * dds) * e.dparams;
    for (std::size_t l = 0; l < L; ++l) {
        const int out = sizes_[l + 1];
        const int in = sizes_[l];
        const RMat dq = 2.0 * left[l] * (right[l] * u).transpose();
        Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>(
            pen.dparams.data() + offsets_[l], out, in) += ds * ds * dq;
    }
    return pen;
}

BatchResult discriminator_forward_backward(const Discriminator &d,
                                           const RMat &inputs,
                                           const RVec &targets,
                                           const RVec &weights) {
    require(inputs.cols() == d.input_dim(), Status::DimensionMismatch,
            "discriminator input dimension mismatch");
    require(targets.size() == inputs.rows() && weights.size() == inputs.rows(),
            Status::DimensionMismatch, "targets and weights must match rows");
    BatchResult r;
    r.outputs.resize(inputs.rows());
    r.grad = RVec::Zero(d.n_params());
    for (Eigen::Index i = 0; i < inputs.rows(); ++i) {
        const Discriminator::Eval e = d.evaluate(inputs.row(i).transpose());
        r.outputs[i] = e.output;
        const double t = targets[i];
        const double lo = std::max(e.output, kGanLogClip);
        const double hi = std::max(1.0 - e.output, kGanLogClip);
        r.loss -= weights[i] * (t * std::log(lo) + (1.0 - t) * std::log(hi));
        double dl = 0.0;
        if (e.output > kGanLogClip) {
            dl -= t / e.output;
        }
        if (1.0 - e.output > kGanLogClip) {
            dl += (1.0 - t) / (1.0 - e.output);
        }
        r.grad += weights[i] * dl * e.dparams;
    }
    return r;
}

} // namespace vqs
