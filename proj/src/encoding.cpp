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

#include "vqsim/circuit.hpp"
#include "vqsim/gradients.hpp"

namespace vqs {

void check_distribution(const RVec &p, double tol) {
    const auto dim = static_cast<std::uint64_t>(p.size());
    require(dim >= 2 && (dim & (dim - 1)) == 0, Status::InvalidArgument,
            "distribution length must be a power of two");
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        require(std::isfinite(p[i]) && p[i] >= 0.0, Status::InvalidArgument,
                "distribution entries must be finite and nonnegative");
    }
    require(std::abs(p.sum() - 1.0) <= tol, Status::InvalidArgument,
            "distribution does not sum to 1");
}

StateVector amplitude_encode(const RVec &probabilities) {
    check_distribution(probabilities);
    CVec a = probabilities.cwiseSqrt().cast<cplx>();
    return StateVector::from_amplitudes(std::move(a), true);
}

ParamCircuit state_loader(const RVec &probabilities) {
    check_distribution(probabilities);
    int n = 0;
    while ((Eigen::Index{1} << n) < probabilities.size()) {
        ++n;
    }
    check_qubit_count(n);
    ParamCircuit c(n);
    for (int t = n - 1; t >= 0; --t) {
        const int nc = n - 1 - t;
        std::vector<int> qubits;
        for (int j = 0; j < nc; ++j) {
            qubits.push_back(t + 1 + j);
        }
        qubits.push_back(t);
        std::vector<double> angles(std::size_t{1} << nc, 0.0);
        for (std::size_t cfg = 0; cfg < angles.size(); ++cfg) {
            double m0 = 0.0;
            double m1 = 0.0;
            const Eigen::Index low = Eigen::Index{1} << t;
            for (Eigen::Index r = 0; r < low; ++r) {
                const Eigen::Index base =
                    (static_cast<Eigen::Index>(cfg) << (t + 1)) | r;
                m0 += probabilities[base];
                m1 += probabilities[base | low];
            }
            angles[cfg] = 2.0 * std::atan2(std::sqrt(m1), std::sqrt(m0));
        }
        c.add_fixed(GateKind::UC_RY, qubits, angles);
    }
    return c;
}

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / M_SQRT2); }

template <class Cdf> RVec discretize(Cdf cdf, int n_points) {
    require(n_points >= 1, Status::InvalidArgument, "need at least one point");
    RVec p(n_points);
    for (int i = 0; i < n_points; ++i) {
        const double lo = i == 0 ? 0.0 : cdf(i - 0.5);
        p[i] = cdf(i + 0.5) - lo;
    }
    const double s = p.sum();
    require(s > 0.0, Status::Numerical, "distribution has no mass on grid");
    return p / s;
}

} // namespace

RVec discretized_lognormal(double mu, double sigma, int n_points) {
    require(sigma > 0.0, Status::InvalidArgument, "sigma must be positive");
    return discretize(
        [&](double x) {
            return x <= 0.0 ? 0.0 : normal_cdf((std::log(x) - mu) / sigma);
        },
        n_points);
}

RVec discretized_normal(double mean, double std, int n_points) {
    require(std > 0.0, Status::InvalidArgument, "std must be positive");
    // Mass below -0.5 is dropped, as for the rounded-and-truncated samples.
    return discretize(
        [&](double x) {
            return x <= -0.5 ? 0.0 : normal_cdf((x - mean) / std) -
                                         normal_cdf((-0.5 - mean) / std);
        },
        n_points);
}

namespace {

double residual_of(const ParamCircuit &c, const StateVector &in,
                   const RVec &w, const RVec &target) {
    const RVec p = c.simulate(w, in).amplitudes().cwiseAbs2();
    return (p - target).squaredNorm();
}

} // namespace

FitResult fit_distribution(const RVec &target, const ParamCircuit &circuit,
                           const StateVector &input, const RVec &omega0,
                           const FitOptions &opts) {
    check_distribution(target);
    require(target.size() == (Eigen::Index{1} << circuit.n_qubits()),
            Status::DimensionMismatch,
            "target length does not match circuit width");
    FitResult r;
    r.omega = omega0;
    r.residual = residual_of(circuit, input, r.omega, target);
    double lr = opts.learning_rate;
    for (r.iterations = 0; r.iterations < opts.max_iterations;
         ++r.iterations) {
        if (r.residual < opts.tolerance) {
            break;
        }
        const RVec p = circuit.simulate(r.omega, input).amplitudes().cwiseAbs2();
        const RMat dp = grad_probabilities(circuit, r.omega, input,
                                           GradMethod::ParamShift);
        const RVec g = 2.0 * dp * (p - target);
        if (g.norm() < 1e-14) {
            break;
        }
        bool moved = false;
        for (int bt = 0; bt < 40; ++bt) {
            const RVec trial = r.omega - lr * g;
            const double res = residual_of(circuit, input, trial, target);
            if (res < r.residual) {
                r.omega = trial;
                r.residual = res;
                lr = std::min(lr * 1.5, 10.0);
                moved = true;
                break;
            }
            lr *= 0.5;
        }
        if (!moved) {
            break;
        }
    }
    r.converged = r.residual <= opts.residual_threshold;
    return r;
}

FitResult fit_distribution(const RVec &target, const ParamCircuit &circuit,
                           const StateVector &input, std::uint64_t seed,
                           const FitOptions &opts) {
    return fit_distribution(target, circuit, input,
                            random_params(circuit.n_params(), M_PI, seed),
                            opts);
}

} // namespace vqs
