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

#include "vqsim/qae.hpp"

#include <algorithm>
#include <cmath>

#include "vqsim/rng.hpp"

namespace vqs {

int PricingProblem::n_qubits() const {
    int n = 0;
    while ((Eigen::Index{1} << n) < distribution.size()) {
        ++n;
    }
    return n;
}

void PricingProblem::validate() const {
    const int n = n_qubits();
    require(n >= 1 && (Eigen::Index{1} << n) == distribution.size(),
            Status::InvalidArgument,
            "distribution length must be a power of two >= 2");
    check_distribution(distribution);
    require(strike >= 0 && strike < (1 << n), Status::InvalidArgument,
            "strike must lie in [0, 2^n)");
    require(eval_qubits >= 1, Status::InvalidArgument,
            "need at least one evaluation qubit");
}

double payoff_scale(int n_qubits, int strike) {
    return static_cast<double>((1 << n_qubits) - strike - 1);
}

double payoff_fraction(int i, int n_qubits, int strike) {
    const double scale = payoff_scale(n_qubits, strike);
    if (i <= strike || scale <= 0.0) {
        return 0.0;
    }
    return static_cast<double>(i - strike) / scale;
}

double analytic_payoff(const PricingProblem &problem) {
    problem.validate();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < problem.distribution.size(); ++i) {
        sum += problem.distribution[i] *
               std::max<double>(static_cast<double>(i) - problem.strike, 0.0);
    }
    return sum;
}

ParamCircuit payoff_circuit(int n_qubits, int strike) {
    require(n_qubits >= 1, Status::InvalidArgument, "need price qubits");
    require(strike >= 0 && strike < (1 << n_qubits), Status::InvalidArgument,
            "strike must lie in [0, 2^n)");
    const int cmp = n_qubits;
    const int pay = n_qubits + 1;
    ParamCircuit c(n_qubits + 2);
    std::vector<int> controls(static_cast<std::size_t>(n_qubits));
    for (int q = 0; q < n_qubits; ++q) {
        controls[static_cast<std::size_t>(q)] = q;
    }
    const std::size_t dim = std::size_t{1} << n_qubits;

    std::vector<int> qubits = controls;
    qubits.push_back(cmp);
    std::vector<double> flip(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (static_cast<int>(i) > strike) {
            flip[i] = M_PI;
        }
    }
    c.add_fixed(GateKind::UC_RY, qubits, flip);

    qubits = controls;
    qubits.push_back(cmp);
    qubits.push_back(pay);
    std::vector<double> rot(2 * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        const double f = payoff_fraction(static_cast<int>(i), n_qubits, strike);
        rot[i | dim] = 2.0 * std::asin(std::sqrt(f));
    }
    c.add_fixed(GateKind::UC_RY, qubits, rot);
    return c;
}

ParamCircuit build_a_operator(const ParamCircuit &loader, int strike) {
    require(loader.n_params() == 0, Status::InvalidArgument,
            "loader must be slot-free");
    const int n = loader.n_qubits();
    std::vector<int> map(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        map[static_cast<std::size_t>(q)] = q;
    }
    ParamCircuit a = loader.remapped(map, n + 2);
    a.append(payoff_circuit(n, strike));
    return a;
}

ParamCircuit build_a_operator(const PricingProblem &problem) {
    problem.validate();
    return build_a_operator(state_loader(problem.distribution), problem.strike);
}

CMat circuit_unitary(const ParamCircuit &circuit) {
    require(circuit.n_params() == 0, Status::InvalidArgument,
            "circuit must be slot-free");
    const Eigen::Index dim = Eigen::Index{1} << circuit.n_qubits();
    CMat u(dim, dim);
    const RVec none;
    for (Eigen::Index j = 0; j < dim; ++j) {
        CVec col = CVec::Zero(dim);
        col[j] = 1.0;
        circuit.run(col, none);
        u.col(j) = col;
    }
    return u;
}

CMat grover_operator(const ParamCircuit &a_operator) {
    const CMat a = circuit_unitary(a_operator);
    const Eigen::Index dim = a.rows();
    const Eigen::Index good = dim / 2;
    // -A S_0 A^dag = A (2|0><0| - I) A^dag = 2|psi><psi| - I.
    const CVec psi = a.col(0);
    CMat q = 2.0 * psi * psi.adjoint() - CMat::Identity(dim, dim);
    q.rightCols(dim - good) *= -1.0;
    return q;
}

RVec phase_estimation_distribution(const ParamCircuit &a_operator,
                                   int eval_qubits) {
    require(eval_qubits >= 1, Status::InvalidArgument,
            "need at least one evaluation qubit");
    require(eval_qubits + a_operator.n_qubits() <= kMaxQaeQubits,
            Status::Capacity,
            "phase estimation needs " +
                std::to_string(eval_qubits + a_operator.n_qubits()) +
                " qubits, cap is " + std::to_string(kMaxQaeQubits));
    const CMat q = grover_operator(a_operator);
    const CVec psi = circuit_unitary(a_operator).col(0);
    const Eigen::Index m_dim = Eigen::Index{1} << eval_qubits;

    // Row y holds the system state paired with evaluation basis state |y>.
    CMat joint = psi.transpose().replicate(m_dim, 1) /
                 std::sqrt(static_cast<double>(m_dim));
    CMat power = q;
    for (int j = 0; j < eval_qubits; ++j) {
        const Eigen::Index b = Eigen::Index{1} << j;
        for (Eigen::Index y = 0; y < m_dim; ++y) {
            if ((y & b) != 0) {
                joint.row(y) = (power * joint.row(y).transpose()).transpose();
            }
        }
        power = power * power;
    }

    CMat inv_qft(m_dim, m_dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(m_dim));
    for (Eigen::Index y = 0; y < m_dim; ++y) {
        for (Eigen::Index x = 0; x < m_dim; ++x) {
            const double ph = -2.0 * M_PI *
                              static_cast<double>((x * y) % m_dim) /
                              static_cast<double>(m_dim);
            inv_qft(y, x) = std::polar(norm, ph);
        }
    }
    return (inv_qft * joint).cwiseAbs2().rowwise().sum();
}

PayoffResult qae_from_a_operator(const ParamCircuit &a_operator, int n_qubits,
                                 int strike, int eval_qubits) {
    require(a_operator.n_qubits() == n_qubits + 2, Status::DimensionMismatch,
            "A-operator must act on n + 2 qubits");
    const RVec probs = phase_estimation_distribution(a_operator, eval_qubits);
    const Eigen::Index m_dim = probs.size();

    // y and 2^m - y give the same amplitude; pick the likeliest grid value.
    PayoffResult r;
    r.method = "qae";
    for (Eigen::Index y = 0; y <= m_dim / 2; ++y) {
        double p = probs[y];
        if (y != 0 && y != m_dim / 2) {
            p += probs[m_dim - y];
        }
        if (p > r.outcome_probability) {
            r.outcome_probability = p;
            r.outcome = static_cast<int>(y);
        }
    }
    const double md = static_cast<double>(m_dim);
    const double s = std::sin(M_PI * r.outcome / md);
    r.amplitude = s * s;
    r.grid_error_bound = M_PI / md + M_PI * M_PI / (md * md);
    const double scale = payoff_scale(n_qubits, strike);
    r.payoff = r.amplitude * scale;
    r.ci_low = std::max(0.0, r.amplitude - r.grid_error_bound) * scale;
    r.ci_high = std::min(1.0, r.amplitude + r.grid_error_bound) * scale;
    return r;
}

PayoffResult qae_estimate(const PricingProblem &problem) {
    problem.validate();
    return qae_from_a_operator(build_a_operator(problem), problem.n_qubits(),
                               problem.strike, problem.eval_qubits);
}

PayoffResult exact_a_operator_payoff(const PricingProblem &problem) {
    problem.validate();
    const int n = problem.n_qubits();
    const StateVector s = build_a_operator(problem).simulate(RVec());
    const RVec p = s.amplitudes().cwiseAbs2();
    PayoffResult r;
    r.method = "exact";
    r.amplitude = p.tail(p.size() / 2).sum();
    r.payoff = r.amplitude * payoff_scale(n, problem.strike);
    r.ci_low = r.payoff;
    r.ci_high = r.payoff;
    return r;
}

PayoffResult mc_estimate(const PricingProblem &problem, std::uint64_t shots,
                         std::uint64_t seed) {
    problem.validate();
    require(shots > 0, Status::InvalidArgument, "shots must be positive");
    Rng rng(seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const auto i = static_cast<double>(rng.categorical(problem.distribution));
        const double v = std::max(i - problem.strike, 0.0);
        sum += v;
        sum_sq += v * v;
    }
    const auto n = static_cast<double>(shots);
    const double mean = sum / n;
    const double var =
        shots > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
    const double half = 1.959963984540054 * std::sqrt(var / n);
    PayoffResult r;
    r.method = "mc";
    r.payoff = mean;
    const double scale = payoff_scale(problem.n_qubits(), problem.strike);
    r.amplitude = scale > 0.0 ? mean / scale : 0.0;
    r.ci_low = mean - half;
    r.ci_high = mean + half;
    r.shots = shots;
    return r;
}

PayoffResult price_with_trained_generator(const Generator &generator,
                                          int strike, int eval_qubits) {
    const ParamCircuit loader = generator.loader();
    const int n = loader.n_qubits();
    PayoffResult r = qae_from_a_operator(build_a_operator(loader, strike), n,
                                         strike, eval_qubits);
    r.method = "qae-generator";
    return r;
}

PricingProblem lognormal_pricing_problem(int n_qubits, int strike,
                                         int eval_qubits) {
    check_qubit_count(n_qubits);
    PricingProblem p;
    p.distribution = discretized_lognormal(1.0, 1.0, 1 << n_qubits);
    p.strike = strike;
    p.eval_qubits = eval_qubits;
    p.validate();
    return p;
}

RVec published_lognormal_omega() {
    RVec w(6);
    w << 0.3580, 1.0903, 1.5255, 1.3651, 1.4932, -0.9092;
    return w;
}

Generator published_lognormal_generator() {
    Generator g;
    g.circuit = ry_cz_generator(3, 1);
    g.omega = published_lognormal_omega();
    g.input = StateVector::zero(3);
    g.preparation = ParamCircuit(3);
    return g;
}

} // namespace vqs
