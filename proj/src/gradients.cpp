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
#include "vqsim/gradients.hpp"

#include <Eigen/Eigenvalues>

namespace vqs {

namespace {

void check_request(const ParamCircuit &c, const RVec &omega,
                   const StateVector &input) {
    require(omega.size() == c.n_params(), Status::DimensionMismatch,
            "parameter vector length does not match circuit");
    require(input.n_qubits() == c.n_qubits(), Status::DimensionMismatch,
            "input state width does not match circuit");
}

void check_shift(double s) {
    require(std::isfinite(s) && std::abs(std::sin(s)) > 1e-9,
            Status::InvalidArgument,
            "shift must not be an integer multiple of pi");
}

/// Shift rules need one Pauli-rotation gate per slot.
void check_shiftable(const ParamCircuit &c) {
    for (const auto &gates : c.slot_gates()) {
        require(gates.size() <= 1, Status::Unsupported,
                "shift rule needs each parameter to drive a single gate");
        for (int g : gates) {
            const GateKind k = c.gates()[static_cast<std::size_t>(g)].kind;
            require(k == GateKind::RX || k == GateKind::RY ||
                        k == GateKind::RZ || k == GateKind::PHASE,
                    Status::Unsupported,
                    "shift rule does not support generator of " +
                        gate_name(k));
        }
    }
}

std::vector<CVec> pre_gate_states(const ParamCircuit &c, const RVec &omega,
                                  const CVec &input) {
    std::vector<CVec> pre;
    pre.reserve(c.size() + 1);
    CVec a = input;
    for (const auto &g : c.gates()) {
        pre.push_back(a);
        apply_gate_raw(a, c.n_qubits(), g, g.angle(omega));
    }
    pre.push_back(std::move(a));
    return pre;
}

void run_from(const ParamCircuit &c, const RVec &omega, CVec &a,
              std::size_t start) {
    const auto &gs = c.gates();
    for (std::size_t i = start; i < gs.size(); ++i) {
        apply_gate_raw(a, c.n_qubits(), gs[i], gs[i].angle(omega));
    }
}

} // namespace

Tangent state_tangent(const ParamCircuit &c, const RVec &omega,
                      const StateVector &input) {
    check_request(c, omega, input);
    const auto pre = pre_gate_states(c, omega, input.amplitudes());
    Tangent t;
    t.psi = pre.back();
    t.dpsi.assign(static_cast<std::size_t>(c.n_params()),
                  CVec::Zero(t.psi.size()));
    const auto &gs = c.gates();
    for (std::size_t g = 0; g < gs.size(); ++g) {
        if (gs[g].slot < 0) {
            continue;
        }
        CVec a = pre[g];
        apply_gate_derivative_raw(a, c.n_qubits(), gs[g], gs[g].angle(omega));
        run_from(c, omega, a, g + 1);
        t.dpsi[static_cast<std::size_t>(gs[g].slot)] += a;
    }
    return t;
}

std::vector<CVec> state_second_derivatives(const ParamCircuit &c,
                                           const RVec &omega,
                                           const StateVector &input) {
    check_request(c, omega, input);
    const auto pre = pre_gate_states(c, omega, input.amplitudes());
    const auto k = static_cast<std::size_t>(c.n_params());
    std::vector<CVec> d2(k * k, CVec::Zero(pre.back().size()));
    const auto &gs = c.gates();
    const int n = c.n_qubits();
    for (std::size_t a = 0; a < gs.size(); ++a) {
        if (gs[a].slot < 0) {
            continue;
        }
        const auto sa = static_cast<std::size_t>(gs[a].slot);
        CVec self = pre[a];
        apply_gate_second_derivative_raw(self, n, gs[a], gs[a].angle(omega));
        run_from(c, omega, self, a + 1);
        d2[sa * k + sa] += self;

        CVec branch = pre[a];
        apply_gate_derivative_raw(branch, n, gs[a], gs[a].angle(omega));
        for (std::size_t b = a + 1; b < gs.size(); ++b) {
            if (gs[b].slot >= 0) {
                const auto sb = static_cast<std::size_t>(gs[b].slot);
                CVec t = branch;
                apply_gate_derivative_raw(t, n, gs[b], gs[b].angle(omega));
                run_from(c, omega, t, b + 1);
                d2[sa * k + sb] += t;
                d2[sb * k + sa] += t;
            }
            apply_gate_raw(branch, n, gs[b], gs[b].angle(omega));
        }
    }
    return d2;
}

namespace {

RVec shifted(const RVec &w, int i, double s) {
    RVec out = w;
    out[i] += s;
    return out;
}

RVec grad_shift(const GradientRequest &req, const RVec &omega) {
    check_shiftable(req.circuit);
    check_shift(req.shift);
    const int k = req.circuit.n_params();
    const double s = req.shift;
    RVec g(k);
    for (int i = 0; i < k; ++i) {
        const double fp = expectation(
            req.circuit.simulate(shifted(omega, i, s), req.input),
            req.observable);
        const double fm = expectation(
            req.circuit.simulate(shifted(omega, i, -s), req.input),
            req.observable);
        g[i] = (fp - fm) / (2.0 * std::sin(s));
    }
    return g;
}

template <class F>
RMat double_shift(int k, const RVec &omega, double s, F f) {
    RMat h(k, k);
    const double den = 4.0 * std::sin(s) * std::sin(s);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            auto at = [&](double si, double sj) {
                RVec w = omega;
                w[i] += si;
                w[j] += sj;
                return f(w);
            };
            const double v =
                (at(s, s) - at(s, -s) - at(-s, s) + at(-s, -s)) / den;
            h(i, j) = v;
            h(j, i) = v;
        }
    }
    return h;
}

} // namespace

RVec grad_expectation(const GradientRequest &req, const RVec &omega) {
    check_request(req.circuit, omega, req.input);
    require(req.observable.n_qubits() == req.circuit.n_qubits(),
            Status::DimensionMismatch,
            "observable width does not match circuit");
    const int k = req.circuit.n_params();
    switch (req.method) {
    case GradMethod::ParamShift:
        return grad_shift(req, omega);
    case GradMethod::LinearCombination: {
        RVec g(k);
        for (int i = 0; i < k; ++i) {
            g[i] = lc_gradient_circuit(req.circuit, i, i, LCMode::FirstExplicit,
                                       req.observable)
                       .evaluate(omega, req.input);
        }
        return g;
    }
    case GradMethod::DirectDifferentiation:
        break;
    }
    const Tangent t = state_tangent(req.circuit, omega, req.input);
    const CVec opsi = req.observable.apply(t.psi);
    RVec g(k);
    for (int i = 0; i < k; ++i) {
        g[i] = 2.0 * t.dpsi[static_cast<std::size_t>(i)].dot(opsi).real();
    }
    return g;
}

RMat hessian_expectation(const GradientRequest &req, const RVec &omega) {
    check_request(req.circuit, omega, req.input);
    require(req.observable.n_qubits() == req.circuit.n_qubits(),
            Status::DimensionMismatch,
            "observable width does not match circuit");
    const int k = req.circuit.n_params();
    switch (req.method) {
    case GradMethod::ParamShift:
        check_shiftable(req.circuit);
        check_shift(req.shift);
        return double_shift(k, omega, req.shift, [&](const RVec &w) {
            return expectation(req.circuit.simulate(w, req.input),
                               req.observable);
        });
    case GradMethod::LinearCombination: {
        RMat h(k, k);
        for (int i = 0; i < k; ++i) {
            for (int j = i; j < k; ++j) {
                h(i, j) = lc_gradient_circuit(req.circuit, i, j,
                                              LCMode::SecondExplicit,
                                              req.observable)
                              .evaluate(omega, req.input);
                h(j, i) = h(i, j);
            }
        }
        return h;
    }
    case GradMethod::DirectDifferentiation:
        break;
    }
    const Tangent t = state_tangent(req.circuit, omega, req.input);
    const auto d2 = state_second_derivatives(req.circuit, omega, req.input);
    const CVec opsi = req.observable.apply(t.psi);
    std::vector<CVec> od(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        od[static_cast<std::size_t>(i)] =
            req.observable.apply(t.dpsi[static_cast<std::size_t>(i)]);
    }
    RMat h(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            const auto ij = static_cast<std::size_t>(i * k + j);
            const double v =
                2.0 * (d2[ij].dot(opsi).real() +
                       t.dpsi[static_cast<std::size_t>(i)]
                           .dot(od[static_cast<std::size_t>(j)])
                           .real());
            h(i, j) = v;
            h(j, i) = v;
        }
    }
    return h;
}

MetricResult fubini_study(const ParamCircuit &c, const RVec &omega,
                          const StateVector &input, GradMethod method,
                          double shift) {
    check_request(c, omega, input);
    const int k = c.n_params();
    MetricResult r;
    switch (method) {
    case GradMethod::ParamShift: {
        check_shiftable(c);
        check_shift(shift);
        const CVec psi0 = c.simulate(omega, input).amplitudes();
        // F = -1/2 Hessian of |<psi(omega)|psi(omega + d)>|^2 at d = 0.
        r.matrix = -0.5 * double_shift(k, omega, shift, [&](const RVec &w) {
                       return std::norm(
                           psi0.dot(c.simulate(w, input).amplitudes()));
                   });
        return r;
    }
    case GradMethod::LinearCombination:
        r.matrix.resize(k, k);
        for (int i = 0; i < k; ++i) {
            for (int j = i; j < k; ++j) {
                r.matrix(i, j) =
                    lc_gradient_circuit(c, i, j, LCMode::Metric)
                        .evaluate(omega, input);
                r.matrix(j, i) = r.matrix(i, j);
            }
        }
        return r;
    case GradMethod::DirectDifferentiation:
        break;
    }
    const Tangent t = state_tangent(c, omega, input);
    std::vector<cplx> ov(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        ov[static_cast<std::size_t>(i)] =
            t.dpsi[static_cast<std::size_t>(i)].dot(t.psi);
    }
    r.matrix.resize(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            const auto si = static_cast<std::size_t>(i);
            const auto sj = static_cast<std::size_t>(j);
            const double v =
                (t.dpsi[si].dot(t.dpsi[sj]) - ov[si] * std::conj(ov[sj]))
                    .real();
            r.matrix(i, j) = v;
            r.matrix(j, i) = v;
        }
    }
    return r;
}

RMat grad_probabilities(const ParamCircuit &c, const RVec &omega,
                        const StateVector &input, GradMethod method,
                        double shift) {
    check_request(c, omega, input);
    const int k = c.n_params();
    const auto dim = static_cast<Eigen::Index>(input.dim());
    RMat dp(k, dim);
    if (method == GradMethod::DirectDifferentiation) {
        const Tangent t = state_tangent(c, omega, input);
        for (int i = 0; i < k; ++i) {
            const CVec &d = t.dpsi[static_cast<std::size_t>(i)];
            for (Eigen::Index b = 0; b < dim; ++b) {
                dp(i, b) = 2.0 * (std::conj(d[b]) * t.psi[b]).real();
            }
        }
        return dp;
    }
    require(method == GradMethod::ParamShift, Status::Unsupported,
            "probability gradients support ParamShift and "
            "DirectDifferentiation");
    check_shiftable(c);
    check_shift(shift);
    for (int i = 0; i < k; ++i) {
        const RVec pp =
            c.simulate(shifted(omega, i, shift), input).amplitudes().cwiseAbs2();
        const RVec pm = c.simulate(shifted(omega, i, -shift), input)
                            .amplitudes()
                            .cwiseAbs2();
        dp.row(i) = ((pp - pm) / (2.0 * std::sin(shift))).transpose();
    }
    return dp;
}

RMat pinv_symmetric(const RMat &m, double rcond) {
    require(m.rows() == m.cols(), Status::DimensionMismatch,
            "pseudo-inverse needs a square matrix");
    if (m.rows() == 0) {
        return m;
    }
    Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (m + m.transpose()));
    const RVec &ev = es.eigenvalues();
    const double cut = rcond * ev.cwiseAbs().maxCoeff();
    RVec inv = RVec::Zero(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (std::abs(ev[i]) > cut && ev[i] != 0.0) {
            inv[i] = 1.0 / ev[i];
        }
    }
    return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

RVec qng_step(const RVec &omega, const RVec &grad, const MetricResult &metric,
              double eta, double rcond) {
    require(eta > 0.0, Status::InvalidArgument, "step size must be positive");
    require(grad.size() == omega.size() &&
                metric.matrix.rows() == omega.size(),
            Status::DimensionMismatch, "gradient or metric size mismatch");
    return omega - eta * (pinv_symmetric(metric.matrix, rcond) * grad);
}

} // namespace vqs
