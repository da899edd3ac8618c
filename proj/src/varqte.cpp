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
#include "vqsim/varqte.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include <Eigen/Eigenvalues>

#include "vqsim/gradients.hpp"
#include "vqsim/textio.hpp"

namespace vqs {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void check_problem(const VarQTEProblem &p) {
    require(p.ansatz.n_qubits() == p.input.n_qubits(),
            Status::DimensionMismatch, "input width does not match ansatz");
    require(p.hamiltonian.empty() ||
                p.hamiltonian.n_qubits() == p.ansatz.n_qubits(),
            Status::DimensionMismatch,
            "Hamiltonian width does not match ansatz");
    require(p.omega0.size() == p.ansatz.n_params(), Status::DimensionMismatch,
            "omega0 length does not match ansatz");
    require(std::isfinite(p.T) && p.T >= 0.0, Status::InvalidArgument,
            "evolution time must be nonnegative");
    require(p.delta_t > 0.0, Status::InvalidArgument,
            "error-bound step must be positive");
}

CVec apply_h(const PauliSum &h, const CVec &v) {
    return h.empty() ? CVec::Zero(v.size()) : h.apply(v);
}

/// Everything the right-hand sides need at one parameter point.
struct Local {
    Tangent tan;
    CVec hpsi;
    double energy = 0.0;
    double variance = 0.0;
    double h2 = 0.0;
    RMat F;
    /// Linear coefficient g with ||e||^2 = Var + w F w + 2 w.g.
    RVec g;
};

Local local_at(const VarQTEProblem &p, const RVec &omega) {
    Local L;
    L.tan = state_tangent(p.ansatz, omega, p.input);
    const int k = p.ansatz.n_params();
    L.hpsi = apply_h(p.hamiltonian, L.tan.psi);
    L.energy = L.tan.psi.dot(L.hpsi).real();
    L.h2 = L.hpsi.squaredNorm();
    L.variance = std::max(0.0, L.h2 - L.energy * L.energy);
    L.F.resize(k, k);
    std::vector<cplx> ov(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        ov[static_cast<std::size_t>(i)] =
            L.tan.dpsi[static_cast<std::size_t>(i)].dot(L.tan.psi);
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            const auto si = static_cast<std::size_t>(i);
            const auto sj = static_cast<std::size_t>(j);
            const double v = (L.tan.dpsi[si].dot(L.tan.dpsi[sj]) -
                              ov[si] * std::conj(ov[sj]))
                                 .real();
            L.F(i, j) = v;
            L.F(j, i) = v;
        }
    }
    L.g.resize(k);
    for (int i = 0; i < k; ++i) {
        const auto si = static_cast<std::size_t>(i);
        const cplx c = L.tan.dpsi[si].dot(L.hpsi);
        if (p.mode == TimeMode::Imaginary) {
            L.g[i] = c.real();
        } else {
            L.g[i] = -(c - L.energy * ov[si]).imag();
        }
    }
    return L;
}

double err_sq(const Local &L, const RVec &w) {
    const double quad = w.dot(L.F * w);
    const double lin = 2.0 * w.dot(L.g);
    const double v = L.variance + quad + lin;
    // Round-off below this floor would otherwise seed spurious bound growth.
    const double scale = L.variance + std::abs(quad) + std::abs(lin);
    if (v <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
        return 0.0;
    }
    return v;
}

RVec standard_from(const VarQTEProblem &p, const Local &L) {
    return -(pinv_symmetric(L.F, p.rcond) * L.g);
}

ArgminResult argmin_from(const VarQTEProblem &p, const Local &L) {
    ArgminResult r;
    r.omega_dot = standard_from(p, L);
    r.seed_error = err_sq(L, r.omega_dot);
    double best = L.variance + r.omega_dot.dot(L.F * r.omega_dot) +
                  2.0 * r.omega_dot.dot(L.g);
    const int k = static_cast<int>(r.omega_dot.size());
    const RVec seed = r.omega_dot;
    // Local search: stay in a box around the seed so near-null metric
    // directions cannot drive the rate off to infinity.
    const double box = std::max(1.0, seed.cwiseAbs().maxCoeff());
    double radius = 0.1 * box;
    const double floor = 1e-10 * std::max(1.0, r.omega_dot.norm());
    auto objective = [&](const RVec &w) {
        return L.variance + w.dot(L.F * w) + 2.0 * w.dot(L.g);
    };
    while (radius > floor) {
        if (r.iterations >= p.argmin_max_iterations) {
            r.cap_hit = true;
            break;
        }
        ++r.iterations;
        bool improved = false;
        for (int i = 0; i < k; ++i) {
            for (double dir : {1.0, -1.0}) {
                RVec trial = r.omega_dot;
                trial[i] += dir * radius;
                if (std::abs(trial[i] - seed[i]) > box) {
                    continue;
                }
                const double v = objective(trial);
                const double tol =
                    1e-12 * std::max(1.0, std::abs(best) + L.variance);
                if (v < best - tol) {
                    best = v;
                    r.omega_dot = std::move(trial);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            radius *= 0.5;
        }
    }
    r.error = std::sqrt(err_sq(L, r.omega_dot));
    r.seed_error = std::sqrt(r.seed_error);
    if (r.error > r.seed_error) {
        r.omega_dot = seed;
        r.error = r.seed_error;
    }
    return r;
}

struct Rhs {
    RVec omega_dot;
    double grad_err = 0.0;
    bool cap_hit = false;
};

Rhs rhs_from(const VarQTEProblem &p, const Local &L) {
    Rhs r;
    if (p.rhs == OdeRhs::Argmin) {
        ArgminResult a = argmin_from(p, L);
        r.omega_dot = std::move(a.omega_dot);
        r.grad_err = a.error;
        r.cap_hit = a.cap_hit;
    } else {
        r.omega_dot = standard_from(p, L);
        r.grad_err = std::sqrt(err_sq(L, r.omega_dot));
    }
    return r;
}

BoundInputs bound_inputs(const Local &L, double norm_h) {
    return {L.energy, L.variance, L.h2, norm_h};
}

double eps_rate(const VarQTEProblem &p, const Local &L, double grad_err,
                double eps, double norm_h) {
    if (!p.track_error_bound || eps >= kSqrt2) {
        return 0.0;
    }
    if (p.mode == TimeMode::Real) {
        return grad_err;
    }
    return eps_rate_imaginary(grad_err, bound_inputs(L, norm_h), eps,
                              p.delta_t);
}

/// Exact reference evolution of psi(omega0).
class Oracle {
  public:
    Oracle(const VarQTEProblem &p, const CVec &psi0) : mode_(p.mode) {
        const Eigen::Index dim = psi0.size();
        const CMat h = p.hamiltonian.empty() ? CMat::Zero(dim, dim)
                                             : p.hamiltonian.to_matrix();
        Eigen::SelfAdjointEigenSolver<CMat> es(h);
        ev_ = es.eigenvalues();
        vecs_ = es.eigenvectors();
        c0_ = vecs_.adjoint() * psi0;
        emin_ = ev_.minCoeff();
    }
    [[nodiscard]] CVec at(double t) const {
        CVec c = c0_;
        for (Eigen::Index i = 0; i < c.size(); ++i) {
            c[i] *= mode_ == TimeMode::Imaginary
                        ? cplx(std::exp(-(ev_[i] - emin_) * t), 0.0)
                        : std::polar(1.0, -ev_[i] * t);
        }
        CVec v = vecs_ * c;
        return v / v.norm();
    }

  private:
    TimeMode mode_;
    RVec ev_;
    CMat vecs_;
    CVec c0_;
    double emin_ = 0.0;
};

/// Right-hand side of the joint system (omega, eps, vec J).
class JointSystem {
  public:
    JointSystem(const VarQTEProblem &p, const ParamHamiltonian *hp,
                const RVec *x)
        : p_(p), hp_(hp), x_(x), k_(p.ansatz.n_params()) {
        norm_h_ = p.hamiltonian.empty() ? 0.0 : spectral_norm(p.hamiltonian);
        if (hp_ != nullptr) {
            np_ = hp_->n_params();
            wjac_ = hp_->weight_jacobian(*x_);
        }
    }

    [[nodiscard]] Eigen::Index size() const {
        return k_ + 1 + static_cast<Eigen::Index>(k_) * np_;
    }
    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] int np() const { return np_; }
    [[nodiscard]] double norm_h() const { return norm_h_; }

    RVec operator()(const RVec &y) {
        ++evaluations;
        const RVec omega = y.head(k_);
        const Local L = local_at(p_, omega);
        const Rhs r = rhs_from(p_, L);
        cap_hit = cap_hit || r.cap_hit;
        RVec dy = RVec::Zero(size());
        dy.head(k_) = r.omega_dot;
        dy[k_] = eps_rate(p_, L, r.grad_err, std::clamp(y[k_], 0.0, kSqrt2),
                          norm_h_);
        if (np_ > 0) {
            const RMat J = Eigen::Map<const RMat>(y.data() + k_ + 1, k_, np_);
            const RMat Jdot = chain_rhs(omega, L, J);
            Eigen::Map<RMat>(dy.data() + k_ + 1, k_, np_) = Jdot;
        }
        return dy;
    }

    long evaluations = 0;
    bool cap_hit = false;

  private:
    RMat chain_rhs(const RVec &omega, const Local &L, const RMat &J) const {
        const int k = k_;
        const auto d2 = state_second_derivatives(p_.ansatz, omega, p_.input);
        const auto &dpsi = L.tan.dpsi;
        const CVec &psi = L.tan.psi;
        auto S = [](int i) { return static_cast<std::size_t>(i); };
        std::vector<cplx> ov(S(k));
        CMat G(k, k);
        std::vector<CVec> hd(S(k));
        for (int i = 0; i < k; ++i) {
            ov[S(i)] = dpsi[S(i)].dot(psi);
            hd[S(i)] = apply_h(p_.hamiltonian, dpsi[S(i)]);
            for (int j = 0; j < k; ++j) {
                G(i, j) = dpsi[S(i)].dot(dpsi[S(j)]);
            }
        }
        const RMat Fp = pinv_symmetric(L.F, p_.rcond);
        const RMat I = RMat::Identity(k, k);
        const RMat PF = I - L.F * Fp;
        const RMat FP = I - Fp * L.F;
        const RMat Fp2 = Fp * Fp;
        const RVec b = L.g;
        RMat A(k, k);
        for (int l = 0; l < k; ++l) {
            RMat dF(k, k);
            RVec db(k);
            std::vector<cplx> d2psi(S(k));
            for (int i = 0; i < k; ++i) {
                d2psi[S(i)] = d2[S(l * k + i)].dot(psi);
            }
            for (int i = 0; i < k; ++i) {
                const CVec &dli = d2[S(l * k + i)];
                for (int j = i; j < k; ++j) {
                    const CVec &dlj = d2[S(l * k + j)];
                    const cplx v = dli.dot(dpsi[S(j)]) + dpsi[S(i)].dot(dlj) -
                                   d2psi[S(i)] * std::conj(ov[S(j)]) -
                                   G(i, l) * std::conj(ov[S(j)]) -
                                   ov[S(i)] * G(l, j) -
                                   ov[S(i)] * std::conj(d2psi[S(j)]);
                    dF(i, j) = v.real();
                    dF(j, i) = v.real();
                }
                db[i] = (dli.dot(L.hpsi) + dpsi[S(i)].dot(hd[S(l)])).real();
            }
            const RMat dFp = -Fp * dF * Fp + Fp2 * dF * PF + FP * dF * Fp2;
            A.col(l) = -dFp * b - Fp * db;
        }
        const auto &terms = hp_->terms();
        RMat hc(k, static_cast<Eigen::Index>(terms.size()));
        for (std::size_t c = 0; c < terms.size(); ++c) {
            CVec hp(psi.size());
            apply_pauli_string(terms[c].label, psi, hp);
            for (int i = 0; i < k; ++i) {
                hc(i, static_cast<Eigen::Index>(c)) = dpsi[S(i)].dot(hp).real();
            }
        }
        return A * J - Fp * (hc * wjac_);
    }

    const VarQTEProblem &p_;
    const ParamHamiltonian *hp_;
    const RVec *x_;
    int k_;
    int np_ = 0;
    double norm_h_ = 0.0;
    RMat wjac_;
};

Checkpoint make_checkpoint(const VarQTEProblem &p, const JointSystem &sys,
                           double t, const RVec &y,
                           const std::optional<Oracle> &oracle, bool clipped) {
    Checkpoint c;
    c.t = t;
    c.omega = y.head(sys.k());
    c.eps = y[sys.k()];
    c.clipped = clipped;
    const Local L = local_at(p, c.omega);
    const Rhs r = rhs_from(p, L);
    c.grad_err = r.grad_err;
    c.energy = L.energy;
    c.variance = L.variance;
    c.zeta = p.mode == TimeMode::Imaginary
                 ? zeta_bound(bound_inputs(L, sys.norm_h()), c.eps)
                 : 0.0;
    if (oracle) {
        const CVec ref = oracle->at(t);
        const double ov = std::abs(ref.dot(L.tan.psi));
        c.fidelity_oracle = std::min(1.0, ov * ov);
        c.bures_oracle = std::sqrt(std::max(0.0, 2.0 - 2.0 * std::min(ov, 1.0)));
    } else {
        c.fidelity_oracle = std::numeric_limits<double>::quiet_NaN();
        c.bures_oracle = std::numeric_limits<double>::quiet_NaN();
    }
    if (sys.np() > 0) {
        c.jacobian = Eigen::Map<const RMat>(y.data() + sys.k() + 1, sys.k(),
                                            sys.np());
    }
    return c;
}

bool clip_eps(RVec &y, int k) {
    if (y[k] > kSqrt2) {
        y[k] = kSqrt2;
        return true;
    }
    if (y[k] < 0.0) {
        y[k] = 0.0;
    }
    return false;
}

EvolutionTrace integrate(const VarQTEProblem &p, JointSystem &sys) {
    check_problem(p);
    EvolutionTrace trace;
    RVec y = RVec::Zero(sys.size());
    y.head(sys.k()) = p.omega0;
    std::optional<Oracle> oracle;
    if (p.track_oracle) {
        oracle.emplace(p, p.ansatz.simulate(p.omega0, p.input).amplitudes());
    }
    bool clipped = false;
    trace.checkpoints.push_back(make_checkpoint(p, sys, 0.0, y, oracle, false));
    if (p.T == 0.0) {
        return trace;
    }
    const SolverConfig &s = p.solver;
    if (s.kind == SolverKind::ForwardEuler) {
        require(s.steps >= 1, Status::InvalidArgument,
                "forward Euler needs at least one step");
        const double h = p.T / s.steps;
        for (int n = 0; n < s.steps; ++n) {
            y += h * sys(y);
            clipped = clip_eps(y, sys.k()) || clipped;
            const double t = n + 1 == s.steps ? p.T : h * (n + 1);
            trace.checkpoints.push_back(
                make_checkpoint(p, sys, t, y, oracle, clipped));
        }
    } else {
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15,
                                a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                                a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                                a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                                a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113,
                                b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                                b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                                e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                                e6 = 22.0 / 525, e7 = -1.0 / 40;
        double t = 0.0;
        double h = std::min(p.T, 1e-2 * p.T + 1e-3);
        RVec k1 = sys(y);
        int steps = 0;
        while (t < p.T) {
            require(++steps <= s.max_steps, Status::Numerical,
                    "RK54 exceeded the step budget");
            require(h >= s.min_step, Status::Numerical,
                    "RK54 step size underflow at t = " + format_double(t));
            if (t + h > p.T) {
                h = p.T - t;
            }
            const RVec k2 = sys(y + h * a21 * k1);
            const RVec k3 = sys(y + h * (a31 * k1 + a32 * k2));
            const RVec k4 = sys(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
            const RVec k5 =
                sys(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
            const RVec k6 = sys(y + h * (a61 * k1 + a62 * k2 + a63 * k3 +
                                         a64 * k4 + a65 * k5));
            const RVec ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 +
                                       b6 * k6);
            const RVec k7 = sys(ynew);
            const RVec err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 +
                                  e6 * k6 + e7 * k7);
            double en = 0.0;
            for (Eigen::Index i = 0; i < y.size(); ++i) {
                const double sc = s.atol + s.rtol * std::max(std::abs(y[i]),
                                                             std::abs(ynew[i]));
                en += (err[i] / sc) * (err[i] / sc);
            }
            en = std::sqrt(en / static_cast<double>(y.size()));
            if (!std::isfinite(en)) {
                h *= 0.2;
                continue;
            }
            if (en <= 1.0) {
                const bool last = t + h >= p.T;
                t = last ? p.T : t + h;
                y = ynew;
                k1 = k7;
                if (clip_eps(y, sys.k())) {
                    clipped = true;
                    k1 = sys(y);
                }
                trace.checkpoints.push_back(
                    make_checkpoint(p, sys, t, y, oracle, clipped));
            }
            const double fac =
                en == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0);
            h *= fac;
        }
    }
    trace.eps_clipped = clipped;
    trace.argmin_cap_hit = sys.cap_hit;
    trace.rhs_evaluations = sys.evaluations;
    return trace;
}

} // namespace

SLE mclachlan_sle(const VarQTEProblem &p, const RVec &omega) {
    const Local L = local_at(p, omega);
    return {L.F, -L.g, L.energy, L.variance, L.h2};
}

double gradient_error_norm(const VarQTEProblem &p, const RVec &omega,
                           const RVec &omega_dot) {
    const Local L = local_at(p, omega);
    require(omega_dot.size() == L.g.size(), Status::DimensionMismatch,
            "omega_dot has wrong length");
    return std::sqrt(err_sq(L, omega_dot));
}

double gradient_error_norm_direct(const VarQTEProblem &p, const RVec &omega,
                                  const RVec &omega_dot) {
    const Local L = local_at(p, omega);
    require(omega_dot.size() == L.g.size(), Status::DimensionMismatch,
            "omega_dot has wrong length");
    CVec v = CVec::Zero(L.tan.psi.size());
    for (Eigen::Index i = 0; i < omega_dot.size(); ++i) {
        v += omega_dot[i] * L.tan.dpsi[static_cast<std::size_t>(i)];
    }
    v -= L.tan.psi.dot(v) * L.tan.psi;
    const CVec hshift = L.hpsi - L.energy * L.tan.psi;
    if (p.mode == TimeMode::Imaginary) {
        v += hshift;
    } else {
        v += cplx(0.0, 1.0) * hshift;
    }
    return v.norm();
}

RVec rhs_standard(const VarQTEProblem &p, const RVec &omega) {
    return standard_from(p, local_at(p, omega));
}

ArgminResult rhs_argmin(const VarQTEProblem &p, const RVec &omega) {
    return argmin_from(p, local_at(p, omega));
}

double error_bound_rate_imaginary(const VarQTEProblem &p, const RVec &omega,
                                  const RVec &omega_dot, double eps,
                                  double delta) {
    require(eps >= 0.0, Status::InvalidArgument, "eps must be nonnegative");
    const Local L = local_at(p, omega);
    const double e = std::sqrt(err_sq(L, omega_dot));
    const double nh =
        p.hamiltonian.empty() ? 0.0 : spectral_norm(p.hamiltonian);
    return eps_rate_imaginary(e, bound_inputs(L, nh), eps, delta);
}

double error_bound_rate_real(const VarQTEProblem &p, const RVec &omega,
                             const RVec &omega_dot) {
    VarQTEProblem q = p;
    q.mode = TimeMode::Real;
    return gradient_error_norm(q, omega, omega_dot);
}

EvolutionTrace evolve(const VarQTEProblem &p) {
    check_problem(p);
    JointSystem sys(p, nullptr, nullptr);
    return integrate(p, sys);
}

ChainRuleResult chain_rule_evolve(VarQTEProblem p, const ParamHamiltonian &hp,
                                  const RVec &theta, const RVec &x) {
    require(p.mode == TimeMode::Imaginary && p.rhs == OdeRhs::Standard,
            Status::Unsupported,
            "chain rule supports imaginary time with the standard ODE");
    require(hp.n_qubits() <= p.ansatz.n_qubits(), Status::DimensionMismatch,
            "Hamiltonian wider than ansatz");
    ParamHamiltonian wide = hp;
    if (hp.n_qubits() < p.ansatz.n_qubits()) {
        const int extra = p.ansatz.n_qubits() - hp.n_qubits();
        wide = ParamHamiltonian(p.ansatz.n_qubits(), hp.n_params(),
                                hp.n_features());
        for (ParamTerm t : hp.terms()) {
            t.label += std::string(static_cast<std::size_t>(extra), 'I');
            wide.add_term(std::move(t));
        }
    }
    p.hamiltonian = wide.bind(theta, x);
    check_problem(p);
    JointSystem sys(p, &wide, &x);
    ChainRuleResult r;
    r.trace = integrate(p, sys);
    r.omega_T = r.trace.checkpoints.back().omega;
    r.jacobian = r.trace.checkpoints.back().jacobian;
    return r;
}

double ground_state_time_bound(int n, double gap, double c, double p0) {
    require(n >= 1, Status::InvalidArgument, "n must be positive");
    require(gap > 0.0, Status::InvalidArgument, "gap must be positive");
    require(c > 0.0, Status::InvalidArgument, "c must be positive");
    require(p0 > 0.0 && p0 < 1.0, Status::InvalidArgument,
            "p0 must lie in (0, 1)");
    return (std::log(2.0) * n - std::log(1.0 - p0) - std::log(c) +
            std::log(p0)) /
           (2.0 * gap);
}

std::string EvolutionTrace::to_csv() const {
    std::string s = "t";
    const Eigen::Index k =
        checkpoints.empty() ? 0 : checkpoints.front().omega.size();
    for (Eigen::Index i = 0; i < k; ++i) {
        s += ",omega_" + std::to_string(i);
    }
    s += ",grad_err,eps,energy,variance,fidelity_oracle,bures_oracle\n";
    for (const auto &c : checkpoints) {
        s += format_double(c.t) + (k > 0 ? "," + format_vector(c.omega) : "") + "," +
             format_double(c.grad_err) + "," + format_double(c.eps) + "," +
             format_double(c.energy) + "," + format_double(c.variance) + "," +
             format_double(c.fidelity_oracle) + "," +
             format_double(c.bures_oracle) + "\n";
    }
    return s;
}

} // namespace vqs
