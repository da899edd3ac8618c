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
#include "vqsim/statevector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "vqsim/rng.hpp"

namespace vqs {

namespace {

constexpr double kNormTol = 1e-10;

using Mat2 = std::array<cplx, 4>;

void apply_1q(CVec &a, int target, const Mat2 &m, std::uint64_t cmask) {
    const std::uint64_t tb = std::uint64_t{1} << target;
    const auto dim = static_cast<std::uint64_t>(a.size());
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & tb) != 0 || (i & cmask) != cmask) {
            continue;
        }
        const std::uint64_t j = i | tb;
        const cplx a0 = a[i];
        const cplx a1 = a[j];
        a[i] = m[0] * a0 + m[1] * a1;
        a[j] = m[2] * a0 + m[3] * a1;
    }
}

void zero_where(CVec &a, std::uint64_t mask, bool bit_set) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const bool set = (static_cast<std::uint64_t>(i) & mask) == mask;
        if (set == bit_set) {
            a[i] = 0.0;
        }
    }
}

Mat2 rx(double t) {
    const double c = std::cos(t / 2);
    const double s = std::sin(t / 2);
    return {cplx(c, 0), cplx(0, -s), cplx(0, -s), cplx(c, 0)};
}
Mat2 ry(double t) {
    const double c = std::cos(t / 2);
    const double s = std::sin(t / 2);
    return {cplx(c, 0), cplx(-s, 0), cplx(s, 0), cplx(c, 0)};
}
Mat2 rz(double t) {
    return {std::polar(1.0, -t / 2), 0.0, 0.0, std::polar(1.0, t / 2)};
}

const Mat2 kX{0.0, 1.0, 1.0, 0.0};
const Mat2 kY{0.0, cplx(0, -1), cplx(0, 1), 0.0};
const Mat2 kZ{1.0, 0.0, 0.0, -1.0};

Mat2 scaled(const Mat2 &m, cplx f) {
    return {f * m[0], f * m[1], f * m[2], f * m[3]};
}

std::uint64_t bit(int q) { return std::uint64_t{1} << q; }

/// Applies the operator G with dU/dtheta = G U.
void apply_generator(CVec &a, const GateDescriptor &g) {
    const cplx mi2(0.0, -0.5);
    switch (g.kind) {
    case GateKind::RX:
        apply_1q(a, g.qubits[0], scaled(kX, mi2), 0);
        return;
    case GateKind::RY:
        apply_1q(a, g.qubits[0], scaled(kY, mi2), 0);
        return;
    case GateKind::RZ:
        apply_1q(a, g.qubits[0], scaled(kZ, mi2), 0);
        return;
    case GateKind::CRY:
        zero_where(a, bit(g.qubits[0]), false);
        apply_1q(a, g.qubits[1], scaled(kY, mi2), bit(g.qubits[0]));
        return;
    case GateKind::PHASE:
        if (g.qubits.empty()) {
            a *= cplx(0.0, 1.0);
        } else {
            zero_where(a, bit(g.qubits[0]), false);
            a *= cplx(0.0, 1.0);
        }
        return;
    default:
        fail(Status::Unsupported,
             "gate " + gate_name(g.kind) + " has no continuous parameter");
    }
}

} // namespace

bool GateDescriptor::is_rotation() const {
    switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CRY:
    case GateKind::PHASE:
        return true;
    default:
        return false;
    }
}

double GateDescriptor::angle(const RVec &omega) const {
    if (slot >= 0) {
        require(slot < omega.size(), Status::DimensionMismatch,
                "parameter slot " + std::to_string(slot) +
                    " outside parameter vector");
        return omega[slot];
    }
    return angles.empty() ? 0.0 : angles[0];
}

std::string gate_name(GateKind k) {
    switch (k) {
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::X:
        return "X";
    case GateKind::H:
        return "H";
    case GateKind::CX:
        return "CX";
    case GateKind::CZ:
        return "CZ";
    case GateKind::CRY:
        return "CRY";
    case GateKind::PHASE:
        return "PHASE";
    case GateKind::UC_RY:
        return "UC_RY";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string &name) {
    static const std::pair<const char *, GateKind> table[] = {
        {"RX", GateKind::RX},   {"RY", GateKind::RY},
        {"RZ", GateKind::RZ},   {"X", GateKind::X},
        {"H", GateKind::H},     {"CX", GateKind::CX},
        {"CZ", GateKind::CZ},   {"CRY", GateKind::CRY},
        {"PHASE", GateKind::PHASE}, {"UC_RY", GateKind::UC_RY}};
    for (const auto &[n, k] : table) {
        if (name == n) {
            return k;
        }
    }
    fail(Status::Parse, "unknown gate name '" + name + "'");
}

int gate_arity(GateKind k) {
    switch (k) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::X:
    case GateKind::H:
        return 1;
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CRY:
        return 2;
    case GateKind::PHASE:
    case GateKind::UC_RY:
        return -1;
    }
    return -1;
}

void validate_gate(const GateDescriptor &g, int n_qubits) {
    const int arity = gate_arity(g.kind);
    if (arity >= 0) {
        require(static_cast<int>(g.qubits.size()) == arity,
                Status::InvalidArgument,
                gate_name(g.kind) + " expects " + std::to_string(arity) +
                    " qubit(s)");
    }
    if (g.kind == GateKind::PHASE) {
        require(g.qubits.size() <= 1, Status::InvalidArgument,
                "PHASE acts on at most one qubit");
    }
    if (g.kind == GateKind::UC_RY) {
        require(!g.qubits.empty(), Status::InvalidArgument,
                "UC_RY needs a target");
        require(g.slot < 0, Status::Unsupported,
                "UC_RY takes fixed angles only");
        const std::size_t nc = g.qubits.size() - 1;
        require(g.angles.size() == (std::size_t{1} << nc),
                Status::InvalidArgument,
                "UC_RY needs 2^controls angles");
    }
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        const int q = g.qubits[i];
        require(q >= 0 && q < n_qubits, Status::InvalidArgument,
                "qubit index " + std::to_string(q) + " out of range for " +
                    std::to_string(n_qubits) + " qubits");
        for (std::size_t j = 0; j < i; ++j) {
            require(g.qubits[j] != q, Status::InvalidArgument,
                    "repeated qubit in " + gate_name(g.kind));
        }
    }
    if (g.is_rotation() && g.slot < 0 && g.kind != GateKind::UC_RY) {
        require(g.angles.size() == 1, Status::InvalidArgument,
                gate_name(g.kind) + " needs a slot or one fixed angle");
    }
    if (!g.is_rotation() && g.kind != GateKind::UC_RY) {
        require(g.slot < 0, Status::InvalidArgument,
                gate_name(g.kind) + " takes no parameter");
    }
    for (double a : g.angles) {
        require(std::isfinite(a), Status::InvalidArgument,
                "rotation angle not finite");
    }
}

void apply_gate_raw(CVec &a, int /*n_qubits*/, const GateDescriptor &g,
                    double angle) {
    switch (g.kind) {
    case GateKind::RX:
        apply_1q(a, g.qubits[0], rx(angle), 0);
        return;
    case GateKind::RY:
        apply_1q(a, g.qubits[0], ry(angle), 0);
        return;
    case GateKind::RZ:
        apply_1q(a, g.qubits[0], rz(angle), 0);
        return;
    case GateKind::X:
        apply_1q(a, g.qubits[0], kX, 0);
        return;
    case GateKind::H: {
        const double r = M_SQRT1_2;
        apply_1q(a, g.qubits[0], {r, r, r, -r}, 0);
        return;
    }
    case GateKind::CX:
        apply_1q(a, g.qubits[1], kX, bit(g.qubits[0]));
        return;
    case GateKind::CZ: {
        const std::uint64_t m = bit(g.qubits[0]) | bit(g.qubits[1]);
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if ((static_cast<std::uint64_t>(i) & m) == m) {
                a[i] = -a[i];
            }
        }
        return;
    }
    case GateKind::CRY:
        apply_1q(a, g.qubits[1], ry(angle), bit(g.qubits[0]));
        return;
    case GateKind::PHASE:
        if (g.qubits.empty()) {
            a *= std::polar(1.0, angle);
        } else {
            apply_1q(a, g.qubits[0], {1.0, 0.0, 0.0, std::polar(1.0, angle)},
                     0);
        }
        return;
    case GateKind::UC_RY: {
        const std::size_t nc = g.qubits.size() - 1;
        const int target = g.qubits.back();
        const std::uint64_t tb = bit(target);
        for (Eigen::Index ii = 0; ii < a.size(); ++ii) {
            const auto i = static_cast<std::uint64_t>(ii);
            if ((i & tb) != 0) {
                continue;
            }
            std::size_t cfg = 0;
            for (std::size_t c = 0; c < nc; ++c) {
                if ((i >> g.qubits[c]) & 1U) {
                    cfg |= std::size_t{1} << c;
                }
            }
            const double t = g.angles[cfg];
            if (t == 0.0) {
                continue;
            }
            const double co = std::cos(t / 2);
            const double si = std::sin(t / 2);
            const std::uint64_t j = i | tb;
            const cplx a0 = a[ii];
            const cplx a1 = a[static_cast<Eigen::Index>(j)];
            a[ii] = co * a0 - si * a1;
            a[static_cast<Eigen::Index>(j)] = si * a0 + co * a1;
        }
        return;
    }
    }
}

void apply_gate_derivative_raw(CVec &a, int n, const GateDescriptor &g,
                               double angle) {
    apply_gate_raw(a, n, g, angle);
    apply_generator(a, g);
}

void apply_gate_second_derivative_raw(CVec &a, int n, const GateDescriptor &g,
                                      double angle) {
    apply_gate_raw(a, n, g, angle);
    apply_generator(a, g);
    apply_generator(a, g);
}

void check_qubit_count(int n) {
    require(n >= 1, Status::InvalidArgument, "need at least one qubit");
    require(n <= kMaxQubits, Status::Capacity,
            std::to_string(n) + " qubits exceed the maximum of " +
                std::to_string(kMaxQubits));
}

StateVector StateVector::zero(int n) { return basis(n, 0); }

StateVector StateVector::basis(int n, std::uint64_t index) {
    check_qubit_count(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    require(index < dim, Status::InvalidArgument, "basis index out of range");
    CVec v = CVec::Zero(static_cast<Eigen::Index>(dim));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return {n, std::move(v)};
}

StateVector StateVector::plus(int n) {
    check_qubit_count(n);
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
    CVec v = CVec::Constant(dim, cplx(1.0 / std::sqrt(double(dim)), 0.0));
    return {n, std::move(v)};
}

StateVector StateVector::from_amplitudes(CVec amps, bool normalize) {
    const auto dim = static_cast<std::uint64_t>(amps.size());
    require(dim >= 2 && (dim & (dim - 1)) == 0, Status::DimensionMismatch,
            "amplitude vector length must be a power of two");
    int n = 0;
    while ((std::uint64_t{1} << n) < dim) {
        ++n;
    }
    check_qubit_count(n);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        require(std::isfinite(amps[i].real()) && std::isfinite(amps[i].imag()),
                Status::Numerical, "non-finite amplitude");
    }
    const double nrm = amps.norm();
    if (normalize) {
        require(nrm > 1e-300, Status::Numerical, "cannot normalize zero vector");
        amps /= nrm;
    } else {
        require(std::abs(nrm * nrm - 1.0) <= kNormTol, Status::InvalidArgument,
                "state is not normalized");
    }
    return {n, std::move(amps)};
}

StateVector StateVector::tensor(const StateVector &low,
                                const StateVector &high) {
    const int n = low.n_qubits() + high.n_qubits();
    check_qubit_count(n);
    CVec v(static_cast<Eigen::Index>(low.dim() * high.dim()));
    for (std::size_t h = 0; h < high.dim(); ++h) {
        for (std::size_t l = 0; l < low.dim(); ++l) {
            v[static_cast<Eigen::Index>(h * low.dim() + l)] =
                high[h] * low[l];
        }
    }
    return {n, std::move(v)};
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    return {psi.n_qubits(),
            psi.amplitudes() * psi.amplitudes().adjoint()};
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
    check_qubit_count(n);
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
    return {n, CMat::Identity(dim, dim) / static_cast<double>(dim)};
}

void DensityMatrix::validate(double tol) const {
    require((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol,
            Status::Numerical, "density matrix not Hermitian");
    require(std::abs(matrix.trace() - cplx(1.0, 0.0)) <= tol,
            Status::Numerical, "density matrix trace differs from 1");
    Eigen::SelfAdjointEigenSolver<CMat> es(matrix, Eigen::EigenvaluesOnly);
    require(es.eigenvalues().minCoeff() >= -1e-9, Status::Numerical,
            "density matrix has a negative eigenvalue");
}

StateVector apply_gate(const StateVector &state, const GateDescriptor &gate,
                       const RVec &omega) {
    validate_gate(gate, state.n_qubits());
    CVec a = state.amplitudes();
    const double angle = gate.angle(omega);
    require(std::isfinite(angle), Status::InvalidArgument,
            "rotation angle not finite");
    apply_gate_raw(a, state.n_qubits(), gate, angle);
    return StateVector::from_amplitudes(std::move(a));
}

MeasurementDistribution measure_distribution(const StateVector &state,
                                             std::optional<std::int64_t> shots,
                                             std::uint64_t seed) {
    MeasurementDistribution out;
    out.probabilities = state.amplitudes().cwiseAbs2();
    if (!shots) {
        return out;
    }
    require(*shots > 0, Status::InvalidArgument, "shots must be positive");
    const RVec exact = out.probabilities;
    Rng rng(seed);
    out.counts.assign(exact.size(), 0);
    std::vector<double> cdf(static_cast<std::size_t>(exact.size()));
    double acc = 0.0;
    for (Eigen::Index i = 0; i < exact.size(); ++i) {
        acc += exact[i];
        cdf[static_cast<std::size_t>(i)] = acc;
    }
    for (std::int64_t s = 0; s < *shots; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
        idx = std::min(idx, cdf.size() - 1);
        while (exact[static_cast<Eigen::Index>(idx)] <= 0.0 && idx > 0) {
            --idx;
        }
        ++out.counts[idx];
    }
    for (Eigen::Index i = 0; i < exact.size(); ++i) {
        out.probabilities[i] = static_cast<double>(
                                   out.counts[static_cast<std::size_t>(i)]) /
                               static_cast<double>(*shots);
    }
    return out;
}

RVec marginal_probabilities(const RVec &probs, int n,
                            const std::vector<int> &qubits) {
    require(probs.size() == (Eigen::Index{1} << n), Status::DimensionMismatch,
            "probability vector does not match qubit count");
    RVec out = RVec::Zero(Eigen::Index{1} << qubits.size());
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        Eigen::Index k = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            if ((i >> qubits[j]) & 1) {
                k |= Eigen::Index{1} << j;
            }
        }
        out[k] += probs[i];
    }
    return out;
}

DensityMatrix partial_trace(const StateVector &state,
                            const std::vector<int> &keep) {
    const int n = state.n_qubits();
    require(!keep.empty(), Status::InvalidArgument, "keep set is empty");
    std::vector<bool> kept(static_cast<std::size_t>(n), false);
    for (int q : keep) {
        require(q >= 0 && q < n, Status::InvalidArgument,
                "keep index out of range");
        require(!kept[static_cast<std::size_t>(q)], Status::InvalidArgument,
                "repeated keep index");
        kept[static_cast<std::size_t>(q)] = true;
    }
    std::vector<int> rest;
    for (int q = 0; q < n; ++q) {
        if (!kept[static_cast<std::size_t>(q)]) {
            rest.push_back(q);
        }
    }
    const Eigen::Index dk = Eigen::Index{1} << keep.size();
    const Eigen::Index dr = Eigen::Index{1} << rest.size();
    CMat m = CMat::Zero(dk, dr);
    const CVec &a = state.amplitudes();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        Eigen::Index k = 0;
        Eigen::Index r = 0;
        for (std::size_t j = 0; j < keep.size(); ++j) {
            if ((i >> keep[j]) & 1) {
                k |= Eigen::Index{1} << j;
            }
        }
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if ((i >> rest[j]) & 1) {
                r |= Eigen::Index{1} << j;
            }
        }
        m(k, r) = a[i];
    }
    DensityMatrix out{static_cast<int>(keep.size()), m * m.adjoint()};
    out.matrix = 0.5 * (out.matrix + out.matrix.adjoint()).eval();
    return out;
}

CMat psd_sqrt(const CMat &m) {
    Eigen::SelfAdjointEigenSolver<CMat> es(m);
    RVec ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        ev[i] = ev[i] > 0.0 ? std::sqrt(ev[i]) : 0.0;
    }
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

void check_dims(std::size_t a, std::size_t b) {
    require(a == b, Status::DimensionMismatch, "state dimensions differ");
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double bures_from_fidelity(double f) {
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(clamp01(f))));
}

} // namespace

double fidelity(const StateVector &a, const StateVector &b) {
    check_dims(a.dim(), b.dim());
    return clamp01(std::norm(a.amplitudes().dot(b.amplitudes())));
}

double fidelity(const DensityMatrix &a, const DensityMatrix &b) {
    check_dims(static_cast<std::size_t>(a.matrix.rows()),
               static_cast<std::size_t>(b.matrix.rows()));
    const CMat sa = psd_sqrt(a.matrix);
    const CMat inner = sa * b.matrix * sa;
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (inner + inner.adjoint()),
                                           Eigen::EigenvaluesOnly);
    double tr = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double ev = es.eigenvalues()[i];
        tr += ev > 0.0 ? std::sqrt(ev) : 0.0;
    }
    return clamp01(tr * tr);
}

double fidelity(const StateVector &a, const DensityMatrix &b) {
    check_dims(a.dim(), static_cast<std::size_t>(b.matrix.rows()));
    const cplx v = a.amplitudes().dot(b.matrix * a.amplitudes());
    return clamp01(v.real());
}

double fidelity(const DensityMatrix &a, const StateVector &b) {
    return fidelity(b, a);
}

double bures_distance(const StateVector &a, const StateVector &b) {
    check_dims(a.dim(), b.dim());
    const double ov = std::abs(a.amplitudes().dot(b.amplitudes()));
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::min(ov, 1.0)));
}

double bures_distance(const DensityMatrix &a, const DensityMatrix &b) {
    return bures_from_fidelity(fidelity(a, b));
}

double bures_distance(const StateVector &a, const DensityMatrix &b) {
    return bures_from_fidelity(fidelity(a, b));
}

double bures_distance(const DensityMatrix &a, const StateVector &b) {
    return bures_from_fidelity(fidelity(b, a));
}

} // namespace vqs
