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
#include "vqsim/pauli.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "vqsim/textio.hpp"

namespace vqs {

namespace {

void check_label(const std::string &label) {
    require(!label.empty(), Status::InvalidArgument, "empty Pauli label");
    for (char c : label) {
        require(c == 'I' || c == 'X' || c == 'Y' || c == 'Z', Status::Parse,
                "invalid Pauli character in '" + label + "'");
    }
}

struct Masks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    int ny = 0;
};

Masks masks_of(const std::string &label) {
    Masks m;
    for (std::size_t j = 0; j < label.size(); ++j) {
        const std::uint64_t b = std::uint64_t{1} << j;
        switch (label[j]) {
        case 'X':
            m.x |= b;
            break;
        case 'Y':
            m.x |= b;
            m.z |= b;
            ++m.ny;
            break;
        case 'Z':
            m.z |= b;
            break;
        default:
            break;
        }
    }
    return m;
}

const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

} // namespace

void apply_pauli_string(const std::string &label, const CVec &in, CVec &out,
                        cplx scale, bool accumulate) {
    const Masks m = masks_of(label);
    if (!accumulate) {
        out = CVec::Zero(in.size());
    }
    const cplx base = scale * kIPow[m.ny % 4];
    for (Eigen::Index i = 0; i < in.size(); ++i) {
        const auto b = static_cast<std::uint64_t>(i);
        const double sign = (std::popcount(b & m.z) & 1) ? -1.0 : 1.0;
        out[static_cast<Eigen::Index>(b ^ m.x)] += sign * base * in[i];
    }
}

PauliSum::PauliSum(int n_qubits) : n_(n_qubits) { check_qubit_count(n_); }

PauliSum::PauliSum(std::vector<PauliTerm> terms) {
    for (auto &t : terms) {
        add(t.coeff, t.label);
    }
}

void PauliSum::add(double coeff, const std::string &label) {
    check_label(label);
    require(std::isfinite(coeff), Status::InvalidArgument,
            "Pauli coefficient not finite");
    if (n_ == 0) {
        n_ = static_cast<int>(label.size());
        check_qubit_count(n_);
    }
    require(static_cast<int>(label.size()) == n_, Status::DimensionMismatch,
            "Pauli label '" + label + "' has wrong length");
    terms_.push_back({coeff, label});
}

PauliSum PauliSum::parse(const std::string &text) {
    PauliSum out;
    std::string norm = text;
    for (char &c : norm) {
        if (c == ';') {
            c = '\n';
        }
    }
    std::istringstream lines(norm);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string coeff_tok;
        std::string label;
        if (!(ls >> coeff_tok)) {
            continue;
        }
        require(static_cast<bool>(ls >> label), Status::Parse,
                "line " + std::to_string(lineno) + ": missing Pauli label");
        std::string extra;
        require(!(ls >> extra), Status::Parse,
                "line " + std::to_string(lineno) + ": trailing tokens");
        out.add(parse_double(coeff_tok), label);
    }
    require(out.n_ > 0, Status::Parse, "Hamiltonian text has no terms");
    return out;
}

std::string PauliSum::to_text() const {
    std::string s;
    for (const auto &t : terms_) {
        s += format_double(t.coeff) + " " + t.label + "\n";
    }
    return s;
}

bool PauliSum::is_diagonal() const {
    for (const auto &t : terms_) {
        if (t.label.find_first_of("XY") != std::string::npos) {
            return false;
        }
    }
    return true;
}

CVec PauliSum::apply(const CVec &v) const {
    require(v.size() == (Eigen::Index{1} << n_), Status::DimensionMismatch,
            "vector dimension does not match Hamiltonian");
    CVec out = CVec::Zero(v.size());
    for (const auto &t : terms_) {
        apply_pauli_string(t.label, v, out, t.coeff, true);
    }
    return out;
}

CMat PauliSum::to_matrix() const {
    check_qubit_count(n_);
    const Eigen::Index dim = Eigen::Index{1} << n_;
    CMat m = CMat::Zero(dim, dim);
    for (const auto &t : terms_) {
        const Masks mk = masks_of(t.label);
        const cplx base = t.coeff * kIPow[mk.ny % 4];
        for (Eigen::Index i = 0; i < dim; ++i) {
            const auto b = static_cast<std::uint64_t>(i);
            const double sign = (std::popcount(b & mk.z) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(b ^ mk.x), i) += sign * base;
        }
    }
    return m;
}

PauliSum PauliSum::extended(int extra) const {
    PauliSum out;
    for (const auto &t : terms_) {
        out.add(t.coeff, t.label + std::string(static_cast<std::size_t>(extra),
                                               'I'));
    }
    return out;
}

double expectation(const StateVector &state, const PauliSum &observable) {
    require(observable.n_qubits() == state.n_qubits(),
            Status::DimensionMismatch,
            "observable qubit count does not match state");
    return state.amplitudes().dot(observable.apply(state.amplitudes())).real();
}

double variance(const PauliSum &h, const StateVector &state) {
    require(h.n_qubits() == state.n_qubits(), Status::DimensionMismatch,
            "observable qubit count does not match state");
    const CVec hv = h.apply(state.amplitudes());
    const double e = state.amplitudes().dot(hv).real();
    return hv.squaredNorm() - e * e;
}

double spectral_norm(const PauliSum &h) {
    Eigen::SelfAdjointEigenSolver<CMat> es(h.to_matrix(),
                                           Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

ParamHamiltonian::ParamHamiltonian(int n_qubits, int n_params, int n_features)
    : n_(n_qubits), k_(n_params), d_(n_features) {
    check_qubit_count(n_);
    require(k_ >= 0 && d_ >= 0, Status::InvalidArgument,
            "negative parameter or feature count");
}

void ParamHamiltonian::add_term(ParamTerm term) {
    check_label(term.label);
    require(static_cast<int>(term.label.size()) == n_,
            Status::DimensionMismatch, "Pauli label has wrong length");
    for (const auto &[p, f] : term.factors) {
        require(p >= 0 && p < k_, Status::InvalidArgument,
                "parameter index out of range");
        require(f < d_, Status::InvalidArgument, "feature index out of range");
    }
    terms_.push_back(std::move(term));
}

void ParamHamiltonian::add_linear(int param, const std::string &label) {
    add_term({label, 0.0, {{param, -1}}});
}

void ParamHamiltonian::check(const RVec &theta, const RVec &x) const {
    require(theta.size() == k_, Status::DimensionMismatch,
            "theta has wrong length");
    require(x.size() == d_, Status::DimensionMismatch,
            "feature vector has wrong length");
}

RVec ParamHamiltonian::weights(const RVec &theta, const RVec &x) const {
    check(theta, x);
    RVec w(static_cast<Eigen::Index>(terms_.size()));
    for (std::size_t c = 0; c < terms_.size(); ++c) {
        double v = terms_[c].offset;
        for (const auto &[p, f] : terms_[c].factors) {
            v += theta[p] * (f < 0 ? 1.0 : x[f]);
        }
        w[static_cast<Eigen::Index>(c)] = v;
    }
    return w;
}

PauliSum ParamHamiltonian::bind(const RVec &theta, const RVec &x) const {
    const RVec w = weights(theta, x);
    PauliSum out(n_);
    for (std::size_t c = 0; c < terms_.size(); ++c) {
        out.add(w[static_cast<Eigen::Index>(c)], terms_[c].label);
    }
    return out;
}

RMat ParamHamiltonian::weight_jacobian(const RVec &x) const {
    require(x.size() == d_, Status::DimensionMismatch,
            "feature vector has wrong length");
    RMat j = RMat::Zero(static_cast<Eigen::Index>(terms_.size()), k_);
    for (std::size_t c = 0; c < terms_.size(); ++c) {
        for (const auto &[p, f] : terms_[c].factors) {
            j(static_cast<Eigen::Index>(c), p) += (f < 0 ? 1.0 : x[f]);
        }
    }
    return j;
}

} // namespace vqs
