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

#include "vqsim/capi.h"

#include <exception>
#include <new>
#include <string>

#include "vqsim/circuit.hpp"
#include "vqsim/gradients.hpp"
#include "vqsim/models.hpp"
#include "vqsim/oracles.hpp"
#include "vqsim/pipelines.hpp"

struct vqs_hamiltonian {
    vqs::PauliSum h;
};

struct vqs_circuit {
    vqs::ParamCircuit c;
};

struct vqs_run {
    vqs::RunOutput output;
};

namespace {

thread_local std::string g_last_error;

vqs_status to_c(vqs::Status s) {
    switch (s) {
    case vqs::Status::Ok:
        return VQS_OK;
    case vqs::Status::InvalidArgument:
        return VQS_ERR_INVALID_ARGUMENT;
    case vqs::Status::DimensionMismatch:
        return VQS_ERR_DIMENSION;
    case vqs::Status::Numerical:
        return VQS_ERR_NUMERICAL;
    case vqs::Status::Parse:
        return VQS_ERR_PARSE;
    case vqs::Status::Capacity:
        return VQS_ERR_CAPACITY;
    case vqs::Status::Unsupported:
        return VQS_ERR_UNSUPPORTED;
    }
    return VQS_ERR_INTERNAL;
}

vqs_status set_error(vqs_status s, const std::string &msg) {
    g_last_error = msg;
    return s;
}

/// Runs f, translating exceptions into status codes.
template <class F> vqs_status guard(F &&f) {
    try {
        f();
        return VQS_OK;
    } catch (const vqs::Error &e) {
        return set_error(to_c(e.status()), e.what());
    } catch (const std::bad_alloc &) {
        return set_error(VQS_ERR_CAPACITY, "out of memory");
    } catch (const std::exception &e) {
        return set_error(VQS_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(VQS_ERR_INTERNAL, "unknown error");
    }
}

void need(const void *p, const char *what) {
    vqs::require(p != nullptr, vqs::Status::InvalidArgument,
                 std::string(what) + " is null");
}

vqs::RVec omega_of(const vqs_circuit *c, const double *omega, size_t n) {
    need(c, "circuit");
    vqs::require(n == static_cast<size_t>(c->c.n_params()),
                 vqs::Status::DimensionMismatch,
                 "omega has " + std::to_string(n) + " entries, circuit has " +
                     std::to_string(c->c.n_params()) + " parameters");
    vqs::require(n == 0 || omega != nullptr, vqs::Status::InvalidArgument,
                 "omega is null");
    vqs::RVec w(static_cast<Eigen::Index>(n));
    for (size_t i = 0; i < n; ++i) {
        w[static_cast<Eigen::Index>(i)] = omega[i];
    }
    return w;
}

vqs::GradMethod grad_method(vqs_grad_method m) {
    switch (m) {
    case VQS_GRAD_PARAM_SHIFT:
        return vqs::GradMethod::ParamShift;
    case VQS_GRAD_LINEAR_COMBINATION:
        return vqs::GradMethod::LinearCombination;
    case VQS_GRAD_DIRECT:
        return vqs::GradMethod::DirectDifferentiation;
    }
    vqs::fail(vqs::Status::InvalidArgument, "unknown gradient method");
}

} // namespace

extern "C" {

const char *vqs_version(void) { return vqs::version_string(); }

const char *vqs_last_error(void) { return g_last_error.c_str(); }

const char *vqs_status_name(vqs_status status) {
    switch (status) {
    case VQS_OK:
        return "ok";
    case VQS_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case VQS_ERR_DIMENSION:
        return "dimension mismatch";
    case VQS_ERR_NUMERICAL:
        return "numerical failure";
    case VQS_ERR_PARSE:
        return "parse error";
    case VQS_ERR_CAPACITY:
        return "capacity exceeded";
    case VQS_ERR_UNSUPPORTED:
        return "unsupported";
    case VQS_ERR_NULL:
        return "null argument";
    case VQS_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

vqs_status vqs_hamiltonian_parse(const char *text, vqs_hamiltonian **out) {
    if (!text || !out) {
        return set_error(VQS_ERR_NULL, "null argument");
    }
    return guard([&] { *out = new vqs_hamiltonian{vqs::PauliSum::parse(text)}; });
}

vqs_status vqs_hamiltonian_named(const char *name, vqs_hamiltonian **out) {
    if (!name || !out) {
        return set_error(VQS_ERR_NULL, "null argument");
    }
    return guard(
        [&] { *out = new vqs_hamiltonian{vqs::named_hamiltonian(name)}; });
}

int vqs_hamiltonian_qubits(const vqs_hamiltonian *h) {
    return h ? h->h.n_qubits() : -1;
}

vqs_status vqs_hamiltonian_ground_energy(const vqs_hamiltonian *h,
                                         double *out) {
    if (!h || !out) {
        return set_error(VQS_ERR_NULL, "null argument");
    }
    return guard([&] { *out = vqs::ground_energy(h->h); });
}

void vqs_hamiltonian_free(vqs_hamiltonian *h) { delete h; }

vqs_status vqs_circuit_parse(const char *text, vqs_circuit **out) {
    if (!text || !out) {
        return set_error(VQS_ERR_NULL, "null argument");
    }
    return guard([&] { *out = new vqs_circuit{vqs::ParamCircuit::parse(text)}; });
}

vqs_status vqs_circuit_efficient_su2(int n_qubits, int reps,
                                     vqs_circuit **out) {
    if (!out) {
        return set_error(VQS_ERR_NULL, "null argument");
    }
    return guard(
        [&] { *out = new vqs_circuit{vqs::efficient_su2(n_qubits, reps)}; });
}

vqs_status vqs_circuit_ry_cz(int n_qubits, int depth, vqs_circuit **out) {
    if (!out) {
        return set_error(VQS_ERR_NULL, "null argument");
    }
    return guard(
        [&] { *out = new vqs_circuit{vqs::ry_cz_generator(n_qubits, depth)}; });
}

int vqs_circuit_qubits(const vqs_circuit *c) { return c ? c->c.n_qubits() : -1; }

int vqs_circuit_params(const vqs_circuit *c) { return c ? c->c.n_params() : -1; }

vqs_status vqs_circuit_probabilities(const vqs_circuit *c, const double *omega,
                                     size_t n_omega, double *out,
                                     size_t n_out) {
    if (!c || !out) {
        return set_error(VQS_ERR_NULL, "null argument");
    }
    return guard([&] {
        const vqs::RVec p =
            c->c.simulate(omega_of(c, omega, n_omega)).amplitudes().cwiseAbs2();
        vqs::require(n_out == static_cast<size_t>(p.size()),
                     vqs::Status::DimensionMismatch,
                     "output needs " + std::to_string(p.size()) + " entries");
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            out[i] = p[i];
        }
    });
}

vqs_status vqs_circuit_expectation(const vqs_circuit *c, const double *omega,
                                   size_t n_omega, const vqs_hamiltonian *h,
                                   double *out) {
    if (!c || !h || !out) {
        return set_error(VQS_ERR_NULL, "null argument");
    }
    return guard([&] {
        *out = vqs::expectation(c->c.simulate(omega_of(c, omega, n_omega)), h->h);
    });
}

vqs_status vqs_circuit_gradient(const vqs_circuit *c, const double *omega,
                                size_t n_omega, const vqs_hamiltonian *h,
                                vqs_grad_method method, double *out,
                                size_t n_out) {
    if (!c || !h || !out) {
        return set_error(VQS_ERR_NULL, "null argument");
    }
    return guard([&] {
        vqs::require(n_out == static_cast<size_t>(c->c.n_params()),
                     vqs::Status::DimensionMismatch,
                     "output needs one entry per parameter");
        vqs::GradientRequest req;
        req.circuit = c->c;
        req.input = vqs::StateVector::zero(c->c.n_qubits());
        req.observable = h->h;
        req.method = grad_method(method);
        const vqs::RVec g =
            vqs::grad_expectation(req, omega_of(c, omega, n_omega));
        for (Eigen::Index i = 0; i < g.size(); ++i) {
            out[i] = g[i];
        }
    });
}

void vqs_circuit_free(vqs_circuit *c) { delete c; }

size_t vqs_pipeline_count(void) { return vqs::pipeline_names().size(); }

const char *vqs_pipeline_name(size_t index) {
    static const std::vector<std::string> names = vqs::pipeline_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

vqs_status vqs_run_pipeline(const char *pipeline, const char *config,
                            vqs_run **out) {
    if (!pipeline || !out) {
        return set_error(VQS_ERR_NULL, "null argument");
    }
    *out = nullptr;
    return guard([&] {
        const vqs::KeyValues kv =
            vqs::parse_key_values(config ? config : std::string());
        *out = new vqs_run{vqs::run_pipeline(pipeline, kv)};
    });
}

size_t vqs_run_artifact_count(const vqs_run *run) {
    return run ? run->output.artifacts.size() : 0;
}

const char *vqs_run_artifact_name(const vqs_run *run, size_t index) {
    if (!run || index >= run->output.artifacts.size()) {
        return nullptr;
    }
    return run->output.artifacts[index].name.c_str();
}

const char *vqs_run_artifact_data(const vqs_run *run, size_t index) {
    if (!run || index >= run->output.artifacts.size()) {
        return nullptr;
    }
    return run->output.artifacts[index].content.c_str();
}

size_t vqs_run_artifact_size(const vqs_run *run, size_t index) {
    if (!run || index >= run->output.artifacts.size()) {
        return 0;
    }
    return run->output.artifacts[index].content.size();
}

void vqs_run_free(vqs_run *run) { delete run; }

} // extern "C"
