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

/* C interface to vqsim. Objects are opaque handles created by the library
 * and released with the matching *_free function. Every fallible call
 * returns a vqs_status; on failure vqs_last_error() describes the cause
 * (thread-local, valid until the next failing call on the same thread). */

#ifndef VQSIM_CAPI_H
#define VQSIM_CAPI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define VQS_API __declspec(dllexport)
#else
#define VQS_API __attribute__((visibility("default")))
#endif

typedef enum vqs_status {
    VQS_OK = 0,
    VQS_ERR_INVALID_ARGUMENT = 1,
    VQS_ERR_DIMENSION = 2,
    VQS_ERR_NUMERICAL = 3,
    VQS_ERR_PARSE = 4,
    VQS_ERR_CAPACITY = 5,
    VQS_ERR_UNSUPPORTED = 6,
    VQS_ERR_NULL = 7,
    VQS_ERR_INTERNAL = 8
} vqs_status;

typedef enum vqs_grad_method {
    VQS_GRAD_PARAM_SHIFT = 0,
    VQS_GRAD_LINEAR_COMBINATION = 1,
    VQS_GRAD_DIRECT = 2
} vqs_grad_method;

typedef struct vqs_hamiltonian vqs_hamiltonian;
typedef struct vqs_circuit vqs_circuit;
typedef struct vqs_run vqs_run;

VQS_API const char *vqs_version(void);
VQS_API const char *vqs_last_error(void);
VQS_API const char *vqs_status_name(vqs_status status);

/* Hamiltonians: "coefficient LABEL" terms separated by newlines or ';'. */
VQS_API vqs_status vqs_hamiltonian_parse(const char *text,
                                         vqs_hamiltonian **out);
/* "illustrative", "ising", "hydrogen", "h1" .. "h5". */
VQS_API vqs_status vqs_hamiltonian_named(const char *name,
                                         vqs_hamiltonian **out);
VQS_API int vqs_hamiltonian_qubits(const vqs_hamiltonian *h);
VQS_API vqs_status vqs_hamiltonian_ground_energy(const vqs_hamiltonian *h,
                                                 double *out);
VQS_API void vqs_hamiltonian_free(vqs_hamiltonian *h);

/* Parameterized circuits. */
VQS_API vqs_status vqs_circuit_parse(const char *text, vqs_circuit **out);
VQS_API vqs_status vqs_circuit_efficient_su2(int n_qubits, int reps,
                                             vqs_circuit **out);
VQS_API vqs_status vqs_circuit_ry_cz(int n_qubits, int depth,
                                     vqs_circuit **out);
VQS_API int vqs_circuit_qubits(const vqs_circuit *c);
VQS_API int vqs_circuit_params(const vqs_circuit *c);
/* Measurement probabilities of U(omega)|0...0>; out holds 2^n entries. */
VQS_API vqs_status vqs_circuit_probabilities(const vqs_circuit *c,
                                             const double *omega,
                                             size_t n_omega, double *out,
                                             size_t n_out);
VQS_API vqs_status vqs_circuit_expectation(const vqs_circuit *c,
                                           const double *omega,
                                           size_t n_omega,
                                           const vqs_hamiltonian *h,
                                           double *out);
/* Gradient of the expectation; out holds one entry per parameter. */
VQS_API vqs_status vqs_circuit_gradient(const vqs_circuit *c,
                                        const double *omega, size_t n_omega,
                                        const vqs_hamiltonian *h,
                                        vqs_grad_method method, double *out,
                                        size_t n_out);
VQS_API void vqs_circuit_free(vqs_circuit *c);

/* Pipelines: varqte, gibbs, qbm-gen, qbm-disc, qgan, qae-price, oracle.
 * config is "key = value" text. Artifact 0 is the JSON summary. */
VQS_API size_t vqs_pipeline_count(void);
VQS_API const char *vqs_pipeline_name(size_t index);
VQS_API vqs_status vqs_run_pipeline(const char *pipeline, const char *config,
                                    vqs_run **out);
VQS_API size_t vqs_run_artifact_count(const vqs_run *run);
VQS_API const char *vqs_run_artifact_name(const vqs_run *run, size_t index);
VQS_API const char *vqs_run_artifact_data(const vqs_run *run, size_t index);
VQS_API size_t vqs_run_artifact_size(const vqs_run *run, size_t index);
VQS_API void vqs_run_free(vqs_run *run);

#ifdef __cplusplus
}
#endif

#endif
