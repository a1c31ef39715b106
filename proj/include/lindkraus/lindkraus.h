/* Copyright 2026 The Lindkraus Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the lindkraus library: closed-form Lindblad evolution,
 * Kraus sets, and the brute-force oracle used to cross-check them.
 *
 * Conventions:
 *  - Handles are opaque; every lk_*_free matches exactly one constructor.
 *  - Functions return lk_status; on failure lk_last_error() describes the
 *    problem for the calling thread.
 *  - Complex N x N matrices cross the boundary as 2*N*N doubles in
 *    column-major order with interleaved parts: entry (i, j) lives at
 *    buf[2*(j*N + i)] (real) and buf[2*(j*N + i) + 1] (imaginary).
 *  - Real matrices (rates, gamma matrices) are N*N doubles, column-major.
 *  - rates(m, n), read as buf[n*N + m], is the rate of the jump INTO state
 *    m FROM state n.
 */

#ifndef LINDKRAUS_H_
#define LINDKRAUS_H_

#include <stdint.h>

#if defined(_WIN32)
#define LK_API __declspec(dllexport)
#else
#define LK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lk_status {
  LK_OK = 0,
  LK_ERR_INVALID_ARGUMENT = 1,
  LK_ERR_DIMENSION = 2,
  LK_ERR_PARSE = 3,
  LK_ERR_MODEL_INVALID = 4,
  LK_ERR_NOT_CP = 5,
  LK_ERR_UNSUPPORTED = 6,
  LK_ERR_INTERNAL = 7
} lk_status;

/* Spectral function forms for the thermal model builders. */
#define LK_SPECTRAL_FLAT 0
#define LK_SPECTRAL_OHMIC 1

typedef struct lk_model lk_model;
typedef struct lk_kraus lk_kraus;

LK_API const char* lk_version(void);

/* Message for the last failure on this thread; empty string if none. */
LK_API const char* lk_last_error(void);

/* Frees strings returned through char** out parameters. */
LK_API void lk_string_free(char* s);

/* ---- models ---------------------------------------------------------- */

/* energies: dim entries; rates: dim*dim column-major, entry (m, n) at
 * rates[n*dim + m]. Structural errors only; semantic problems are reported
 * by lk_model_validate. */
LK_API lk_status lk_model_create(const double* energies, int dim,
                                 const double* rates, double dephasing_rate,
                                 lk_model** out);

LK_API lk_status lk_model_from_json(const char* text, lk_model** out);
LK_API lk_status lk_model_to_json(const lk_model* model, char** out);
LK_API void lk_model_free(lk_model* model);

LK_API int lk_model_dim(const lk_model* model);
LK_API double lk_model_energy(const lk_model* model, int i);
LK_API double lk_model_rate(const lk_model* model, int m, int n);
LK_API double lk_model_dephasing_rate(const lk_model* model);

/* Returns 1 and writes *beta when the model carries an inverse temperature
 * (possibly INFINITY), 0 otherwise. */
LK_API int lk_model_beta(const lk_model* model, double* beta);

/* Channel set: states touched by any nonzero rate, ascending. */
LK_API int lk_model_channel_count(const lk_model* model);
LK_API int lk_model_channel_state(const lk_model* model, int k);

/* Diagnostic; always returns LK_OK for a live handle. *count receives the
 * number of violations; when report is non-NULL it receives a newline-joined
 * description (free with lk_string_free), NULL if the model is valid. */
LK_API lk_status lk_model_validate(const lk_model* model, char** report,
                                   int* count);

/* Spin-boson system at inverse temperature beta (may be INFINITY):
 * two levels split by omega, thermal rates from spectral form 1 evaluated
 * on shell, dephasing rate from the slope of spectral form 0 at zero. */
LK_API lk_status lk_model_spin_boson(double omega, int form0, double g0,
                                     double omega_c0, int form1, double g1,
                                     double omega_c1, double beta,
                                     lk_model** out);

/* Triplet sector of two coupled qubits in a shared zero-temperature
 * reservoir; omega > g >= 0. */
LK_API lk_status lk_model_two_qubit_triplet(double omega, double g, int form,
                                            double gs, double omega_c,
                                            lk_model** out);

/* Deterministic random valid model: dim levels, `channels` jump pairs. */
LK_API lk_status lk_model_random(uint64_t seed, int dim, int channels,
                                 lk_model** out);

/* ---- evolution ------------------------------------------------------- */

/* rho0 and rho_out: complex dim x dim buffers (2*dim*dim doubles, layout
 * above). rho0 must satisfy the density-matrix invariants. */
LK_API lk_status lk_evolve(const lk_model* model, const double* rho0,
                           double t, double* rho_out);

/* Dense-Liouvillian reference path. max_dim <= 0 selects the default
 * limit (64); memory grows as dim^4. */
LK_API lk_status lk_oracle_evolve(const lk_model* model, const double* rho0,
                                  double t, int max_dim, double* rho_out);

/* Gamma matrix of a channel target state: k*k doubles column-major where
 * k = lk_model_channel_count(model), indexed by channel states ascending. */
LK_API lk_status lk_gamma_matrix(const lk_model* model, int target,
                                 double* out);

/* Jump weights at time t, k*k doubles column-major: entry (a, b) is the
 * coefficient of X_{m n'} rho X_{m n'}^dag with m, n' the a-th and b-th
 * channel states. */
LK_API lk_status lk_jump_coefficients(const lk_model* model, double t,
                                      double* out);

/* ---- Kraus sets ------------------------------------------------------ */

LK_API lk_status lk_kraus_compute(const lk_model* model, double t,
                                  lk_kraus** out);
LK_API void lk_kraus_free(lk_kraus* set);
LK_API int lk_kraus_count(const lk_kraus* set);
LK_API int lk_kraus_dim(const lk_kraus* set);
LK_API double lk_kraus_completeness_residual(const lk_kraus* set);

/* Writes operator k as a complex dim x dim buffer. */
LK_API lk_status lk_kraus_operator(const lk_kraus* set, int k, double* out);

/* ---- diagnostics ----------------------------------------------------- */

/* trace deviation |tr - 1|, minimum eigenvalue of the Hermitian part, and
 * purity tr(rho^2) of a complex dim x dim buffer. */
LK_API lk_status lk_state_diagnostics(const double* rho, int dim,
                                      double* trace_dev, double* min_eig,
                                      double* purity);

/* Process-wide number of dense-Liouvillian constructions. Closed-form calls
 * never change it; benchmarks assert that. */
LK_API uint64_t lk_superop_build_count(void);

#ifdef __cplusplus
}
#endif

#endif /* LINDKRAUS_H_ */
