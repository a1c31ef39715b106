// Copyright 2026 The Lindkraus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lindkraus/lindkraus.h"

#include <cstring>
#include <string>

#include "density.hpp"
#include "dispatch.hpp"
#include "microscopic.hpp"
#include "model.hpp"
#include "model_json.hpp"
#include "oracle.hpp"
#include "random_model.hpp"
#include "solver.hpp"

using namespace lindkraus;

struct lk_model {
  LindbladModel value;
};

struct lk_kraus {
  kraus::KrausSet value;
};

namespace {

thread_local std::string g_last_error;

lk_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return LK_ERR_INVALID_ARGUMENT;
    case ErrorCode::dimension_mismatch: return LK_ERR_DIMENSION;
    case ErrorCode::parse_error: return LK_ERR_PARSE;
    case ErrorCode::model_invalid: return LK_ERR_MODEL_INVALID;
    case ErrorCode::not_completely_positive: return LK_ERR_NOT_CP;
    case ErrorCode::unsupported: return LK_ERR_UNSUPPORTED;
  }
  return LK_ERR_INTERNAL;
}

template <typename Fn>
lk_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return LK_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return LK_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Matrix read_complex(const double* buf, int dim) {
  if (!buf) throw Error(ErrorCode::invalid_argument, "null matrix buffer");
  // The documented layout is exactly Eigen's internal one.
  return Eigen::Map<const Matrix>(
      reinterpret_cast<const Complex*>(buf), dim, dim);
}

void write_complex(const Matrix& m, double* buf) {
  if (!buf) throw Error(ErrorCode::invalid_argument, "null output buffer");
  std::memcpy(buf, m.data(), sizeof(Complex) * m.size());
}

void write_real(const RealMatrix& m, double* buf) {
  if (!buf) throw Error(ErrorCode::invalid_argument, "null output buffer");
  std::memcpy(buf, m.data(), sizeof(double) * m.size());
}

const LindbladModel& deref(const lk_model* model) {
  if (!model) throw Error(ErrorCode::invalid_argument, "null model handle");
  return model->value;
}

micro::SpectralFunction make_spectral(int form, double g, double omega_c) {
  switch (form) {
    case LK_SPECTRAL_FLAT: return micro::SpectralFunction::make_flat(g);
    case LK_SPECTRAL_OHMIC:
      return micro::SpectralFunction::make_ohmic(g, omega_c);
    default:
      throw Error(ErrorCode::invalid_argument, "unknown spectral form");
  }
}

}  // namespace

extern "C" {

const char* lk_version(void) { return "0.1.0"; }

const char* lk_last_error(void) { return g_last_error.c_str(); }

void lk_string_free(char* s) { delete[] s; }

lk_status lk_model_create(const double* energies, int dim,
                          const double* rates, double dephasing_rate,
                          lk_model** out) {
  return guarded([&] {
    if (!energies || !rates || !out) {
      throw Error(ErrorCode::invalid_argument, "null argument");
    }
    if (dim < 1) throw Error(ErrorCode::invalid_argument, "dim must be >= 1");
    RealVector e = Eigen::Map<const RealVector>(energies, dim);
    RealMatrix g = Eigen::Map<const RealMatrix>(rates, dim, dim);
    *out = new lk_model{LindbladModel::create(std::move(e), std::move(g),
                                              dephasing_rate)};
  });
}

lk_status lk_model_from_json(const char* text, lk_model** out) {
  return guarded([&] {
    if (!text || !out) {
      throw Error(ErrorCode::invalid_argument, "null argument");
    }
    *out = new lk_model{io::model_from_json(text)};
  });
}

lk_status lk_model_to_json(const lk_model* model, char** out) {
  return guarded([&] {
    if (!out) throw Error(ErrorCode::invalid_argument, "null argument");
    *out = copy_string(io::model_to_json(deref(model)));
  });
}

void lk_model_free(lk_model* model) { delete model; }

int lk_model_dim(const lk_model* model) {
  return model ? model->value.dim() : 0;
}

double lk_model_energy(const lk_model* model, int i) {
  if (!model || i < 0 || i >= model->value.dim()) return 0.0;
  return model->value.energies()[i];
}

double lk_model_rate(const lk_model* model, int m, int n) {
  if (!model || m < 0 || n < 0 || m >= model->value.dim() ||
      n >= model->value.dim()) {
    return 0.0;
  }
  return model->value.rates()(m, n);
}

double lk_model_dephasing_rate(const lk_model* model) {
  return model ? model->value.dephasing_rate() : 0.0;
}

int lk_model_beta(const lk_model* model, double* beta) {
  if (!model || !model->value.beta()) return 0;
  if (beta) *beta = *model->value.beta();
  return 1;
}

int lk_model_channel_count(const lk_model* model) {
  return model ? static_cast<int>(model->value.channel_set().size()) : 0;
}

int lk_model_channel_state(const lk_model* model, int k) {
  if (!model || k < 0 ||
      k >= static_cast<int>(model->value.channel_set().size())) {
    return -1;
  }
  return model->value.channel_set()[k];
}

lk_status lk_model_validate(const lk_model* model, char** report,
                            int* count) {
  return guarded([&] {
    const auto violations = validate_model(deref(model));
    if (count) *count = static_cast<int>(violations.size());
    if (report) {
      if (violations.empty()) {
        *report = nullptr;
      } else {
        std::string joined;
        for (const auto& v : violations) {
          if (!joined.empty()) joined += '\n';
          joined += v.message;
        }
        *report = copy_string(joined);
      }
    }
  });
}

lk_status lk_model_spin_boson(double omega, int form0, double g0,
                              double omega_c0, int form1, double g1,
                              double omega_c1, double beta, lk_model** out) {
  return guarded([&] {
    if (!out) throw Error(ErrorCode::invalid_argument, "null argument");
    *out = new lk_model{micro::spin_boson_model(
        omega, make_spectral(form0, g0, omega_c0),
        make_spectral(form1, g1, omega_c1), beta)};
  });
}

lk_status lk_model_two_qubit_triplet(double omega, double g, int form,
                                     double gs, double omega_c,
                                     lk_model** out) {
  return guarded([&] {
    if (!out) throw Error(ErrorCode::invalid_argument, "null argument");
    *out = new lk_model{micro::two_qubit_triplet_model(
        omega, g, make_spectral(form, gs, omega_c))};
  });
}

lk_status lk_model_random(uint64_t seed, int dim, int channels,
                          lk_model** out) {
  return guarded([&] {
    if (!out) throw Error(ErrorCode::invalid_argument, "null argument");
    *out = new lk_model{random_model(seed, dim, channels)};
  });
}

lk_status lk_evolve(const lk_model* model, const double* rho0, double t,
                    double* rho_out) {
  return guarded([&] {
    const LindbladModel& m = deref(model);
    const DensityMatrix state =
        DensityMatrix::create(read_complex(rho0, m.dim()));
    write_complex(evolve_state(m, state, t).mat(), rho_out);
  });
}

lk_status lk_oracle_evolve(const lk_model* model, const double* rho0,
                           double t, int max_dim, double* rho_out) {
  return guarded([&] {
    const LindbladModel& m = deref(model);
    const DensityMatrix state =
        DensityMatrix::create(read_complex(rho0, m.dim()));
    const int limit = max_dim <= 0 ? oracle::kDefaultDimLimit : max_dim;
    write_complex(oracle::oracle_evolve(m, state, t, limit).mat(), rho_out);
  });
}

lk_status lk_gamma_matrix(const lk_model* model, int target, double* out) {
  return guarded([&] {
    write_real(kraus::gamma_matrix(deref(model), target).mat, out);
  });
}

lk_status lk_jump_coefficients(const lk_model* model, double t, double* out) {
  return guarded([&] {
    write_real(kraus::jump_coefficients(deref(model), t).coeffs, out);
  });
}

lk_status lk_kraus_compute(const lk_model* model, double t, lk_kraus** out) {
  return guarded([&] {
    if (!out) throw Error(ErrorCode::invalid_argument, "null argument");
    *out = new lk_kraus{kraus_of(deref(model), t)};
  });
}

void lk_kraus_free(lk_kraus* set) { delete set; }

int lk_kraus_count(const lk_kraus* set) {
  return set ? static_cast<int>(set->value.operators.size()) : 0;
}

int lk_kraus_dim(const lk_kraus* set) { return set ? set->value.dim : 0; }

double lk_kraus_completeness_residual(const lk_kraus* set) {
  return set ? set->value.completeness_residual : 0.0;
}

lk_status lk_kraus_operator(const lk_kraus* set, int k, double* out) {
  return guarded([&] {
    if (!set) throw Error(ErrorCode::invalid_argument, "null kraus handle");
    if (k < 0 || k >= static_cast<int>(set->value.operators.size())) {
      throw Error(ErrorCode::invalid_argument, "operator index out of range");
    }
    write_complex(set->value.operators[k].op, out);
  });
}

lk_status lk_state_diagnostics(const double* rho, int dim, double* trace_dev,
                               double* min_eig, double* purity) {
  return guarded([&] {
    if (dim < 1) throw Error(ErrorCode::invalid_argument, "dim must be >= 1");
    const StateDiagnostics d = state_diagnostics(read_complex(rho, dim));
    if (trace_dev) *trace_dev = d.trace_deviation;
    if (min_eig) *min_eig = d.min_eigenvalue;
    if (purity) *purity = d.purity;
  });
}

uint64_t lk_superop_build_count(void) {
  return oracle::superop_build_count();
}

}  // extern "C"
