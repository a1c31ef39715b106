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

// Command-line front end. Links the C API only.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lindkraus/lindkraus.h"

namespace {

using nlohmann::json;

constexpr int kExitSchema = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNonCP = 4;

bool log_enabled() {
  const char* v = std::getenv("LINDKRAUS_LOG");
  return v && *v && std::string(v) != "0";
}

void log_line(const std::string& msg) {
  if (log_enabled()) std::cerr << "[lindkraus] " << msg << "\n";
}

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(code);
}

int exit_code_for(lk_status status) {
  switch (status) {
    case LK_ERR_PARSE: return kExitSchema;
    case LK_ERR_MODEL_INVALID: return kExitValidation;
    case LK_ERR_NOT_CP: return kExitNonCP;
    default: return 1;
  }
}

void check(lk_status status) {
  if (status != LK_OK) die(exit_code_for(status), lk_last_error());
}

using ModelPtr = std::unique_ptr<lk_model, decltype(&lk_model_free)>;

struct ModelOptions {
  std::string file;
  std::string preset;
  // Shared preset knobs.
  double omega = 1.0;
  double g = 0.3;
  double gamma = 1.0;
  double gamma_plus = 1.0;
  double gamma_minus = 0.0;
  double gamma0 = 0.0;
  double beta = 1.0;
  std::string s0_form = "ohmic";
  double s0_g = 0.1;
  double s0_cutoff = 10.0;
  std::string s1_form = "ohmic";
  double s1_g = 1.0;
  double s1_cutoff = 10.0;
  bool dump = false;
};

void add_model_options(CLI::App* cmd, ModelOptions* opt) {
  cmd->add_option("--model", opt->file, "Model JSON file");
  cmd->add_option("--preset", opt->preset,
                  "Builtin model: three-level|two-level|spin-boson|two-qubit")
      ->check(CLI::IsMember(
          {"three-level", "two-level", "spin-boson", "two-qubit"}));
  cmd->add_option("--omega", opt->omega, "Level splitting");
  cmd->add_option("--g", opt->g,
                  "Middle-level energy (three-level) or qubit coupling "
                  "(two-qubit)");
  cmd->add_option("--gamma", opt->gamma, "Decay rate (three-level)");
  cmd->add_option("--gamma-plus", opt->gamma_plus, "Decay rate (two-level)");
  cmd->add_option("--gamma-minus", opt->gamma_minus,
                  "Excitation rate (two-level)");
  cmd->add_option("--gamma0", opt->gamma0, "Dephasing rate (two-level)");
  cmd->add_option("--beta", opt->beta, "Inverse temperature (spin-boson)");
  cmd->add_option("--s0-form", opt->s0_form,
                  "Dephasing spectral form (spin-boson): flat|ohmic")
      ->check(CLI::IsMember({"flat", "ohmic"}));
  cmd->add_option("--s0-g", opt->s0_g, "Dephasing spectral coupling");
  cmd->add_option("--s0-cutoff", opt->s0_cutoff, "Dephasing spectral cutoff");
  cmd->add_option("--s1-form", opt->s1_form,
                  "Transition spectral form: flat|ohmic")
      ->check(CLI::IsMember({"flat", "ohmic"}));
  cmd->add_option("--s1-g", opt->s1_g, "Transition spectral coupling");
  cmd->add_option("--s1-cutoff", opt->s1_cutoff, "Transition spectral cutoff");
  cmd->add_flag("--dump-model", opt->dump,
                "Print the resolved model JSON and exit");
}

int spectral_form(const std::string& name) {
  return name == "flat" ? LK_SPECTRAL_FLAT : LK_SPECTRAL_OHMIC;
}

ModelPtr build_model(const ModelOptions& opt) {
  if (opt.file.empty() == opt.preset.empty()) {
    die(kExitSchema, "exactly one of --model and --preset is required");
  }
  lk_model* raw = nullptr;
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) die(kExitSchema, "cannot open model file " + opt.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    check(lk_model_from_json(buf.str().c_str(), &raw));
  } else if (opt.preset == "three-level") {
    const double energies[3] = {-opt.omega, opt.g, opt.omega};
    double rates[9] = {0};
    rates[1 * 3 + 0] = opt.gamma;  // into 0 from 1
    rates[2 * 3 + 1] = opt.gamma;  // into 1 from 2
    check(lk_model_create(energies, 3, rates, 0.0, &raw));
  } else if (opt.preset == "two-level") {
    const double energies[2] = {-0.5 * opt.omega, 0.5 * opt.omega};
    double rates[4] = {0};
    rates[1 * 2 + 0] = opt.gamma_plus;   // decay into 0 from 1
    rates[0 * 2 + 1] = opt.gamma_minus;  // excitation into 1 from 0
    check(lk_model_create(energies, 2, rates, opt.gamma0, &raw));
  } else if (opt.preset == "spin-boson") {
    check(lk_model_spin_boson(opt.omega, spectral_form(opt.s0_form), opt.s0_g,
                              opt.s0_cutoff, spectral_form(opt.s1_form),
                              opt.s1_g, opt.s1_cutoff, opt.beta, &raw));
  } else {
    check(lk_model_two_qubit_triplet(opt.omega, opt.g,
                                     spectral_form(opt.s1_form), opt.s1_g,
                                     opt.s1_cutoff, &raw));
  }

  ModelPtr model(raw, &lk_model_free);
  if (opt.dump) {
    char* text = nullptr;
    check(lk_model_to_json(model.get(), &text));
    std::cout << text << "\n";
    lk_string_free(text);
    std::exit(0);
  }
  return model;
}

void require_valid(const lk_model* model) {
  char* report = nullptr;
  int count = 0;
  check(lk_model_validate(model, &report, &count));
  if (count > 0) {
    std::string text = report ? report : "invalid model";
    lk_string_free(report);
    die(kExitValidation, "model failed validation:\n" + text);
  }
  lk_string_free(report);
}

std::vector<std::complex<double>> parse_rho_file(const std::string& path,
                                                 int dim) {
  std::ifstream in(path);
  if (!in) die(kExitSchema, "cannot open state file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    die(kExitSchema, std::string("state JSON: ") + e.what());
  }
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    die(kExitSchema, "state must be a " + std::to_string(dim) + "x" +
                         std::to_string(dim) + " nested array");
  }
  std::vector<std::complex<double>> rho(dim * dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != dim) {
      die(kExitSchema, "state rows must have " + std::to_string(dim) +
                           " [re, im] entries");
    }
    for (int k = 0; k < dim; ++k) {
      const json& cell = j[i][k];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number()) {
        die(kExitSchema, "state entries must be [re, im] pairs");
      }
      rho[k * dim + i] = {cell[0].get<double>(), cell[1].get<double>()};
    }
  }
  return rho;
}

std::vector<std::complex<double>> build_rho0(const lk_model* model,
                                             const std::string& spec) {
  const int dim = lk_model_dim(model);
  std::vector<std::complex<double>> rho(dim * dim, 0.0);
  if (spec == "excited" || spec == "ground") {
    int pick = 0;
    for (int i = 1; i < dim; ++i) {
      const bool higher = lk_model_energy(model, i) > lk_model_energy(model, pick);
      if ((spec == "excited") == higher) pick = i;
    }
    rho[pick * dim + pick] = 1.0;
  } else if (spec == "plus") {
    for (auto& v : rho) v = 1.0 / double(dim);
  } else {
    return parse_rho_file(spec, dim);
  }
  return rho;
}

std::vector<double> parse_times(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  try {
    if (parts.size() == 1) {
      return {std::stod(parts[0])};
    }
    if (parts.size() == 3) {
      const double start = std::stod(parts[0]);
      const double stop = std::stod(parts[1]);
      const double step = std::stod(parts[2]);
      if (step <= 0.0 || stop < start) {
        die(kExitSchema, "time grid needs stop >= start and step > 0");
      }
      std::vector<double> out;
      // Endpoints are inclusive within 1e-12.
      for (double t = start; t <= stop + 1e-12; t += step) out.push_back(t);
      return out;
    }
  } catch (const std::exception&) {
    die(kExitSchema, "cannot parse time grid \"" + spec + "\"");
  }
  die(kExitSchema, "time grid must be \"t\" or \"start:stop:step\"");
}

json complex_matrix_json(const std::complex<double>* buf, int dim) {
  json rows = json::array();
  for (int i = 0; i < dim; ++i) {
    json row = json::array();
    for (int k = 0; k < dim; ++k) {
      const auto& v = buf[k * dim + i];
      row.push_back(json::array({v.real(), v.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) die(1, "cannot open output file " + path);
  return file;
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// ---- evolve -----------------------------------------------------------

struct EvolveOptions {
  ModelOptions model;
  std::string rho0 = "excited";
  std::string times = "0:5:0.5";
  std::string out_format = "csv";
  std::string out_file;
};

int run_evolve(const EvolveOptions& opt) {
  ModelPtr model = build_model(opt.model);
  require_valid(model.get());
  const int dim = lk_model_dim(model.get());
  const auto rho0 = build_rho0(model.get(), opt.rho0);
  const auto times = parse_times(opt.times);
  log_line("evolve: dim " + std::to_string(dim) + ", " +
           std::to_string(times.size()) + " time points");

  std::ofstream file;
  std::ostream& out = open_output(opt.out_file, file);
  std::vector<std::complex<double>> rho(dim * dim);

  json jstates = json::array();
  if (opt.out_format == "csv") {
    out << "t";
    for (int i = 0; i < dim; ++i) {
      for (int k = 0; k < dim; ++k) {
        out << ",re_" << i << "_" << k << ",im_" << i << "_" << k;
      }
    }
    out << ",trace_dev,min_eig,purity\n";
  }

  for (const double t : times) {
    check(lk_evolve(model.get(),
                    reinterpret_cast<const double*>(rho0.data()), t,
                    reinterpret_cast<double*>(rho.data())));
    double trace_dev = 0.0, min_eig = 0.0, purity = 0.0;
    check(lk_state_diagnostics(reinterpret_cast<const double*>(rho.data()),
                               dim, &trace_dev, &min_eig, &purity));
    if (opt.out_format == "csv") {
      out.precision(17);
      out << t;
      for (int i = 0; i < dim; ++i) {
        for (int k = 0; k < dim; ++k) {
          const auto& v = rho[k * dim + i];
          out << "," << v.real() << "," << v.imag();
        }
      }
      out << "," << trace_dev << "," << min_eig << "," << purity << "\n";
    } else {
      json row;
      row["t"] = t;
      row["rho"] = complex_matrix_json(rho.data(), dim);
      row["trace_dev"] = trace_dev;
      row["min_eig"] = min_eig;
      row["purity"] = purity;
      jstates.push_back(std::move(row));
    }
  }
  if (opt.out_format == "json") {
    json doc;
    doc["dim"] = dim;
    doc["states"] = std::move(jstates);
    out << doc.dump(2) << "\n";
  }
  return 0;
}

// ---- kraus ------------------------------------------------------------

struct KrausOptions {
  ModelOptions model;
  double time = 1.0;
  std::string out_file;
};

int run_kraus(const KrausOptions& opt) {
  ModelPtr model = build_model(opt.model);
  require_valid(model.get());
  const int dim = lk_model_dim(model.get());

  lk_kraus* raw = nullptr;
  check(lk_kraus_compute(model.get(), opt.time, &raw));
  std::unique_ptr<lk_kraus, decltype(&lk_kraus_free)> set(raw, &lk_kraus_free);

  json doc;
  doc["dim"] = dim;
  doc["t"] = opt.time;
  doc["count"] = lk_kraus_count(set.get());
  doc["completeness_residual"] = lk_kraus_completeness_residual(set.get());
  doc["operators"] = json::array();
  std::vector<std::complex<double>> op(dim * dim);
  for (int k = 0; k < lk_kraus_count(set.get()); ++k) {
    check(lk_kraus_operator(set.get(), k, reinterpret_cast<double*>(op.data())));
    json entry;
    entry["weight"] = 1.0;
    entry["matrix"] = complex_matrix_json(op.data(), dim);
    doc["operators"].push_back(std::move(entry));
  }

  std::ofstream file;
  std::ostream& out = open_output(opt.out_file, file);
  out << doc.dump(2) << "\n";
  return 0;
}

// ---- check ------------------------------------------------------------

struct CheckOptions {
  ModelOptions model;
  std::string rho0 = "excited";
  std::string times = "0.1:1.0:0.3";
  double tol_override = 0.0;  // replaces the oracle tolerance when > 0
  int max_oracle_dim = 64;
};

int run_check(const CheckOptions& opt) {
  ModelPtr model = build_model(opt.model);
  require_valid(model.get());
  const int dim = lk_model_dim(model.get());
  const auto rho0 = build_rho0(model.get(), opt.rho0);
  const auto times = parse_times(opt.times);

  const double oracle_tol = opt.tol_override > 0.0 ? opt.tol_override : 1e-8;
  double worst_oracle = 0.0, worst_trace = 0.0, worst_completeness = 0.0;
  double worst_eig = 0.0;
  bool oracle_ran = false;

  std::vector<std::complex<double>> closed(dim * dim), reference(dim * dim);
  for (const double t : times) {
    check(lk_evolve(model.get(),
                    reinterpret_cast<const double*>(rho0.data()), t,
                    reinterpret_cast<double*>(closed.data())));
    double trace_dev = 0.0, min_eig = 0.0, purity = 0.0;
    check(lk_state_diagnostics(reinterpret_cast<const double*>(closed.data()),
                               dim, &trace_dev, &min_eig, &purity));
    worst_trace = std::max(worst_trace, trace_dev);
    worst_eig = std::min(worst_eig, min_eig);

    if (dim <= opt.max_oracle_dim) {
      check(lk_oracle_evolve(model.get(),
                             reinterpret_cast<const double*>(rho0.data()), t,
                             opt.max_oracle_dim,
                             reinterpret_cast<double*>(reference.data())));
      oracle_ran = true;
      for (int i = 0; i < dim * dim; ++i) {
        worst_oracle = std::max(worst_oracle, std::abs(closed[i] - reference[i]));
      }
    }

    lk_kraus* raw = nullptr;
    check(lk_kraus_compute(model.get(), t, &raw));
    worst_completeness =
        std::max(worst_completeness, lk_kraus_completeness_residual(raw));
    lk_kraus_free(raw);
  }

  double worst_balance = 0.0;
  double beta = 0.0;
  const bool thermal = lk_model_beta(model.get(), &beta) && !std::isinf(beta);
  if (thermal) {
    // gamma_up = e^{-beta w} gamma_down for every coupled pair.
    for (int m = 0; m < dim; ++m) {
      for (int n = m + 1; n < dim; ++n) {
        const double down = lk_model_rate(model.get(), m, n) +
                            lk_model_rate(model.get(), n, m);
        if (down == 0.0) continue;
        const int lo =
            lk_model_energy(model.get(), m) <= lk_model_energy(model.get(), n)
                ? m : n;
        const int hi = lo == m ? n : m;
        const double w = lk_model_energy(model.get(), hi) -
                         lk_model_energy(model.get(), lo);
        const double emission = lk_model_rate(model.get(), lo, hi);
        const double absorption = lk_model_rate(model.get(), hi, lo);
        if (emission > 0.0) {
          worst_balance = std::max(
              worst_balance,
              std::abs(absorption - std::exp(-beta * w) * emission) /
                  emission);
        }
      }
    }
  }

  std::cout << "checks over " << times.size() << " time points:\n";
  std::cout << "  oracle max deviation:      ";
  if (oracle_ran) {
    std::cout << worst_oracle << " (tol " << oracle_tol << ")\n";
  } else {
    std::cout << "skipped, dim > " << opt.max_oracle_dim << "\n";
  }
  std::cout << "  trace deviation:           " << worst_trace
            << " (tol 1e-12)\n";
  std::cout << "  min eigenvalue:            " << worst_eig
            << " (floor -1e-10)\n";
  std::cout << "  kraus completeness:        " << worst_completeness
            << " (tol 1e-10)\n";
  if (thermal) {
    std::cout << "  detailed balance (rel):    " << worst_balance
              << " (tol 1e-12)\n";
  }

  const bool ok = (!oracle_ran || worst_oracle <= oracle_tol) &&
                  worst_trace <= 1e-12 && worst_eig >= -1e-10 &&
                  worst_completeness <= 1e-10 &&
                  (!thermal || worst_balance <= 1e-12);
  std::cout << (ok ? "OK" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

// ---- bench ------------------------------------------------------------

struct BenchOptions {
  std::vector<int> sizes{4, 8, 16};
  int channels = 2;
  double time = 1.0;
  std::uint64_t seed = 1;
  std::string out_file;
};

int run_bench(const BenchOptions& opt) {
  std::ofstream file;
  std::ostream& out = open_output(opt.out_file, file);
  out << "N,t_closed_s,t_oracle_s,speedup,max_dev,superop_builds_closed\n";

  for (const int n : opt.sizes) {
    lk_model* raw = nullptr;
    check(lk_model_random(opt.seed + std::uint64_t(n), n, opt.channels, &raw));
    ModelPtr model(raw, &lk_model_free);

    const int dim = lk_model_dim(model.get());
    std::vector<std::complex<double>> rho0(dim * dim, 1.0 / double(dim));
    std::vector<std::complex<double>> closed(dim * dim), reference(dim * dim);

    // Closed path first; the superoperator counter must not move.
    const std::uint64_t builds_before = lk_superop_build_count();
    double t_closed = 0.0;
    int reps = 1;
    for (;;) {
      const double start = now_seconds();
      for (int r = 0; r < reps; ++r) {
        check(lk_evolve(model.get(),
                        reinterpret_cast<const double*>(rho0.data()),
                        opt.time, reinterpret_cast<double*>(closed.data())));
      }
      t_closed = (now_seconds() - start) / reps;
      if (t_closed * reps > 0.05 || reps >= 1 << 14) break;
      reps *= 4;
    }
    const std::uint64_t builds_closed =
        lk_superop_build_count() - builds_before;

    log_line("bench: N=" + std::to_string(n) + " closed path done, oracle...");
    const double oracle_start = now_seconds();
    check(lk_oracle_evolve(model.get(),
                           reinterpret_cast<const double*>(rho0.data()),
                           opt.time, n,
                           reinterpret_cast<double*>(reference.data())));
    const double t_oracle = now_seconds() - oracle_start;

    double max_dev = 0.0;
    for (int i = 0; i < dim * dim; ++i) {
      max_dev = std::max(max_dev, std::abs(closed[i] - reference[i]));
    }

    out.precision(17);
    out << n << "," << t_closed << "," << t_oracle << ","
        << (t_closed > 0.0 ? t_oracle / t_closed : 0.0) << "," << max_dev
        << "," << builds_closed << "\n";
    out.flush();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form Lindblad evolution and Kraus sets"};
  app.require_subcommand(1);

  EvolveOptions evolve_opt;
  CLI::App* evolve = app.add_subcommand(
      "evolve", "Evolve a state over a time grid and emit the trajectory");
  add_model_options(evolve, &evolve_opt.model);
  evolve->add_option("--rho0", evolve_opt.rho0,
                     "Initial state: excited|ground|plus|<file.json>");
  evolve->add_option("--times", evolve_opt.times,
                     "Time grid \"start:stop:step\" or a single time");
  evolve->add_option("--out", evolve_opt.out_format, "Output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  evolve->add_option("--output", evolve_opt.out_file,
                     "Output file (default stdout)");

  KrausOptions kraus_opt;
  CLI::App* kraus = app.add_subcommand(
      "kraus", "Emit the Kraus operators of the evolution map at a time");
  add_model_options(kraus, &kraus_opt.model);
  kraus->add_option("--time", kraus_opt.time, "Evolution time");
  kraus->add_option("--output", kraus_opt.out_file,
                    "Output file (default stdout)");

  CheckOptions check_opt;
  CLI::App* checkc = app.add_subcommand(
      "check", "Cross-validate the closed form against the dense oracle");
  add_model_options(checkc, &check_opt.model);
  checkc->add_option("--rho0", check_opt.rho0,
                     "Initial state: excited|ground|plus|<file.json>");
  checkc->add_option("--times", check_opt.times, "Time grid");
  checkc->add_option("--tol-override", check_opt.tol_override,
                     "Replace the oracle comparison tolerance");
  checkc->add_option("--max-oracle-dim", check_opt.max_oracle_dim,
                     "Skip the oracle beyond this dimension");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand(
      "bench", "Time the closed-form path against the dense oracle");
  bench->add_option("--sizes", bench_opt.sizes, "Model dimensions to bench")
      ->delimiter(',');
  bench->add_option("--channels", bench_opt.channels, "Jump channels");
  bench->add_option("--time", bench_opt.time, "Evolution time");
  bench->add_option("--seed", bench_opt.seed, "Model RNG seed");
  bench->add_option("--output", bench_opt.out_file,
                    "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (evolve->parsed()) return run_evolve(evolve_opt);
  if (kraus->parsed()) return run_kraus(kraus_opt);
  if (checkc->parsed()) return run_check(check_opt);
  return run_bench(bench_opt);
}
