// Copyright 2026 The stabkit authors
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

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "stabkit/caps.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/io.hpp"
#include "stabkit/learners.hpp"
#include "stabkit/rng.hpp"
#include "stabkit/sampling.hpp"
#include "stabkit/states.hpp"
#include "stabkit/verify.hpp"

using namespace stabkit;

namespace {

// Exit codes: 0 success, 1 cap overflow, 2 parameter validation, 3 file or
// stream trouble, 4 identity-suite failure, 5 anything unexpected.
constexpr int kExitCap = 1;
constexpr int kExitParam = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerifyFailed = 4;
constexpr int kExitInternal = 5;

struct StateInput {
  std::string state_file;
  std::string circuit_file;
  int n = 0;
};

void add_state_flags(CLI::App* cmd, StateInput& in) {
  cmd->add_option("--state-file,--state", in.state_file,
                  "amplitude file, one 're' or 're im' pair per line");
  cmd->add_option("--circuit-file,--circuit", in.circuit_file,
                  "gate list file (H, S, T, CNOT, U1)");
  cmd->add_option("--n", in.n, "qubit count; inferred from the input when omitted");
}

void add_caps_flags(CLI::App* cmd, Caps& caps) {
  cmd->add_option("--cap-state", caps.max_state_qubits, "statevector qubit cap")
      ->capture_default_str();
  cmd->add_option("--cap-dist", caps.max_dist_qubits, "phase-space table qubit cap")
      ->capture_default_str();
  cmd->add_option("--cap-vertices", caps.max_clique_vertices, "commutation-graph vertex cap")
      ->capture_default_str();
}

void add_mode_flag(CLI::App* cmd, std::string& mode) {
  cmd->add_option("--mode", mode, "sampling backend")
      ->check(CLI::IsMember({"exact", "physical"}))
      ->capture_default_str();
}

// --state-file wins when both inputs are present; the loser is called out on
// stderr so reports stay unambiguous about provenance.
PureState load_input(const StateInput& in, const Caps& caps) {
  if (!in.state_file.empty()) {
    if (!in.circuit_file.empty()) {
      std::cerr << "note: --state-file takes precedence; ignoring --circuit-file\n";
    }
    return load_state_file(in.state_file, in.n, caps);
  }
  if (!in.circuit_file.empty()) {
    return load_circuit_state(in.circuit_file, in.n, caps);
  }
  throw param_error("a state input is required: pass --state-file or --circuit-file");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') {
      std::cout << '\n';
    }
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw io_error("cannot open " + out_path);
  }
  out << text;
  if (text.empty() || text.back() != '\n') {
    out << '\n';
  }
  out.flush();
  if (!out) {
    throw io_error("failed writing " + out_path);
  }
}

void log_thread_env() {
  const char* env = std::getenv("STABKIT_THREADS");
  if (env == nullptr) {
    return;
  }
  char* end = nullptr;
  const long threads = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || threads < 1) {
    std::cerr << "warning: ignoring STABKIT_THREADS=" << env << " (want a positive integer)\n";
    return;
  }
  // Every hot path is sequential today, so any cap collapses to one worker.
  if (threads > 1) {
    std::cerr << "note: STABKIT_THREADS=" << threads << " requested; running on one thread\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"stabilizer estimation via Bell difference sampling"};
  app.require_subcommand(1);

  auto* sample_cmd =
      app.add_subcommand("sample", "draw Bell difference samples from a state");
  StateInput sample_in;
  Caps sample_caps;
  uint64_t sample_seed = 0;
  std::string sample_mode = "exact";
  uint64_t sample_trials = 100;
  std::string sample_format = "csv";
  std::string sample_out;
  add_state_flags(sample_cmd, sample_in);
  add_caps_flags(sample_cmd, sample_caps);
  add_mode_flag(sample_cmd, sample_mode);
  sample_cmd->add_option("--seed", sample_seed, "rng seed")->capture_default_str();
  sample_cmd->add_option("--trials", sample_trials, "number of samples")->capture_default_str();
  sample_cmd->add_option("--format", sample_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sample_cmd->add_option("--out", sample_out, "write output to this file instead of stdout");

  auto* dist_cmd =
      app.add_subcommand("dist", "dump the characteristic and Weyl distribution tables");
  StateInput dist_in;
  Caps dist_caps;
  std::string dist_format = "json";
  std::string dist_out;
  add_state_flags(dist_cmd, dist_in);
  add_caps_flags(dist_cmd, dist_caps);
  dist_cmd->add_option("--format", dist_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  dist_cmd->add_option("--out", dist_out, "write output to this file instead of stdout");

  auto* distinguish_cmd =
      app.add_subcommand("distinguish", "Haar-vs-doped verdict from span of sampled labels");
  StateInput distinguish_in;
  Caps distinguish_caps;
  double distinguish_delta = 0.05;
  uint64_t distinguish_seed = 0;
  std::string distinguish_mode = "exact";
  std::string distinguish_out;
  add_state_flags(distinguish_cmd, distinguish_in);
  add_caps_flags(distinguish_cmd, distinguish_caps);
  add_mode_flag(distinguish_cmd, distinguish_mode);
  distinguish_cmd->add_option("--delta", distinguish_delta, "failure probability")
      ->capture_default_str();
  distinguish_cmd->add_option("--seed", distinguish_seed, "rng seed")->capture_default_str();
  distinguish_cmd->add_option("--out", distinguish_out,
                              "write output to this file instead of stdout");

  auto* fidelity_cmd =
      app.add_subcommand("fidelity", "estimate stabilizer fidelity and return a witness");
  StateInput fidelity_in;
  Caps fidelity_caps;
  double fidelity_tau = 0;
  double fidelity_eps = 0.1;
  double fidelity_delta = 0.05;
  uint64_t fidelity_seed = 0;
  std::string fidelity_mode = "exact";
  std::string fidelity_out;
  add_state_flags(fidelity_cmd, fidelity_in);
  add_caps_flags(fidelity_cmd, fidelity_caps);
  add_mode_flag(fidelity_cmd, fidelity_mode);
  fidelity_cmd->add_option("--tau", fidelity_tau, "fidelity promise threshold")->required();
  fidelity_cmd->add_option("--eps", fidelity_eps, "additive accuracy")->capture_default_str();
  fidelity_cmd->add_option("--delta", fidelity_delta, "failure probability")
      ->capture_default_str();
  fidelity_cmd->add_option("--seed", fidelity_seed, "rng seed")->capture_default_str();
  fidelity_cmd->add_option("--out", fidelity_out, "write output to this file instead of stdout");

  auto* eta_cmd = app.add_subcommand("eta", "Monte Carlo estimate of the eta statistic");
  StateInput eta_in;
  Caps eta_caps;
  uint64_t eta_m = 10000;
  uint64_t eta_seed = 0;
  std::string eta_mode = "exact";
  std::string eta_out;
  add_state_flags(eta_cmd, eta_in);
  add_caps_flags(eta_cmd, eta_caps);
  add_mode_flag(eta_cmd, eta_mode);
  eta_cmd->add_option("--m-override", eta_m, "number of two-copy measurements")
      ->capture_default_str();
  eta_cmd->add_option("--seed", eta_seed, "rng seed")->capture_default_str();
  eta_cmd->add_option("--out", eta_out, "write output to this file instead of stdout");

  auto* test_cmd =
      app.add_subcommand("test", "tolerant stabilizer test: fidelity >= alpha1 vs <= alpha2");
  StateInput test_in;
  Caps test_caps;
  double test_alpha1 = 0;
  double test_alpha2 = 0;
  double test_delta = 0.05;
  uint64_t test_seed = 0;
  std::string test_mode = "exact";
  std::string test_out;
  add_state_flags(test_cmd, test_in);
  add_caps_flags(test_cmd, test_caps);
  add_mode_flag(test_cmd, test_mode);
  test_cmd->add_option("--alpha1", test_alpha1, "completeness threshold")->required();
  test_cmd->add_option("--alpha2", test_alpha2, "soundness threshold")->required();
  test_cmd->add_option("--delta", test_delta, "failure probability")->capture_default_str();
  test_cmd->add_option("--seed", test_seed, "rng seed")->capture_default_str();
  test_cmd->add_option("--out", test_out, "write output to this file instead of stdout");

  auto* grid_cmd =
      app.add_subcommand("regime-grid", "feasibility grid of the two tolerance regimes as CSV");
  double grid_step = 0.005;
  std::string grid_out;
  grid_cmd->add_option("--step", grid_step, "lattice spacing in both axes")
      ->capture_default_str();
  grid_cmd->add_option("--out", grid_out, "write output to this file instead of stdout");

  auto* verify_cmd =
      app.add_subcommand("verify", "run the mass-duality and transform identity suite");
  Caps verify_caps;
  int verify_n = 0;
  int verify_trials = 100;
  uint64_t verify_seed = 0;
  std::string verify_out;
  add_caps_flags(verify_cmd, verify_caps);
  verify_cmd->add_option("--n", verify_n, "qubit count")->required();
  verify_cmd->add_option("--trials", verify_trials, "random state pairs per run")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "rng seed")->capture_default_str();
  verify_cmd->add_option("--out", verify_out, "write output to this file instead of stdout");

  auto* catalog_cmd =
      app.add_subcommand("catalog", "export the full stabilizer-state catalog");
  int catalog_n = 0;
  std::string catalog_out;
  catalog_cmd->add_option("--n", catalog_n, "qubit count")->required();
  catalog_cmd->add_option("--out", catalog_out, "write output to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParam;
  }

  log_thread_env();

  if (*sample_cmd) {
    const PureState psi = load_input(sample_in, sample_caps);
    const SampleMode mode = parse_mode(sample_mode);
    const BellSampler sampler(psi, mode, sample_caps);
    RngStream rng(sample_seed);
    std::vector<F2Vec> samples;
    samples.reserve(sample_trials);
    for (uint64_t i = 0; i < sample_trials; ++i) {
      samples.push_back(sampler.sample(rng));
    }
    emit(sample_format == "json" ? samples_json(psi.n(), sample_seed, mode, samples)
                                 : samples_csv(samples),
         sample_out);
    return 0;
  }
  if (*dist_cmd) {
    const PureState psi = load_input(dist_in, dist_caps);
    const CharDistribution p = char_distribution(psi, dist_caps);
    const WeylDistribution q = weyl_distribution(p);
    emit(dist_format == "json" ? distributions_json(p, q) : distributions_csv(p, q), dist_out);
    return 0;
  }
  if (*distinguish_cmd) {
    const PureState psi = load_input(distinguish_in, distinguish_caps);
    const DistinguishReport report =
        distinguish(psi, distinguish_delta, distinguish_seed, parse_mode(distinguish_mode),
                    /*early_exit=*/false, distinguish_caps);
    emit(report_json(report), distinguish_out);
    return 0;
  }
  if (*fidelity_cmd) {
    const PureState psi = load_input(fidelity_in, fidelity_caps);
    const FidelityReport report =
        estimate_fidelity(psi, fidelity_tau, fidelity_eps, fidelity_delta, fidelity_seed,
                          parse_mode(fidelity_mode), fidelity_caps);
    emit(report_json(report), fidelity_out);
    return 0;
  }
  if (*eta_cmd) {
    const PureState psi = load_input(eta_in, eta_caps);
    const SampleMode mode = parse_mode(eta_mode);
    const double eta_hat = eta_estimate(psi, eta_m, eta_seed, mode, eta_caps);
    emit(eta_report_json(psi.n(), eta_m, eta_seed, mode, eta_hat), eta_out);
    return 0;
  }
  if (*test_cmd) {
    const PureState psi = load_input(test_in, test_caps);
    const TestReport report = tolerant_test(psi, test_alpha1, test_alpha2, test_delta,
                                            test_seed, parse_mode(test_mode), test_caps);
    emit(report_json(report), test_out);
    return 0;
  }
  if (*grid_cmd) {
    emit(regime_grid_csv(grid_step), grid_out);
    return 0;
  }
  if (*verify_cmd) {
    const IdentitySuiteResult result =
        run_identity_suite(verify_n, verify_trials, verify_seed, verify_caps);
    emit(verify_report_json(result), verify_out);
    if (!result.all_passed()) {
      std::cerr << "identity suite failed; see the report counters\n";
      return kExitVerifyFailed;
    }
    return 0;
  }
  if (*catalog_cmd) {
    emit(catalog_json(catalog_n), catalog_out);
    return 0;
  }
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const param_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParam;
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
