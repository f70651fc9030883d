// Copyright 2026 The decaycode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "decaycode/experiments.hpp"

namespace {

using decaycode::ExperimentSpec;

constexpr int kUsageError = 2;

struct Flags {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<double> tolerance;
  std::optional<std::string> gamma_t;
  std::optional<double> alpha_re, alpha_im, beta_re, beta_im;
  std::optional<double> budget;
  std::optional<std::uint64_t> budget_subspaces;
  std::optional<std::string> progress_file;
  bool resume = false;
  std::vector<std::string> params;
};

struct Command {
  std::string cli_name;
  std::string description;
  /// Parameter that --gamma-t feeds, empty when the flag is not offered.
  std::string gamma_param;
  bool takes_state = false;
  bool is_search = false;
  CLI::App* app = nullptr;
};

void add_common(CLI::App* sub, Flags& f, const Command& c) {
  sub->add_option("--seed", f.seed, "RNG seed (required for stochastic experiments)");
  sub->add_option("--out", f.out, "Write the JSON report here instead of stdout");
  sub->add_option("--tolerance", f.tolerance, "Override the experiment's primary tolerance");
  sub->add_option("--param", f.params, "Experiment parameter as key=value (repeatable)");
  if (!c.gamma_param.empty()) {
    sub->add_option("--gamma-t", f.gamma_t,
                    "Value or comma-separated list for '" + c.gamma_param + "'");
  }
  if (c.takes_state) {
    sub->add_option("--alpha-re", f.alpha_re, "Real part of alpha");
    sub->add_option("--alpha-im", f.alpha_im, "Imaginary part of alpha");
    sub->add_option("--beta-re", f.beta_re, "Real part of beta");
    sub->add_option("--beta-im", f.beta_im, "Imaginary part of beta");
  }
  if (c.is_search) {
    sub->add_option("--budget", f.budget, "Wall-clock budget in seconds (default 600)");
    sub->add_option("--budget-subspaces", f.budget_subspaces, "Stop after this many subspaces");
    sub->add_option("--progress-file", f.progress_file, "Checkpoint file");
    sub->add_flag("--resume", f.resume, "Continue from an existing checkpoint");
  }
}

ExperimentSpec build_spec(const Command& c, const Flags& f) {
  ExperimentSpec spec;
  spec.name = decaycode::canonical_experiment_name(c.cli_name);
  spec.seed = f.seed;
  for (const std::string& kv : f.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw decaycode::SpecError("--param expects key=value, got '" + kv + "'");
    }
    spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  auto set_real = [&](const char* key, const std::optional<double>& v) {
    if (!v) return;
    std::ostringstream os;
    os << std::setprecision(17) << *v;
    spec.params[key] = os.str();
  };
  if (f.gamma_t) spec.params[c.gamma_param] = *f.gamma_t;
  set_real("alpha_re", f.alpha_re);
  set_real("alpha_im", f.alpha_im);
  set_real("beta_re", f.beta_re);
  set_real("beta_im", f.beta_im);
  set_real("budget_seconds", f.budget);
  if (f.budget_subspaces) spec.params["budget_subspaces"] = std::to_string(*f.budget_subspaces);
  if (f.progress_file) {
    spec.params["progress_file"] = *f.progress_file;
    if (!f.resume) std::filesystem::remove(*f.progress_file);
  } else if (f.resume) {
    throw decaycode::SpecError("--resume needs --progress-file");
  }
  if (f.tolerance) spec.tolerances.set_primary(spec.name, *f.tolerance);
  if (f.out) spec.out = *f.out;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and certification of an emission-invariant quantum code.",
               "decaycode"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(decaycode::kVersion));

  std::vector<Command> commands = {
      {"invariance", "Conditional evolution leaves encoded states unchanged", "gamma_ts", true},
      {"sweep-errors", "Every single error, corrected through the full cycle", "sandwich", true},
      {"decay-mixing", "Deviation of the decay-mixing identities", "gamma_ts", true},
      {"five-bit-failure", "Fourth-order failure of the 5-bit code", "ground_gamma_ts", true},
      {"eq6-limit", "Long-time limit of the 5-bit correction pipeline", "gamma_t", true},
      {"trajectories", "Quantum-jump trajectories on the 8-bit code", "gamma_t", true},
      {"certify", "Correction conditions, degeneracy and error-space dimension", "", false},
      {"bound", "Sphere-packing bound in exact arithmetic", "", false},
      {"search", "Exhaustive search for equal-excitation coset codes", "", false, true},
  };
  Flags flags;
  for (Command& c : commands) {
    c.app = app.add_subcommand(c.cli_name, c.description);
    add_common(c.app, flags, c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  const Command* chosen = nullptr;
  for (const Command& c : commands) {
    if (c.app->parsed()) chosen = &c;
  }

  try {
    ExperimentSpec spec = build_spec(*chosen, flags);
    decaycode::ExperimentReport report = decaycode::run_experiment(spec);
    if (!spec.out) std::cout << report.to_json().dump(2) << '\n';
    std::cerr << spec.name << ": " << decaycode::to_string(report.verdict) << " ("
              << report.wall_seconds << " s)\n";
    return decaycode::exit_code(report.verdict);
  } catch (const decaycode::SpecError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
