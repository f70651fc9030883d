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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "decaycode/codegen.hpp"
#include "decaycode/json_io.hpp"

namespace decaycode {

inline constexpr const char* kVersion = "0.1.0";

/// Pass/fail thresholds shared by the experiments, the CLI and the
/// acceptance suite.
struct Tolerances {
  double invariance = 1e-12;        // |1 - fidelity| after conditional evolution
  double correction = 1e-10;        // |1 - fidelity| after a correction cycle
  double decay_mixing = 1e-12;      // vector-norm deviation of the mixing identities
  double slope_target = 4.0;        // expected log-log failure exponent
  double slope_window = 0.1;
  double two_jump_fidelity = 0.99;  // some two-jump case must fall below this
  double condition = kConditionTolerance;
  double rank = kRankThreshold;

  /// Overrides the experiment's primary tolerance (the one --tolerance sets).
  void set_primary(const std::string& experiment, double value);
};

enum class Verdict { kPass, kFail, kInconclusive };

std::string to_string(Verdict v);
/// 0 pass, 1 fail, 3 inconclusive.
int exit_code(Verdict v);

/// Bad experiment name or parameters.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentSpec {
  /// invariance, single-error-sweep, decay-mixing, five-bit-failure,
  /// eq6-limit, trajectory-ensemble, certify, bound, search
  std::string name;
  std::map<std::string, std::string> params;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out;
  Tolerances tolerances;

  Json to_json() const;
  static ExperimentSpec from_json(const Json& j);
};

/// The closed set of experiment names.
const std::vector<std::string>& experiment_names();
/// Maps CLI spellings (sweep-errors, trajectories) to experiment names.
/// Throws SpecError for anything outside the set.
std::string canonical_experiment_name(const std::string& name);
/// Experiments that draw random states or measurement outcomes and so
/// need a seed.
bool is_stochastic(const std::string& name);

struct ExperimentReport {
  ExperimentSpec spec;
  Json cases = Json::array();
  Json summary = Json::object();
  Verdict verdict = Verdict::kFail;
  std::string version = kVersion;
  double wall_seconds = 0.0;

  /// Everything except wall_seconds is a function of the spec alone.
  Json to_json(bool include_timing = true) const;
};

/// Validates the spec, runs it, and writes the report to spec.out when set.
/// Throws SpecError on an invalid spec; module errors propagate with the
/// experiment name prepended.
ExperimentReport run_experiment(const ExperimentSpec& spec);

struct Eq6Result {
  /// Normalized register after running the 5-bit encoder backwards on the
  /// evolved encoded state, before any measurement or recovery.
  QState corrected;
  /// |<eq6|corrected>| with both sides normalized.
  double overlap = 0.0;
  /// Born-averaged squared data-qubit fidelity after the full correction cycle.
  double data_fidelity = 0.0;
};

/// The printed corrupted-state limit, normalized.
QState eq6_transcribed();

Eq6Result eq6_limit(double gamma_t, const LogicalQubit& q);

}  // namespace decaycode
