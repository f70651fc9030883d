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
#include <string>
#include <vector>

#include "decaycode/codegen.hpp"
#include "decaycode/qsim.hpp"

namespace decaycode {

/// Single-qubit error alphabet.
///
/// A is a bit flip and P a sign flip of the excited component. AP is the
/// operator product A_i P_i: P acts first, then A. This is the ordering under
/// which the decay-mixing identities and the syndrome table phases hold
/// exactly; it differs from "A then P" by a global sign only.
enum class ErrorKind { kA, kP, kAP };

struct ErrorOp {
  ErrorKind kind = ErrorKind::kA;
  int qubit = 1;

  std::string name() const;  // "A_3", "P_3", "A_3P_3"
  auto operator<=>(const ErrorOp&) const = default;
};

/// A product of single-qubit errors, applied left to right. Empty is the
/// identity.
struct Error {
  std::vector<ErrorOp> ops;

  static Error identity() { return {}; }
  static Error single(ErrorKind kind, int qubit) { return Error{{{kind, qubit}}}; }

  bool is_identity() const { return ops.empty(); }
  std::string name() const;  // "I", "P_1", "A_1A_2", ...
  auto operator<=>(const Error&) const = default;
};

/// Parses "I", "A_3", "P_3", "A_3P_3", and products like "A_1A_2".
Error parse_error(const std::string& name);

/// The 3n single-qubit errors ordered P_1..P_n, A_1..A_n, A_1P_1..A_nP_n.
std::vector<Error> single_errors(int n);

QState apply_error(const QState& state, const ErrorOp& e);
QState apply_error(const QState& state, const Error& e);

struct DecayParams {
  double gamma_t = 0.0;  // dimensionless product of decay constant and time
};

/// No-jump evolution exp(-i H_eff t): every basis amplitude is multiplied by
/// exp(-gamma_t * weight(word)). Not renormalized.
QState conditional_evolve(const QState& state, DecayParams d);

/// Thrown when an emission is requested from a qubit with no excited
/// population.
class JumpImpossibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Lowering operator |0><1| on `qubit`, then renormalization.
QState apply_jump(const QState& state, int qubit);

/// Excited population of each qubit, index 0 for qubit 1.
std::vector<double> excited_populations(const QState& state);

struct TrajectoryConfig {
  double gamma_t_total = 0.0;
  std::uint64_t seed = 0;
  /// Jumps past this many still happen but are no longer logged.
  int max_jumps = 2;
};

struct JumpRecord {
  double gamma_t = 0.0;
  int qubit = 0;
};

struct Trajectory {
  QState final_state;  // normalized
  std::vector<JumpRecord> jumps;
  int total_jumps = 0;
};

/// Quantum-jump unravelling of spontaneous emission with population decay
/// rate 2*Gamma per excited qubit. Each no-jump segment is solved exactly:
/// the waiting time is the root of ||exp(-H_eff t) psi||^2 = r for a uniform
/// threshold r. The emitting qubit is chosen in proportion to its excited
/// population.
Trajectory sample_trajectory(const QState& state, const TrajectoryConfig& cfg);

/// Largest vector-norm deviation of the two decay-mixing identities for
/// error A_i (and A_iP_i) on qubit `qubit` of a code state followed by
/// conditional evolution:
///   E(t) A psi  = 1/2 e^{-3g} [ (1+e^{-2g}) A - (1-e^{-2g}) AP ] psi
///   E(t) AP psi = 1/2 e^{-3g} [ -(1-e^{-2g}) A + (1+e^{-2g}) AP ] psi
/// The code's words must have weight 4 (weight 3 or 5 after the flip), so
/// the operator is meant for the 8-bit code.
double decay_mixing_deviation(const CodeSpec& code, const LogicalQubit& q, int qubit,
                              double gamma_t);

}  // namespace decaycode
