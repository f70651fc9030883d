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

#include <string>
#include <string_view>
#include <vector>

#include "decaycode/qsim.hpp"

namespace decaycode {

struct SignedWord {
  int sign = +1;  // exactly +1 or -1
  BasisWord word;

  bool operator==(const SignedWord&) const = default;
};

/// Parses "+00001111" / "-10010110".
SignedWord parse_signed_word(std::string_view text);
std::string to_string(const SignedWord& w);

/// A one-qubit code given by two signed superpositions of basis words.
struct CodeSpec {
  std::string name;
  int n = 0;
  std::vector<SignedWord> zero_words;
  std::vector<SignedWord> one_words;

  /// Checks distinct words, equal list sizes, valid signs, orthogonality and
  /// equal norms of the two logical states. With `require_equal_weight`
  /// every word must also have weight n/2. Throws std::invalid_argument.
  void validate(bool require_equal_weight = false) const;

  const std::vector<SignedWord>& words(int logical) const {
    return logical == 0 ? zero_words : one_words;
  }

  bool operator==(const CodeSpec&) const = default;
};

/// Normalized logical amplitudes (alpha, beta).
struct LogicalQubit {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};

  /// Throws std::invalid_argument unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
  static LogicalQubit make(Complex alpha, Complex beta);
  /// Rescales to unit norm; throws std::domain_error for (0, 0).
  static LogicalQubit normalized(Complex alpha, Complex beta);
  /// Haar-random point on the Bloch sphere.
  static LogicalQubit random(Rng& rng);

  QState as_state() const;
};

/// |<a|b>| for two logical qubits.
double fidelity_up_to_phase(const LogicalQubit& a, const LogicalQubit& b);

CodeSpec five_bit_code();

/// Appends the bit-reversed complement of a 5-bit word and drops positions 5
/// and 6 of the resulting 10-bit word. Throws on a word of the wrong length.
BasisWord lift_word(const BasisWord& w);

/// The 8-bit emission-invariant code, built by lifting every word of the
/// 5-bit code and keeping its sign.
CodeSpec eight_bit_code();

/// The 8-bit code as printed, word for word; used to check the lift.
CodeSpec eight_bit_code_transcribed();

/// Normalized alpha|0_L> + beta|1_L> assembled directly from the word lists.
QState encode(const CodeSpec& code, const LogicalQubit& q);
QState logical_state(const CodeSpec& code, int logical);

/// An encoding network plus the register position of the data qubit.
struct Encoder {
  GateProgram program;
  int data_qubit = 1;
  /// "gate-table" when loaded from the checked-in table, "synthesized" when
  /// built by synthesize_encoder.
  std::string origin;
};

/// Worst-case infidelity of run_program(|0..q..0>) against encode(code, q)
/// over both logical basis states and their equal superposition. A global
/// phase shared by the two logical states is allowed; a relative one is not.
double encoder_mismatch(const CodeSpec& code, const Encoder& encoder);

/// The checked-in text of the 8-qubit encoder gate table.
std::string_view encoder8_gate_table();

/// The 8-qubit encoder: the checked-in gate table when it validates against
/// eight_bit_code(), otherwise a synthesized replacement.
Encoder encoder_program();

/// Builds an encoder for any code whose words form an affine subspace with
/// the two logical states as cosets of one hyperplane. The circuit uses R on
/// the information positions, CNOTs for the affine fill, and multiply
/// controlled PHASE_PI gates for the signs. Prefers `preferred_data_qubit`
/// when it can carry the logical bit. Throws std::invalid_argument when the
/// code has no such structure.
Encoder synthesize_encoder(const CodeSpec& code, int preferred_data_qubit = 1);

/// encoder_program() for the 8-bit code, synthesize_encoder otherwise.
Encoder encoder_for(const CodeSpec& code);

}  // namespace decaycode
