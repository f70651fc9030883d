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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "decaycode/codegen.hpp"
#include "decaycode/noise.hpp"
#include "decaycode/qsim.hpp"

namespace decaycode {

/// Measured values of every register qubit except the data qubit, ordered by
/// qubit index ascending. For the 8-qubit code these are qubits 1,2,4,...,8.
struct Syndrome {
  std::vector<int> bits;

  static Syndrome parse(const std::string& text);
  std::string to_string() const;
  bool is_trivial() const;

  auto operator<=>(const Syndrome&) const = default;
};

/// Operation applied to the data qubit after decoding.
enum class Recovery {
  kIdentity,
  kPhaseFlip,          // Z
  kBitFlip,            // X
  kBitThenPhaseFlip,   // X first, then Z
};

std::string to_string(Recovery r);

struct TableError {
  Error error;
  /// Decoded data-qubit map before recovery, row-major:
  /// |0> <- m[0] alpha + m[1] beta, |1> <- m[2] alpha + m[3] beta.
  std::array<Complex, 4> data_map{};
  /// Global phase left on the data qubit after recovery, +1 or -1 for the
  /// built-in codes.
  Complex phase{1.0, 0.0};
};

struct SyndromeEntry {
  Syndrome syndrome;
  Recovery recovery = Recovery::kIdentity;
  std::vector<TableError> errors;
};

/// Syndrome -> recovery lookup regenerated from the encoder.
class SyndromeTable {
 public:
  const SyndromeEntry* find(const Syndrome& s) const;
  const std::map<Syndrome, SyndromeEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /// The entry whose error list contains `e`, if any.
  const SyndromeEntry* entry_for(const Error& e) const;

  void insert(SyndromeEntry entry);

 private:
  std::map<Syndrome, SyndromeEntry> entries_;
};

/// An error produced a decoded state that is not a single syndrome pattern
/// times a data-qubit state.
class InconsistentSyndromeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The measured syndrome is not in the table: more corruption than one
/// general error.
class UnknownSyndromeError : public std::runtime_error {
 public:
  explicit UnknownSyndromeError(const Syndrome& s)
      : std::runtime_error("syndrome " + s.to_string() + " is not in the table"),
        syndrome(s) {}
  Syndrome syndrome;
};

struct SyndromeReading {
  Syndrome syndrome;
  LogicalQubit data;  // post-measurement data-qubit amplitudes
  QState collapsed;   // full register after decoding and measurement
};

/// Everything needed to run the correction cycle for one code.
struct Corrector {
  CodeSpec code;
  Encoder encoder;
  SyndromeTable table;

  static Corrector for_code(const CodeSpec& code);
  static const Corrector& eight_bit();
  static const Corrector& five_bit();

  std::vector<int> syndrome_qubits() const;
};

/// Runs the encoder backwards and measures every qubit except the data
/// qubit. Throws std::domain_error on a zero-norm state.
SyndromeReading extract_syndrome(const Encoder& encoder, const QState& state, Rng& rng);
SyndromeReading extract_syndrome(const Encoder& encoder, const QState& state,
                                 std::uint64_t seed);

/// Brute-force table: decode each of {I} + single_errors(n) applied to both
/// logical states and classify the syndrome and the induced data-qubit map.
SyndromeTable build_syndrome_table(const CodeSpec& code, const Encoder& encoder);

/// Applies the table's recovery. Throws UnknownSyndromeError when the
/// syndrome is absent.
LogicalQubit correct(const Syndrome& syndrome, const LogicalQubit& data,
                     const SyndromeTable& table);

/// Puts every non-data qubit back in |0> and keeps the data amplitudes, so
/// the register can be encoded again.
QState reset_ancillas(const QState& collapsed, int data_qubit);

struct DecaySegment {
  double gamma_t = 0.0;
};
struct Emission {
  int qubit = 1;
};
using ScriptStep = std::variant<DecaySegment, Error, Emission>;

struct CycleResult {
  Syndrome syndrome;
  LogicalQubit recovered;
  double fidelity = 0.0;
  /// Phase-carrying overlap <input|recovered>.
  Complex overlap{0.0, 0.0};
};

/// encode -> script -> extract_syndrome -> correct -> fidelity against input.
CycleResult full_cycle(const Corrector& corrector, const LogicalQubit& q,
                       const std::vector<ScriptStep>& script, std::uint64_t seed);

/// One row of the printed table: error, syndrome, and the data-qubit state as
/// coefficients on (alpha, beta) for |0> and |1>.
struct PrintedRow {
  std::string error;
  std::string syndrome;
  // data = c00*alpha + c01*beta on |0>, c10*alpha + c11*beta on |1>
  int c00, c01, c10, c11;
};

const std::vector<PrintedRow>& printed_table();

struct TableCrossCheck {
  bool matches = false;
  /// permutation[k] = index into the regenerated syndrome of printed bit k.
  std::vector<int> permutation;
  std::vector<std::string> discrepancies;
  std::size_t distinct_classes = 0;
  /// Error pairs sharing a syndrome.
  std::vector<std::pair<std::string, std::string>> collisions;
};

/// Compares a regenerated table with the printed one, first under ascending
/// bit order and then under every permutation of syndrome bits.
TableCrossCheck cross_check_printed_table(const SyndromeTable& table);

}  // namespace decaycode
