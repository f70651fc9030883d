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

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace decaycode {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

/// Largest register the dense simulator accepts.
inline constexpr int kMaxQubits = 10;

/// Seedable generator used by every stochastic routine.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one draw, so the
/// sequence is identical across standard library implementations.
double uniform01(Rng& rng);

/// A computational-basis product state over `n` qubits.
///
/// Qubit 1 is the leftmost character of a ket string and the most
/// significant bit of the amplitude index: index = sum_k bit_k * 2^(n-k).
class BasisWord {
 public:
  BasisWord() = default;
  BasisWord(int n_qubits, std::uint32_t index);

  /// Parses a string of '0'/'1' characters, e.g. "00001111".
  static BasisWord parse(std::string_view bits);

  int n_qubits() const { return n_; }
  std::uint32_t index() const { return index_; }
  /// Bit of qubit `q` (1-based).
  int bit(int q) const;
  int weight() const;
  std::vector<int> bits() const;
  std::string to_string() const;

  BasisWord with_bit(int q, int value) const;

  auto operator<=>(const BasisWord&) const = default;

 private:
  int n_ = 0;
  std::uint32_t index_ = 0;
};

std::uint32_t word_to_index(std::span<const int> bits);
BasisWord index_to_word(int n_qubits, std::uint32_t index);

/// Mask selecting qubit `q` (1-based) in an amplitude index of an n-qubit
/// register.
constexpr std::uint32_t qubit_mask(int n_qubits, int q) {
  return std::uint32_t{1} << (n_qubits - q);
}

/// Sub-normalized amplitude vector over n qubits.
///
/// Invariants checked on construction: length 2^n, all amplitudes finite,
/// squared norm at most 1 + 1e-12. Norm-decreasing evolution is legal;
/// normalization only happens where a caller asks for it.
class QState {
 public:
  /// |0...0>.
  explicit QState(int n_qubits);
  QState(int n_qubits, Amplitudes amps);

  static QState basis(int n_qubits, std::uint32_t index);
  static QState basis(const BasisWord& word);

  int n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amps() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  double norm() const;
  /// Copy rescaled to unit norm. Throws std::domain_error on a zero state.
  QState normalized() const;

 private:
  void check_invariants() const;

  int n_;
  Amplitudes amps_;
};

/// <a|b> without normalization.
Complex inner_product(const QState& a, const QState& b);
/// Euclidean distance ||a - b||.
double distance(const QState& a, const QState& b);

/// |<a|b>| / (||a|| ||b||). Throws std::domain_error on a zero-norm input.
double fidelity_up_to_phase(const QState& a, const QState& b);
/// <a|b> / (||a|| ||b||): the phase-carrying overlap.
Complex normalized_overlap(const QState& a, const QState& b);
/// 1 - |<a|b>|^2 on normalized inputs, computed as the squared norm of the
/// component of b orthogonal to a so tiny infidelities keep their digits.
double infidelity(const QState& a, const QState& b);

enum class GateKind {
  kR,        // one-bit rotation (Hadamard)
  kNot,      // bit flip
  kPhasePi,  // -1 on the target's |1> component
  kGlobalPhasePi,  // -1 on the whole amplitude; target is not read
};

struct Control {
  int qubit = 0;
  /// true: fires when the control qubit is 1 (filled dot); false: fires on 0.
  bool on_one = true;

  auto operator<=>(const Control&) const = default;
};

struct Gate {
  GateKind kind = GateKind::kNot;
  int target = 1;
  std::vector<Control> controls;

  /// Throws std::invalid_argument on out-of-range or repeated qubits.
  void validate(int n_qubits) const;

  bool operator==(const Gate&) const = default;
};

struct GateProgram {
  int n_qubits = 0;
  std::vector<Gate> gates;

  void validate() const;
  bool operator==(const GateProgram&) const = default;
};

enum class Direction { kForward, kReverse };

QState apply_gate(const QState& state, const Gate& gate);

/// Forward applies gates in order; reverse applies them last to first. Every
/// gate kind is an involution, so reverse is the inverse of forward.
QState run_program(const QState& state, const GateProgram& program,
                   Direction direction = Direction::kForward);

/// Parses the line-oriented gate table format:
///   KIND target [control:polarity ...]   # comment
/// with KIND one of R, NOT, PHASE_PI, GPHASE_PI and polarity 1 or 0.
GateProgram parse_gate_table(std::string_view text, int n_qubits);
std::string format_gate_table(const GateProgram& program);

struct Measurement {
  /// Outcome bits in the order the qubits were requested.
  std::vector<int> outcome;
  /// Post-measurement state, renormalized to 1.
  QState collapsed;
};

/// Joint projective measurement of `qubits` in the computational basis.
/// Born probabilities come from the normalized state; throws
/// std::domain_error on a zero-norm state.
Measurement measure_qubits(const QState& state, std::span<const int> qubits,
                           Rng& rng);
Measurement measure_qubits(const QState& state, std::span<const int> qubits,
                           std::uint64_t seed);

}  // namespace decaycode
