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

#include "decaycode/codegen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace decaycode {

namespace detail {
extern const std::string_view kEncoder8Table;
}  // namespace detail

namespace {

constexpr double kEncoderTolerance = 1e-12;

std::vector<SignedWord> parse_words(std::initializer_list<std::string_view> items) {
  std::vector<SignedWord> out;
  out.reserve(items.size());
  for (std::string_view s : items) out.push_back(parse_signed_word(s));
  return out;
}

Amplitudes superposition(const CodeSpec& code, int logical) {
  Amplitudes amps(std::size_t{1} << code.n);
  for (const SignedWord& w : code.words(logical)) {
    amps[w.word.index()] += static_cast<double>(w.sign);
  }
  return amps;
}

}  // namespace

SignedWord parse_signed_word(std::string_view text) {
  if (text.size() < 2 || (text[0] != '+' && text[0] != '-')) {
    throw std::invalid_argument("signed word must start with + or -");
  }
  return {text[0] == '+' ? +1 : -1, BasisWord::parse(text.substr(1))};
}

std::string to_string(const SignedWord& w) {
  return (w.sign > 0 ? "+" : "-") + w.word.to_string();
}

void CodeSpec::validate(bool require_equal_weight) const {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument(name + ": register width out of range");
  }
  if (zero_words.empty() || zero_words.size() != one_words.size()) {
    throw std::invalid_argument(name + ": logical states need equal, nonzero word counts");
  }
  std::set<std::uint32_t> seen[2];
  for (int l = 0; l < 2; ++l) {
    for (const SignedWord& w : words(l)) {
      if (w.sign != 1 && w.sign != -1) {
        throw std::invalid_argument(name + ": sign must be +1 or -1");
      }
      if (w.word.n_qubits() != n) {
        throw std::invalid_argument(name + ": word " + w.word.to_string() +
                                    " has the wrong length");
      }
      if (!seen[l].insert(w.word.index()).second) {
        throw std::invalid_argument(name + ": repeated word " + w.word.to_string());
      }
      if (require_equal_weight && 2 * w.word.weight() != n) {
        throw std::invalid_argument(name + ": word " + w.word.to_string() +
                                    " does not have weight n/2");
      }
    }
  }
  // Words are distinct within each list and carry +/-1, so the norms are the
  // list sizes; orthogonality needs the signed overlap on shared words to
  // cancel.
  int overlap = 0;
  for (const SignedWord& a : zero_words) {
    for (const SignedWord& b : one_words) {
      if (a.word == b.word) overlap += a.sign * b.sign;
    }
  }
  if (overlap != 0) {
    throw std::invalid_argument(name + ": logical states are not orthogonal");
  }
}

LogicalQubit LogicalQubit::make(Complex alpha, Complex beta) {
  double n2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(n2 - 1.0) > 1e-12) {
    throw std::invalid_argument("logical amplitudes must satisfy |a|^2+|b|^2=1");
  }
  return {alpha, beta};
}

LogicalQubit LogicalQubit::normalized(Complex alpha, Complex beta) {
  double nrm = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (nrm == 0.0) {
    throw std::domain_error("logical amplitudes are both zero");
  }
  return {alpha / nrm, beta / nrm};
}

LogicalQubit LogicalQubit::random(Rng& rng) {
  // Uniform on the sphere: cos(theta) uniform, azimuth uniform.
  double z = 2.0 * uniform01(rng) - 1.0;
  double phi = 2.0 * std::numbers::pi * uniform01(rng);
  double c = std::sqrt((1.0 + z) / 2.0);
  double s = std::sqrt((1.0 - z) / 2.0);
  return normalized(Complex{c, 0.0}, std::polar(s, phi));
}

QState LogicalQubit::as_state() const { return QState(1, Amplitudes{alpha, beta}); }

double fidelity_up_to_phase(const LogicalQubit& a, const LogicalQubit& b) {
  return fidelity_up_to_phase(a.as_state(), b.as_state());
}

CodeSpec five_bit_code() {
  CodeSpec code;
  code.name = "five-bit";
  code.n = 5;
  code.zero_words = parse_words({"+00000", "+11100", "-10011", "-01111", "+11010",
                                 "+00110", "+01001", "+10101"});
  code.one_words = parse_words({"+11111", "-00011", "+01100", "-10000", "-00101",
                                "+11001", "+10110", "-01010"});
  return code;
}

BasisWord lift_word(const BasisWord& w) {
  if (w.n_qubits() != 5) {
    throw std::invalid_argument("lift_word expects a 5-bit word, got " +
                                std::to_string(w.n_qubits()) + " bits");
  }
  std::vector<int> ten = w.bits();
  std::vector<int> bits = w.bits();
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) ten.push_back(1 - *it);
  // Positions 5 and 6 (1-based) are the last data bit and its own complement.
  ten.erase(ten.begin() + 4, ten.begin() + 6);
  return BasisWord(8, word_to_index(ten));
}

CodeSpec eight_bit_code() {
  CodeSpec base = five_bit_code();
  CodeSpec code;
  code.name = "eight-bit";
  code.n = 8;
  for (const SignedWord& w : base.zero_words) {
    code.zero_words.push_back({w.sign, lift_word(w.word)});
  }
  for (const SignedWord& w : base.one_words) {
    code.one_words.push_back({w.sign, lift_word(w.word)});
  }
  return code;
}

CodeSpec eight_bit_code_transcribed() {
  CodeSpec code;
  code.name = "eight-bit";
  code.n = 8;
  code.zero_words = parse_words({"+00001111", "+11101000", "-10010110", "-01110001",
                                 "+11010100", "+00110011", "+01001101", "+10101010"});
  code.one_words = parse_words({"+11110000", "-00010111", "+01101001", "-10001110",
                                "-00101011", "+11001100", "+10110010", "-01010101"});
  return code;
}

QState logical_state(const CodeSpec& code, int logical) {
  if (logical != 0 && logical != 1) {
    throw std::invalid_argument("logical label must be 0 or 1");
  }
  return encode(code, logical == 0 ? LogicalQubit{1.0, 0.0} : LogicalQubit{0.0, 1.0});
}

QState encode(const CodeSpec& code, const LogicalQubit& q) {
  code.validate();
  LogicalQubit::make(q.alpha, q.beta);
  Amplitudes zero = superposition(code, 0);
  Amplitudes one = superposition(code, 1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(code.zero_words.size()));
  Amplitudes amps(zero.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] = scale * (q.alpha * zero[i] + q.beta * one[i]);
  }
  return QState(code.n, std::move(amps));
}

double encoder_mismatch(const CodeSpec& code, const Encoder& encoder) {
  encoder.program.validate();
  if (encoder.program.n_qubits != code.n) {
    throw std::invalid_argument("encoder width does not match the code");
  }
  const double h = 1.0 / std::sqrt(2.0);
  const LogicalQubit probes[] = {{1.0, 0.0}, {0.0, 1.0}, {h, h}, {h, Complex{0.0, h}}};
  double worst = 0.0;
  const std::uint32_t data = qubit_mask(code.n, encoder.data_qubit);
  for (const LogicalQubit& q : probes) {
    Amplitudes in(std::size_t{1} << code.n);
    in[0] = q.alpha;
    in[data] = q.beta;
    QState out = run_program(QState(code.n, std::move(in)), encoder.program);
    worst = std::max(worst, infidelity(encode(code, q), out));
  }
  return worst;
}

std::string_view encoder8_gate_table() { return detail::kEncoder8Table; }

Encoder encoder_program() {
  CodeSpec code = eight_bit_code();
  Encoder table{parse_gate_table(encoder8_gate_table(), 8), 3, "gate-table"};
  if (encoder_mismatch(code, table) <= kEncoderTolerance) {
    return table;
  }
  Encoder synthesized = synthesize_encoder(code, 3);
  if (encoder_mismatch(code, synthesized) > kEncoderTolerance) {
    throw std::logic_error("no 8-qubit encoder reproduces the codewords");
  }
  return synthesized;
}

Encoder encoder_for(const CodeSpec& code) {
  if (code == eight_bit_code()) return encoder_program();
  Encoder e = synthesize_encoder(code, 1);
  if (encoder_mismatch(code, e) > kEncoderTolerance) {
    throw std::logic_error(code.name + ": synthesized encoder failed validation");
  }
  return e;
}

}  // namespace decaycode
