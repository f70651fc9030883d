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

#include "decaycode/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace decaycode {

namespace {

constexpr double kNormSlack = 1e-12;

void check_register_size(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("register size must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n_qubits));
  }
}

bool controls_fire(std::uint32_t index, int n_qubits,
                   const std::vector<Control>& controls) {
  for (const Control& c : controls) {
    bool is_one = (index & qubit_mask(n_qubits, c.qubit)) != 0;
    if (is_one != c.on_one) {
      return false;
    }
  }
  return true;
}

}  // namespace

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BasisWord::BasisWord(int n_qubits, std::uint32_t index)
    : n_(n_qubits), index_(index) {
  check_register_size(n_qubits);
  if (index >= (std::uint32_t{1} << n_qubits)) {
    throw std::invalid_argument("basis index out of range");
  }
}

BasisWord BasisWord::parse(std::string_view bits) {
  std::vector<int> values;
  values.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("basis word must contain only 0 and 1: '" +
                                  std::string(bits) + "'");
    }
    values.push_back(ch - '0');
  }
  check_register_size(static_cast<int>(values.size()));
  return BasisWord(static_cast<int>(values.size()), word_to_index(values));
}

int BasisWord::bit(int q) const {
  if (q < 1 || q > n_) {
    throw std::out_of_range("qubit index out of range");
  }
  return (index_ & qubit_mask(n_, q)) ? 1 : 0;
}

int BasisWord::weight() const { return std::popcount(index_); }

std::vector<int> BasisWord::bits() const {
  std::vector<int> out(n_);
  for (int q = 1; q <= n_; ++q) {
    out[q - 1] = bit(q);
  }
  return out;
}

std::string BasisWord::to_string() const {
  std::string s;
  s.reserve(n_);
  for (int q = 1; q <= n_; ++q) {
    s.push_back(bit(q) ? '1' : '0');
  }
  return s;
}

BasisWord BasisWord::with_bit(int q, int value) const {
  std::uint32_t m = qubit_mask(n_, q);
  return BasisWord(n_, value ? (index_ | m) : (index_ & ~m));
}

std::uint32_t word_to_index(std::span<const int> bits) {
  std::uint32_t index = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw std::invalid_argument("bits must be 0 or 1");
    }
    index = (index << 1) | static_cast<std::uint32_t>(b);
  }
  return index;
}

BasisWord index_to_word(int n_qubits, std::uint32_t index) {
  return BasisWord(n_qubits, index);
}

QState::QState(int n_qubits) : n_(n_qubits) {
  check_register_size(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

QState::QState(int n_qubits, Amplitudes amps)
    : n_(n_qubits), amps_(std::move(amps)) {
  check_register_size(n_qubits);
  check_invariants();
}

QState QState::basis(int n_qubits, std::uint32_t index) {
  check_register_size(n_qubits);
  Amplitudes amps(std::size_t{1} << n_qubits);
  if (index >= amps.size()) {
    throw std::invalid_argument("basis index out of range");
  }
  amps[index] = 1.0;
  return QState(n_qubits, std::move(amps));
}

QState QState::basis(const BasisWord& word) {
  return basis(word.n_qubits(), word.index());
}

void QState::check_invariants() const {
  if (amps_.size() != (std::size_t{1} << n_)) {
    throw std::invalid_argument("amplitude vector length must be 2^n");
  }
  for (const Complex& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("amplitudes must be finite");
    }
  }
  if (norm_squared() > 1.0 + kNormSlack) {
    throw std::invalid_argument("state norm exceeds 1");
  }
}

double QState::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amps_) {
    s += std::norm(a);
  }
  return s;
}

double QState::norm() const { return std::sqrt(norm_squared()); }

QState QState::normalized() const {
  double nrm = norm();
  if (nrm == 0.0) {
    throw std::domain_error("cannot normalize a zero-norm state");
  }
  Amplitudes out(amps_);
  for (Complex& a : out) {
    a /= nrm;
  }
  return QState(n_, std::move(out));
}

namespace {

void check_same_dim(const QState& a, const QState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("states have different register sizes");
  }
}

}  // namespace

Complex inner_product(const QState& a, const QState& b) {
  check_same_dim(a, b);
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    s += std::conj(a[i]) * b[i];
  }
  return s;
}

double distance(const QState& a, const QState& b) {
  check_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    s += std::norm(a[i] - b[i]);
  }
  return std::sqrt(s);
}

Complex normalized_overlap(const QState& a, const QState& b) {
  check_same_dim(a, b);
  double na = a.norm();
  double nb = b.norm();
  if (na == 0.0 || nb == 0.0) {
    throw std::domain_error("overlap of a zero-norm state");
  }
  return inner_product(a, b) / (na * nb);
}

double fidelity_up_to_phase(const QState& a, const QState& b) {
  return std::min(1.0, std::abs(normalized_overlap(a, b)));
}

double infidelity(const QState& a, const QState& b) {
  QState an = a.normalized();
  QState bn = b.normalized();
  Complex ov = inner_product(an, bn);
  double s = 0.0;
  for (std::size_t i = 0; i < an.dim(); ++i) {
    s += std::norm(bn[i] - ov * an[i]);
  }
  return s;
}

void Gate::validate(int n_qubits) const {
  auto in_range = [n_qubits](int q) { return q >= 1 && q <= n_qubits; };
  if (!in_range(target)) {
    throw std::invalid_argument("gate target " + std::to_string(target) +
                                " out of range");
  }
  for (std::size_t i = 0; i < controls.size(); ++i) {
    int q = controls[i].qubit;
    if (!in_range(q)) {
      throw std::invalid_argument("control qubit " + std::to_string(q) +
                                  " out of range");
    }
    if (q == target) {
      throw std::invalid_argument("gate target is also a control");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (controls[j].qubit == q) {
        throw std::invalid_argument("repeated control qubit " +
                                    std::to_string(q));
      }
    }
  }
}

void GateProgram::validate() const {
  check_register_size(n_qubits);
  for (const Gate& g : gates) {
    g.validate(n_qubits);
  }
}

QState apply_gate(const QState& state, const Gate& gate) {
  const int n = state.n_qubits();
  gate.validate(n);
  Amplitudes out(state.amps().begin(), state.amps().end());
  const std::uint32_t t = qubit_mask(n, gate.target);
  const std::uint32_t dim = static_cast<std::uint32_t>(state.dim());

  switch (gate.kind) {
    case GateKind::kR: {
      const double h = 1.0 / std::sqrt(2.0);
      for (std::uint32_t i = 0; i < dim; ++i) {
        if ((i & t) || !controls_fire(i, n, gate.controls)) continue;
        Complex a0 = state[i];
        Complex a1 = state[i | t];
        out[i] = h * (a0 + a1);
        out[i | t] = h * (a0 - a1);
      }
      break;
    }
    case GateKind::kNot:
      for (std::uint32_t i = 0; i < dim; ++i) {
        if ((i & t) || !controls_fire(i, n, gate.controls)) continue;
        std::swap(out[i], out[i | t]);
      }
      break;
    case GateKind::kPhasePi:
      for (std::uint32_t i = 0; i < dim; ++i) {
        if ((i & t) && controls_fire(i, n, gate.controls)) out[i] = -out[i];
      }
      break;
    case GateKind::kGlobalPhasePi:
      for (std::uint32_t i = 0; i < dim; ++i) {
        if (controls_fire(i, n, gate.controls)) out[i] = -out[i];
      }
      break;
  }
  return QState(n, std::move(out));
}

QState run_program(const QState& state, const GateProgram& program,
                   Direction direction) {
  if (state.n_qubits() != program.n_qubits) {
    throw std::invalid_argument("program width " +
                                std::to_string(program.n_qubits) +
                                " does not match state width " +
                                std::to_string(state.n_qubits()));
  }
  QState s = state;
  if (direction == Direction::kForward) {
    for (const Gate& g : program.gates) s = apply_gate(s, g);
  } else {
    for (auto it = program.gates.rbegin(); it != program.gates.rend(); ++it) {
      s = apply_gate(s, *it);
    }
  }
  return s;
}

Measurement measure_qubits(const QState& state, std::span<const int> qubits,
                           Rng& rng) {
  const int n = state.n_qubits();
  for (int q : qubits) {
    if (q < 1 || q > n) {
      throw std::invalid_argument("measured qubit out of range");
    }
  }
  const double total = state.norm_squared();
  if (total == 0.0) {
    throw std::domain_error("cannot measure a zero-norm state");
  }

  // Sample one basis index from the Born distribution; the outcome is its
  // restriction to the measured qubits.
  const double r = uniform01(rng) * total;
  double acc = 0.0;
  std::uint32_t picked = 0;
  bool found = false;
  for (std::uint32_t i = 0; i < state.dim(); ++i) {
    double p = std::norm(state[i]);
    if (p == 0.0) continue;
    picked = i;
    found = true;
    acc += p;
    if (r < acc) break;
  }
  if (!found) {
    throw std::domain_error("cannot measure a zero-norm state");
  }

  std::uint32_t mask = 0;
  for (int q : qubits) mask |= qubit_mask(n, q);
  const std::uint32_t pattern = picked & mask;

  Amplitudes out(state.dim());
  double kept = 0.0;
  for (std::uint32_t i = 0; i < state.dim(); ++i) {
    if ((i & mask) == pattern) {
      out[i] = state[i];
      kept += std::norm(state[i]);
    }
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (Complex& a : out) a *= scale;

  Measurement m{{}, QState(n, std::move(out))};
  m.outcome.reserve(qubits.size());
  for (int q : qubits) m.outcome.push_back((picked & qubit_mask(n, q)) ? 1 : 0);
  return m;
}

Measurement measure_qubits(const QState& state, std::span<const int> qubits,
                           std::uint64_t seed) {
  Rng rng(seed);
  return measure_qubits(state, qubits, rng);
}

}  // namespace decaycode
