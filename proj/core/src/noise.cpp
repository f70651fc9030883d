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

#include "decaycode/noise.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace decaycode {

namespace {

void check_qubit(const QState& s, int q) {
  if (q < 1 || q > s.n_qubits()) {
    throw std::invalid_argument("error qubit " + std::to_string(q) + " out of range");
  }
}

Amplitudes copy_amps(const QState& s) { return Amplitudes(s.amps().begin(), s.amps().end()); }

}  // namespace

std::string ErrorOp::name() const {
  const std::string i = std::to_string(qubit);
  switch (kind) {
    case ErrorKind::kA:
      return "A_" + i;
    case ErrorKind::kP:
      return "P_" + i;
    case ErrorKind::kAP:
      return "A_" + i + "P_" + i;
  }
  return "?";
}

std::string Error::name() const {
  if (ops.empty()) return "I";
  std::string s;
  for (const ErrorOp& op : ops) s += op.name();
  return s;
}

Error parse_error(const std::string& name) {
  if (name == "I" || name == "None") return Error::identity();
  auto fail = [&name]() {
    return std::invalid_argument("cannot parse error name '" + name + "'");
  };
  // Reads "X_<digits>" at `at`; returns the index and moves `at` past it.
  auto read_factor = [&](std::size_t& at, char& letter) -> int {
    if (at + 2 > name.size() || (name[at] != 'A' && name[at] != 'P') || name[at + 1] != '_') {
      return -1;
    }
    std::size_t end = at + 2;
    while (end < name.size() && std::isdigit(static_cast<unsigned char>(name[end]))) ++end;
    if (end == at + 2 || end - at > 8) return -1;
    letter = name[at];
    int q = std::stoi(name.substr(at + 2, end - at - 2));
    if (q < 1) return -1;
    at = end;
    return q;
  };

  if (name.empty()) throw fail();
  Error e;
  std::size_t pos = 0;
  while (pos < name.size()) {
    char letter = 0;
    int q = read_factor(pos, letter);
    if (q < 0) throw fail();
    if (letter == 'A') {
      std::size_t ahead = pos;
      char next = 0;
      if (read_factor(ahead, next) == q && next == 'P') {
        e.ops.push_back({ErrorKind::kAP, q});
        pos = ahead;
        continue;
      }
      e.ops.push_back({ErrorKind::kA, q});
    } else {
      e.ops.push_back({ErrorKind::kP, q});
    }
  }
  return e;
}

std::vector<Error> single_errors(int n) {
  std::vector<Error> out;
  for (ErrorKind k : {ErrorKind::kP, ErrorKind::kA, ErrorKind::kAP}) {
    for (int q = 1; q <= n; ++q) out.push_back(Error::single(k, q));
  }
  return out;
}

QState apply_error(const QState& state, const ErrorOp& e) {
  check_qubit(state, e.qubit);
  const std::uint32_t m = qubit_mask(state.n_qubits(), e.qubit);
  Amplitudes out(state.dim());
  for (std::uint32_t i = 0; i < state.dim(); ++i) {
    Complex a = state[i];
    switch (e.kind) {
      case ErrorKind::kA:
        out[i ^ m] = a;
        break;
      case ErrorKind::kP:
        out[i] = (i & m) ? -a : a;
        break;
      case ErrorKind::kAP:
        // P first (sign from the original bit), then the flip.
        out[i ^ m] = (i & m) ? -a : a;
        break;
    }
  }
  return QState(state.n_qubits(), std::move(out));
}

QState apply_error(const QState& state, const Error& e) {
  QState s = state;
  for (const ErrorOp& op : e.ops) s = apply_error(s, op);
  return s;
}

QState conditional_evolve(const QState& state, DecayParams d) {
  if (!(d.gamma_t >= 0.0)) {
    throw std::invalid_argument("gamma_t must be non-negative");
  }
  Amplitudes out = copy_amps(state);
  for (std::uint32_t i = 0; i < out.size(); ++i) {
    out[i] *= std::exp(-d.gamma_t * std::popcount(i));
  }
  return QState(state.n_qubits(), std::move(out));
}

std::vector<double> excited_populations(const QState& state) {
  const int n = state.n_qubits();
  std::vector<double> pop(n, 0.0);
  for (std::uint32_t i = 0; i < state.dim(); ++i) {
    double p = std::norm(state[i]);
    if (p == 0.0) continue;
    for (int q = 1; q <= n; ++q) {
      if (i & qubit_mask(n, q)) pop[q - 1] += p;
    }
  }
  return pop;
}

QState apply_jump(const QState& state, int qubit) {
  check_qubit(state, qubit);
  const std::uint32_t m = qubit_mask(state.n_qubits(), qubit);
  Amplitudes out(state.dim());
  double kept = 0.0;
  for (std::uint32_t i = 0; i < state.dim(); ++i) {
    if (i & m) {
      out[i ^ m] = state[i];
      kept += std::norm(state[i]);
    }
  }
  if (kept == 0.0) {
    throw JumpImpossibleError("qubit " + std::to_string(qubit) +
                              " has no excited population to emit");
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (Complex& a : out) a *= scale;
  return QState(state.n_qubits(), std::move(out));
}

double decay_mixing_deviation(const CodeSpec& code, const LogicalQubit& q, int qubit,
                              double gamma_t) {
  const QState psi = encode(code, q);
  const QState a_psi = apply_error(psi, ErrorOp{ErrorKind::kA, qubit});
  const QState ap_psi = apply_error(psi, ErrorOp{ErrorKind::kAP, qubit});
  const QState evolved_a = conditional_evolve(a_psi, {gamma_t});
  const QState evolved_ap = conditional_evolve(ap_psi, {gamma_t});

  const double pre = 0.5 * std::exp(-3.0 * gamma_t);
  const double plus = 1.0 + std::exp(-2.0 * gamma_t);
  const double minus = 1.0 - std::exp(-2.0 * gamma_t);

  double dev_a = 0.0;
  double dev_ap = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    Complex rhs_a = pre * (plus * a_psi[i] - minus * ap_psi[i]);
    Complex rhs_ap = pre * (-minus * a_psi[i] + plus * ap_psi[i]);
    dev_a += std::norm(evolved_a[i] - rhs_a);
    dev_ap += std::norm(evolved_ap[i] - rhs_ap);
  }
  return std::max(std::sqrt(dev_a), std::sqrt(dev_ap));
}

}  // namespace decaycode
