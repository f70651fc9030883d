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

#include <cmath>
#include <map>
#include <stdexcept>

#include "decaycode/verify.hpp"

namespace decaycode {

std::vector<FailurePoint> failure_scan(const Corrector& corrector,
                                       std::span<const double> gamma_ts,
                                       const LogicalQubit& q) {
  const int n = corrector.code.n;
  const std::uint32_t d = qubit_mask(n, corrector.encoder.data_qubit);
  const std::vector<int> qubits = corrector.syndrome_qubits();
  const QState input = q.as_state();
  const QState encoded = encode(corrector.code, q);

  std::vector<FailurePoint> out;
  for (double g : gamma_ts) {
    const QState decoded = run_program(conditional_evolve(encoded, {g}), corrector.encoder.program,
                                       Direction::kReverse);
    const double total = decoded.norm_squared();

    // Group amplitudes by syndrome pattern; each pattern is one measurement
    // branch with a data-qubit state.
    std::map<std::uint32_t, std::array<Complex, 2>> branches;
    for (std::uint32_t i = 0; i < decoded.dim(); ++i) {
      if (decoded[i] == Complex{0.0, 0.0}) continue;
      branches[i & ~d][(i & d) ? 1 : 0] = decoded[i];
    }

    FailurePoint pt{g, 0.0, 0.0};
    for (const auto& [pattern, amps] : branches) {
      const double p = (std::norm(amps[0]) + std::norm(amps[1])) / total;
      if (p == 0.0) continue;
      Syndrome s;
      for (int qb : qubits) s.bits.push_back((pattern & qubit_mask(n, qb)) ? 1 : 0);
      if (s.is_trivial()) pt.trivial_syndrome_probability = p;
      double loss = 1.0;
      if (corrector.table.find(s) != nullptr) {
        LogicalQubit fixed = correct(s, LogicalQubit::normalized(amps[0], amps[1]), corrector.table);
        loss = infidelity(input, fixed.as_state());
      }
      pt.infidelity += p * loss;
    }
    out.push_back(pt);
  }
  return out;
}

std::vector<FailurePoint> five_bit_failure_scan(std::span<const double> gamma_ts,
                                                const LogicalQubit& q) {
  return failure_scan(Corrector::five_bit(), gamma_ts, q);
}

double loglog_slope(std::span<const FailurePoint> points) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const FailurePoint& p : points) {
    if (p.gamma_t <= 0.0 || p.infidelity <= 0.0) continue;
    double x = std::log(p.gamma_t);
    double y = std::log(p.infidelity);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw std::invalid_argument("slope fit needs two positive points");
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi >= lo) || count < 1) {
    throw std::invalid_argument("log grid needs 0 < lo <= hi and count >= 1");
  }
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    double f = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
    out.push_back(std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))));
  }
  return out;
}

}  // namespace decaycode
