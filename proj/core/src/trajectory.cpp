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

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "decaycode/noise.hpp"

namespace decaycode {

namespace {

/// Squared norm after a no-jump segment of length tau, grouped by excitation
/// number: sum_w p_w exp(-2 w tau).
struct NormProfile {
  std::array<double, kMaxQubits + 1> by_weight{};

  explicit NormProfile(const QState& s) {
    for (std::uint32_t i = 0; i < s.dim(); ++i) by_weight[std::popcount(i)] += std::norm(s[i]);
  }

  double at(double tau) const {
    double total = 0.0;
    for (std::size_t w = 0; w < by_weight.size(); ++w) {
      total += by_weight[w] * std::exp(-2.0 * static_cast<double>(w) * tau);
    }
    return total;
  }
};

/// Root of profile.at(tau) = threshold on [0, hi], where at(0) >= threshold
/// >= at(hi). The profile is strictly decreasing wherever it has excited
/// weight, so bisection to the last representable midpoint is exact.
double crossing_time(const NormProfile& profile, double threshold, double hi) {
  double lo = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (profile.at(mid) > threshold) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Trajectory sample_trajectory(const QState& state, const TrajectoryConfig& cfg) {
  if (!(cfg.gamma_t_total >= 0.0) || cfg.max_jumps < 0) {
    throw std::invalid_argument("trajectory config fields must be non-negative");
  }
  Rng rng(cfg.seed);
  QState psi = state.normalized();
  Trajectory out{psi, {}, 0};
  double elapsed = 0.0;

  while (elapsed < cfg.gamma_t_total) {
    const double remaining = cfg.gamma_t_total - elapsed;
    // Threshold in (0, 1]; the segment ends when the norm drops to it.
    const double threshold = 1.0 - uniform01(rng);
    const NormProfile profile(psi);
    if (profile.at(remaining) > threshold) {
      psi = conditional_evolve(psi, {remaining});
      break;
    }
    const double tau = crossing_time(profile, threshold, remaining);
    psi = conditional_evolve(psi, {tau});
    elapsed += tau;

    const std::vector<double> pop = excited_populations(psi);
    double total = 0.0;
    for (double p : pop) total += p;
    if (total == 0.0) break;  // nothing left to emit
    const double pick = uniform01(rng) * total;
    double acc = 0.0;
    int qubit = 0;
    for (int q = 1; q <= psi.n_qubits(); ++q) {
      if (pop[q - 1] == 0.0) continue;
      qubit = q;
      acc += pop[q - 1];
      if (pick < acc) break;
    }
    psi = apply_jump(psi, qubit);
    ++out.total_jumps;
    if (static_cast<int>(out.jumps.size()) < cfg.max_jumps) {
      out.jumps.push_back({elapsed, qubit});
    }
  }
  out.final_state = psi.normalized();
  return out;
}

}  // namespace decaycode
