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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "decaycode/codegen.hpp"
#include "decaycode/decode.hpp"
#include "decaycode/noise.hpp"

namespace decaycode {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kConditionTolerance = 1e-10;
inline constexpr double kRankThreshold = 1e-8;

/// A matrix element that breaks a correction condition.
struct ConditionWitness {
  std::string first;   // error E
  std::string second;  // error F
  /// "cross": <0_L|E^dag F|1_L> != 0; "diagonal": the two logical diagonal
  /// elements differ; "overlap": distinct errors have overlapping images.
  std::string kind;
  Complex value{0.0, 0.0};
};

struct ConditionReport {
  bool satisfied = true;
  std::optional<ConditionWitness> witness;  // present iff !satisfied
  /// lambda(E, F) = <0_L|E^dag F|0_L> over {I} + errors, normalized codewords.
  Eigen::MatrixXcd lambda;
  /// Every error pair that breaks the condition (em check only).
  std::vector<std::pair<std::string, std::string>> collisions;
};

/// Knill-Laflamme conditions <u_L|E^dag F|v_L> = lambda_EF delta_uv over
/// {I} + errors.
ConditionReport kl_check(const CodeSpec& code, const std::vector<Error>& errors,
                         double tolerance = kConditionTolerance);
ConditionReport kl_check(const CodeSpec& code);

/// The stricter non-degenerate requirement: distinct errors send the code to
/// mutually orthogonal subspaces, <u_L|E^dag F|v_L> = 0 for E != F.
ConditionReport em_orthogonality_check(const CodeSpec& code, const std::vector<Error>& errors,
                                       double tolerance = kConditionTolerance);
ConditionReport em_orthogonality_check(const CodeSpec& code);

/// Numerical rank of {E|u_L>} over {I} + errors and both logical states,
/// counting singular values above `relative_threshold` times the largest.
int error_space_dimension(const CodeSpec& code, const std::vector<Error>& errors,
                          double relative_threshold = kRankThreshold);
int error_space_dimension(const CodeSpec& code);

struct BoundQuery {
  int l = 1;  // logical qubits
  int n = 1;  // physical qubits
  int t = 0;  // correctable general errors
};

struct BoundResult {
  bool holds = false;
  BigInt lhs;  // 2^l * sum_{i<=t} 3^i C(n,i)
  BigInt rhs;  // 2^n
};

/// Counting bound for non-degenerate codes in exact integer arithmetic.
BoundResult sphere_bound(const BoundQuery& q);

/// Smallest n in [1, n_max] satisfying the bound, if any.
std::optional<int> minimal_physical_qubits(int l, int t, int n_max);

struct FailurePoint {
  double gamma_t = 0.0;
  double infidelity = 0.0;  // Born-weighted 1 - F^2 after correction
  double trivial_syndrome_probability = 0.0;
};

/// encode -> conditional evolution -> decode -> correct, averaged exactly
/// over every syndrome outcome with its Born weight. Outcomes absent from the
/// table count as total loss.
std::vector<FailurePoint> failure_scan(const Corrector& corrector,
                                       std::span<const double> gamma_ts,
                                       const LogicalQubit& q);
std::vector<FailurePoint> five_bit_failure_scan(std::span<const double> gamma_ts,
                                                const LogicalQubit& q);

/// Least-squares slope of log(infidelity) against log(gamma_t).
double loglog_slope(std::span<const FailurePoint> points);

/// `count` logarithmically spaced points in [lo, hi].
std::vector<double> log_grid(double lo, double hi, int count);

}  // namespace decaycode
