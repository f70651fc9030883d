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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "decaycode/codegen.hpp"

namespace decaycode {

/// How codeword signs vary across the 8 words of a coset c + L.
enum class SignFamily {
  /// s(c + x) = (-1)^{a.x}: the 8 linear characters of L.
  kLinearCharacters,
  /// s(c + x) = (-1)^{Q(x)} for a quadratic form Q on L (64 choices). The
  /// characters are the forms without cross terms.
  kQuadraticForms,
};

std::string to_string(SignFamily f);
SignFamily parse_sign_family(const std::string& s);

/// Candidate codes: both logical states are cosets of one dim-dimensional
/// linear subspace L of length-n words, every word has weight n/2, and the
/// signs come from `signs`.
struct SearchFamily {
  int n = 8;
  int dim = 3;
  SignFamily signs = SignFamily::kQuadraticForms;
};

struct SearchBudget {
  /// Stop after this many subspaces in one call.
  std::optional<std::uint64_t> max_subspaces;
  /// Stop once this much wall-clock has elapsed in one call.
  std::optional<double> max_seconds;
};

struct SearchOptions {
  /// When set, progress is checkpointed here and resumed from here.
  std::optional<std::filesystem::path> progress_file;
  std::uint64_t checkpoint_every = 4096;  // subspaces between checkpoints
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t subspaces_total = 0;
  std::uint64_t subspaces_done = 0;  // enumeration cursor
  std::uint64_t balanced_cosets = 0;
  std::uint64_t coset_pairs = 0;
  std::uint64_t candidates = 0;        // coset pairs x sign choices tested
  std::uint64_t passing = 0;           // all found codes
  std::uint64_t passing_linear = 0;    // found codes whose signs are characters
  double seconds = 0.0;                // summed over resumed calls
};

struct SearchResult {
  SearchFamily family;
  std::vector<CodeSpec> codes;  // enumeration order
  SearchStats stats;
  /// False when the budget ran out before the enumeration finished; the
  /// result is then inconclusive.
  bool complete = false;
};

/// Exhaustive enumeration of `family`. Every candidate is screened with an
/// exact integer Pauli-form check and confirmed with kl_check on the full
/// single-error alphabet. Results are in enumeration order regardless of the
/// thread count. An odd n admits no weight-n/2 words and returns an empty,
/// complete result immediately.
SearchResult search_shorter_codes(const SearchFamily& family, const SearchBudget& budget = {},
                                  const SearchOptions& options = {});

/// Number of dim-dimensional subspaces of GF(2)^n.
std::uint64_t subspace_count(int n, int dim);

/// Sign signature of a code relative to a coset structure: true when each
/// logical state's signs are a linear character times a constant.
bool has_character_signs(const CodeSpec& code);

/// Equivalence under qubit permutations, single-qubit sign conventions
/// (a Z on any subset of qubits), a global sign per logical state, and
/// swapping the logical labels.
bool equivalent_codes(const CodeSpec& a, const CodeSpec& b);

}  // namespace decaycode
