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

#include "decaycode/search.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "decaycode/verify.hpp"
#include "gtest/gtest.h"
#include "oracle/oracle.hpp"

using namespace decaycode;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("decaycode_" + name);
}

/// The code with qubits relabelled by `perm`, Z applied on `z_mask`, and the
/// logical labels optionally swapped.
CodeSpec transformed(const CodeSpec& c, const std::vector<int>& perm, std::uint32_t z_mask,
                     bool swap) {
  CodeSpec out = c;
  auto map = [&](std::vector<SignedWord>& ws) {
    for (SignedWord& w : ws) {
      std::string bits = w.word.to_string();
      std::string moved(bits.size(), '0');
      for (std::size_t q = 0; q < bits.size(); ++q) moved[perm[q]] = bits[q];
      BasisWord nw = BasisWord::parse(moved);
      const int z = std::popcount(nw.index() & z_mask) & 1;
      w = {z ? -w.sign : w.sign, nw};
    }
  };
  map(out.zero_words);
  map(out.one_words);
  if (swap) std::swap(out.zero_words, out.one_words);
  return out;
}

bool same_results(const SearchResult& a, const SearchResult& b) {
  return a.complete == b.complete && a.codes == b.codes &&
         a.stats.subspaces_done == b.stats.subspaces_done &&
         a.stats.balanced_cosets == b.stats.balanced_cosets &&
         a.stats.coset_pairs == b.stats.coset_pairs && a.stats.candidates == b.stats.candidates &&
         a.stats.passing == b.stats.passing && a.stats.passing_linear == b.stats.passing_linear;
}

}  // namespace

TEST(SignFamily, Names) {
  EXPECT_EQ(parse_sign_family(to_string(SignFamily::kLinearCharacters)),
            SignFamily::kLinearCharacters);
  EXPECT_EQ(parse_sign_family("quadratic"), SignFamily::kQuadraticForms);
  EXPECT_THROW(parse_sign_family("cubic"), std::invalid_argument);
}

TEST(SubspaceCount, MatchesBruteForce) {
  EXPECT_EQ(subspace_count(5, 2), static_cast<std::uint64_t>(oracle::subspaces_brute_force(5, 2)));
  EXPECT_EQ(subspace_count(6, 3), static_cast<std::uint64_t>(oracle::subspaces_brute_force(6, 3)));
  EXPECT_EQ(subspace_count(6, 3), 1395u);
  EXPECT_EQ(subspace_count(8, 3), 97155u);
  EXPECT_EQ(subspace_count(4, 5), 0u);
}

TEST(Search, OddLengthIsEmptyWithoutEnumeration) {
  for (int n : {5, 7}) {
    const SearchResult r = search_shorter_codes({n, 3, SignFamily::kQuadraticForms});
    EXPECT_TRUE(r.complete);
    EXPECT_TRUE(r.codes.empty());
    EXPECT_EQ(r.stats.candidates, 0u);
  }
}

TEST(Search, SixQubitsFindNothing) {
  for (SignFamily s : {SignFamily::kLinearCharacters, SignFamily::kQuadraticForms}) {
    const SearchResult r = search_shorter_codes({6, 3, s});
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.stats.subspaces_done, 1395u);
    EXPECT_TRUE(r.codes.empty());
  }
}

TEST(Search, InvalidFamily) {
  EXPECT_THROW(search_shorter_codes({8, 8, SignFamily::kQuadraticForms}), std::invalid_argument);
  EXPECT_THROW(search_shorter_codes({12, 3, SignFamily::kQuadraticForms}), std::invalid_argument);
}

TEST(Search, FoundCodesPassIndependentCheck) {
  SearchBudget b;
  b.max_subspaces = 6000;
  const SearchResult r = search_shorter_codes({8, 3, SignFamily::kQuadraticForms}, b);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.stats.subspaces_done, 6000u);
  ASSERT_FALSE(r.codes.empty());
  for (std::size_t k = 0; k < r.codes.size(); k += std::max<std::size_t>(1, r.codes.size() / 8)) {
    const CodeSpec& c = r.codes[k];
    EXPECT_NO_THROW(c.validate(true));
    std::vector<std::string> z;
    std::vector<std::string> o;
    for (const auto& w : c.zero_words) z.push_back(to_string(w));
    for (const auto& w : c.one_words) o.push_back(to_string(w));
    EXPECT_LT(oracle::kl_violation(oracle::state(z), oracle::state(o), oracle::alphabet(8)), 1e-10);
  }
}

TEST(Search, ThreadCountDoesNotChangeResults) {
  SearchBudget b;
  b.max_subspaces = 3000;
  SearchOptions one;
  one.threads = 1;
  SearchOptions four;
  four.threads = 4;
  const SearchFamily f{8, 3, SignFamily::kQuadraticForms};
  EXPECT_TRUE(same_results(search_shorter_codes(f, b, one), search_shorter_codes(f, b, four)));
}

TEST(Search, ResumeMatchesUninterruptedRun) {
  const SearchFamily f{8, 3, SignFamily::kLinearCharacters};
  SearchBudget total;
  total.max_subspaces = 9000;
  const SearchResult fresh = search_shorter_codes(f, total);

  const auto path = temp_path("resume.json");
  std::filesystem::remove(path);
  SearchOptions opt;
  opt.progress_file = path;
  opt.checkpoint_every = 1000;
  SearchBudget part;
  part.max_subspaces = 2500;
  SearchResult r = search_shorter_codes(f, part, opt);
  EXPECT_EQ(r.stats.subspaces_done, 2500u);
  r = search_shorter_codes(f, part, opt);
  EXPECT_EQ(r.stats.subspaces_done, 5000u);
  part.max_subspaces = 4000;
  r = search_shorter_codes(f, part, opt);
  EXPECT_TRUE(same_results(r, fresh));
  std::filesystem::remove(path);
}

TEST(Search, CompletedCheckpointIsReused) {
  const SearchFamily f{6, 3, SignFamily::kQuadraticForms};
  const auto path = temp_path("complete.json");
  std::filesystem::remove(path);
  SearchOptions opt;
  opt.progress_file = path;
  const SearchResult a = search_shorter_codes(f, {}, opt);
  const SearchResult b = search_shorter_codes(f, {}, opt);
  EXPECT_TRUE(same_results(a, b));
  std::filesystem::remove(path);
}

TEST(Search, CheckpointFromAnotherFamilyIsRejected) {
  const auto path = temp_path("family.json");
  std::filesystem::remove(path);
  SearchOptions opt;
  opt.progress_file = path;
  SearchBudget b;
  b.max_subspaces = 10;
  search_shorter_codes({8, 3, SignFamily::kLinearCharacters}, b, opt);
  EXPECT_THROW(search_shorter_codes({8, 3, SignFamily::kQuadraticForms}, b, opt),
               std::runtime_error);
  std::ofstream(path) << R"({"format": "something-else"})";
  EXPECT_THROW(search_shorter_codes({8, 3, SignFamily::kLinearCharacters}, b, opt),
               std::runtime_error);
  std::filesystem::remove(path);
}

TEST(Equivalence, EightBitCodeUnderSymmetries) {
  const CodeSpec reference = eight_bit_code();
  EXPECT_TRUE(equivalent_codes(reference, reference));
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  std::swap(perm[0], perm[3]);
  EXPECT_TRUE(equivalent_codes(reference, transformed(reference, perm, 0b10110001, true)));
  EXPECT_TRUE(equivalent_codes(transformed(reference, perm, 0b01000010, false), reference));
}

TEST(Equivalence, RelativeSignChangeIsNotASymmetry) {
  const CodeSpec reference = eight_bit_code();
  CodeSpec flipped = reference;
  flipped.zero_words[0].sign = -flipped.zero_words[0].sign;
  flipped.zero_words[1].sign = -flipped.zero_words[1].sign;
  EXPECT_FALSE(equivalent_codes(reference, flipped));
  EXPECT_FALSE(equivalent_codes(reference, five_bit_code()));
}

TEST(CharacterSigns, EightBitCodeNeedsQuadraticSigns) {
  EXPECT_FALSE(has_character_signs(eight_bit_code()));
  SearchBudget b;
  b.max_subspaces = 20000;
  const SearchResult r = search_shorter_codes({8, 3, SignFamily::kLinearCharacters}, b);
  for (const CodeSpec& c : r.codes) EXPECT_TRUE(has_character_signs(c));
}
