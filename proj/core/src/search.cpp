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
#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "decaycode/json_io.hpp"
#include "decaycode/verify.hpp"

namespace decaycode {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kBlockSize = 256;

/// Reduced row echelon bases of every dim-dimensional subspace of GF(2)^n,
/// in a fixed order: pivot sets lexicographically, then free bits counting
/// up. Bit (n - 1 - c) of a row is column c, i.e. qubit c + 1.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(int n, int dim) : n_(n), dim_(dim), pivots_(dim) {
    std::iota(pivots_.begin(), pivots_.end(), 0);
    valid_ = dim >= 1 && dim <= n;
    if (valid_) load_slots();
  }

  bool next(std::vector<std::uint32_t>& rows) {
    if (!valid_) return false;
    rows.assign(dim_, 0);
    for (int r = 0; r < dim_; ++r) rows[r] = bit(pivots_[r]);
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      if (counter_ >> s & 1) rows[slots_[s].first] |= bit(slots_[s].second);
    }
    advance();
    return true;
  }

 private:
  std::uint32_t bit(int col) const { return std::uint32_t{1} << (n_ - 1 - col); }

  void load_slots() {
    slots_.clear();
    for (int r = 0; r < dim_; ++r) {
      for (int c = pivots_[r] + 1; c < n_; ++c) {
        if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end()) {
          slots_.emplace_back(r, c);
        }
      }
    }
    counter_ = 0;
  }

  void advance() {
    if (++counter_ < (std::uint64_t{1} << slots_.size())) return;
    // Next pivot combination.
    int i = dim_ - 1;
    while (i >= 0 && pivots_[i] == n_ - dim_ + i) --i;
    if (i < 0) {
      valid_ = false;
      return;
    }
    ++pivots_[i];
    for (int j = i + 1; j < dim_; ++j) pivots_[j] = pivots_[j - 1] + 1;
    load_slots();
  }

  int n_;
  int dim_;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> slots_;
  std::uint64_t counter_ = 0;
  bool valid_ = false;
};

struct Pauli {
  std::uint32_t x;
  std::uint32_t z;
};

/// Distinct X^a Z^b (up to phase) among E^dag F for E, F in {I} + single
/// errors, single-qubit terms first.
std::vector<Pauli> pair_products(int n) {
  std::vector<Pauli> singles;
  for (int q = 0; q < n; ++q) {
    std::uint32_t m = std::uint32_t{1} << q;
    singles.push_back({m, 0});
    singles.push_back({0, m});
    singles.push_back({m, m});
  }
  std::vector<Pauli> out = singles;
  for (std::size_t i = 0; i < singles.size(); ++i) {
    for (std::size_t j = i + 1; j < singles.size(); ++j) {
      const Pauli& a = singles[i];
      const Pauli& b = singles[j];
      if (((a.x | a.z) & (b.x | b.z)) != 0) continue;  // same qubit: already a single
      out.push_back({a.x | b.x, a.z | b.z});
    }
  }
  return out;
}

int parity(std::uint32_t v) { return std::popcount(v) & 1; }

/// Sign pattern over the 2^dim coset coordinates for form index `form`.
/// Bits 0..dim-1 are the linear coefficients, the rest the cross terms.
std::vector<int> form_signs(int dim, std::uint32_t form) {
  std::vector<int> s(std::size_t{1} << dim);
  for (std::uint32_t x = 0; x < s.size(); ++x) {
    int e = parity(form & ((std::uint32_t{1} << dim) - 1) & x);
    int k = dim;
    for (int i = 0; i < dim; ++i) {
      for (int j = i + 1; j < dim; ++j, ++k) {
        if ((form >> k & 1) && (x >> i & 1) && (x >> j & 1)) e ^= 1;
      }
    }
    s[x] = e ? -1 : 1;
  }
  return s;
}

struct Codeword {
  std::vector<std::uint32_t> words;
  std::vector<int> signs;
};

CodeSpec to_code(int n, const Codeword& zero, const Codeword& one, const std::string& name) {
  CodeSpec code;
  code.name = name;
  code.n = n;
  auto fill = [n](const Codeword& cw, std::vector<SignedWord>& out) {
    for (std::size_t k = 0; k < cw.words.size(); ++k) {
      out.push_back({cw.signs[k], BasisWord(n, cw.words[k])});
    }
    std::sort(out.begin(), out.end(), [](const SignedWord& a, const SignedWord& b) {
      return a.word.index() < b.word.index();
    });
  };
  fill(zero, code.zero_words);
  fill(one, code.one_words);
  return code;
}

struct SubspaceOutcome {
  std::vector<CodeSpec> codes;
  SearchStats stats;
};

class Screener {
 public:
  explicit Screener(int n) : products_(pair_products(n)) {
    amp_[0].assign(std::size_t{1} << n, 0);
    amp_[1].assign(std::size_t{1} << n, 0);
  }

  /// Products whose X part can connect words of the two cosets (`cross`) or
  /// words within a coset (`diagonal`); every other matrix element vanishes.
  void select(const std::vector<std::uint32_t>& span, std::uint32_t shift) {
    diagonal_.clear();
    cross_.clear();
    for (const Pauli& p : products_) {
      for (std::uint32_t v : span) {
        if (p.x == v) diagonal_.push_back(p);
        if (p.x == (v ^ shift)) cross_.push_back(p);
      }
    }
  }

  bool passes(const Codeword& c0, const Codeword& c1) {
    load(0, c0);
    load(1, c1);
    bool ok = true;
    for (const Pauli& p : cross_) {
      if (element(1, c0, p) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (const Pauli& p : diagonal_) {
        if (element(0, c0, p) != element(1, c1, p)) {
          ok = false;
          break;
        }
      }
    }
    unload(0, c0);
    unload(1, c1);
    return ok;
  }

 private:
  void load(int u, const Codeword& cw) {
    for (std::size_t k = 0; k < cw.words.size(); ++k) amp_[u][cw.words[k]] = cw.signs[k];
  }
  void unload(int u, const Codeword& cw) {
    for (std::uint32_t w : cw.words) amp_[u][w] = 0;
  }
  /// <bra|X^a Z^b|ket> up to the normalization, exactly in integers.
  int element(int bra, const Codeword& ket, const Pauli& p) const {
    int sum = 0;
    for (std::size_t k = 0; k < ket.words.size(); ++k) {
      std::uint32_t w = ket.words[k];
      int s = ket.signs[k] * (parity(p.z & w) ? -1 : 1);
      sum += s * amp_[bra][w ^ p.x];
    }
    return sum;
  }

  std::vector<Pauli> products_;
  std::vector<Pauli> diagonal_;
  std::vector<Pauli> cross_;
  std::vector<int> amp_[2];
};

SubspaceOutcome examine_subspace(const SearchFamily& family,
                                 const std::vector<std::uint32_t>& rows,
                                 std::uint64_t subspace_index, Screener& screener,
                                 const std::vector<std::vector<int>>& forms,
                                 const std::vector<bool>& form_is_linear) {
  const int n = family.n;
  const int half = n / 2;
  const std::size_t size = std::size_t{1} << family.dim;
  std::vector<std::uint32_t> span(size, 0);
  for (std::uint32_t x = 0; x < size; ++x) {
    for (int j = 0; j < family.dim; ++j) {
      if (x >> j & 1) span[x] ^= rows[j];
    }
  }

  SubspaceOutcome out;
  std::vector<std::uint32_t> leaders;
  for (std::uint32_t c = 0; c < (std::uint32_t{1} << n); ++c) {
    if (std::popcount(c) != half) continue;
    bool leader = true;
    bool balanced = true;
    for (std::uint32_t v : span) {
      std::uint32_t w = c ^ v;
      if (w < c) leader = false;
      if (std::popcount(w) != half) balanced = false;
    }
    if (leader && balanced) leaders.push_back(c);
  }
  out.stats.balanced_cosets = leaders.size();

  auto codeword = [&](std::uint32_t leader, const std::vector<int>& signs) {
    Codeword cw;
    for (std::uint32_t x = 0; x < size; ++x) {
      cw.words.push_back(leader ^ span[x]);
      cw.signs.push_back(signs[x]);
    }
    return cw;
  };

  std::vector<std::vector<Codeword>> by_leader;
  for (std::uint32_t leader : leaders) {
    std::vector<Codeword> cws;
    for (const auto& signs : forms) cws.push_back(codeword(leader, signs));
    by_leader.push_back(std::move(cws));
  }

  for (std::size_t i = 0; i < leaders.size(); ++i) {
    for (std::size_t j = i + 1; j < leaders.size(); ++j) {
      ++out.stats.coset_pairs;
      screener.select(span, leaders[i] ^ leaders[j]);
      for (std::size_t f0 = 0; f0 < forms.size(); ++f0) {
        const Codeword& c0 = by_leader[i][f0];
        for (std::size_t f1 = 0; f1 < forms.size(); ++f1) {
          ++out.stats.candidates;
          const Codeword& c1 = by_leader[j][f1];
          if (!screener.passes(c0, c1)) continue;
          CodeSpec code = to_code(n, c0, c1,
                                  "search-n" + std::to_string(n) + "-s" +
                                      std::to_string(subspace_index) + "-" +
                                      std::to_string(out.codes.size()));
          if (!kl_check(code).satisfied) {
            throw std::logic_error("integer screen and kl_check disagree on " + code.name);
          }
          ++out.stats.passing;
          if (form_is_linear[f0] && form_is_linear[f1]) ++out.stats.passing_linear;
          out.codes.push_back(std::move(code));
        }
      }
    }
  }
  return out;
}

void accumulate(SearchStats& into, const SearchStats& from) {
  into.balanced_cosets += from.balanced_cosets;
  into.coset_pairs += from.coset_pairs;
  into.candidates += from.candidates;
  into.passing += from.passing;
  into.passing_linear += from.passing_linear;
}

SearchStats stats_from_json(const Json& j) {
  SearchStats s;
  s.subspaces_total = j.at("subspaces_total").get<std::uint64_t>();
  s.subspaces_done = j.at("subspaces_done").get<std::uint64_t>();
  s.balanced_cosets = j.at("balanced_cosets").get<std::uint64_t>();
  s.coset_pairs = j.at("coset_pairs").get<std::uint64_t>();
  s.candidates = j.at("candidates").get<std::uint64_t>();
  s.passing = j.at("passing").get<std::uint64_t>();
  s.passing_linear = j.at("passing_linear").get<std::uint64_t>();
  s.seconds = j.at("seconds").get<double>();
  return s;
}

Json family_to_json(const SearchFamily& f) {
  return {{"n", f.n}, {"dim", f.dim}, {"signs", to_string(f.signs)}};
}

void write_progress(const std::filesystem::path& path, const SearchResult& r) {
  Json j;
  j["format"] = "decaycode-search-progress";
  j["version"] = 1;
  j["family"] = family_to_json(r.family);
  j["cursor"] = r.stats.subspaces_done;
  j["complete"] = r.complete;
  j["stats"] = to_json(r.stats);
  Json codes = Json::array();
  for (const CodeSpec& c : r.codes) codes.push_back(to_json(c));
  j["codes"] = codes;

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write progress file " + tmp.string());
    out << j.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<SearchResult> read_progress(const std::filesystem::path& path,
                                          const SearchFamily& family) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json j = Json::parse(in);
  if (j.value("format", "") != "decaycode-search-progress") {
    throw std::runtime_error(path.string() + " is not a search progress file");
  }
  if (j.at("family") != family_to_json(family)) {
    throw std::runtime_error(path.string() + " was written for a different search family");
  }
  SearchResult r;
  r.family = family;
  r.complete = j.at("complete").get<bool>();
  r.stats = stats_from_json(j.at("stats"));
  for (const auto& c : j.at("codes")) r.codes.push_back(code_from_json(c));
  return r;
}

}  // namespace

std::string to_string(SignFamily f) {
  return f == SignFamily::kLinearCharacters ? "linear-characters" : "quadratic-forms";
}

SignFamily parse_sign_family(const std::string& s) {
  if (s == "linear-characters" || s == "linear") return SignFamily::kLinearCharacters;
  if (s == "quadratic-forms" || s == "quadratic") return SignFamily::kQuadraticForms;
  throw std::invalid_argument("unknown sign family '" + s + "'");
}

std::uint64_t subspace_count(int n, int dim) {
  if (dim < 0 || dim > n) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (int i = 0; i < dim; ++i) {
    num *= (std::uint64_t{1} << (n - i)) - 1;
    den *= (std::uint64_t{1} << (dim - i)) - 1;
  }
  return num / den;
}

SearchResult search_shorter_codes(const SearchFamily& family, const SearchBudget& budget,
                                  const SearchOptions& options) {
  if (family.n < 1 || family.n > kMaxQubits || family.dim < 1 || family.dim >= family.n) {
    throw std::invalid_argument("search family needs 1 <= dim < n <= 10");
  }
  const auto started = Clock::now();

  SearchResult result;
  result.family = family;
  result.stats.subspaces_total = subspace_count(family.n, family.dim);

  if (options.progress_file) {
    if (auto saved = read_progress(*options.progress_file, family)) result = std::move(*saved);
  }
  if (family.n % 2 != 0) {
    // No word of odd length has weight n/2.
    result.stats.subspaces_done = result.stats.subspaces_total;
    result.complete = true;
  }
  if (result.complete) {
    if (options.progress_file) write_progress(*options.progress_file, result);
    return result;
  }

  const std::size_t n_forms =
      family.signs == SignFamily::kLinearCharacters
          ? (std::size_t{1} << family.dim)
          : (std::size_t{1} << (family.dim + family.dim * (family.dim - 1) / 2));
  std::vector<std::vector<int>> forms;
  std::vector<bool> form_is_linear;
  for (std::uint32_t f = 0; f < n_forms; ++f) {
    forms.push_back(form_signs(family.dim, f));
    form_is_linear.push_back(f < (std::uint32_t{1} << family.dim));
  }

  SubspaceEnumerator enumerator(family.n, family.dim);
  std::vector<std::uint32_t> rows;
  for (std::uint64_t k = 0; k < result.stats.subspaces_done; ++k) enumerator.next(rows);

  const unsigned threads = std::max(1u, options.threads);
  std::vector<Screener> screeners(threads, Screener(family.n));
  const double prior_seconds = result.stats.seconds;
  std::uint64_t processed_this_call = 0;
  std::uint64_t since_checkpoint = 0;

  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - started).count(); };

  while (result.stats.subspaces_done < result.stats.subspaces_total) {
    std::uint64_t block = kBlockSize;
    if (budget.max_subspaces) {
      if (processed_this_call >= *budget.max_subspaces) break;
      block = std::min(block, *budget.max_subspaces - processed_this_call);
    }
    if (budget.max_seconds && elapsed() >= *budget.max_seconds) break;

    std::vector<std::vector<std::uint32_t>> batch;
    while (batch.size() < block && enumerator.next(rows)) batch.push_back(rows);
    if (batch.empty()) break;

    std::vector<SubspaceOutcome> outcomes(batch.size());
    const std::uint64_t base = result.stats.subspaces_done;
    std::atomic<std::size_t> next{0};
    auto worker = [&](unsigned t) {
      for (std::size_t i = next++; i < batch.size(); i = next++) {
        outcomes[i] = examine_subspace(family, batch[i], base + i, screeners[t], forms,
                                       form_is_linear);
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
      for (std::thread& th : pool) th.join();
    }

    for (SubspaceOutcome& o : outcomes) {
      accumulate(result.stats, o.stats);
      for (CodeSpec& c : o.codes) result.codes.push_back(std::move(c));
    }
    result.stats.subspaces_done += batch.size();
    processed_this_call += batch.size();
    since_checkpoint += batch.size();
    result.stats.seconds = prior_seconds + elapsed();

    if (options.progress_file && since_checkpoint >= options.checkpoint_every) {
      write_progress(*options.progress_file, result);
      since_checkpoint = 0;
    }
  }

  result.complete = result.stats.subspaces_done >= result.stats.subspaces_total;
  result.stats.seconds = prior_seconds + elapsed();
  if (options.progress_file) write_progress(*options.progress_file, result);
  return result;
}

bool has_character_signs(const CodeSpec& code) {
  for (int l = 0; l < 2; ++l) {
    const auto& words = code.words(l);
    std::unordered_map<std::uint32_t, int> f;
    const std::uint32_t lead = words.front().word.index();
    const int lead_sign = words.front().sign;
    for (const SignedWord& w : words) f[w.word.index() ^ lead] = w.sign * lead_sign;
    for (const auto& [a, fa] : f) {
      for (const auto& [b, fb] : f) {
        auto it = f.find(a ^ b);
        if (it == f.end() || it->second != fa * fb) return false;
      }
    }
  }
  return true;
}

bool equivalent_codes(const CodeSpec& a, const CodeSpec& b) {
  if (a.n != b.n || a.zero_words.size() != b.zero_words.size() ||
      a.one_words.size() != b.one_words.size()) {
    return false;
  }
  const int n = a.n;
  auto sign_map = [](const std::vector<SignedWord>& ws) {
    std::unordered_map<std::uint32_t, int> m;
    for (const SignedWord& w : ws) m[w.word.index()] = w.sign;
    return m;
  };
  const std::unordered_map<std::uint32_t, int> target[2] = {sign_map(a.zero_words),
                                                            sign_map(a.one_words)};

  std::vector<int> perm(n);  // perm[q] = image position of qubit position q
  std::iota(perm.begin(), perm.end(), 0);
  auto permute = [&](std::uint32_t w) {
    std::uint32_t out = 0;
    for (int q = 0; q < n; ++q) {
      if (w >> (n - 1 - q) & 1) out |= std::uint32_t{1} << (n - 1 - perm[q]);
    }
    return out;
  };

  do {
    for (int swap = 0; swap < 2; ++swap) {
      // (word in a, sign ratio) for each logical state of b mapped onto a.
      std::vector<std::pair<std::uint32_t, int>> mapped[2];
      bool supports_match = true;
      for (int l = 0; l < 2 && supports_match; ++l) {
        const auto& src = b.words(swap ? 1 - l : l);
        for (const SignedWord& w : src) {
          std::uint32_t img = permute(w.word.index());
          auto it = target[l].find(img);
          if (it == target[l].end()) {
            supports_match = false;
            break;
          }
          mapped[l].emplace_back(img, it->second * w.sign);
        }
      }
      if (!supports_match) continue;
      // Need a Z mask m and constants c_l with ratio(w) = c_l (-1)^{m.w}.
      for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        bool ok = true;
        for (int l = 0; l < 2 && ok; ++l) {
          const int c = mapped[l].front().second * (parity(m & mapped[l].front().first) ? -1 : 1);
          for (const auto& [w, r] : mapped[l]) {
            if (r != c * (parity(m & w) ? -1 : 1)) {
              ok = false;
              break;
            }
          }
        }
        if (ok) return true;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace decaycode
