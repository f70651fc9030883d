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

// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Usage: decaycode_acceptance <path-to-decaycode-cli>

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "decaycode/decode.hpp"
#include "decaycode/json_io.hpp"
#include "decaycode/noise.hpp"
#include "decaycode/search.hpp"
#include "decaycode/verify.hpp"
#include "oracle/oracle.hpp"

using namespace decaycode;

namespace {

constexpr double kInvariance = 1e-12;
constexpr double kCorrection = 1e-10;
constexpr double kMixing = 1e-12;
constexpr double kSlopeWindow = 0.1;
constexpr double kTwoJump = 0.99;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<std::string> strings(const std::vector<SignedWord>& ws) {
  std::vector<std::string> out;
  for (const SignedWord& w : ws) out.push_back(to_string(w));
  return out;
}

std::vector<LogicalQubit> random_states(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<LogicalQubit> out;
  for (int k = 0; k < count; ++k) out.push_back(LogicalQubit::random(rng));
  return out;
}

// ---------------------------------------------------------------------------

Outcome codewords() {
  const CodeSpec c = eight_bit_code();
  const CodeSpec five = five_bit_code();
  bool ok = strings(c.zero_words) == oracle::kEightZero && strings(c.one_words) == oracle::kEightOne;
  int lifted = 0;
  for (int logical : {0, 1}) {
    for (std::size_t k = 0; k < five.words(logical).size(); ++k) {
      const SignedWord& w5 = five.words(logical)[k];
      const SignedWord& w8 = c.words(logical)[k];
      const std::string bits = lift_word(w5.word).to_string();
      if (bits == w8.word.to_string() && w5.sign == w8.sign &&
          bits == oracle::lift(w5.word.to_string())) {
        ++lifted;
      }
    }
  }
  ok = ok && lifted == 16;
  return {ok, "16 signed words match; " + std::to_string(lifted) + "/16 lifted"};
}

Outcome invariance() {
  const CodeSpec c = eight_bit_code();
  double worst = 0.0;
  double worst_oracle = 0.0;
  const auto states = random_states(101, 50);
  for (std::size_t s = 0; s < states.size(); ++s) {
    const QState psi = encode(c, states[s]);
    for (double g : {0.1, 1.0, 5.0, 10.0}) {
      const QState out = conditional_evolve(psi, {g}).normalized();
      worst = std::max(worst, std::abs(1.0 - fidelity_up_to_phase(psi, out)));
      if (s < 5) {
        oracle::Vec v(psi.dim());
        for (std::size_t i = 0; i < psi.dim(); ++i) v[i] = psi[i];
        oracle::Vec w = oracle::no_jump(8, g) * v;
        w.normalize();
        worst_oracle = std::max(worst_oracle, std::abs(1.0 - std::norm(v.dot(w))));
      }
    }
  }
  return {worst <= kInvariance && worst_oracle <= kInvariance,
          "max deviation " + fmt("%.2e", worst) + ", oracle " + fmt("%.2e", worst_oracle)};
}

Outcome single_error() {
  const Corrector& c = Corrector::eight_bit();
  const auto states = random_states(102, 50);
  double worst = 0.0;
  Rng rng(103);
  for (const Error& e : single_errors(8)) {
    for (const LogicalQubit& q : states) {
      try {
        worst = std::max(worst, std::abs(1.0 - full_cycle(c, q, {e}, rng()).fidelity));
      } catch (const UnknownSyndromeError&) {
        worst = 1.0;
      }
    }
  }
  const TableCrossCheck t = cross_check_printed_table(c.table);
  bool collisions = t.collisions.size() == 4;
  for (int i = 1; i <= 4; ++i) {
    const auto* a = c.table.entry_for(Error::single(ErrorKind::kP, i));
    const auto* b = c.table.entry_for(Error::single(ErrorKind::kP, 9 - i));
    collisions = collisions && a != nullptr && a == b;
  }
  std::string perm;
  for (int p : t.permutation) perm += std::to_string(p);
  return {worst <= kCorrection && t.matches && t.distinct_classes == 21 && collisions,
          "max deviation " + fmt("%.2e", worst) + ", " + std::to_string(t.distinct_classes) +
              " classes, table bit order " + perm};
}

Outcome error_then_decay() {
  const Corrector& c = Corrector::eight_bit();
  const auto states = random_states(104, 10);
  const double gs[] = {0.2, 1.0, 3.0};
  double worst = 0.0;
  std::size_t cycles = 0;
  Rng rng(105);
  for (const Error& e : single_errors(8)) {
    for (double before : gs) {
      for (double after : gs) {
        for (const LogicalQubit& q : states) {
          ++cycles;
          try {
            const CycleResult r =
                full_cycle(c, q, {DecaySegment{before}, e, DecaySegment{after}}, rng());
            worst = std::max(worst, std::abs(1.0 - r.fidelity));
          } catch (const UnknownSyndromeError&) {
            worst = 1.0;
          }
        }
      }
    }
  }
  return {worst <= kCorrection,
          std::to_string(cycles) + " cycles, max deviation " + fmt("%.2e", worst)};
}

Outcome decay_mixing() {
  const CodeSpec c = eight_bit_code();
  const auto states = random_states(106, 20);
  const double gs[] = {0.1, 0.5, 1.0, 3.0};
  double worst = 0.0;
  for (int i = 1; i <= 8; ++i) {
    for (const LogicalQubit& q : states) {
      for (double g : gs) worst = std::max(worst, decay_mixing_deviation(c, q, i, g));
    }
  }
  // Independent check of the first identity with dense matrices.
  double worst_oracle = 0.0;
  const oracle::Vec z = oracle::state(oracle::kEightZero);
  const oracle::Vec o = oracle::state(oracle::kEightOne);
  const oracle::Vec psi = (states[0].alpha * z + states[0].beta * o).normalized();
  std::vector<oracle::Vec> decay;
  for (double g : gs) decay.push_back(oracle::no_jump(8, g).diagonal());
  for (int i = 1; i <= 8; ++i) {
    const oracle::Vec a = oracle::amplitude(8, i) * psi;
    const oracle::Vec ap = oracle::amplitude(8, i) * (oracle::phase(8, i) * psi);
    for (std::size_t k = 0; k < decay.size(); ++k) {
      const double g = gs[k];
      const oracle::Vec lhs = decay[k].cwiseProduct(a);
      const oracle::Vec rhs =
          0.5 * std::exp(-3.0 * g) * ((1.0 + std::exp(-2.0 * g)) * a - (1.0 - std::exp(-2.0 * g)) * ap);
      worst_oracle = std::max(worst_oracle, (lhs - rhs).norm());
    }
  }
  return {worst < kMixing && worst_oracle < kMixing,
          "max deviation " + fmt("%.2e", worst) + ", oracle " + fmt("%.2e", worst_oracle)};
}

Outcome five_bit_failure() {
  const auto grid = log_grid(1e-3, 1e-1, 9);
  const double h = 1.0 / std::sqrt(2.0);
  const double slope = loglog_slope(five_bit_failure_scan(grid, LogicalQubit::make(h, h)));
  const double gs[] = {0.1, 0.3, 1.0, 3.0};
  double smallest = 1.0;
  for (const FailurePoint& p : five_bit_failure_scan(gs, LogicalQubit::make(1.0, 0.0))) {
    smallest = std::min(smallest, p.infidelity);
  }
  return {std::abs(slope - 4.0) <= kSlopeWindow && smallest > 0.0,
          "slope " + fmt("%.4f", slope) + ", ground-state infidelity >= " + fmt("%.3e", smallest)};
}

Outcome dimension() {
  const int d8 = error_space_dimension(eight_bit_code());
  const int d5 = error_space_dimension(five_bit_code());
  const int o8 = oracle::rank(oracle::state(oracle::kEightZero), oracle::state(oracle::kEightOne),
                              oracle::alphabet(8));
  return {d8 == 42 && d5 == 32 && o8 == 42, "8-bit " + std::to_string(d8) + " (oracle " +
                                                std::to_string(o8) + "), 5-bit " +
                                                std::to_string(d5)};
}

Outcome bound() {
  const auto n = minimal_physical_qubits(1, 1, 10);
  const BoundResult b = sphere_bound({1, 5, 1});
  const bool oracle_ok = oracle::bound_lhs(1, 5, 1) == 32 && oracle::bound_lhs(1, 4, 1) > 16;
  return {n == 5 && b.holds && b.lhs == 32 && b.rhs == 32 && oracle_ok,
          "minimal n " + (n ? std::to_string(*n) : std::string("none")) + ", " + b.lhs.str() +
              " <= " + b.rhs.str()};
}

Outcome trajectories() {
  const Corrector& c = Corrector::eight_bit();
  Rng rng(107);
  int one = 0;
  int two = 0;
  int two_below = 0;
  double one_worst = 0.0;
  long run = 0;
  for (; run < 1'000'000 && (one < 1000 || two < 1000); ++run) {
    const LogicalQubit q = LogicalQubit::random(rng);
    const std::uint64_t traj_seed = rng();
    const std::uint64_t meas_seed = rng();
    const Trajectory t = sample_trajectory(encode(c.code, q), {0.5, traj_seed, 2});
    if (t.total_jumps == 1 && one < 1000) {
      ++one;
    } else if (t.total_jumps == 2 && two < 1000) {
      ++two;
    } else {
      continue;
    }
    const SyndromeReading r = extract_syndrome(c.encoder, t.final_state, meas_seed);
    double fid = 0.0;
    if (c.table.find(r.syndrome) != nullptr) {
      fid = fidelity_up_to_phase(q, correct(r.syndrome, r.data, c.table));
    }
    if (t.total_jumps == 1) {
      one_worst = std::max(one_worst, std::abs(1.0 - fid));
    } else if (fid < kTwoJump) {
      ++two_below;
    }
  }
  return {one == 1000 && two == 1000 && one_worst <= kCorrection && two_below > 0,
          std::to_string(run) + " trajectories; one-jump max deviation " + fmt("%.2e", one_worst) +
              "; " + std::to_string(two_below) + "/" + std::to_string(two) +
              " two-jump below 0.99"};
}

// Search with kill/resume through the CLI.

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

int run_cli(const std::vector<std::string>& args, bool wait_for_exit, pid_t* child) {
  std::vector<char*> argv;
  for (const std::string& a : args) argv.push_back(const_cast<char*>(a.c_str()));
  argv.push_back(nullptr);
  const pid_t pid = fork();
  if (pid == 0) {
    std::freopen("/dev/null", "w", stdout);
    std::freopen("/dev/null", "w", stderr);
    execv(argv[0], argv.data());
    _exit(127);
  }
  if (child != nullptr) *child = pid;
  if (!wait_for_exit) return 0;
  int status = 0;
  waitpid(pid, &status, 0);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool same_stats(const nlohmann::json& a, const nlohmann::json& b) {
  for (const char* k : {"subspaces_done", "balanced_cosets", "coset_pairs", "candidates",
                        "passing", "passing_linear"}) {
    if (a.at(k) != b.at(k)) return false;
  }
  return true;
}

Outcome search(const std::string& cli) {
  std::ostringstream detail;
  bool ok = true;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  SearchOptions opt;
  opt.threads = hw;

  const SearchResult six = search_shorter_codes({6, 3, SignFamily::kQuadraticForms}, {}, opt);
  ok = ok && six.complete && six.codes.empty();
  detail << "n=6 " << six.stats.subspaces_done << " subspaces, " << six.codes.size() << " codes";

  SearchBudget budget;
  budget.max_seconds = 600.0;
  const SearchResult eight =
      search_shorter_codes({8, 3, SignFamily::kQuadraticForms}, budget, opt);
  const CodeSpec reference = eight_bit_code();
  std::size_t equivalent = 0;
  for (const CodeSpec& c : eight.codes) equivalent += equivalent_codes(c, reference) ? 1 : 0;
  ok = ok && eight.complete && equivalent > 0;
  detail << "; n=8 " << eight.codes.size() << " codes, " << equivalent << " equivalent to the 8-bit code";

  // In-process interruption by budget, then resume.
  const auto dir = std::filesystem::temp_directory_path();
  const auto inproc = dir / "decaycode_acceptance_inproc.json";
  std::filesystem::remove(inproc);
  SearchOptions ck = opt;
  ck.progress_file = inproc;
  ck.checkpoint_every = 8192;
  SearchBudget part;
  part.max_subspaces = 40000;
  const SearchResult first = search_shorter_codes({8, 3, SignFamily::kQuadraticForms}, part, ck);
  const SearchResult resumed = search_shorter_codes({8, 3, SignFamily::kQuadraticForms}, {}, ck);
  const bool inproc_ok = !first.complete && resumed.complete && resumed.codes == eight.codes &&
                         same_stats(to_json(resumed.stats), to_json(eight.stats));
  ok = ok && inproc_ok;
  detail << "; budget resume " << (inproc_ok ? "identical" : "DIFFERENT");
  std::filesystem::remove(inproc);

  // Hard kill of the CLI mid-search, then --resume.
  const auto progress = dir / "decaycode_acceptance_kill.json";
  std::filesystem::remove(progress);
  const std::vector<std::string> base = {cli,       "search",   "--param", "n=8",
                                         "--param", "dim=3",    "--param", "checkpoint_every=4096",
                                         "--param", "threads=1", "--seed",  "1",
                                         "--progress-file", progress.string()};
  pid_t pid = 0;
  run_cli(base, false, &pid);
  std::uint64_t killed_at = 0;
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(300);
  while (std::chrono::steady_clock::now() < deadline) {
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
    std::error_code ec;
    if (!std::filesystem::exists(progress, ec)) continue;
    try {
      const auto j = read_json(progress);
      if (j.at("cursor").get<std::uint64_t>() > 0 && !j.at("complete").get<bool>()) {
        killed_at = j.at("cursor").get<std::uint64_t>();
        break;
      }
    } catch (const std::exception&) {
    }
  }
  kill(pid, SIGKILL);
  int status = 0;
  waitpid(pid, &status, 0);
  const bool was_killed = WIFSIGNALED(status) && WTERMSIG(status) == SIGKILL && killed_at > 0;
  std::vector<std::string> resume = base;
  resume.push_back("--resume");
  const int code = was_killed ? run_cli(resume, true, nullptr) : -1;
  bool kill_ok = false;
  if (code == 0) {
    const auto j = read_json(progress);
    std::vector<CodeSpec> codes;
    for (const auto& c : j.at("codes")) codes.push_back(code_from_json(c));
    kill_ok = j.at("complete").get<bool>() && codes == eight.codes &&
              same_stats(j.at("stats"), to_json(eight.stats));
  }
  ok = ok && kill_ok;
  detail << "; SIGKILL at cursor " << killed_at << ", resume exit " << code << ", "
         << (kill_ok ? "identical" : "DIFFERENT");
  std::filesystem::remove(progress);
  return {ok, detail.str()};
}

Outcome certification() {
  const ConditionReport kl8 = kl_check(eight_bit_code());
  const ConditionReport kl5 = kl_check(five_bit_code());
  const ConditionReport em8 = em_orthogonality_check(eight_bit_code());
  const ConditionReport em5 = em_orthogonality_check(five_bit_code());
  const bool witness = em8.witness && em8.witness->first == "P_1" && em8.witness->second == "P_8";
  const double o8 = oracle::kl_violation(oracle::state(oracle::kEightZero),
                                         oracle::state(oracle::kEightOne), oracle::alphabet(8));
  const double o5 = oracle::kl_violation(oracle::state(oracle::kFiveZero),
                                         oracle::state(oracle::kFiveOne), oracle::alphabet(5));
  std::string w = em8.witness ? "(" + em8.witness->first + ", " + em8.witness->second + ")" : "none";
  return {kl8.satisfied && kl5.satisfied && !em8.satisfied && witness && em5.satisfied &&
              o8 < 1e-12 && o5 < 1e-12,
          "KL 8-bit/5-bit " + std::string(kl8.satisfied ? "ok" : "violated") + "/" +
              (kl5.satisfied ? "ok" : "violated") + ", orthogonality witness " + w};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <decaycode-cli>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];

  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "codewords", 1e-3, codewords},
      {2, "invariance", 1.0, invariance},
      {3, "single-error correction", 5.0, single_error},
      {4, "error-then-decay correction", 10.0, error_then_decay},
      {5, "decay-mixing identities", 1.0, decay_mixing},
      {6, "five-bit failure", 5.0, five_bit_failure},
      {7, "error-space dimension", 1.0, dimension},
      {8, "sphere-packing bound", 1e-3, bound},
      {9, "single-jump trajectories", 30.0, trajectories},
      {10, "restricted search", 600.0, [&] { return search(cli); }},
      {11, "certification", 1.0, certification},
  };

  // Warm the shared correctors so their one-time construction is not billed
  // to whichever criterion touches them first.
  (void)Corrector::eight_bit();
  (void)Corrector::five_bit();

  int passed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    passed += pass ? 1 : 0;
    std::printf("criterion %2d %s  %s: %s [%s s, limit %s s%s]\n", c.id, pass ? "PASS" : "FAIL",
                c.name, o.detail.c_str(), fmt("%.4g", s).c_str(),
                fmt("%g", c.limit_seconds).c_str(), in_time ? "" : ", OVER");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
