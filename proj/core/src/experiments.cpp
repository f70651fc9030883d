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

#include "decaycode/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "decaycode/decode.hpp"
#include "decaycode/noise.hpp"
#include "decaycode/search.hpp"
#include "decaycode/verify.hpp"

namespace decaycode {

namespace {

using Params = std::map<std::string, std::string>;

class ParamReader {
 public:
  ParamReader(const std::string& experiment, const Params& params,
              std::set<std::string> allowed)
      : experiment_(experiment), params_(params) {
    for (const auto& [key, value] : params) {
      if (!allowed.contains(key)) {
        throw SpecError(experiment + ": unknown parameter '" + key + "'");
      }
    }
  }

  bool has(const std::string& key) const { return params_.contains(key); }

  std::string text(const std::string& key, const std::string& fallback) const {
    auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }

  double real(const std::string& key, double fallback) const {
    auto it = params_.find(key);
    return it == params_.end() ? fallback : parse_real(key, it->second);
  }

  std::int64_t integer(const std::string& key, std::int64_t fallback, std::int64_t lo,
                       std::int64_t hi) const {
    auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    std::int64_t v = 0;
    const std::string& s = it->second;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size() || v < lo || v > hi) {
      throw SpecError(experiment_ + ": parameter '" + key + "' must be an integer in [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "], got '" + s + "'");
    }
    return v;
  }

  std::vector<double> reals(const std::string& key, const std::string& fallback) const {
    std::vector<double> out;
    std::stringstream ss(text(key, fallback));
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_real(key, item));
    if (out.empty()) throw SpecError(experiment_ + ": parameter '" + key + "' is empty");
    return out;
  }

  std::vector<double> nonnegative_reals(const std::string& key,
                                        const std::string& fallback) const {
    auto v = reals(key, fallback);
    for (double x : v) {
      if (x < 0.0) throw SpecError(experiment_ + ": parameter '" + key + "' must be >= 0");
    }
    return v;
  }

  /// (alpha, beta) from alpha_re/alpha_im/beta_re/beta_im, normalized.
  std::optional<LogicalQubit> logical() const {
    if (!has("alpha_re") && !has("alpha_im") && !has("beta_re") && !has("beta_im")) {
      return std::nullopt;
    }
    Complex a{real("alpha_re", 0.0), real("alpha_im", 0.0)};
    Complex b{real("beta_re", 0.0), real("beta_im", 0.0)};
    if (std::abs(a) == 0.0 && std::abs(b) == 0.0) {
      throw SpecError(experiment_ + ": alpha and beta are both zero");
    }
    return LogicalQubit::normalized(a, b);
  }

 private:
  double parse_real(const std::string& key, const std::string& s) const {
    try {
      std::size_t used = 0;
      double v = std::stod(s, &used);
      if (used == s.size() && std::isfinite(v)) return v;
    } catch (const std::exception&) {
    }
    throw SpecError(experiment_ + ": parameter '" + key + "' is not a number: '" + s + "'");
  }

  std::string experiment_;
  const Params& params_;
};

const std::set<std::string> kStateKeys = {"alpha_re", "alpha_im", "beta_re", "beta_im"};

std::set<std::string> with_state_keys(std::set<std::string> keys) {
  keys.insert(kStateKeys.begin(), kStateKeys.end());
  return keys;
}

const Corrector& corrector_named(const std::string& experiment, const std::string& code) {
  if (code == "8") return Corrector::eight_bit();
  if (code == "5") return Corrector::five_bit();
  throw SpecError(experiment + ": parameter 'code' must be 8 or 5, got '" + code + "'");
}

Json states_json(const std::vector<LogicalQubit>& states) {
  Json out = Json::array();
  for (const LogicalQubit& q : states) out.push_back(to_json(q));
  return out;
}

LogicalQubit default_state() {
  const double h = 1.0 / std::numbers::sqrt2;
  return LogicalQubit::make({h, 0.0}, {h, 0.0});
}

/// Either the one state given in the params or `count` Haar-random states.
std::vector<LogicalQubit> states_for(const ParamReader& p, Rng& rng, std::int64_t count) {
  if (auto q = p.logical()) return {*q};
  std::vector<LogicalQubit> out;
  for (std::int64_t k = 0; k < count; ++k) out.push_back(LogicalQubit::random(rng));
  return out;
}

void run_invariance(ExperimentReport& r) {
  const auto& spec = r.spec;
  ParamReader p(spec.name, spec.params, with_state_keys({"states", "gamma_ts", "code"}));
  const Corrector& c = corrector_named(spec.name, p.text("code", "8"));
  const auto gammas = p.nonnegative_reals("gamma_ts", "0,0.1,1,5,10");
  Rng rng(*spec.seed);
  const auto states = states_for(p, rng, p.integer("states", 50, 1, 100000));

  double worst = 0.0;
  for (std::size_t s = 0; s < states.size(); ++s) {
    const QState psi = encode(c.code, states[s]);
    for (double g : gammas) {
      const QState evolved = conditional_evolve(psi, {g}).normalized();
      const double dev = std::abs(1.0 - fidelity_up_to_phase(psi, evolved));
      worst = std::max(worst, dev);
      r.cases.push_back({{"state", s}, {"gamma_t", g}, {"deviation", dev}});
    }
  }
  r.summary = {{"code", c.code.name}, {"states", states_json(states)}, {"max_deviation", worst}};
  r.verdict = worst <= spec.tolerances.invariance ? Verdict::kPass : Verdict::kFail;
}

void run_single_error_sweep(ExperimentReport& r) {
  const auto& spec = r.spec;
  ParamReader p(spec.name, spec.params, with_state_keys({"states", "sandwich", "code"}));
  const Corrector& c = corrector_named(spec.name, p.text("code", "8"));
  const auto sandwich = p.nonnegative_reals("sandwich", "0");
  Rng rng(*spec.seed);
  const auto states = states_for(p, rng, p.integer("states", 50, 1, 100000));
  const auto errors = single_errors(c.code.n);

  double worst = 0.0;
  std::size_t failures = 0;
  for (const Error& e : errors) {
    for (double g : sandwich) {
      std::vector<ScriptStep> script;
      if (g > 0.0) script.push_back(DecaySegment{g});
      script.push_back(e);
      if (g > 0.0) script.push_back(DecaySegment{g});
      for (std::size_t s = 0; s < states.size(); ++s) {
        Json rec = {{"error", e.name()}, {"gamma_t", g}, {"state", s}};
        const std::uint64_t seed = rng();
        try {
          CycleResult res = full_cycle(c, states[s], script, seed);
          const double dev = std::abs(1.0 - res.fidelity);
          worst = std::max(worst, dev);
          if (dev > spec.tolerances.correction) ++failures;
          rec["syndrome"] = res.syndrome.to_string();
          rec["fidelity"] = res.fidelity;
        } catch (const UnknownSyndromeError& u) {
          ++failures;
          worst = 1.0;
          rec["syndrome"] = u.syndrome.to_string();
          rec["fidelity"] = 0.0;
        }
        r.cases.push_back(std::move(rec));
      }
    }
  }

  r.summary = {{"code", c.code.name},
               {"errors", errors.size()},
               {"states", states_json(states)},
               {"max_deviation", worst},
               {"failures", failures},
               {"syndrome_classes", c.table.size()}};
  bool table_ok = true;
  if (c.code.n == 8) {
    const TableCrossCheck check = cross_check_printed_table(c.table);
    r.summary["printed_table"] = to_json(check);
    table_ok = check.matches;
  }
  r.verdict = failures == 0 && table_ok ? Verdict::kPass : Verdict::kFail;
}

void run_decay_mixing(ExperimentReport& r) {
  const auto& spec = r.spec;
  ParamReader p(spec.name, spec.params, with_state_keys({"states", "gamma_ts"}));
  const auto gammas = p.nonnegative_reals("gamma_ts", "0.1,0.5,1,3");
  Rng rng(*spec.seed);
  const auto states = states_for(p, rng, p.integer("states", 20, 1, 100000));
  const CodeSpec code = eight_bit_code();

  double worst = 0.0;
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (double g : gammas) {
      for (int q = 1; q <= code.n; ++q) {
        const double dev = decay_mixing_deviation(code, states[s], q, g);
        worst = std::max(worst, dev);
        r.cases.push_back({{"state", s}, {"gamma_t", g}, {"qubit", q}, {"deviation", dev}});
      }
    }
  }
  r.summary = {{"states", states_json(states)}, {"max_deviation", worst}};
  r.verdict = worst < spec.tolerances.decay_mixing ? Verdict::kPass : Verdict::kFail;
}

void run_five_bit_failure(ExperimentReport& r) {
  const auto& spec = r.spec;
  ParamReader p(spec.name, spec.params,
                with_state_keys({"lo", "hi", "points", "ground_gamma_ts"}));
  const double lo = p.real("lo", 1e-3);
  const double hi = p.real("hi", 1e-1);
  if (!(lo > 0.0 && hi > lo)) throw SpecError(spec.name + ": need 0 < lo < hi");
  const int points = static_cast<int>(p.integer("points", 9, 2, 1000));
  const LogicalQubit q = p.logical().value_or(default_state());
  const auto ground_gammas = p.nonnegative_reals("ground_gamma_ts", "0.1,1");

  const auto grid = log_grid(lo, hi, points);
  const auto scan = five_bit_failure_scan(grid, q);
  for (const FailurePoint& f : scan) {
    r.cases.push_back({{"series", "input"},
                       {"gamma_t", f.gamma_t},
                       {"infidelity", f.infidelity},
                       {"trivial_syndrome_probability", f.trivial_syndrome_probability}});
  }
  const double slope = loglog_slope(scan);

  const LogicalQubit ground = LogicalQubit::make({1.0, 0.0}, {0.0, 0.0});
  const auto ground_scan = five_bit_failure_scan(ground_gammas, ground);
  bool ground_ok = true;
  for (const FailurePoint& f : ground_scan) {
    r.cases.push_back({{"series", "ground"}, {"gamma_t", f.gamma_t}, {"infidelity", f.infidelity}});
    if (f.gamma_t > 0.0 && !(f.infidelity > 0.0)) ground_ok = false;
  }

  r.summary = {{"state", to_json(q)},
               {"slope", slope},
               {"slope_target", spec.tolerances.slope_target},
               {"slope_window", spec.tolerances.slope_window},
               {"ground_state_degrades", ground_ok}};
  const bool slope_ok =
      std::abs(slope - spec.tolerances.slope_target) <= spec.tolerances.slope_window;
  r.verdict = slope_ok && ground_ok ? Verdict::kPass : Verdict::kFail;
}

void run_eq6_limit(ExperimentReport& r) {
  const auto& spec = r.spec;
  ParamReader p(spec.name, spec.params, with_state_keys({"gamma_t", "scan_steps"}));
  const double g = p.real("gamma_t", 20.0);
  if (g < 0.0) throw SpecError(spec.name + ": gamma_t must be >= 0");
  const LogicalQubit q = p.logical().value_or(default_state());
  const int steps = static_cast<int>(p.integer("scan_steps", 24, 1, 1000));

  const Eq6Result at_zero = eq6_limit(0.0, q);
  const Eq6Result at_g = eq6_limit(g, q);
  const LogicalQubit ground = LogicalQubit::make({1.0, 0.0}, {0.0, 0.0});
  const Eq6Result ground_g = eq6_limit(g, ground);

  // The input placed on the data qubit with every other qubit in |0>.
  const int data = Corrector::five_bit().encoder.data_qubit;
  Amplitudes in(32, Complex{0.0, 0.0});
  in[0] = q.alpha;
  in[qubit_mask(5, data)] = q.beta;
  const double zero_register_fidelity = fidelity_up_to_phase(QState(5, in), at_zero.corrected);

  auto state_json = [](const QState& s) {
    Json out = Json::object();
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (std::abs(s[i]) > 1e-12) out[index_to_word(s.n_qubits(), i).to_string()] = to_json(s[i]);
    }
    return out;
  };

  // Where on the Bloch sphere does the pipeline come closest to the print?
  double best = -1.0;
  double best_theta = 0.0;
  double best_phi = 0.0;
  double worst = 2.0;
  for (int a = 0; a <= steps; ++a) {
    const double theta = std::numbers::pi * a / steps;
    for (int b = 0; b < (a == 0 || a == steps ? 1 : 2 * steps); ++b) {
      const double phi = std::numbers::pi * b / steps;
      const LogicalQubit s = LogicalQubit::make(std::cos(theta / 2),
                                                std::polar(std::sin(theta / 2), phi));
      const double ov = eq6_limit(g, s).overlap;
      r.cases.push_back({{"theta", theta}, {"phi", phi}, {"overlap", ov}});
      if (ov > best) {
        best = ov;
        best_theta = theta;
        best_phi = phi;
      }
      worst = std::min(worst, ov);
    }
  }

  r.summary = {{"gamma_t", g},
               {"state", to_json(q)},
               {"overlap_with_printed", at_g.overlap},
               {"corrected_register", state_json(at_g.corrected)},
               {"data_fidelity", at_g.data_fidelity},
               {"ground_state_data_fidelity", ground_g.data_fidelity},
               {"zero_time_register_fidelity", zero_register_fidelity},
               {"zero_time_data_fidelity", at_zero.data_fidelity},
               {"scan", {{"best_overlap", best},
                         {"best_theta", best_theta},
                         {"best_phi", best_phi},
                         {"worst_overlap", worst}}},
               {"overlap_is_informational", true}};
  const double tol = spec.tolerances.correction;
  const bool zero_ok =
      std::abs(1.0 - zero_register_fidelity) <= tol && std::abs(1.0 - at_zero.data_fidelity) <= tol;
  const bool ground_fails = g == 0.0 || ground_g.data_fidelity < 1.0 - tol;
  r.verdict = zero_ok && ground_fails ? Verdict::kPass : Verdict::kFail;
}

void run_trajectory_ensemble(ExperimentReport& r) {
  const auto& spec = r.spec;
  ParamReader p(spec.name, spec.params,
                with_state_keys({"gamma_t", "one_jump", "two_jump", "max_trajectories", "jsonl"}));
  const double g = p.real("gamma_t", 0.5);
  if (!(g > 0.0)) throw SpecError(spec.name + ": gamma_t must be > 0");
  const auto want_one = p.integer("one_jump", 1000, 0, 10'000'000);
  const auto want_two = p.integer("two_jump", 1000, 0, 10'000'000);
  const auto max_traj = p.integer("max_trajectories", 1'000'000, 1, 100'000'000);
  const auto fixed = p.logical();
  std::optional<std::ofstream> jsonl;
  if (p.has("jsonl")) {
    jsonl.emplace(p.text("jsonl", ""));
    if (!*jsonl) throw SpecError(spec.name + ": cannot open " + p.text("jsonl", ""));
  }

  const Corrector& c = Corrector::eight_bit();
  Rng rng(*spec.seed);
  std::int64_t one = 0;
  std::int64_t two = 0;
  std::int64_t other = 0;
  std::int64_t run = 0;
  std::int64_t one_failures = 0;
  std::int64_t two_below = 0;
  std::int64_t two_unknown = 0;
  double one_worst = 0.0;
  double two_min = 1.0;
  for (; run < max_traj && (one < want_one || two < want_two); ++run) {
    const LogicalQubit q = fixed ? *fixed : LogicalQubit::random(rng);
    const std::uint64_t traj_seed = rng();
    const std::uint64_t meas_seed = rng();
    const Trajectory t = sample_trajectory(encode(c.code, q), {g, traj_seed, 2});
    if (t.total_jumps != 1 && t.total_jumps != 2) {
      ++other;
      continue;
    }
    if (t.total_jumps == 1 && one >= want_one) continue;
    if (t.total_jumps == 2 && two >= want_two) continue;

    Json rec = to_json(t);
    rec["trajectory"] = run;
    double fid = 0.0;
    const SyndromeReading reading = extract_syndrome(c.encoder, t.final_state, meas_seed);
    rec["syndrome"] = reading.syndrome.to_string();
    if (c.table.find(reading.syndrome) != nullptr) {
      fid = fidelity_up_to_phase(q, correct(reading.syndrome, reading.data, c.table));
      rec["known_syndrome"] = true;
    } else {
      rec["known_syndrome"] = false;
      if (t.total_jumps == 2) ++two_unknown;
    }
    rec["fidelity"] = fid;
    if (t.total_jumps == 1) {
      ++one;
      one_worst = std::max(one_worst, std::abs(1.0 - fid));
      if (std::abs(1.0 - fid) > spec.tolerances.correction) ++one_failures;
    } else {
      ++two;
      two_min = std::min(two_min, fid);
      if (fid < spec.tolerances.two_jump_fidelity) ++two_below;
    }
    if (jsonl) *jsonl << rec.dump() << '\n';
    r.cases.push_back(std::move(rec));
  }

  r.summary = {{"gamma_t", g},
               {"trajectories_run", run},
               {"one_jump", one},
               {"two_jump", two},
               {"other_jump_counts", other},
               {"one_jump_failures", one_failures},
               {"one_jump_max_deviation", one_worst},
               {"two_jump_below_threshold", two_below},
               {"two_jump_unknown_syndrome", two_unknown},
               {"two_jump_min_fidelity", two_min}};
  if (one < want_one || two < want_two) {
    r.verdict = Verdict::kInconclusive;
  } else {
    r.verdict = one_failures == 0 && (want_two == 0 || two_below > 0) ? Verdict::kPass
                                                                      : Verdict::kFail;
  }
}

void run_certify(ExperimentReport& r) {
  const auto& spec = r.spec;
  ParamReader p(spec.name, spec.params, {"code", "code_file", "extra_errors"});
  CodeSpec code;
  if (p.has("code_file")) {
    std::ifstream in(p.text("code_file", ""));
    if (!in) throw SpecError(spec.name + ": cannot read " + p.text("code_file", ""));
    code = code_from_json(Json::parse(in));
  } else {
    code = corrector_named(spec.name, p.text("code", "8")).code;
  }
  std::vector<Error> errors = single_errors(code.n);
  std::stringstream extra(p.text("extra_errors", ""));
  std::string item;
  while (std::getline(extra, item, ',')) {
    if (!item.empty()) errors.push_back(parse_error(item));
  }

  const double tol = spec.tolerances.condition;
  const ConditionReport kl = kl_check(code, errors, tol);
  const ConditionReport em = em_orthogonality_check(code, errors, tol);
  const int dim = error_space_dimension(code, errors, spec.tolerances.rank);
  r.cases.push_back({{"check", "kl"}, {"report", to_json(kl)}});
  r.cases.push_back({{"check", "em"}, {"report", to_json(em)}});
  r.summary = {{"code", to_json(code)},
               {"alphabet_size", errors.size()},
               {"kl_satisfied", kl.satisfied},
               {"em_satisfied", em.satisfied},
               {"em_collisions", em.collisions.size()},
               {"error_space_dimension", dim},
               {"non_degenerate_dimension", 2 * (1 + errors.size())}};
  r.verdict = kl.satisfied ? Verdict::kPass : Verdict::kFail;
}

void run_bound(ExperimentReport& r) {
  const auto& spec = r.spec;
  ParamReader p(spec.name, spec.params, {"l", "t", "n", "n_max"});
  const int l = static_cast<int>(p.integer("l", 1, 1, 1000));
  const int t = static_cast<int>(p.integer("t", 1, 0, 1000));
  if (p.has("n")) {
    const int n = static_cast<int>(p.integer("n", 1, 1, 100000));
    const BoundResult b = sphere_bound({l, n, t});
    r.cases.push_back({{"n", n}, {"bound", to_json(b)}});
    r.summary = {{"l", l}, {"t", t}, {"n", n}, {"holds", b.holds}};
    r.verdict = b.holds ? Verdict::kPass : Verdict::kFail;
    return;
  }
  const int n_max = static_cast<int>(p.integer("n_max", 10, 1, 100000));
  for (int n = 1; n <= n_max; ++n) {
    r.cases.push_back({{"n", n}, {"bound", to_json(sphere_bound({l, n, t}))}});
  }
  const auto minimal = minimal_physical_qubits(l, t, n_max);
  r.summary = {{"l", l}, {"t", t}, {"n_max", n_max}};
  if (minimal) {
    const BoundResult b = sphere_bound({l, *minimal, t});
    r.summary["minimal_n"] = *minimal;
    r.summary["tight"] = b.lhs == b.rhs;
  } else {
    r.summary["minimal_n"] = nullptr;
  }
  r.verdict = minimal ? Verdict::kPass : Verdict::kFail;
}

void run_search(ExperimentReport& r) {
  const auto& spec = r.spec;
  ParamReader p(spec.name, spec.params,
                {"n", "dim", "signs", "budget_seconds", "budget_subspaces", "progress_file",
                 "checkpoint_every", "threads", "report_codes"});
  SearchFamily family;
  family.n = static_cast<int>(p.integer("n", 8, 2, kMaxQubits));
  family.dim = static_cast<int>(p.integer("dim", 3, 1, kMaxQubits - 1));
  if (family.dim >= family.n) throw SpecError(spec.name + ": need dim < n");
  try {
    family.signs = parse_sign_family(p.text("signs", "quadratic-forms"));
  } catch (const std::invalid_argument& e) {
    throw SpecError(spec.name + ": " + e.what());
  }
  SearchBudget budget;
  budget.max_seconds = p.real("budget_seconds", 600.0);
  if (*budget.max_seconds <= 0.0) throw SpecError(spec.name + ": budget_seconds must be > 0");
  if (p.has("budget_subspaces")) {
    budget.max_subspaces = p.integer("budget_subspaces", 0, 1, INT64_MAX);
  }
  SearchOptions options;
  if (p.has("progress_file")) options.progress_file = p.text("progress_file", "");
  options.checkpoint_every = p.integer("checkpoint_every", 16384, 1, INT64_MAX);
  options.threads = static_cast<unsigned>(
      p.integer("threads", std::max(1u, std::thread::hardware_concurrency()), 1, 1024));
  const auto report_codes = p.integer("report_codes", 16, 0, INT64_MAX);

  const SearchResult res = search_shorter_codes(family, budget, options);

  std::optional<std::size_t> reference_match;
  if (res.complete && family.n == 8) {
    const CodeSpec reference = eight_bit_code();
    for (std::size_t k = 0; k < res.codes.size(); ++k) {
      if (equivalent_codes(res.codes[k], reference)) {
        reference_match = k;
        break;
      }
    }
  }

  for (std::size_t k = 0; k < res.codes.size() && static_cast<std::int64_t>(k) < report_codes;
       ++k) {
    r.cases.push_back(to_json(res.codes[k]));
  }
  r.summary = {{"family", {{"n", family.n}, {"dim", family.dim}, {"signs", to_string(family.signs)}}},
               {"complete", res.complete},
               {"stats", to_json(res.stats)},
               {"codes_found", res.codes.size()}};
  if (family.n == 8) {
    r.summary["reference_code_match"] = reference_match ? Json(res.codes[*reference_match].name) : Json(nullptr);
  }
  if (reference_match) r.cases.push_back({{"reference_equivalent", to_json(res.codes[*reference_match])}});

  if (!res.complete) {
    r.verdict = Verdict::kInconclusive;
  } else if (family.n == 8) {
    r.verdict = reference_match ? Verdict::kPass : Verdict::kFail;
  } else {
    r.verdict = Verdict::kPass;
  }
}

using Runner = void (*)(ExperimentReport&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> m = {
      {"invariance", run_invariance},
      {"single-error-sweep", run_single_error_sweep},
      {"decay-mixing", run_decay_mixing},
      {"five-bit-failure", run_five_bit_failure},
      {"eq6-limit", run_eq6_limit},
      {"trajectory-ensemble", run_trajectory_ensemble},
      {"certify", run_certify},
      {"bound", run_bound},
      {"search", run_search},
  };
  return m;
}

}  // namespace

void Tolerances::set_primary(const std::string& experiment, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) throw SpecError("tolerance must be positive");
  const std::string name = canonical_experiment_name(experiment);
  if (name == "invariance") {
    invariance = value;
  } else if (name == "single-error-sweep" || name == "trajectory-ensemble" || name == "eq6-limit") {
    correction = value;
  } else if (name == "decay-mixing") {
    decay_mixing = value;
  } else if (name == "five-bit-failure") {
    slope_window = value;
  } else if (name == "certify") {
    condition = value;
  } else {
    throw SpecError(name + " takes no tolerance");
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "fail";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return 0;
    case Verdict::kFail:
      return 1;
    case Verdict::kInconclusive:
      return 3;
  }
  return 1;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "invariance",          "single-error-sweep", "decay-mixing", "five-bit-failure",
      "eq6-limit",           "trajectory-ensemble", "certify",     "bound",
      "search"};
  return names;
}

std::string canonical_experiment_name(const std::string& name) {
  if (name == "sweep-errors") return "single-error-sweep";
  if (name == "trajectories") return "trajectory-ensemble";
  if (runners().contains(name)) return name;
  throw SpecError("unknown experiment '" + name + "'");
}

bool is_stochastic(const std::string& name) {
  const std::string n = canonical_experiment_name(name);
  return n == "invariance" || n == "single-error-sweep" || n == "decay-mixing" ||
         n == "trajectory-ensemble";
}

Json ExperimentSpec::to_json() const {
  Json j;
  j["name"] = name;
  j["params"] = params;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  j["out"] = out ? Json(out->string()) : Json(nullptr);
  j["tolerances"] = {{"invariance", tolerances.invariance},
                     {"correction", tolerances.correction},
                     {"decay_mixing", tolerances.decay_mixing},
                     {"slope_target", tolerances.slope_target},
                     {"slope_window", tolerances.slope_window},
                     {"two_jump_fidelity", tolerances.two_jump_fidelity},
                     {"condition", tolerances.condition},
                     {"rank", tolerances.rank}};
  return j;
}

ExperimentSpec ExperimentSpec::from_json(const Json& j) {
  ExperimentSpec s;
  s.name = j.at("name").get<std::string>();
  s.params = j.value("params", Params{});
  if (j.contains("seed") && !j["seed"].is_null()) s.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("out") && !j["out"].is_null()) s.out = j["out"].get<std::string>();
  if (j.contains("tolerances")) {
    const Json& t = j["tolerances"];
    s.tolerances.invariance = t.value("invariance", s.tolerances.invariance);
    s.tolerances.correction = t.value("correction", s.tolerances.correction);
    s.tolerances.decay_mixing = t.value("decay_mixing", s.tolerances.decay_mixing);
    s.tolerances.slope_target = t.value("slope_target", s.tolerances.slope_target);
    s.tolerances.slope_window = t.value("slope_window", s.tolerances.slope_window);
    s.tolerances.two_jump_fidelity = t.value("two_jump_fidelity", s.tolerances.two_jump_fidelity);
    s.tolerances.condition = t.value("condition", s.tolerances.condition);
    s.tolerances.rank = t.value("rank", s.tolerances.rank);
  }
  return s;
}

Json ExperimentReport::to_json(bool include_timing) const {
  Json j;
  j["version"] = version;
  j["spec"] = spec.to_json();
  j["verdict"] = decaycode::to_string(verdict);
  j["summary"] = summary;
  j["cases"] = cases;
  if (include_timing) j["wall_seconds"] = wall_seconds;
  return j;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  ExperimentReport report;
  report.spec = spec;
  report.spec.name = canonical_experiment_name(spec.name);
  if (is_stochastic(report.spec.name) && !report.spec.seed) {
    throw SpecError(report.spec.name + " needs a seed");
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    runners().at(report.spec.name)(report);
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error(report.spec.name + ": " + e.what());
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (spec.out) {
    std::ofstream out(*spec.out, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write report to " + spec.out->string());
    out << report.to_json().dump(2) << '\n';
  }
  return report;
}

QState eq6_transcribed() {
  const char* words[] = {"+00000", "+00010", "+01000", "-01110",
                         "+10000", "+10010", "+11000", "+11110"};
  Amplitudes amps(32, Complex{0.0, 0.0});
  for (const char* w : words) {
    const SignedWord sw = parse_signed_word(w);
    amps[sw.word.index()] = static_cast<double>(sw.sign) / std::sqrt(8.0);
  }
  return QState(5, amps);
}

Eq6Result eq6_limit(double gamma_t, const LogicalQubit& q) {
  const Corrector& c = Corrector::five_bit();
  const QState evolved = conditional_evolve(encode(c.code, q), {gamma_t}).normalized();
  Eq6Result r{run_program(evolved, c.encoder.program, Direction::kReverse).normalized(), 0.0, 0.0};
  r.overlap = fidelity_up_to_phase(eq6_transcribed(), r.corrected);
  const double g[] = {gamma_t};
  r.data_fidelity = 1.0 - failure_scan(c, g, q).front().infidelity;
  return r;
}

}  // namespace decaycode
