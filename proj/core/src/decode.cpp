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

#include "decaycode/decode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace decaycode {

namespace {

constexpr double kSupportTolerance = 1e-9;
constexpr double kMapTolerance = 1e-9;

using Mat2 = std::array<Complex, 4>;

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 recovery_matrix(Recovery r) {
  switch (r) {
    case Recovery::kIdentity:
      return {1.0, 0.0, 0.0, 1.0};
    case Recovery::kPhaseFlip:
      return {1.0, 0.0, 0.0, -1.0};
    case Recovery::kBitFlip:
      return {0.0, 1.0, 1.0, 0.0};
    case Recovery::kBitThenPhaseFlip:
      return {0.0, 1.0, -1.0, 0.0};
  }
  return {};
}

/// If recovery * map is a phase times the identity, that phase.
std::optional<Complex> residual_phase(Recovery r, const Mat2& map) {
  Mat2 m = mul(recovery_matrix(r), map);
  if (std::abs(m[1]) > kMapTolerance || std::abs(m[2]) > kMapTolerance ||
      std::abs(m[0] - m[3]) > kMapTolerance || std::abs(std::abs(m[0]) - 1.0) > kMapTolerance) {
    return std::nullopt;
  }
  return m[0];
}

std::vector<int> other_qubits(int n, int data_qubit) {
  std::vector<int> out;
  for (int q = 1; q <= n; ++q) {
    if (q != data_qubit) out.push_back(q);
  }
  return out;
}

Syndrome syndrome_of(std::uint32_t index, int n, const std::vector<int>& qubits) {
  Syndrome s;
  for (int q : qubits) s.bits.push_back((index & qubit_mask(n, q)) ? 1 : 0);
  return s;
}

}  // namespace

Syndrome Syndrome::parse(const std::string& text) {
  Syndrome s;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("syndrome must contain only 0 and 1: '" + text + "'");
    }
    s.bits.push_back(ch - '0');
  }
  return s;
}

std::string Syndrome::to_string() const {
  std::string out;
  for (int b : bits) out.push_back(b ? '1' : '0');
  return out;
}

bool Syndrome::is_trivial() const {
  return std::all_of(bits.begin(), bits.end(), [](int b) { return b == 0; });
}

std::string to_string(Recovery r) {
  switch (r) {
    case Recovery::kIdentity:
      return "identity";
    case Recovery::kPhaseFlip:
      return "phase-flip";
    case Recovery::kBitFlip:
      return "bit-flip";
    case Recovery::kBitThenPhaseFlip:
      return "bit-then-phase-flip";
  }
  return "?";
}

const SyndromeEntry* SyndromeTable::find(const Syndrome& s) const {
  auto it = entries_.find(s);
  return it == entries_.end() ? nullptr : &it->second;
}

const SyndromeEntry* SyndromeTable::entry_for(const Error& e) const {
  for (const auto& [s, entry] : entries_) {
    for (const TableError& te : entry.errors) {
      if (te.error == e) return &entry;
    }
  }
  return nullptr;
}

void SyndromeTable::insert(SyndromeEntry entry) {
  auto [it, inserted] = entries_.try_emplace(entry.syndrome, entry);
  if (inserted) return;
  if (it->second.recovery != entry.recovery) {
    throw InconsistentSyndromeError("errors sharing syndrome " + entry.syndrome.to_string() +
                                    " need different recoveries");
  }
  for (TableError& te : entry.errors) it->second.errors.push_back(std::move(te));
}

std::vector<int> Corrector::syndrome_qubits() const {
  return other_qubits(code.n, encoder.data_qubit);
}

Corrector Corrector::for_code(const CodeSpec& code) {
  Encoder enc = encoder_for(code);
  SyndromeTable table = build_syndrome_table(code, enc);
  return {code, std::move(enc), std::move(table)};
}

const Corrector& Corrector::eight_bit() {
  static const Corrector c = for_code(eight_bit_code());
  return c;
}

const Corrector& Corrector::five_bit() {
  static const Corrector c = for_code(five_bit_code());
  return c;
}

SyndromeReading extract_syndrome(const Encoder& encoder, const QState& state, Rng& rng) {
  const int n = state.n_qubits();
  const QState decoded = run_program(state, encoder.program, Direction::kReverse);
  const std::vector<int> qubits = other_qubits(n, encoder.data_qubit);
  Measurement m = measure_qubits(decoded, qubits, rng);

  Syndrome s{m.outcome};
  std::uint32_t base = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if (m.outcome[k]) base |= qubit_mask(n, qubits[k]);
  }
  const std::uint32_t d = qubit_mask(n, encoder.data_qubit);
  LogicalQubit data = LogicalQubit::normalized(m.collapsed[base], m.collapsed[base | d]);
  return {std::move(s), data, std::move(m.collapsed)};
}

SyndromeReading extract_syndrome(const Encoder& encoder, const QState& state,
                                 std::uint64_t seed) {
  Rng rng(seed);
  return extract_syndrome(encoder, state, rng);
}

SyndromeTable build_syndrome_table(const CodeSpec& code, const Encoder& encoder) {
  const int n = code.n;
  const std::vector<int> qubits = other_qubits(n, encoder.data_qubit);
  const std::uint32_t d = qubit_mask(n, encoder.data_qubit);
  const QState logical[2] = {logical_state(code, 0), logical_state(code, 1)};

  std::vector<Error> alphabet{Error::identity()};
  for (Error& e : single_errors(n)) alphabet.push_back(std::move(e));

  SyndromeTable table;
  for (const Error& e : alphabet) {
    std::optional<std::uint32_t> pattern;
    Mat2 map{};
    for (int l = 0; l < 2; ++l) {
      QState decoded =
          run_program(apply_error(logical[l], e), encoder.program, Direction::kReverse);
      for (std::uint32_t i = 0; i < decoded.dim(); ++i) {
        if (std::abs(decoded[i]) < kSupportTolerance) continue;
        std::uint32_t p = i & ~d;
        if (pattern && *pattern != p) {
          throw InconsistentSyndromeError("error " + e.name() +
                                          " does not decode to a single syndrome");
        }
        pattern = p;
      }
      map[l] = decoded[*pattern];
      map[2 + l] = decoded[*pattern | d];
    }

    SyndromeEntry entry{syndrome_of(*pattern, n, qubits), Recovery::kIdentity, {}};
    std::optional<Complex> phase;
    if (const SyndromeEntry* existing = table.find(entry.syndrome)) {
      entry.recovery = existing->recovery;
      phase = residual_phase(entry.recovery, map);
    } else {
      for (Recovery r : {Recovery::kIdentity, Recovery::kPhaseFlip, Recovery::kBitFlip,
                         Recovery::kBitThenPhaseFlip}) {
        if ((phase = residual_phase(r, map))) {
          entry.recovery = r;
          break;
        }
      }
    }
    if (!phase) {
      throw InconsistentSyndromeError("error " + e.name() + " with syndrome " +
                                      entry.syndrome.to_string() +
                                      " is not undone by the syndrome's recovery");
    }
    entry.errors.push_back({e, map, *phase});
    table.insert(std::move(entry));
  }
  return table;
}

LogicalQubit correct(const Syndrome& syndrome, const LogicalQubit& data,
                     const SyndromeTable& table) {
  const SyndromeEntry* entry = table.find(syndrome);
  if (entry == nullptr) throw UnknownSyndromeError(syndrome);
  Mat2 r = recovery_matrix(entry->recovery);
  return LogicalQubit::normalized(r[0] * data.alpha + r[1] * data.beta,
                                  r[2] * data.alpha + r[3] * data.beta);
}

QState reset_ancillas(const QState& collapsed, int data_qubit) {
  const int n = collapsed.n_qubits();
  const std::uint32_t d = qubit_mask(n, data_qubit);
  Complex a0{0.0, 0.0};
  Complex a1{0.0, 0.0};
  // After measurement the ancillas sit in one basis pattern; read the data
  // amplitudes off it.
  for (std::uint32_t i = 0; i < collapsed.dim(); ++i) {
    if (std::norm(collapsed[i]) == 0.0) continue;
    (i & d ? a1 : a0) += collapsed[i];
  }
  LogicalQubit q = LogicalQubit::normalized(a0, a1);
  Amplitudes out(collapsed.dim());
  out[0] = q.alpha;
  out[d] = q.beta;
  return QState(n, std::move(out));
}

CycleResult full_cycle(const Corrector& corrector, const LogicalQubit& q,
                       const std::vector<ScriptStep>& script, std::uint64_t seed) {
  QState psi = encode(corrector.code, q);
  for (const ScriptStep& step : script) {
    if (const auto* seg = std::get_if<DecaySegment>(&step)) {
      psi = conditional_evolve(psi, {seg->gamma_t});
    } else if (const auto* err = std::get_if<Error>(&step)) {
      psi = apply_error(psi, *err);
    } else {
      psi = apply_jump(psi, std::get<Emission>(step).qubit);
    }
  }
  SyndromeReading reading = extract_syndrome(corrector.encoder, psi, seed);
  LogicalQubit fixed = correct(reading.syndrome, reading.data, corrector.table);
  Complex ov = normalized_overlap(q.as_state(), fixed.as_state());
  return {reading.syndrome, fixed, std::min(1.0, std::abs(ov)), ov};
}

const std::vector<PrintedRow>& printed_table() {
  static const std::vector<PrintedRow> rows = {
      {"I", "0000000", 1, 0, 0, 1},
      {"P_1", "1000000", 1, 0, 0, 1},
      {"P_2", "0100000", 1, 0, 0, 1},
      {"P_4", "0010000", 1, 0, 0, 1},
      {"A_5", "0001000", 1, 0, 0, 1},
      {"A_6", "0000100", 1, 0, 0, 1},
      {"A_7", "0000010", 1, 0, 0, 1},
      {"A_8", "0000001", 1, 0, 0, 1},
      {"P_3", "1010000", 1, 0, 0, -1},
      {"A_2", "0010010", 1, 0, 0, -1},
      {"P_6", "1010000", -1, 0, 0, 1},
      {"A_2P_2", "0110010", -1, 0, 0, 1},
      {"A_6P_6", "1010100", -1, 0, 0, 1},
      {"P_5", "0010000", -1, 0, 0, -1},
      {"P_7", "0100000", -1, 0, 0, -1},
      {"P_8", "1000000", -1, 0, 0, -1},
      {"A_5P_5", "0011000", -1, 0, 0, -1},
      {"A_7P_7", "0100010", -1, 0, 0, -1},
      {"A_8P_8", "1000001", -1, 0, 0, -1},
      {"A_1P_1", "1110001", 0, 1, 1, 0},
      {"A_4P_4", "1011000", 0, 1, 1, 0},
      {"A_3P_3", "1110100", 0, 1, -1, 0},
      {"A_1", "0110001", 0, -1, -1, 0},
      {"A_3", "0100100", 0, -1, -1, 0},
      {"A_4", "1001000", 0, -1, -1, 0},
  };
  return rows;
}

namespace {

struct RegeneratedRow {
  Syndrome syndrome;
  Mat2 map;
};

std::vector<std::string> compare_under(const std::vector<RegeneratedRow>& regen,
                                       const std::vector<int>& perm, bool stop_early) {
  std::vector<std::string> issues;
  const auto& printed = printed_table();
  for (std::size_t r = 0; r < printed.size(); ++r) {
    const PrintedRow& row = printed[r];
    const RegeneratedRow& got = regen[r];
    bool syndrome_ok = got.syndrome.bits.size() == row.syndrome.size();
    for (std::size_t k = 0; syndrome_ok && k < row.syndrome.size(); ++k) {
      syndrome_ok = got.syndrome.bits[perm[k]] == row.syndrome[k] - '0';
    }
    if (!syndrome_ok) {
      issues.push_back(row.error + ": printed syndrome " + row.syndrome + ", regenerated " +
                       got.syndrome.to_string());
      if (stop_early) return issues;
    }
    const Mat2 want{static_cast<double>(row.c00), static_cast<double>(row.c01),
                    static_cast<double>(row.c10), static_cast<double>(row.c11)};
    for (int k = 0; k < 4; ++k) {
      if (std::abs(want[k] - got.map[k]) > kMapTolerance) {
        issues.push_back(row.error + ": data-qubit state differs from the printed one");
        if (stop_early) return issues;
        break;
      }
    }
  }
  return issues;
}

}  // namespace

TableCrossCheck cross_check_printed_table(const SyndromeTable& table) {
  TableCrossCheck out;
  out.distinct_classes = table.size();
  for (const auto& [s, entry] : table.entries()) {
    for (std::size_t i = 0; i < entry.errors.size(); ++i) {
      for (std::size_t j = i + 1; j < entry.errors.size(); ++j) {
        out.collisions.emplace_back(entry.errors[i].error.name(), entry.errors[j].error.name());
      }
    }
  }

  std::vector<RegeneratedRow> regen;
  for (const PrintedRow& row : printed_table()) {
    Error e = parse_error(row.error);
    const SyndromeEntry* entry = table.entry_for(e);
    if (entry == nullptr) {
      out.discrepancies.push_back(row.error + ": missing from the regenerated table");
      return out;
    }
    auto it = std::find_if(entry->errors.begin(), entry->errors.end(),
                           [&](const TableError& te) { return te.error == e; });
    regen.push_back({entry->syndrome, it->data_map});
  }

  const std::size_t width = printed_table().front().syndrome.size();
  std::vector<int> perm(width);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::string> identity_issues = compare_under(regen, perm, false);
  if (identity_issues.empty()) {
    out.matches = true;
    out.permutation = perm;
    return out;
  }
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (compare_under(regen, perm, true).empty()) {
      out.matches = true;
      out.permutation = perm;
      return out;
    }
  }
  out.discrepancies = std::move(identity_issues);
  return out;
}

}  // namespace decaycode
