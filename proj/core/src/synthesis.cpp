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

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "decaycode/codegen.hpp"

namespace decaycode {

namespace {

struct Row {
  int pivot;  // qubit position, 1-based
  std::uint32_t bits;
};

struct Entry {
  std::uint32_t word;
  int sign;
  int logical;
};

}  // namespace

Encoder synthesize_encoder(const CodeSpec& code, int preferred_data_qubit) {
  code.validate();
  const int n = code.n;
  if (preferred_data_qubit < 1 || preferred_data_qubit > n) {
    throw std::invalid_argument("preferred data qubit out of range");
  }

  std::vector<Entry> entries;
  for (int l = 0; l < 2; ++l) {
    for (const SignedWord& w : code.words(l)) {
      entries.push_back({w.word.index(), w.sign, l});
    }
  }
  const std::uint32_t offset = entries.front().word;

  std::set<std::uint32_t> shifted;
  for (const Entry& e : entries) shifted.insert(e.word ^ offset);
  if (!std::has_single_bit(shifted.size())) {
    throw std::invalid_argument(code.name + ": word count is not a power of two");
  }
  for (std::uint32_t a : shifted) {
    for (std::uint32_t b : shifted) {
      if (!shifted.contains(a ^ b)) {
        throw std::invalid_argument(code.name + ": words do not form an affine subspace");
      }
    }
  }

  // Reduced row echelon basis of the shifted word space. The preferred data
  // qubit is eliminated first so it becomes a pivot whenever possible.
  std::vector<int> column_order{preferred_data_qubit};
  for (int q = 1; q <= n; ++q) {
    if (q != preferred_data_qubit) column_order.push_back(q);
  }
  std::vector<Row> rows;
  for (std::uint32_t v : shifted) {
    for (const Row& r : rows) {
      if (v & qubit_mask(n, r.pivot)) v ^= r.bits;
    }
    if (v == 0) continue;
    int pivot = 0;
    for (int q : column_order) {
      if (v & qubit_mask(n, q)) {
        pivot = q;
        break;
      }
    }
    for (Row& r : rows) {
      if (r.bits & qubit_mask(n, pivot)) r.bits ^= v;
    }
    rows.push_back({pivot, v});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
  const int k = static_cast<int>(rows.size());

  auto coords = [&](std::uint32_t word) {
    std::uint32_t p = 0;
    for (int j = 0; j < k; ++j) {
      if ((word ^ offset) & qubit_mask(n, rows[j].pivot)) p |= std::uint32_t{1} << j;
    }
    return p;
  };

  // Linear functional on coordinates that reads off the logical label.
  std::uint32_t selector = 0;
  bool found = false;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << k) && !found; ++s) {
    found = std::all_of(entries.begin(), entries.end(), [&](const Entry& e) {
      return (std::popcount(coords(e.word) & s) & 1) == e.logical;
    });
    if (found) selector = s;
  }
  if (!found) {
    throw std::invalid_argument(code.name +
                                ": logical states are not cosets of one hyperplane");
  }

  int data_row = -1;
  for (int j = 0; j < k; ++j) {
    if ((selector >> j & 1) && rows[j].pivot == preferred_data_qubit) data_row = j;
  }
  if (data_row < 0) {
    data_row = std::countr_zero(selector);
  }
  const int data = rows[data_row].pivot;

  GateProgram program{n, {}};
  auto add = [&program](GateKind kind, int target, std::vector<Control> controls = {}) {
    program.gates.push_back({kind, target, std::move(controls)});
  };

  for (int j = 0; j < k; ++j) {
    if (j != data_row) add(GateKind::kR, rows[j].pivot);
  }
  for (int j = 0; j < k; ++j) {
    if (j != data_row && (selector >> j & 1)) {
      add(GateKind::kNot, data, {{rows[j].pivot, true}});
    }
  }
  // Pivot positions now hold the coordinates; fill the dependent positions.
  std::vector<bool> is_pivot(n + 1, false);
  for (const Row& r : rows) is_pivot[r.pivot] = true;
  for (int m = 1; m <= n; ++m) {
    if (is_pivot[m]) continue;
    for (const Row& r : rows) {
      if (r.bits & qubit_mask(n, m)) add(GateKind::kNot, m, {{r.pivot, true}});
    }
  }
  for (int m = 1; m <= n; ++m) {
    if (offset & qubit_mask(n, m)) add(GateKind::kNot, m);
  }

  // One multiply controlled phase per negative word, keyed on its pivot bits.
  const int phase_target = rows.back().pivot;
  for (const Entry& e : entries) {
    if (e.sign > 0) continue;
    std::vector<Control> controls;
    for (const Row& r : rows) {
      if (r.pivot == phase_target) continue;
      controls.push_back({r.pivot, (e.word & qubit_mask(n, r.pivot)) != 0});
    }
    bool target_one = (e.word & qubit_mask(n, phase_target)) != 0;
    if (!target_one) add(GateKind::kNot, phase_target);
    add(GateKind::kPhasePi, phase_target, std::move(controls));
    if (!target_one) add(GateKind::kNot, phase_target);
  }

  program.validate();
  return {std::move(program), data, "synthesized"};
}

}  // namespace decaycode
