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

#include "decaycode/qsim.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace decaycode;

namespace {

QState random_state(int n, Rng& rng) {
  Amplitudes a(std::size_t{1} << n);
  for (auto& x : a) x = {uniform01(rng) - 0.5, uniform01(rng) - 0.5};
  double norm = 0.0;
  for (auto& x : a) norm += std::norm(x);
  for (auto& x : a) x /= std::sqrt(norm);
  return QState(n, a);
}

}  // namespace

TEST(BasisWord, QubitOneIsMostSignificant) {
  BasisWord w = BasisWord::parse("10000000");
  EXPECT_EQ(w.index(), 128u);
  EXPECT_EQ(w.bit(1), 1);
  EXPECT_EQ(w.bit(8), 0);
  EXPECT_EQ(BasisWord::parse("00000001").index(), 1u);
  EXPECT_EQ(qubit_mask(8, 1), 128u);
}

TEST(BasisWord, RoundTrip) {
  for (std::uint32_t i = 0; i < 256; ++i) {
    BasisWord w(8, i);
    EXPECT_EQ(BasisWord::parse(w.to_string()), w);
    EXPECT_EQ(word_to_index(w.bits()), i);
    EXPECT_EQ(index_to_word(8, i), w);
  }
}

TEST(BasisWord, WeightAndWithBit) {
  BasisWord w = BasisWord::parse("01101001");
  EXPECT_EQ(w.weight(), 4);
  EXPECT_EQ(w.with_bit(1, 1).to_string(), "11101001");
  EXPECT_EQ(w.with_bit(2, 0).to_string(), "00101001");
}

TEST(BasisWord, RejectsBadInput) {
  EXPECT_THROW(BasisWord::parse("012"), std::invalid_argument);
  EXPECT_THROW(BasisWord::parse(""), std::invalid_argument);
  EXPECT_THROW(BasisWord::parse("00000000000"), std::invalid_argument);
  EXPECT_THROW(BasisWord(3, 8), std::invalid_argument);
  EXPECT_THROW(BasisWord::parse("010").bit(4), std::out_of_range);
}

TEST(QState, Invariants) {
  EXPECT_THROW(QState(3, Amplitudes(7)), std::invalid_argument);
  Amplitudes too_big(2, Complex{1.0, 0.0});
  EXPECT_THROW(QState(1, too_big), std::invalid_argument);
  Amplitudes nan(2, Complex{0.0, 0.0});
  nan[0] = std::nan("");
  EXPECT_THROW(QState(1, nan), std::invalid_argument);
  EXPECT_THROW(QState(0), std::invalid_argument);
  EXPECT_THROW(QState(kMaxQubits + 1), std::invalid_argument);
  EXPECT_THROW(QState(2, Amplitudes(4)).normalized(), std::domain_error);
}

TEST(QState, SubNormalizedIsLegal) {
  QState s(1, {Complex{0.5, 0.0}, Complex{0.0, 0.0}});
  EXPECT_DOUBLE_EQ(s.norm_squared(), 0.25);
  EXPECT_DOUBLE_EQ(s.normalized().norm(), 1.0);
}

TEST(QState, Overlaps) {
  QState a = QState::basis(2, 0);
  QState b(2, {Complex{0.6, 0.0}, Complex{0.8, 0.0}, 0.0, 0.0});
  EXPECT_NEAR(fidelity_up_to_phase(a, b), 0.6, 1e-15);
  EXPECT_NEAR(infidelity(a, b), 0.64, 1e-15);
  EXPECT_NEAR(distance(a, a), 0.0, 0.0);
  QState c(2, {Complex{0.0, 1.0}, 0.0, 0.0, 0.0});
  EXPECT_NEAR(std::arg(normalized_overlap(a, c)), std::numbers::pi / 2, 1e-15);
}

TEST(Gates, RIsHadamard) {
  Gate r{GateKind::kR, 1, {}};
  QState plus = apply_gate(QState::basis(1, 0), r);
  EXPECT_NEAR(plus[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(plus[1].real(), 1 / std::sqrt(2.0), 1e-15);
  QState minus = apply_gate(QState::basis(1, 1), r);
  EXPECT_NEAR(minus[1].real(), -1 / std::sqrt(2.0), 1e-15);
}

TEST(Gates, ControlPolarity) {
  Gate on_one{GateKind::kNot, 2, {{1, true}}};
  Gate on_zero{GateKind::kNot, 2, {{1, false}}};
  EXPECT_EQ(std::abs(apply_gate(QState::basis(2, 0b10), on_one)[0b11]), 1.0);
  EXPECT_EQ(std::abs(apply_gate(QState::basis(2, 0b00), on_one)[0b00]), 1.0);
  EXPECT_EQ(std::abs(apply_gate(QState::basis(2, 0b00), on_zero)[0b01]), 1.0);
}

TEST(Gates, PhaseKinds) {
  QState s(2, {0.5, 0.5, 0.5, 0.5});
  QState p = apply_gate(s, {GateKind::kPhasePi, 2, {{1, true}}});
  EXPECT_EQ(p[0b11].real(), -0.5);
  EXPECT_EQ(p[0b10].real(), 0.5);
  QState g = apply_gate(s, {GateKind::kGlobalPhasePi, 2, {{1, true}}});
  EXPECT_EQ(g[0b11].real(), -0.5);
  EXPECT_EQ(g[0b10].real(), -0.5);
  EXPECT_EQ(g[0b01].real(), 0.5);
}

TEST(Gates, ValidationRejectsBadQubits) {
  EXPECT_THROW((Gate{GateKind::kNot, 0, {}}.validate(3)), std::invalid_argument);
  EXPECT_THROW((Gate{GateKind::kNot, 1, {{1, true}}}.validate(3)), std::invalid_argument);
  EXPECT_THROW((Gate{GateKind::kNot, 1, {{2, true}, {2, false}}}.validate(3)),
               std::invalid_argument);
  EXPECT_THROW((Gate{GateKind::kNot, 1, {{4, true}}}.validate(3)), std::invalid_argument);
}

TEST(Gates, EveryKindIsAnInvolution) {
  Rng rng(11);
  const GateKind kinds[] = {GateKind::kR, GateKind::kNot, GateKind::kPhasePi,
                            GateKind::kGlobalPhasePi};
  for (int trial = 0; trial < 40; ++trial) {
    QState s = random_state(4, rng);
    for (GateKind k : kinds) {
      Gate g{k, 1 + trial % 4, {{1 + (trial + 1) % 4, trial % 2 == 0}}};
      EXPECT_LT(distance(apply_gate(apply_gate(s, g), g), s), 1e-14);
    }
  }
}

TEST(Program, ReverseUndoesForward) {
  Rng rng(5);
  GateProgram prog{3,
                   {{GateKind::kR, 1, {}},
                    {GateKind::kNot, 2, {{1, true}}},
                    {GateKind::kPhasePi, 3, {{2, false}}},
                    {GateKind::kGlobalPhasePi, 1, {{3, true}}},
                    {GateKind::kR, 3, {{1, true}}}}};
  for (int k = 0; k < 10; ++k) {
    QState s = random_state(3, rng);
    QState back = run_program(run_program(s, prog), prog, Direction::kReverse);
    EXPECT_LT(distance(back, s), 1e-14);
  }
}

TEST(Program, GateTableRoundTrip) {
  const char* text = R"(# comment
R 1
NOT 3 1:1 2:0   # trailing
PHASE_PI 2 3:1
GPHASE_PI 1 2:0 3:0
)";
  GateProgram p = parse_gate_table(text, 3);
  ASSERT_EQ(p.gates.size(), 4u);
  EXPECT_EQ(p.gates[1].controls[1], (Control{2, false}));
  EXPECT_EQ(parse_gate_table(format_gate_table(p), 3), p);
}

TEST(Program, GateTableErrors) {
  EXPECT_THROW(parse_gate_table("FOO 1", 3), std::invalid_argument);
  EXPECT_THROW(parse_gate_table("NOT", 3), std::invalid_argument);
  EXPECT_THROW(parse_gate_table("NOT 1 2:7", 3), std::invalid_argument);
  EXPECT_THROW(parse_gate_table("NOT 9", 3), std::invalid_argument);
  EXPECT_THROW(parse_gate_table("NOT 1 2", 3), std::invalid_argument);
}

TEST(Measurement, DeterministicOnBasisStates) {
  QState s = QState::basis(BasisWord::parse("101"));
  const int qs[] = {3, 1};
  Measurement m = measure_qubits(s, qs, 1);
  EXPECT_EQ(m.outcome, (std::vector<int>{1, 1}));
  EXPECT_NEAR(m.collapsed.norm(), 1.0, 1e-15);
}

TEST(Measurement, BornFrequencies) {
  QState s(1, {Complex{std::sqrt(0.3), 0.0}, Complex{std::sqrt(0.7), 0.0}});
  const int qs[] = {1};
  Rng rng(99);
  int ones = 0;
  const int shots = 20000;
  for (int k = 0; k < shots; ++k) ones += measure_qubits(s, qs, rng).outcome[0];
  // 5 sigma
  EXPECT_NEAR(ones / double(shots), 0.7, 5 * std::sqrt(0.21 / shots));
}

TEST(Measurement, SeedReproducible) {
  Rng rng(3);
  QState s = random_state(5, rng);
  const int qs[] = {1, 2, 3, 4};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(measure_qubits(s, qs, seed).outcome, measure_qubits(s, qs, seed).outcome);
  }
  EXPECT_THROW(measure_qubits(QState(5, Amplitudes(32)), qs, 0), std::domain_error);
}

TEST(Rng, Uniform01IsPinned) {
  Rng a(42);
  Rng b(42);
  for (int k = 0; k < 100; ++k) {
    double x = uniform01(a);
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
    EXPECT_EQ(x, uniform01(b));
  }
  Rng c(0);
  EXPECT_EQ(uniform01(c), static_cast<double>(Rng(0)() >> 11) * 0x1.0p-53);
}
