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

#include <sstream>
#include <stdexcept>
#include <string>

#include "decaycode/qsim.hpp"

namespace decaycode {

namespace {

GateKind parse_kind(const std::string& token, int line_no) {
  if (token == "R") return GateKind::kR;
  if (token == "NOT") return GateKind::kNot;
  if (token == "PHASE_PI") return GateKind::kPhasePi;
  if (token == "GPHASE_PI") return GateKind::kGlobalPhasePi;
  throw std::invalid_argument("gate table line " + std::to_string(line_no) +
                              ": unknown gate kind '" + token + "'");
}

const char* kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kR:
      return "R";
    case GateKind::kNot:
      return "NOT";
    case GateKind::kPhasePi:
      return "PHASE_PI";
    case GateKind::kGlobalPhasePi:
      return "GPHASE_PI";
  }
  return "?";
}

int parse_qubit(const std::string& token, int line_no) {
  std::size_t used = 0;
  int q = 0;
  try {
    q = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw std::invalid_argument("gate table line " + std::to_string(line_no) +
                                ": bad qubit index '" + token + "'");
  }
  return q;
}

}  // namespace

GateProgram parse_gate_table(std::string_view text, int n_qubits) {
  GateProgram program{n_qubits, {}};
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string kind_tok;
    if (!(fields >> kind_tok)) continue;

    Gate g;
    g.kind = parse_kind(kind_tok, line_no);
    std::string target_tok;
    if (!(fields >> target_tok)) {
      throw std::invalid_argument("gate table line " + std::to_string(line_no) +
                                  ": missing target");
    }
    g.target = parse_qubit(target_tok, line_no);

    std::string ctrl_tok;
    while (fields >> ctrl_tok) {
      auto colon = ctrl_tok.find(':');
      if (colon == std::string::npos || colon + 2 != ctrl_tok.size() ||
          (ctrl_tok.back() != '0' && ctrl_tok.back() != '1')) {
        throw std::invalid_argument("gate table line " +
                                    std::to_string(line_no) +
                                    ": control must look like q:1 or q:0, got '" +
                                    ctrl_tok + "'");
      }
      g.controls.push_back(
          {parse_qubit(ctrl_tok.substr(0, colon), line_no), ctrl_tok.back() == '1'});
    }
    try {
      g.validate(n_qubits);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("gate table line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
    program.gates.push_back(std::move(g));
  }
  return program;
}

std::string format_gate_table(const GateProgram& program) {
  std::ostringstream out;
  for (const Gate& g : program.gates) {
    out << kind_name(g.kind) << ' ' << g.target;
    for (const Control& c : g.controls) {
      out << ' ' << c.qubit << ':' << (c.on_one ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace decaycode
