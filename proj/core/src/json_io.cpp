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

#include "decaycode/json_io.hpp"

namespace decaycode {

namespace {

Json word_list(const std::vector<SignedWord>& words) {
  Json out = Json::array();
  for (const SignedWord& w : words) out.push_back(to_string(w));
  return out;
}

std::vector<SignedWord> parse_word_list(const Json& j) {
  std::vector<SignedWord> out;
  for (const Json& w : j) out.push_back(parse_signed_word(w.get<std::string>()));
  return out;
}

}  // namespace

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json to_json(const LogicalQubit& q) {
  return {{"alpha", to_json(q.alpha)}, {"beta", to_json(q.beta)}};
}

Json to_json(const CodeSpec& code) {
  return {{"name", code.name},
          {"n", code.n},
          {"zero", word_list(code.zero_words)},
          {"one", word_list(code.one_words)}};
}

CodeSpec code_from_json(const Json& j) {
  CodeSpec code;
  code.name = j.value("name", "");
  code.n = j.at("n").get<int>();
  code.zero_words = parse_word_list(j.at("zero"));
  code.one_words = parse_word_list(j.at("one"));
  code.validate();
  return code;
}

Json to_json(const ConditionReport& report) {
  Json j;
  j["satisfied"] = report.satisfied;
  if (report.witness) {
    j["witness"] = {{"first", report.witness->first},
                    {"second", report.witness->second},
                    {"kind", report.witness->kind},
                    {"value", to_json(report.witness->value)}};
  } else {
    j["witness"] = nullptr;
  }
  Json lambda = Json::array();
  for (Eigen::Index r = 0; r < report.lambda.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < report.lambda.cols(); ++c) row.push_back(to_json(report.lambda(r, c)));
    lambda.push_back(row);
  }
  j["lambda"] = lambda;
  Json collisions = Json::array();
  for (const auto& [a, b] : report.collisions) collisions.push_back({a, b});
  j["collisions"] = collisions;
  return j;
}

Json to_json(const SyndromeTable& table) {
  Json rows = Json::array();
  for (const auto& [syndrome, entry] : table.entries()) {
    Json errors = Json::array();
    for (const TableError& e : entry.errors) {
      errors.push_back({{"error", e.error.name()}, {"phase", to_json(e.phase)}});
    }
    rows.push_back({{"syndrome", syndrome.to_string()},
                    {"recovery", to_string(entry.recovery)},
                    {"errors", errors}});
  }
  return rows;
}

Json to_json(const TableCrossCheck& check) {
  Json collisions = Json::array();
  for (const auto& [a, b] : check.collisions) collisions.push_back({a, b});
  return {{"matches", check.matches},
          {"permutation", check.permutation},
          {"discrepancies", check.discrepancies},
          {"distinct_classes", check.distinct_classes},
          {"collisions", collisions}};
}

Json to_json(const BoundResult& bound) {
  return {{"holds", bound.holds}, {"lhs", bound.lhs.str()}, {"rhs", bound.rhs.str()}};
}

Json to_json(const SearchStats& s) {
  return {{"subspaces_total", s.subspaces_total}, {"subspaces_done", s.subspaces_done},
          {"balanced_cosets", s.balanced_cosets}, {"coset_pairs", s.coset_pairs},
          {"candidates", s.candidates},           {"passing", s.passing},
          {"passing_linear", s.passing_linear},   {"seconds", s.seconds}};
}

Json to_json(const SearchResult& result) {
  Json codes = Json::array();
  for (const CodeSpec& c : result.codes) codes.push_back(to_json(c));
  return {{"family",
           {{"n", result.family.n},
            {"dim", result.family.dim},
            {"signs", to_string(result.family.signs)}}},
          {"complete", result.complete},
          {"stats", to_json(result.stats)},
          {"codes", codes}};
}

Json to_json(const Trajectory& t) {
  Json jumps = Json::array();
  for (const JumpRecord& r : t.jumps) jumps.push_back({{"gamma_t", r.gamma_t}, {"qubit", r.qubit}});
  return {{"total_jumps", t.total_jumps}, {"jumps", jumps}};
}

}  // namespace decaycode
