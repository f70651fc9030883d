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

#include <Eigen/SVD>

#include "decaycode/verify.hpp"

namespace decaycode {

namespace {

/// Nonzero amplitudes of a state, ascending by basis index.
using Sparse = std::vector<std::pair<std::size_t, Complex>>;

struct ErrorImages {
  std::vector<std::string> names;
  /// images[e][u] = E_e |u_L>, normalized codewords.
  std::vector<std::array<Eigen::VectorXcd, 2>> images;
  std::vector<std::array<Sparse, 2>> sparse;
};

Sparse sparsify(const Eigen::VectorXcd& v) {
  Sparse out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != Complex{0.0, 0.0}) out.emplace_back(static_cast<std::size_t>(i), v[i]);
  }
  return out;
}

/// <a|b>
Complex dot(const Sparse& a, const Sparse& b) {
  Complex sum{0.0, 0.0};
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      sum += std::conj(i->second) * j->second;
      ++i;
      ++j;
    }
  }
  return sum;
}

Eigen::VectorXcd to_eigen(const QState& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v[static_cast<Eigen::Index>(i)] = s[i];
  return v;
}

ErrorImages error_images(const CodeSpec& code, const std::vector<Error>& errors) {
  code.validate();
  const QState logical[2] = {logical_state(code, 0), logical_state(code, 1)};
  ErrorImages out;
  auto add = [&](const Error& e) {
    out.names.push_back(e.name());
    out.images.push_back({to_eigen(apply_error(logical[0], e)),
                          to_eigen(apply_error(logical[1], e))});
    out.sparse.push_back({sparsify(out.images.back()[0]), sparsify(out.images.back()[1])});
  };
  add(Error::identity());
  for (const Error& e : errors) {
    if (!e.is_identity()) add(e);
  }
  return out;
}

Eigen::MatrixXcd lambda_matrix(const ErrorImages& im) {
  const auto m = static_cast<Eigen::Index>(im.images.size());
  Eigen::MatrixXcd lambda(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      lambda(i, j) = dot(im.sparse[i][0], im.sparse[j][0]);
    }
  }
  return lambda;
}

}  // namespace

ConditionReport kl_check(const CodeSpec& code, const std::vector<Error>& errors,
                         double tolerance) {
  const ErrorImages im = error_images(code, errors);
  ConditionReport report;
  report.lambda = lambda_matrix(im);
  const std::size_t m = im.images.size();
  for (std::size_t i = 0; i < m && report.satisfied; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto& e = im.sparse[i];
      const auto& f = im.sparse[j];
      Complex c01 = dot(e[0], f[1]);
      Complex c10 = dot(e[1], f[0]);
      Complex d00 = dot(e[0], f[0]);
      Complex d11 = dot(e[1], f[1]);
      if (std::abs(c01) > tolerance || std::abs(c10) > tolerance) {
        report.satisfied = false;
        report.witness = ConditionWitness{im.names[i], im.names[j], "cross",
                                          std::abs(c01) > tolerance ? c01 : c10};
        break;
      }
      if (std::abs(d00 - d11) > tolerance) {
        report.satisfied = false;
        report.witness = ConditionWitness{im.names[i], im.names[j], "diagonal", d00 - d11};
        break;
      }
    }
  }
  return report;
}

ConditionReport kl_check(const CodeSpec& code) { return kl_check(code, single_errors(code.n)); }

ConditionReport em_orthogonality_check(const CodeSpec& code, const std::vector<Error>& errors,
                                       double tolerance) {
  const ErrorImages im = error_images(code, errors);
  ConditionReport report;
  report.lambda = lambda_matrix(im);
  const std::size_t m = im.images.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Complex worst{0.0, 0.0};
      for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
          Complex x = dot(im.sparse[i][u], im.sparse[j][v]);
          if (std::abs(x) > std::abs(worst)) worst = x;
        }
      }
      if (std::abs(worst) <= tolerance) continue;
      report.collisions.emplace_back(im.names[i], im.names[j]);
      if (report.satisfied) {
        report.satisfied = false;
        report.witness = ConditionWitness{im.names[i], im.names[j], "overlap", worst};
      }
    }
  }
  return report;
}

ConditionReport em_orthogonality_check(const CodeSpec& code) {
  return em_orthogonality_check(code, single_errors(code.n));
}

int error_space_dimension(const CodeSpec& code, const std::vector<Error>& errors,
                          double relative_threshold) {
  const ErrorImages im = error_images(code, errors);
  const auto rows = im.images.front()[0].size();
  const auto cols = static_cast<Eigen::Index>(2 * im.images.size());
  Eigen::MatrixXcd span(rows, cols);
  for (std::size_t e = 0; e < im.images.size(); ++e) {
    span.col(static_cast<Eigen::Index>(2 * e)) = im.images[e][0];
    span.col(static_cast<Eigen::Index>(2 * e + 1)) = im.images[e][1];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(span);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv[k] > relative_threshold * sv[0]) ++rank;
  }
  return rank;
}

int error_space_dimension(const CodeSpec& code) {
  return error_space_dimension(code, single_errors(code.n));
}

}  // namespace decaycode
