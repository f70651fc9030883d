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

#include <stdexcept>

#include "decaycode/verify.hpp"

namespace decaycode {

BoundResult sphere_bound(const BoundQuery& q) {
  if (q.l < 1 || q.n < 1 || q.t < 0) {
    throw std::invalid_argument("bound query needs l >= 1, n >= 1, t >= 0");
  }
  BigInt sum = 0;
  BigInt binom = 1;  // C(n, i)
  BigInt three = 1;  // 3^i
  for (int i = 0; i <= q.t && i <= q.n; ++i) {
    if (i > 0) {
      binom = binom * (q.n - i + 1) / i;
      three *= 3;
    }
    sum += three * binom;
  }
  BoundResult r;
  r.lhs = (BigInt{1} << q.l) * sum;
  r.rhs = BigInt{1} << q.n;
  r.holds = r.lhs <= r.rhs;
  return r;
}

std::optional<int> minimal_physical_qubits(int l, int t, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    if (sphere_bound({l, n, t}).holds) return n;
  }
  return std::nullopt;
}

}  // namespace decaycode
