// Copyright 2026 The qmlab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMLAB_TESTS_FIELD_LIST_HPP_
#define QMLAB_TESTS_FIELD_LIST_HPP_

#include <cstdint>
#include <vector>

namespace qmlab::testing {

inline bool is_prime_power(std::uint32_t n) {
  for (std::uint32_t d = 2; d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      return n == 1;
    }
  }
  return false;
}

// Prime powers in [lo, hi], optionally odd or even only.
inline std::vector<std::uint32_t> prime_powers(std::uint32_t lo,
                                               std::uint32_t hi,
                                               int parity = -1) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = lo; q <= hi; ++q) {
    if (!is_prime_power(q)) continue;
    if (parity == 0 && q % 2 != 0) continue;
    if (parity == 1 && q % 2 == 0) continue;
    out.push_back(q);
  }
  return out;
}

// Fields that carry a square-root system: odd q != 5 and 2^e with e >= 3.
inline std::vector<std::uint32_t> sqrt_fields(std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q : prime_powers(3, hi)) {
    if (q != 4 && q != 5) out.push_back(q);
  }
  return out;
}

}  // namespace qmlab::testing

#endif  // QMLAB_TESTS_FIELD_LIST_HPP_
