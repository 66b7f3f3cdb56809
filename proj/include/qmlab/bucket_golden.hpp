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

// Bucket images B_g(alpha) over F_7, transcribed by hand in +-notation.
// Row alpha, column g. "F" is F_7 and "F*" is F_7 minus 0.

#ifndef QMLAB_BUCKET_GOLDEN_HPP_
#define QMLAB_BUCKET_GOLDEN_HPP_

#include <cstdint>
#include <set>
#include <sstream>
#include <string>

namespace qmlab {

inline const char* const kBucketGolden[7][7] = {
    {"F", "F*", "F*", "F*", "F*", "F*", "F*"},
    {"F", "+-1 +-2", "+-1 +-3", "0 +-3", "+-2 +-3", "0 +-1", "0 +-2"},
    {"F", "+-1 +-3", "+-2 +-3", "0 +-2", "+-1 +-2", "0 +-3", "0 +-1"},
    {"F", "0 +-3", "0 +-2", "+-1 +-3", "0 +-1", "+-1 +-2", "+-2 +-3"},
    {"F", "+-2 +-3", "+-1 +-2", "0 +-1", "+-1 +-3", "0 +-2", "0 +-3"},
    {"F", "0 +-1", "0 +-3", "+-1 +-2", "0 +-2", "+-2 +-3", "+-1 +-3"},
    {"F", "0 +-2", "0 +-1", "+-2 +-3", "0 +-3", "+-1 +-3", "+-1 +-2"},
};

// Expands a cell to residues mod 7.
inline std::set<std::uint32_t> expand_cell(const std::string& cell) {
  std::set<std::uint32_t> out;
  if (cell == "F" || cell == "F*") {
    for (std::uint32_t v = cell == "F" ? 0 : 1; v < 7; ++v) out.insert(v);
    return out;
  }
  std::istringstream in(cell);
  std::string tok;
  while (in >> tok) {
    if (tok.rfind("+-", 0) == 0) {
      const std::uint32_t k = std::stoul(tok.substr(2));
      out.insert(k % 7);
      out.insert((7 - k) % 7);
    } else {
      out.insert(std::stoul(tok) % 7);
    }
  }
  return out;
}

}  // namespace qmlab

#endif  // QMLAB_BUCKET_GOLDEN_HPP_
