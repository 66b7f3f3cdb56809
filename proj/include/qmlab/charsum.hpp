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

// Complete quadratic character sums with the Weil bound, Artin-Schreier
// solvability, and the trace-kernel description of B_1(1) in binary fields.

#ifndef QMLAB_CHARSUM_HPP_
#define QMLAB_CHARSUM_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "qmlab/galois.hpp"

namespace qmlab {

// Polynomial over F_q, constant term first.
using FieldPoly = std::vector<Elem>;

struct CharSumReport {
  FieldPoly poly;
  std::int64_t value = 0;  // sum over x of chi(f(x))
  std::size_t degree = 0;
  double bound = 0.0;  // (d - 1) sqrt(q)
  bool square_free = false;
  // Meaningful only when square_free.
  bool within_bound = false;
};

// Throws Errc::kUnsupportedField for p = 2 and Errc::kInvalidArgument when
// deg f < 1.
CharSumReport complete_char_sum(const FieldCtx& ctx, FieldPoly f);

// gcd(f, f') is a nonzero constant.
bool is_square_free(const FieldCtx& ctx, const FieldPoly& f);

struct ArtinSchreier {
  bool solvable = false;
  std::optional<Elem> root;  // the smaller of the two roots
};

// y^2 + y + c = 0 over a binary field. Throws Errc::kUnsupportedField for
// odd p.
ArtinSchreier artin_schreier_solvable(const FieldCtx& ctx, Elem c);

// For every nonzero y: y in B_1(1) iff Tr(1/y) = 0. Requires p = 2, e >= 3.
bool b11_trace_kernel_check(const FieldCtx& ctx);

}  // namespace qmlab

#endif  // QMLAB_CHARSUM_HPP_
