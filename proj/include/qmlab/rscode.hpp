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

// Reed-Solomon messages and codewords, gamma-buckets of lines, their
// evaluation images, and the alpha-relabel symmetry.

#ifndef QMLAB_RSCODE_HPP_
#define QMLAB_RSCODE_HPP_

#include <vector>

#include "qmlab/elemset.hpp"
#include "qmlab/galois.hpp"
#include "qmlab/residues.hpp"

namespace qmlab {

// f(x) = m x + b.
struct Line {
  Elem m;
  Elem b;
  Elem product;  // m * b

  friend bool operator==(const Line&, const Line&) = default;
};

Line make_line(const FieldCtx& ctx, Elem m, Elem b);
Elem eval(const FieldCtx& ctx, const Line& f, Elem x);

// Coefficients f_0..f_{k-1}, constant term first.
using MessageVec = std::vector<Elem>;

Elem eval(const FieldCtx& ctx, const MessageVec& f, Elem x);
// Throws Errc::kDuplicatePoints on repeated points and
// Errc::kInvalidArgument when f has more coefficients than points.
std::vector<Elem> encode(const FieldCtx& ctx, const MessageVec& f,
                         const std::vector<Elem>& points);

struct Bucket {
  Elem gamma;
  std::vector<Line> lines;  // by slope, then constant
};

// All lines with m * b = gamma: q - 1 lines for gamma != 0, 2q - 1 for 0.
Bucket bucket(const FieldCtx& ctx, Elem gamma);
// B_gamma(alpha) = {f(alpha) : f in B_gamma}.
ElemSet bucket_eval(const FieldCtx& ctx, Elem gamma, Elem alpha);

// B_1(1) = {m + 1/m : m in F_q^*}; size (q+1)/2 for odd p and q/2 for p = 2.
// Throws Errc::kUnsupportedField for q in {2, 4}.
ElemSet b11(const FieldCtx& ctx);
// Same set without the field restriction.
ElemSet b11_unchecked(const FieldCtx& ctx);

// g_m(1) = m + 1/m.
Elem g_at_one(const FieldCtx& ctx, Elem m);

// h_m^g = (sqrt(g)/m) x + m sqrt(g); requires g in Omega_q and m != 0.
Line h_line(const SqrtSystem& sys, Elem gamma, Elem m);
// Recovers m from a line of the form h_m^g; throws Errc::kInvalidArgument if
// the line is not of that form.
Elem h_slope_index(const SqrtSystem& sys, const Line& h);

// h_m^g -> h_{m sqrt(alpha)}^g. Throws Errc::kRegimeMismatch when alpha or g
// is outside Omega_q.
Line relabel(const SqrtSystem& sys, const Line& h, Elem alpha);

// Whether B_g(alpha) = (sqrt(g) sqrt(alpha) / (sqrt(d) sqrt(beta))) B_d(beta).
// Throws Errc::kRegimeMismatch when an argument is outside Omega_q.
bool scalar_evolution(const SqrtSystem& sys, Elem gamma, Elem alpha,
                      Elem delta, Elem beta);

}  // namespace qmlab

#endif  // QMLAB_RSCODE_HPP_
