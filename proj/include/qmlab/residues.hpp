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

// The restricted set Omega_q, quadratic and quartic residues, and the
// canonical square-root systems with their scaled pairs.

#ifndef QMLAB_RESIDUES_HPP_
#define QMLAB_RESIDUES_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qmlab/elemset.hpp"
#include "qmlab/galois.hpp"

namespace qmlab {

enum class OmegaKind { kQR, kW };

// Omega_q is QR_q for odd p and W_q = {w^{2i} : 0 <= i <= 2^{e-1}-2} for
// p = 2, e >= 3, where w = find_primitive_zero_inv_trace.
struct OmegaSet {
  FieldPtr ctx;
  OmegaKind kind = OmegaKind::kQR;
  std::vector<Elem> elements;  // ascending encoding for QR, i order for W
  ElemSet mask;
  Elem omega;  // W only

  bool contains(Elem x) const { return mask.contains(x); }
};

// Throws Errc::kUnsupportedField for q in {2, 4}.
OmegaSet omega_set(const FieldPtr& ctx);

// p odd only.
ElemSet quadratic_residues(const FieldCtx& ctx);
int quadratic_character(const FieldCtx& ctx, Elem x);
bool minus_one_is_residue(const FieldCtx& ctx);
ElemSet quartic_residues(const FieldCtx& ctx);

enum class Regime { kP3Mod4EOdd, kP1Mod4OrEEven, kBinary };
std::string_view regime_name(Regime r);
Regime detect_regime(const FieldCtx& ctx);

struct ScaledPair {
  Elem a;  // in Omega_q and B_1(1)
  Elem b;  // in (F_q^* \ Omega_q) and B_1(1)
};

// Binary: a = w^{2^{e-1}}, b = w. Odd: lexicographically smallest (a, b)
// with a in QR_q, b a non-residue, both in B_1(1) \ {0}. Throws
// Errc::kNoPairExists when B_1(1) \ {0} lacks a residue or a non-residue,
// which happens for q = 5 and q = 9 among odd q <= 121; throws
// Errc::kUnsupportedField for q in {2, 4}.
ScaledPair canonical_scaled_pair(const FieldPtr& ctx);

// {(a/b) root_of[g] : g in R_q(4)}. root_of is indexed by encoding and must
// give a residue root for each quartic residue.
ElemSet upsilon_set(const FieldCtx& ctx, Elem a, Elem b,
                    const std::vector<Elem>& root_of);

class SqrtSystem {
 public:
  const FieldPtr& ctx() const { return ctx_; }
  const OmegaSet& omega_set() const { return omega_; }
  Regime regime() const { return regime_; }
  bool has_scaled_pair() const { return pair_.has_value(); }
  // Throws Errc::kNoPairExists when the field has no scaled pair.
  const ScaledPair& pair() const;
  // The (a, b) that defines Upsilon: the scaled pair when one exists,
  // otherwise a = 1 and b the smallest non-residue.
  const ScaledPair& upsilon_pair() const { return upsilon_pair_; }
  // Empty outside kP1Mod4OrEEven.
  const ElemSet& upsilon() const { return upsilon_; }

  // Throws Errc::kRegimeMismatch when g is not in Omega_q.
  Elem sqrt(Elem g) const;

 private:
  friend SqrtSystem build_sqrt_system(const FieldPtr& ctx);

  FieldPtr ctx_;
  OmegaSet omega_;
  Regime regime_ = Regime::kP3Mod4EOdd;
  std::optional<ScaledPair> pair_;
  ScaledPair upsilon_pair_;
  ElemSet upsilon_;
  std::vector<Elem> root_;  // indexed by encoding; meaningful on Omega_q
};

// Every choice left open resolves to the smallest admissible encoding.
// Throws Errc::kUnsupportedField for q in {2, 4, 5}.
SqrtSystem build_sqrt_system(const FieldPtr& ctx);

// Same as canonical_scaled_pair(sys.ctx()).
ScaledPair scaled_pair(const SqrtSystem& sys);

// |union over g in Omega_q \ {delta} of sqrt(g) * {a, b}|. Throws
// Errc::kInvalidDelta when delta is not in Omega_q.
std::size_t scaled_pair_union_size(const SqrtSystem& sys,
                                   const ScaledPair& pair, Elem delta);

}  // namespace qmlab

#endif  // QMLAB_RESIDUES_HPP_
