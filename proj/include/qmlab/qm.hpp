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

// Leakage schemes, the QM algorithm, scheme verification, the mQM
// restriction, eliminator conversion and the k > 2 reduction.

#ifndef QMLAB_QM_HPP_
#define QMLAB_QM_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "qmlab/elemset.hpp"
#include "qmlab/galois.hpp"
#include "qmlab/residues.hpp"
#include "qmlab/rscode.hpp"

namespace qmlab {

// t one-bit queries: round z leaks bit 0 iff f(schedule[z]) is in sets[z].
struct LeakageScheme {
  FieldPtr ctx;
  std::uint32_t k = 2;
  std::uint32_t i = 0;
  std::uint32_t j = 1;
  std::vector<Elem> servers;
  std::vector<Elem> schedule;
  std::vector<ElemSet> sets;

  std::size_t t() const { return schedule.size(); }
  // Throws Errc::kInvalidScheme when an invariant fails.
  void validate() const;
};

using Transcript = std::vector<std::uint8_t>;  // one bit per entry

inline int leak_bit(const ElemSet& T, Elem x) { return T.contains(x) ? 0 : 1; }

Transcript transcript(const LeakageScheme& scheme, const MessageVec& f);

// Products the reconstruction must distinguish.
enum class ProductDomain { kAll, kOmega, kNonzero };
std::string_view domain_name(ProductDomain d);
ProductDomain parse_domain(std::string_view name);
ElemSet domain_mask(const FieldPtr& ctx, ProductDomain d);

// f_i * f_j for the scheme's (i, j).
Elem coefficient_product(const FieldCtx& ctx, const MessageVec& f,
                         std::uint32_t i, std::uint32_t j);

// Visits every length-k message whose (i, j) product lies in `products`, in
// lexicographic order of (f_{k-1}, ..., f_0) encodings. For k = 2 this walks
// lines by slope, then constant.
void for_each_message(const FieldCtx& ctx, std::uint32_t k, std::uint32_t i,
                      std::uint32_t j, const ElemSet& products,
                      const std::function<void(const MessageVec&)>& visit);

enum class QmStatus { kSuccess, kInvalidTranscript, kFail };
std::string_view status_name(QmStatus s);

struct QmOutcome {
  QmStatus status = QmStatus::kFail;
  Elem gamma;  // meaningful on kSuccess

  friend bool operator==(const QmOutcome&, const QmOutcome&) = default;
};

// QM on leaked bits: round z keeps the messages f with
// leak_bit(T_z, f(alpha_z)) = b_z. Pruning by T_z on bit 0 instead
// is the same run on the complemented bits. Buckets start as every
// message whose product lies in `products`.
QmOutcome run_qm(const LeakageScheme& scheme, const Transcript& b,
                 const ElemSet& products);
QmOutcome run_qm(const LeakageScheme& scheme, const Transcript& b);

// Two messages with equal transcripts and different products.
struct SchemeCollision {
  MessageVec f;  // visited first
  MessageVec l;
  Transcript bits;
};
// The first l in for_each_message order whose transcript matches an earlier
// message with a different product.
std::optional<SchemeCollision> find_collision(const LeakageScheme& scheme,
                                              ProductDomain domain);

// Messages with different products in the domain have different transcripts.
bool verify_scheme(const LeakageScheme& scheme, ProductDomain domain);
// Same property via run_qm on every message's transcript.
bool verify_scheme_by_algorithm(const LeakageScheme& scheme,
                                ProductDomain domain);

// Requires k = 2, i = 0, j = 1.
bool mqm_check(const LeakageScheme& scheme);

// Reads f(alpha) bit by bit at each server: one round per (server, bit) with
// T = {x : bit c of the encoding of x is 0}, c < ceil(log2 q). Valid for any
// domain once two distinct servers are given. k = 2, i = 0, j = 1.
LeakageScheme bitsliced_scheme(const FieldPtr& ctx, std::vector<Elem> servers);

// V = (1/sqrt(alpha)) {phi(h)(alpha) : h in B_g, g in Omega_q, h(alpha) in T},
// where phi is the alpha-relabel. Throws Errc::kRegimeMismatch when alpha is
// outside Omega_q.
ElemSet convert_eliminator(const SqrtSystem& sys, const ElemSet& T,
                           Elem alpha);
// Union over g in Omega_q of sqrt(g) {g_m(1) : h_m^g(alpha) in T}.
ElemSet convert_eliminator_closed_form(const SqrtSystem& sys, const ElemSet& T,
                                       Elem alpha);

// Local view of a server at alpha for messages supported on {i, j}: the
// symbol is scaled by alpha^{-i} and re-indexed by beta = alpha^r, r = j - i.
struct KReduction {
  Elem rescale;  // alpha^{-i}
  Elem beta;     // alpha^r
  std::uint32_t r = 1;
};
// Requires i < j < k and alpha != 0.
KReduction reduce_k_to_2(const FieldCtx& ctx, std::uint32_t k, std::uint32_t i,
                         std::uint32_t j, Elem alpha);
// {x^r : x in F_q^*}.
ElemSet reachable_betas(const FieldCtx& ctx, std::uint32_t r);

}  // namespace qmlab

#endif  // QMLAB_QM_HPP_
