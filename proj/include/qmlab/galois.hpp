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

// Exact arithmetic in GF(p^e).
//
// Elements are encoded as integers 0..q-1 by packing the polynomial-basis
// coefficients as little-endian base-p digits: the element
// c_0 + c_1 x + ... + c_{e-1} x^{e-1} has encoding sum_i c_i p^i. Encoding 0
// is the additive identity and encoding 1 the multiplicative identity.

#ifndef QMLAB_GALOIS_HPP_
#define QMLAB_GALOIS_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace qmlab {

// A field element, meaningful only together with the FieldCtx it came from.
struct Elem {
  std::uint32_t value = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx {
 public:
  // Uses the smallest monic irreducible of degree e (see
  // smallest_irreducible).
  FieldCtx(std::uint32_t p, std::uint32_t e);
  // `irreducible` lists coefficients constant term first and must be monic of
  // degree e and irreducible over F_p; throws Errc::kInvalidField otherwise.
  FieldCtx(std::uint32_t p, std::uint32_t e,
           std::vector<std::uint32_t> irreducible);

  static FieldPtr make(std::uint32_t p, std::uint32_t e);
  static FieldPtr make(std::uint32_t p, std::uint32_t e,
                       std::vector<std::uint32_t> irreducible);
  // Factors q as p^e; throws Errc::kUnsupportedField when q is not a prime
  // power in [2, kMaxFieldOrder].
  static FieldPtr of_order(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& irreducible() const { return irreducible_; }

  // Checked conversion from an encoding.
  Elem elem(std::uint32_t value) const;
  bool contains(Elem a) const { return a.value < q_; }
  static constexpr Elem zero() { return Elem{0}; }
  static constexpr Elem one() { return Elem{1}; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const { return Elem{neg_[a.value]}; }
  Elem mul(Elem a, Elem b) const {
    if (a.value == 0 || b.value == 0) return Elem{0};
    return Elem{exp_[log_[a.value] + log_[b.value]]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t n) const;
  // x -> x^p.
  Elem frobenius(Elem a) const { return pow(a, p_); }
  // Tr(x) = x + x^p + ... + x^{p^{e-1}}; the result lies in F_p (encoding < p).
  Elem trace(Elem a) const { return Elem{trace_[a.value]}; }

  // Discrete logarithm to the base generator(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const { return Elem{exp_[k % (q_ - 1)]}; }
  // Smallest-encoding generator of F_q^*.
  Elem generator() const { return generator_; }
  bool is_primitive(Elem a) const;

  // Base-p digits (polynomial-basis coordinates), length e.
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& digits) const;

 private:
  void build();

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> irreducible_;
  Elem generator_;
  // exp_ is doubled so mul() can skip the modular reduction.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> trace_;
  std::vector<std::uint32_t> add_table_;  // only for small q
};

// Lexicographically smallest monic irreducible of degree e over F_p, where
// coefficient vectors are compared as little-endian base-p integers.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p,
                                                std::uint32_t e);
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);
bool is_prime(std::uint32_t n);

// Smallest-encoding primitive element.
Elem find_primitive(const FieldCtx& ctx);
// Smallest-encoding primitive w with Tr(1/w) = 0. Requires p = 2, e >= 3.
Elem find_primitive_zero_inv_trace(const FieldCtx& ctx);

}  // namespace qmlab

#endif  // QMLAB_GALOIS_HPP_
