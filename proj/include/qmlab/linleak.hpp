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

// F_p-linear (trace) leakage: the Frobenius-matrix system, zero-trace lines,
// decompositions with distinct products and transcript collisions.

#ifndef QMLAB_LINLEAK_HPP_
#define QMLAB_LINLEAK_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "qmlab/galois.hpp"
#include "qmlab/rscode.hpp"

namespace qmlab {

// Leaks Tr(gamma f(alpha)) in F_p. alpha must be nonzero.
struct TraceQuery {
  Elem alpha;
  Elem gamma;
};

// Tr(gamma x).
Elem trace_leak(const FieldCtx& ctx, const TraceQuery& query, Elem x);

// Dense matrices over F_p, row-major.
using Matrix = std::vector<std::vector<std::uint32_t>>;

// Coordinates in the polynomial basis 1, x, ..., x^{e-1}.
class FrobeniusSystem {
 public:
  explicit FrobeniusSystem(FieldPtr ctx);

  const FieldPtr& ctx() const { return ctx_; }
  std::vector<std::uint32_t> psi(Elem a) const { return ctx_->digits(a); }
  Elem psi_inv(const std::vector<std::uint32_t>& v) const {
    return ctx_->from_digits(v);
  }
  // phi(a) psi(x) = psi(a x).
  Matrix phi(Elem a) const;
  // P psi(x) = psi(x^p).
  const Matrix& P() const { return P_; }
  Matrix P_pow(std::uint32_t w) const;

  Matrix mul(const Matrix& A, const Matrix& B) const;
  std::vector<std::uint32_t> apply(const Matrix& A,
                                   const std::vector<std::uint32_t>& v) const;
  // Row vector r with r . psi(x) = Tr(c x): row 0 of sum_w P^w phi(c).
  std::vector<std::uint32_t> trace_row(Elem c) const;

 private:
  FieldPtr ctx_;
  Matrix P_;
};

// Null space of A over F_p (A has n columns), one vector per free column of
// the reduced echelon form in column order.
std::vector<std::vector<std::uint32_t>> null_space(std::uint32_t p, Matrix A,
                                                   std::size_t n);

// The 2e columns hold psi(u) then psi(v); row z encodes Tr(g_z (u a_z + v)).
Matrix trace_constraints(const FrobeniusSystem& fs,
                         const std::vector<TraceQuery>& queries);

struct ZeroTraceLine {
  Elem u, v;            // h(x) = u x + v, (u, v) != (0, 0)
  std::size_t nullity;  // dimension of the solution space
};
// Needs exactly 2e - 1 queries. Takes the kernel vector of the first free
// column, scaled so its first nonzero entry is 1.
ZeroTraceLine zero_trace_line(const FrobeniusSystem& fs,
                              const std::vector<TraceQuery>& queries);

struct Decomposition {
  Elem m, m2, b, b2;  // u = m + m2, v = b + b2, m b != m2 b2
};
// First (m, b) in encoding order, m outer. Requires (u, v) != (0, 0).
Decomposition decompose(const FieldCtx& ctx, Elem u, Elem v);

struct Collision {
  MessageVec f;  // length k, coefficients in index order
  MessageVec l;
  Elem product_f, product_l;
  bool verified = false;  // equal trace transcripts, distinct products
};

// For k = 2: f = m x + b and l = -m2 x - b2 from the zero-trace line.
Collision transcript_collision(const FrobeniusSystem& fs,
                               const std::vector<TraceQuery>& queries);

// Collision for g_{i,j} on messages supported on {i, j}, via the relabeling
// beta = alpha^{j-i}, gamma' = gamma alpha^i for k > 2. Needs t = 2e - 1 and
// i != j; returns the verified collision.
Collision linear_collision(const FrobeniusSystem& fs, std::uint32_t k,
                           std::uint32_t i, std::uint32_t j,
                           const std::vector<TraceQuery>& queries);
bool linear_impossibility_check(const FrobeniusSystem& fs, std::uint32_t k,
                                std::uint32_t i, std::uint32_t j,
                                const std::vector<TraceQuery>& queries);

struct LinleakReport {
  std::uint32_t q = 0, k = 2, i = 0, j = 1, t = 0;
  std::uint64_t tuples = 0;
  std::uint64_t verified = 0;
  std::size_t min_nullity = 0;
  std::optional<std::vector<TraceQuery>> sample_queries;
  std::optional<Collision> sample;  // collision for the first tuple
  std::optional<std::vector<TraceQuery>> first_failure;
};
// Every tuple of 2e - 1 queries with alpha in F_q^* and gamma in F_q.
LinleakReport linleak_exhaustive(const FieldPtr& ctx, std::uint32_t k,
                                 std::uint32_t i, std::uint32_t j);
// `samples` tuples drawn from mt19937_64(seed).
LinleakReport linleak_sampled(const FieldPtr& ctx, std::uint32_t k,
                              std::uint32_t i, std::uint32_t j,
                              std::uint64_t samples, std::uint64_t seed);

}  // namespace qmlab

#endif  // QMLAB_LINLEAK_HPP_
