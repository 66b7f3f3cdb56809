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

#include "qmlab/linleak.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "qmlab/error.hpp"
#include "qmlab/qm.hpp"

namespace qmlab {
namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, n = p - 2;
  while (n) {
    if (n & 1) r = r * b % p;
    b = b * b % p;
    n >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

void check_queries(const FieldCtx& ctx, const std::vector<TraceQuery>& qs) {
  const std::size_t t = 2 * ctx.e() - 1;
  if (qs.size() != t) {
    throw Error(Errc::kInvalidArgument, "need exactly 2e - 1 = " +
                                            std::to_string(t) + " queries");
  }
  for (const TraceQuery& q : qs) {
    if (q.alpha.value == 0 || !ctx.contains(q.alpha) || !ctx.contains(q.gamma)) {
      throw Error(Errc::kInvalidArgument, "query needs alpha != 0 in F_q");
    }
  }
}

}  // namespace

Elem trace_leak(const FieldCtx& ctx, const TraceQuery& query, Elem x) {
  return ctx.trace(ctx.mul(query.gamma, x));
}

FrobeniusSystem::FrobeniusSystem(FieldPtr ctx) : ctx_(std::move(ctx)) {
  const std::uint32_t e = ctx_->e();
  P_.assign(e, std::vector<std::uint32_t>(e, 0));
  std::uint32_t basis = 1;
  for (std::uint32_t c = 0; c < e; ++c, basis *= ctx_->p()) {
    const auto col = psi(ctx_->frobenius(Elem{basis}));
    for (std::uint32_t r = 0; r < e; ++r) P_[r][c] = col[r];
  }
}

Matrix FrobeniusSystem::phi(Elem a) const {
  const std::uint32_t e = ctx_->e();
  Matrix M(e, std::vector<std::uint32_t>(e, 0));
  std::uint32_t basis = 1;
  for (std::uint32_t c = 0; c < e; ++c, basis *= ctx_->p()) {
    const auto col = psi(ctx_->mul(a, Elem{basis}));
    for (std::uint32_t r = 0; r < e; ++r) M[r][c] = col[r];
  }
  return M;
}

Matrix FrobeniusSystem::mul(const Matrix& A, const Matrix& B) const {
  const std::uint64_t p = ctx_->p();
  Matrix C(A.size(), std::vector<std::uint32_t>(B.empty() ? 0 : B[0].size(), 0));
  for (std::size_t r = 0; r < A.size(); ++r) {
    for (std::size_t c = 0; c < C[r].size(); ++c) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < B.size(); ++k) s += std::uint64_t{A[r][k]} * B[k][c];
      C[r][c] = static_cast<std::uint32_t>(s % p);
    }
  }
  return C;
}

Matrix FrobeniusSystem::P_pow(std::uint32_t w) const {
  const std::uint32_t e = ctx_->e();
  Matrix M(e, std::vector<std::uint32_t>(e, 0));
  for (std::uint32_t r = 0; r < e; ++r) M[r][r] = 1;
  for (std::uint32_t s = 0; s < w; ++s) M = mul(P_, M);
  return M;
}

std::vector<std::uint32_t> FrobeniusSystem::apply(
    const Matrix& A, const std::vector<std::uint32_t>& v) const {
  const std::uint64_t p = ctx_->p();
  std::vector<std::uint32_t> out(A.size(), 0);
  for (std::size_t r = 0; r < A.size(); ++r) {
    std::uint64_t s = 0;
    for (std::size_t c = 0; c < v.size(); ++c) s += std::uint64_t{A[r][c]} * v[c];
    out[r] = static_cast<std::uint32_t>(s % p);
  }
  return out;
}

std::vector<std::uint32_t> FrobeniusSystem::trace_row(Elem c) const {
  const std::uint32_t e = ctx_->e();
  const std::uint32_t p = ctx_->p();
  Matrix M = phi(c);
  std::vector<std::uint32_t> row = M[0];
  for (std::uint32_t w = 1; w < e; ++w) {
    M = mul(P_, M);
    for (std::uint32_t k = 0; k < e; ++k) row[k] = (row[k] + M[0][k]) % p;
  }
  return row;
}

std::vector<std::vector<std::uint32_t>> null_space(std::uint32_t p, Matrix A,
                                                   std::size_t n) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < A.size(); ++c) {
    std::size_t r = row;
    while (r < A.size() && A[r][c] == 0) ++r;
    if (r == A.size()) continue;
    std::swap(A[r], A[row]);
    const std::uint64_t s = inv_mod(A[row][c], p);
    for (auto& x : A[row]) x = static_cast<std::uint32_t>(x * s % p);
    for (std::size_t k = 0; k < A.size(); ++k) {
      if (k == row || A[k][c] == 0) continue;
      const std::uint64_t f = A[k][c];
      for (std::size_t j = 0; j < n; ++j) {
        A[k][j] = static_cast<std::uint32_t>(
            (A[k][j] + (p - f) * A[row][j]) % p);
      }
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<std::vector<std::uint32_t>> basis;
  std::vector<char> is_pivot(n, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      v[pivot_col[r]] = (p - A[r][free]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix trace_constraints(const FrobeniusSystem& fs,
                         const std::vector<TraceQuery>& queries) {
  const FieldCtx& f = *fs.ctx();
  Matrix A;
  for (const TraceQuery& q : queries) {
    std::vector<std::uint32_t> row = fs.trace_row(f.mul(q.gamma, q.alpha));
    const std::vector<std::uint32_t> rv = fs.trace_row(q.gamma);
    row.insert(row.end(), rv.begin(), rv.end());
    A.push_back(std::move(row));
  }
  return A;
}

ZeroTraceLine zero_trace_line(const FrobeniusSystem& fs,
                              const std::vector<TraceQuery>& queries) {
  const FieldCtx& f = *fs.ctx();
  check_queries(f, queries);
  const std::uint32_t e = f.e();
  const auto ns = null_space(f.p(), trace_constraints(fs, queries), 2 * e);
  std::vector<std::uint32_t> v = ns.front();  // nonempty: rank <= 2e - 1
  const auto lead = std::find_if(v.begin(), v.end(),
                                 [](std::uint32_t x) { return x != 0; });
  const std::uint64_t s = inv_mod(*lead, f.p());
  for (auto& x : v) x = static_cast<std::uint32_t>(x * s % f.p());
  ZeroTraceLine out;
  out.u = fs.psi_inv({v.begin(), v.begin() + e});
  out.v = fs.psi_inv({v.begin() + e, v.end()});
  out.nullity = ns.size();
  return out;
}

Decomposition decompose(const FieldCtx& ctx, Elem u, Elem v) {
  if (u.value == 0 && v.value == 0) {
    throw Error(Errc::kPreconditionViolated, "decompose needs (u, v) != 0");
  }
  for (std::uint32_t m = 0; m < ctx.q(); ++m) {
    for (std::uint32_t b = 0; b < ctx.q(); ++b) {
      const Elem m2 = ctx.sub(u, Elem{m});
      const Elem b2 = ctx.sub(v, Elem{b});
      if (ctx.mul(Elem{m}, Elem{b}) != ctx.mul(m2, b2)) {
        return {Elem{m}, m2, Elem{b}, b2};
      }
    }
  }
  throw Error(Errc::kPreconditionViolated, "no decomposition found");
}

Collision linear_collision(const FrobeniusSystem& fs, std::uint32_t k,
                           std::uint32_t i, std::uint32_t j,
                           const std::vector<TraceQuery>& queries) {
  const FieldCtx& f = *fs.ctx();
  if (i == j || i >= k || j >= k) {
    throw Error(Errc::kInvalidArgument, "need distinct i, j < k");
  }
  check_queries(f, queries);
  const std::uint32_t lo = std::min(i, j), hi = std::max(i, j);
  // Tr(g F(a)) = Tr(g a^lo (c_lo + c_hi a^r)) for F supported on {lo, hi}.
  std::vector<TraceQuery> local;
  for (const TraceQuery& q : queries) {
    const KReduction kr = reduce_k_to_2(f, k, lo, hi, q.alpha);
    local.push_back({kr.beta, f.div(q.gamma, kr.rescale)});
  }
  const ZeroTraceLine z = zero_trace_line(fs, local);
  const Decomposition d = decompose(f, z.u, z.v);

  Collision c;
  c.f.assign(k, Elem{0});
  c.l.assign(k, Elem{0});
  c.f[lo] = d.b;
  c.f[hi] = d.m;
  c.l[lo] = f.neg(d.b2);
  c.l[hi] = f.neg(d.m2);
  c.product_f = f.mul(c.f[i], c.f[j]);
  c.product_l = f.mul(c.l[i], c.l[j]);
  c.verified = c.product_f != c.product_l;
  for (const TraceQuery& q : queries) {
    if (trace_leak(f, q, eval(f, c.f, q.alpha)) !=
        trace_leak(f, q, eval(f, c.l, q.alpha))) {
      c.verified = false;
    }
  }
  return c;
}

Collision transcript_collision(const FrobeniusSystem& fs,
                               const std::vector<TraceQuery>& queries) {
  return linear_collision(fs, 2, 0, 1, queries);
}

bool linear_impossibility_check(const FrobeniusSystem& fs, std::uint32_t k,
                                std::uint32_t i, std::uint32_t j,
                                const std::vector<TraceQuery>& queries) {
  return linear_collision(fs, k, i, j, queries).verified;
}

namespace {

void record(const FrobeniusSystem& fs, LinleakReport& rep, std::uint32_t k,
            std::uint32_t i, std::uint32_t j,
            const std::vector<TraceQuery>& qs) {
  const Collision c = linear_collision(fs, k, i, j, qs);
  const std::size_t nullity = zero_trace_line(fs, qs).nullity;
  if (rep.tuples == 0 || nullity < rep.min_nullity) rep.min_nullity = nullity;
  if (rep.tuples == 0) {
    rep.sample_queries = qs;
    rep.sample = c;
  }
  ++rep.tuples;
  if (c.verified) {
    ++rep.verified;
  } else if (!rep.first_failure) {
    rep.first_failure = qs;
  }
}

LinleakReport new_report(const FieldCtx& f, std::uint32_t k, std::uint32_t i,
                         std::uint32_t j) {
  LinleakReport rep;
  rep.q = f.q();
  rep.k = k;
  rep.i = i;
  rep.j = j;
  rep.t = 2 * f.e() - 1;
  return rep;
}

}  // namespace

LinleakReport linleak_exhaustive(const FieldPtr& ctx, std::uint32_t k,
                                 std::uint32_t i, std::uint32_t j) {
  const FieldCtx& f = *ctx;
  LinleakReport rep = new_report(f, k, i, j);
  const std::uint64_t per = std::uint64_t{f.q() - 1} * f.q();
  double total = 1;
  for (std::uint32_t z = 0; z < rep.t; ++z) total *= double(per);
  if (total > 1e7) {
    throw Error(Errc::kInvalidArgument,
                "more than 10^7 query tuples; use sampling");
  }
  const FrobeniusSystem fs(ctx);
  std::vector<std::uint64_t> digit(rep.t, 0);
  std::vector<TraceQuery> qs(rep.t);
  while (true) {
    for (std::uint32_t z = 0; z < rep.t; ++z) {
      qs[z] = {Elem{static_cast<std::uint32_t>(1 + digit[z] / f.q())},
               Elem{static_cast<std::uint32_t>(digit[z] % f.q())}};
    }
    record(fs, rep, k, i, j, qs);
    std::uint32_t z = 0;
    while (z < rep.t && ++digit[z] == per) digit[z++] = 0;
    if (z == rep.t) break;
  }
  return rep;
}

LinleakReport linleak_sampled(const FieldPtr& ctx, std::uint32_t k,
                              std::uint32_t i, std::uint32_t j,
                              std::uint64_t samples, std::uint64_t seed) {
  const FieldCtx& f = *ctx;
  LinleakReport rep = new_report(f, k, i, j);
  const FrobeniusSystem fs(ctx);
  std::mt19937_64 rng(seed);
  std::vector<TraceQuery> qs(rep.t);
  for (std::uint64_t n = 0; n < samples; ++n) {
    for (auto& q : qs) {
      q.alpha = Elem{static_cast<std::uint32_t>(1 + rng() % (f.q() - 1))};
      q.gamma = Elem{static_cast<std::uint32_t>(rng() % f.q())};
    }
    record(fs, rep, k, i, j, qs);
  }
  return rep;
}

}  // namespace qmlab
