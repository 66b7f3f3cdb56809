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

#include "qmlab/charsum.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qmlab/error.hpp"
#include "qmlab/residues.hpp"
#include "qmlab/rscode.hpp"

namespace qmlab {
namespace {

void trim(FieldPoly& a) {
  while (!a.empty() && a.back().value == 0) a.pop_back();
}

FieldPoly poly_mod(const FieldCtx& ctx, FieldPoly a, const FieldPoly& f) {
  trim(a);
  const Elem lead_inv = ctx.inv(f.back());
  while (a.size() >= f.size()) {
    const Elem c = ctx.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) {
      a[shift + i] = ctx.sub(a[shift + i], ctx.mul(c, f[i]));
    }
    trim(a);
  }
  return a;
}

FieldPoly poly_gcd(const FieldCtx& ctx, FieldPoly a, FieldPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FieldPoly r = poly_mod(ctx, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Elem poly_eval(const FieldCtx& ctx, const FieldPoly& f, Elem x) {
  Elem acc = ctx.zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), f[i]);
  return acc;
}

}  // namespace

bool is_square_free(const FieldCtx& ctx, const FieldPoly& f_in) {
  FieldPoly f = f_in;
  trim(f);
  if (f.empty()) return false;
  FieldPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) {
    // The integer i lives in the prime subfield, whose encodings are 0..p-1.
    df.push_back(ctx.mul(f[i], Elem{static_cast<std::uint32_t>(i % ctx.p())}));
  }
  trim(df);
  if (df.empty()) return f.size() == 1;
  return poly_gcd(ctx, f, df).size() == 1;
}

CharSumReport complete_char_sum(const FieldCtx& ctx, FieldPoly f) {
  if (ctx.p() == 2) {
    throw Error(Errc::kUnsupportedField,
                "quadratic character sums need odd characteristic");
  }
  for (Elem c : f) {
    if (!ctx.contains(c)) {
      throw Error(Errc::kInvalidArgument, "coefficient out of range");
    }
  }
  trim(f);
  if (f.size() < 2) {
    throw Error(Errc::kInvalidArgument, "polynomial must have degree >= 1");
  }
  const ElemSet qr = quadratic_residues(ctx);
  CharSumReport r;
  r.poly = f;
  r.degree = f.size() - 1;
  for (std::uint32_t v = 0; v < ctx.q(); ++v) {
    const Elem y = poly_eval(ctx, f, Elem{v});
    if (y.value != 0) r.value += qr.contains(y) ? 1 : -1;
  }
  r.bound = static_cast<double>(r.degree - 1) *
            std::sqrt(static_cast<double>(ctx.q()));
  r.square_free = is_square_free(ctx, f);
  r.within_bound =
      r.square_free && static_cast<double>(std::llabs(r.value)) <= r.bound;
  return r;
}

ArtinSchreier artin_schreier_solvable(const FieldCtx& ctx, Elem c) {
  if (ctx.p() != 2) {
    throw Error(Errc::kUnsupportedField,
                "Artin-Schreier equations here need p = 2");
  }
  for (std::uint32_t v = 0; v < ctx.q(); ++v) {
    const Elem y{v};
    if (ctx.add(ctx.add(ctx.mul(y, y), y), c).value == 0) {
      return {true, y};
    }
  }
  return {false, std::nullopt};
}

bool b11_trace_kernel_check(const FieldCtx& ctx) {
  if (ctx.p() != 2 || ctx.e() < 3) {
    throw Error(Errc::kUnsupportedField,
                "the trace-kernel characterization needs p = 2 and e >= 3");
  }
  const ElemSet b = b11(ctx);
  for (std::uint32_t v = 1; v < ctx.q(); ++v) {
    const Elem y{v};
    const bool in_kernel = ctx.trace(ctx.inv(y)).value == 0;
    if (b.contains(y) != in_kernel) return false;
  }
  return true;
}

}  // namespace qmlab
