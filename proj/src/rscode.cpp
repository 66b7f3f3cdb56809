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

#include "qmlab/rscode.hpp"

#include <string>

#include "qmlab/error.hpp"

namespace qmlab {

Line make_line(const FieldCtx& ctx, Elem m, Elem b) {
  return Line{m, b, ctx.mul(m, b)};
}

Elem eval(const FieldCtx& ctx, const Line& f, Elem x) {
  return ctx.add(ctx.mul(f.m, x), f.b);
}

Elem eval(const FieldCtx& ctx, const MessageVec& f, Elem x) {
  Elem acc = ctx.zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), f[i]);
  return acc;
}

std::vector<Elem> encode(const FieldCtx& ctx, const MessageVec& f,
                         const std::vector<Elem>& points) {
  if (f.size() > points.size()) {
    throw Error(Errc::kInvalidArgument,
                "dimension " + std::to_string(f.size()) + " exceeds " +
                    std::to_string(points.size()) + " evaluation points");
  }
  ElemSet seen(ctx.q());
  std::vector<Elem> out;
  out.reserve(points.size());
  for (Elem x : points) {
    if (!ctx.contains(x)) {
      throw Error(Errc::kInvalidArgument, "evaluation point out of range");
    }
    if (seen.contains(x)) {
      throw Error(Errc::kDuplicatePoints,
                  "evaluation point " + std::to_string(x.value) + " repeats");
    }
    seen.insert(x);
    out.push_back(eval(ctx, f, x));
  }
  return out;
}

Bucket bucket(const FieldCtx& ctx, Elem gamma) {
  Bucket out{gamma, {}};
  for (std::uint32_t mv = 0; mv < ctx.q(); ++mv) {
    const Elem m{mv};
    if (mv == 0) {
      if (gamma.value != 0) continue;
      for (std::uint32_t bv = 0; bv < ctx.q(); ++bv) {
        out.lines.push_back(make_line(ctx, m, Elem{bv}));
      }
    } else {
      out.lines.push_back(make_line(ctx, m, ctx.div(gamma, m)));
    }
  }
  return out;
}

ElemSet bucket_eval(const FieldCtx& ctx, Elem gamma, Elem alpha) {
  ElemSet out(ctx.q());
  for (const Line& f : bucket(ctx, gamma).lines) out.insert(eval(ctx, f, alpha));
  return out;
}

Elem g_at_one(const FieldCtx& ctx, Elem m) {
  return ctx.add(m, ctx.inv(m));
}

ElemSet b11_unchecked(const FieldCtx& ctx) {
  ElemSet out(ctx.q());
  for (std::uint32_t v = 1; v < ctx.q(); ++v) out.insert(g_at_one(ctx, Elem{v}));
  return out;
}

ElemSet b11(const FieldCtx& ctx) {
  if (ctx.q() == 2 || ctx.q() == 4) {
    throw Error(Errc::kUnsupportedField,
                "B_1(1) is excluded for q=" + std::to_string(ctx.q()));
  }
  ElemSet out = b11_unchecked(ctx);
  const std::size_t want = ctx.p() == 2 ? ctx.q() / 2 : (ctx.q() + 1) / 2;
  if (out.size() != want) {
    throw Error(Errc::kInvalidField, "|B_1(1)| = " + std::to_string(out.size()) +
                                         ", expected " + std::to_string(want));
  }
  return out;
}

Line h_line(const SqrtSystem& sys, Elem gamma, Elem m) {
  const FieldCtx& f = *sys.ctx();
  const Elem r = sys.sqrt(gamma);
  return make_line(f, f.div(r, m), f.mul(m, r));
}

Elem h_slope_index(const SqrtSystem& sys, const Line& h) {
  const FieldCtx& f = *sys.ctx();
  const Elem r = sys.sqrt(h.product);
  const Elem m = f.div(h.b, r);
  if (m.value == 0 || h_line(sys, h.product, m) != h) {
    throw Error(Errc::kInvalidArgument, "line is not of the form h_m^gamma");
  }
  return m;
}

Line relabel(const SqrtSystem& sys, const Line& h, Elem alpha) {
  const Elem m = h_slope_index(sys, h);
  const Elem ra = sys.sqrt(alpha);
  return h_line(sys, h.product, sys.ctx()->mul(m, ra));
}

bool scalar_evolution(const SqrtSystem& sys, Elem gamma, Elem alpha,
                      Elem delta, Elem beta) {
  const FieldCtx& f = *sys.ctx();
  const Elem num = f.mul(sys.sqrt(gamma), sys.sqrt(alpha));
  const Elem den = f.mul(sys.sqrt(delta), sys.sqrt(beta));
  return bucket_eval(f, gamma, alpha) ==
         bucket_eval(f, delta, beta).scaled(f, f.div(num, den));
}

}  // namespace qmlab
