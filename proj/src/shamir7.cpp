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

#include "qmlab/shamir7.hpp"

#include <bit>

#include "qmlab/error.hpp"
#include "qmlab/rscode.hpp"

namespace qmlab {

FieldPtr gf7_field() {
  static const FieldPtr ctx = FieldCtx::make(7, 1);
  return ctx;
}

LeakageScheme gf7_scheme() {
  LeakageScheme s;
  s.ctx = gf7_field();
  s.k = 2;
  s.i = 0;
  s.j = 1;
  const std::uint32_t pm[5] = {2, 1, 3, 2, 1};
  for (std::uint32_t z = 0; z < 5; ++z) {
    s.servers.push_back(Elem{z});
    s.schedule.push_back(Elem{z});
    s.sets.push_back(ElemSet::of(7, {0, pm[z], 7 - pm[z]}));
  }
  return s;
}

bool verify_gf7() { return verify_gf7(gf7_scheme()); }

bool verify_gf7(const LeakageScheme& scheme) {
  return verify_scheme(scheme, ProductDomain::kNonzero);
}

std::uint32_t naive_interpolation_bits(std::uint32_t q) {
  if (q < 2) throw Error(Errc::kInvalidArgument, "need q >= 2");
  return 2 * static_cast<std::uint32_t>(std::bit_width(q - 2));
}

ElemSet one_bit_leak(const FieldPtr& ctx, Elem alpha, const ElemSet& T,
                     int bit) {
  if (bit != 0 && bit != 1) throw Error(Errc::kInvalidArgument, "bit not 0/1");
  if (!ctx->contains(alpha) || T.universe() != ctx->q()) {
    throw Error(Errc::kInvalidArgument, "alpha or T outside the field");
  }
  const ElemSet consistent = bit == 0 ? T : T.complement();
  ElemSet out(ctx->q());
  for (std::uint32_t g = 0; g < ctx->q(); ++g) {
    if (!bucket_eval(*ctx, Elem{g}, alpha).intersects(consistent)) {
      out.insert(Elem{g});
    }
  }
  return out;
}

std::vector<std::vector<ElemSet>> figure1_table() {
  const FieldPtr ctx = gf7_field();
  std::vector<std::vector<ElemSet>> table(7);
  for (std::uint32_t a = 0; a < 7; ++a) {
    for (std::uint32_t g = 0; g < 7; ++g) {
      table[a].push_back(bucket_eval(*ctx, Elem{g}, Elem{a}));
    }
  }
  return table;
}

}  // namespace qmlab
