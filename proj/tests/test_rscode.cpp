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

#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "field_list.hpp"
#include "qmlab/error.hpp"
#include "qmlab/rscode.hpp"

using namespace qmlab;

namespace {

std::vector<Elem> E(std::initializer_list<std::uint32_t> v) {
  std::vector<Elem> out;
  for (auto x : v) out.push_back(Elem{x});
  return out;
}

}  // namespace

TEST_CASE("encode") {
  auto f7 = FieldCtx::of_order(7);
  CHECK(encode(*f7, E({2, 3}), E({0, 1, 2})) == E({2, 5, 1}));
  CHECK(encode(*f7, E({0, 0}), E({0, 1, 2, 3})) == E({0, 0, 0, 0}));
  CHECK(encode(*f7, E({0, 1}), E({0, 1, 2, 3, 4, 5, 6})) ==
        E({0, 1, 2, 3, 4, 5, 6}));
  CHECK_THROWS_AS(encode(*f7, E({1, 1}), E({1, 1})), Error);
  try {
    encode(*f7, E({1, 1}), E({2, 3, 2}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kDuplicatePoints);
  }
  // A degree-2 message against Horner-free evaluation.
  const MessageVec f = E({3, 4, 5});
  for (std::uint32_t x = 0; x < 7; ++x) {
    CHECK(eval(*f7, f, Elem{x}).value == (3 + 4 * x + 5 * x * x) % 7);
  }
}

TEST_CASE("buckets") {
  auto f7 = FieldCtx::of_order(7);
  const Bucket b1 = bucket(*f7, Elem{1});
  REQUIRE(b1.lines.size() == 6);
  for (const Line& h : b1.lines) {
    CHECK(h.m.value != 0);
    CHECK(h.b == f7->inv(h.m));
  }
  auto f3 = FieldCtx::of_order(3);
  const Bucket b3 = bucket(*f3, Elem{1});
  REQUIRE(b3.lines.size() == 2);
  CHECK(b3.lines[0] == make_line(*f3, Elem{1}, Elem{1}));
  CHECK(b3.lines[1] == make_line(*f3, Elem{2}, Elem{2}));
  CHECK(bucket(*f7, Elem{0}).lines.size() == 13);

  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u}) {
    auto f = FieldCtx::of_order(q);
    std::size_t total = 0;
    for (std::uint32_t g = 0; g < q; ++g) {
      const Bucket bk = bucket(*f, Elem{g});
      std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
      for (const Line& h : bk.lines) {
        CHECK(f->mul(h.m, h.b) == Elem{g});
        CHECK(h.product == Elem{g});
        seen.insert({h.m.value, h.b.value});
      }
      CHECK(seen.size() == bk.lines.size());
      total += bk.lines.size();
    }
    CHECK(total == q * q);
  }
}

TEST_CASE("bucket images") {
  auto f7 = FieldCtx::of_order(7);
  CHECK(bucket_eval(*f7, Elem{4}, Elem{1}).values() ==
        std::vector<std::uint32_t>{2, 3, 4, 5});
  CHECK(bucket_eval(*f7, Elem{1}, Elem{0}).values() ==
        std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6});
  CHECK(bucket_eval(*f7, Elem{1}, Elem{1}).values() ==
        std::vector<std::uint32_t>{1, 2, 5, 6});
}

TEST_CASE("B_1(1)") {
  CHECK(b11(*FieldCtx::of_order(5)).values() ==
        std::vector<std::uint32_t>{0, 2, 3});
  CHECK(b11(*FieldCtx::of_order(3)).values() ==
        std::vector<std::uint32_t>{1, 2});
  CHECK(b11(*FieldCtx::of_order(8)).size() == 4);
  CHECK_THROWS_AS(b11(*FieldCtx::of_order(4)), Error);
  CHECK_THROWS_AS(b11(*FieldCtx::of_order(2)), Error);
  for (std::uint32_t q : testing::sqrt_fields(128)) {
    auto f = FieldCtx::of_order(q);
    const std::size_t want = q % 2 == 1 ? (q + 1) / 2 : q / 2;
    CHECK(b11(*f).size() == want);
    CHECK(b11(*f) == bucket_eval(*f, f->one(), f->one()));
  }
}

TEST_CASE("relabels") {
  auto f7 = FieldCtx::of_order(7);
  const SqrtSystem s7 = build_sqrt_system(f7);
  const Line h = h_line(s7, Elem{1}, Elem{3});
  const Line r = relabel(s7, h, Elem{4});
  CHECK(r == make_line(*f7, Elem{6}, Elem{6}));
  CHECK(relabel(s7, h, Elem{1}) == h);
  CHECK_THROWS_AS(relabel(s7, h, Elem{3}), Error);

  for (std::uint32_t q : {7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u}) {
    auto f = FieldCtx::of_order(q);
    CAPTURE(q);
    const SqrtSystem sys = build_sqrt_system(f);
    const auto& om = sys.omega_set().elements;
    for (Elem g : om) {
      const Elem rg = sys.sqrt(g);
      for (std::uint32_t mv = 1; mv < q; ++mv) {
        const Elem m{mv};
        const Line hm = h_line(sys, g, m);
        // h_m^g = sqrt(g) g_m coefficientwise, where g_m = (1/m) x + m.
        CHECK(hm.m == f->mul(rg, f->inv(m)));
        CHECK(hm.b == f->mul(rg, m));
        CHECK(hm.product == g);
      }
      for (Elem a : om) {
        const Elem ra = sys.sqrt(a);
        std::set<std::uint32_t> image;
        for (std::uint32_t mv = 1; mv < q; ++mv) {
          const Elem m{mv};
          const Line rl = relabel(sys, h_line(sys, g, m), a);
          CHECK(rl.product == g);
          image.insert(h_slope_index(sys, rl).value);
          const Elem lhs = eval(*f, rl, a);
          const Elem rhs = f->mul(f->mul(rg, ra), g_at_one(*f, m));
          CHECK(lhs == rhs);
        }
        // A permutation of B_g.
        CHECK(image.size() == q - 1);
      }
    }
  }
}

TEST_CASE("scaling identity {a/m + m} = {sqrt(a)/m + sqrt(a) m}") {
  for (std::uint32_t q : testing::sqrt_fields(64)) {
    auto f = FieldCtx::of_order(q);
    const SqrtSystem sys = build_sqrt_system(f);
    for (Elem a : sys.omega_set().elements) {
      const Elem ra = sys.sqrt(a);
      ElemSet lhs(q), rhs(q);
      for (std::uint32_t mv = 1; mv < q; ++mv) {
        const Elem mi = f->inv(Elem{mv});
        lhs.insert(f->add(f->mul(a, mi), Elem{mv}));
        rhs.insert(f->add(f->mul(ra, mi), f->mul(ra, Elem{mv})));
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("scalar evolution") {
  auto f7 = FieldCtx::of_order(7);
  const SqrtSystem s7 = build_sqrt_system(f7);
  CHECK(scalar_evolution(s7, Elem{4}, Elem{1}, Elem{4}, Elem{1}));
  CHECK(b11(*f7).scaled(*f7, Elem{2}) == bucket_eval(*f7, Elem{4}, Elem{1}));
  CHECK_THROWS_AS(scalar_evolution(s7, Elem{3}, Elem{1}, Elem{1}, Elem{1}),
                  Error);

  const SqrtSystem s8 = build_sqrt_system(FieldCtx::of_order(8));
  const auto& om = s8.omega_set().elements;
  for (Elem g : om)
    for (Elem a : om)
      for (Elem d : om)
        for (Elem b : om) CHECK(scalar_evolution(s8, g, a, d, b));

  for (std::uint32_t q : testing::sqrt_fields(64)) {
    auto f = FieldCtx::of_order(q);
    CAPTURE(q);
    const SqrtSystem sys = build_sqrt_system(f);
    const ElemSet base = b11(*f);
    for (Elem g : sys.omega_set().elements) {
      for (Elem a : sys.omega_set().elements) {
        CHECK(bucket_eval(*f, g, a) ==
              base.scaled(*f, f->mul(sys.sqrt(g), sys.sqrt(a))));
      }
    }
  }
}

TEST_CASE("B_1(1) is closed under negation") {
  for (std::uint32_t q : testing::sqrt_fields(128)) {
    auto f = FieldCtx::of_order(q);
    const ElemSet b = b11(*f);
    for (auto y : b.values()) CHECK(b.contains(f->neg(Elem{y})));
  }
}
