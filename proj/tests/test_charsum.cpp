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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "field_list.hpp"
#include "qmlab/charsum.hpp"
#include "qmlab/error.hpp"
#include "qmlab/residues.hpp"
#include "qmlab/rscode.hpp"

using namespace qmlab;

TEST_CASE("character sums") {
  auto f7 = FieldCtx::of_order(7);
  CHECK(complete_char_sum(*f7, {Elem{0}, Elem{1}}).value == 0);
  const CharSumReport r = complete_char_sum(*f7, {Elem{0}, Elem{1}, Elem{0},
                                                   Elem{1}});
  CHECK(r.square_free);
  CHECK(r.within_bound);
  CHECK(r.bound == doctest::Approx(2 * std::sqrt(7.0)));
  CHECK_THROWS_AS(complete_char_sum(*f7, {Elem{3}}), Error);
  CHECK_THROWS_AS(complete_char_sum(*FieldCtx::of_order(8), {Elem{0}, Elem{1}}),
                  Error);
  // (x+1)^2 is not square free.
  CHECK_FALSE(is_square_free(*f7, {Elem{1}, Elem{2}, Elem{1}}));
}

TEST_CASE("Weil bound for x(x^2+1) over odd q <= 121") {
  for (std::uint32_t q : testing::prime_powers(3, 121, 1)) {
    auto f = FieldCtx::of_order(q);
    CAPTURE(q);
    const CharSumReport r =
        complete_char_sum(*f, {Elem{0}, Elem{1}, Elem{0}, Elem{1}});
    // Oracle: Euler's criterion summed directly.
    std::int64_t sum = 0;
    for (std::uint32_t x = 0; x < q; ++x) {
      const Elem y = f->mul(Elem{x}, f->add(f->mul(Elem{x}, Elem{x}), f->one()));
      if (y.value == 0) continue;
      sum += f->pow(y, (q - 1) / 2) == f->one() ? 1 : -1;
    }
    CHECK(r.value == sum);
    CHECK(r.square_free == (f->p() != 2));
    CHECK(std::llabs(r.value) <= 2 * std::sqrt(static_cast<double>(q)));
  }
}

// The pair also fails to exist at q = 9, where B_1(1) = {0, +-1, +-i}: the
// values m = +-1 of m + 1/m have a single preimage, so halving the complete
// sum overstates the bound by one.
TEST_CASE("B_1(1) holds a residue and a non-residue except at q = 5, 9") {
  for (std::uint32_t q : testing::prime_powers(3, 121, 1)) {
    auto f = FieldCtx::of_order(q);
    const ElemSet b = b11(*f);
    bool res = false, nonres = false;
    for (auto y : b.values()) {
      if (y == 0) continue;
      (quadratic_character(*f, Elem{y}) == 1 ? res : nonres) = true;
    }
    CAPTURE(q);
    CHECK((res && nonres) == (q != 5 && q != 9));
  }
}

TEST_CASE("Artin-Schreier solvability matches the trace") {
  auto f4 = FieldCtx::of_order(4);
  const ArtinSchreier zero = artin_schreier_solvable(*f4, Elem{0});
  CHECK(zero.solvable);
  CHECK(*zero.root == Elem{0});
  CHECK_FALSE(artin_schreier_solvable(*f4, Elem{2}).solvable);
  CHECK_THROWS_AS(artin_schreier_solvable(*FieldCtx::of_order(7), Elem{1}),
                  Error);
  for (std::uint32_t q : {8u, 16u, 32u, 64u}) {
    auto f = FieldCtx::of_order(q);
    for (std::uint32_t c = 0; c < q; ++c) {
      const ArtinSchreier as = artin_schreier_solvable(*f, Elem{c});
      CHECK(as.solvable == (f->trace(Elem{c}).value == 0));
      if (as.solvable) {
        for (Elem y : {*as.root, f->add(*as.root, f->one())}) {
          CHECK(f->add(f->add(f->mul(y, y), y), Elem{c}) == f->zero());
        }
      }
    }
  }
}

TEST_CASE("binary B_1(1) is the inverse-trace kernel") {
  for (std::uint32_t q : {8u, 16u, 32u, 64u, 128u}) {
    CHECK(b11_trace_kernel_check(*FieldCtx::of_order(q)));
  }
  CHECK_THROWS_AS(b11_trace_kernel_check(*FieldCtx::of_order(4)), Error);
}
