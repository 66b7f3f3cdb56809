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

#include <cstdint>
#include <vector>

#include "doctest.h"
#include "qmlab/error.hpp"
#include "qmlab/galois.hpp"

using qmlab::Elem;
using qmlab::Errc;
using qmlab::FieldCtx;

namespace {

// Carry-less product reduced by a binary modulus given as a bit pattern.
std::uint32_t gf2_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus,
                      std::uint32_t e) {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < e; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  for (std::uint32_t bit = 2 * e; bit-- > e;) {
    if ((r >> bit) & 1) r ^= modulus << (bit - e);
  }
  return r;
}

std::uint32_t order_of(const FieldCtx& f, Elem a) {
  Elem x = a;
  std::uint32_t k = 1;
  while (x != f.one()) {
    x = f.mul(x, a);
    ++k;
  }
  return k;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1},
    {13, 1}, {2, 4}, {17, 1}, {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6},
    {2, 7}, {11, 2}, {5, 3}};

}  // namespace

TEST_CASE("prime field arithmetic agrees with integers mod p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 31u}) {
    FieldCtx f(p, 1);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        CHECK(f.add(Elem{a}, Elem{b}).value == (a + b) % p);
        CHECK(f.sub(Elem{a}, Elem{b}).value == (a + p - b) % p);
        CHECK(f.mul(Elem{a}, Elem{b}).value == a * b % p);
      }
    }
  }
  FieldCtx f7(7, 1);
  CHECK(f7.mul(Elem{3}, Elem{5}) == Elem{1});
}

TEST_CASE("binary extension multiplication matches carry-less reduction") {
  FieldCtx f4(2, 2);
  CHECK(f4.irreducible() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(f4.mul(Elem{2}, Elem{2}) == Elem{3});  // w^2 = w + 1

  FieldCtx f8(2, 3);
  CHECK(f8.irreducible() == std::vector<std::uint32_t>{1, 1, 0, 1});
  FieldCtx f64(2, 6);
  for (const FieldCtx* f : {&f8, &f64}) {
    std::uint32_t modulus = 0;
    for (std::size_t i = 0; i < f->irreducible().size(); ++i) {
      modulus |= f->irreducible()[i] << i;
    }
    for (std::uint32_t a = 0; a < f->q(); ++a) {
      for (std::uint32_t b = 0; b < f->q(); ++b) {
        REQUIRE(f->mul(Elem{a}, Elem{b}).value ==
                gf2_mul(a, b, modulus, f->e()));
      }
    }
  }
}

TEST_CASE("smallest irreducible is the first irreducible in encoding order") {
  CHECK(qmlab::smallest_irreducible(7, 1) == std::vector<std::uint32_t>{0, 1});
  CHECK(qmlab::smallest_irreducible(3, 2) ==
        std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
  // Brute-force root and factor check for quadratics and cubics: reducible
  // iff it has a root in F_p.
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t deg : {2u, 3u}) {
      std::uint32_t pe = 1;
      for (std::uint32_t i = 0; i < deg; ++i) pe *= p;
      for (std::uint32_t n = pe; n < 2 * pe; ++n) {
        std::vector<std::uint32_t> c;
        for (std::uint32_t v = n; v > 0; v /= p) c.push_back(v % p);
        bool has_root = false;
        for (std::uint32_t x = 0; x < p; ++x) {
          std::uint64_t acc = 0;
          for (std::size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % p;
          has_root |= acc == 0;
        }
        CHECK(qmlab::is_irreducible(p, c) == !has_root);
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively for small fields") {
  for (auto [p, e] : kSmallFields) {
    FieldCtx f(p, e);
    if (f.q() > 128) continue;
    CAPTURE(f.q());
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      const Elem x{a};
      CHECK(f.mul(x, f.one()) == x);
      CHECK(f.add(x, f.neg(x)) == f.zero());
      if (a != 0) {
        CHECK(f.mul(x, f.inv(x)) == f.one());
        CHECK(f.pow(x, f.q() - 1) == f.one());
      }
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        REQUIRE(f.mul(x, Elem{b}) == f.mul(Elem{b}, x));
        REQUIRE(f.add(x, Elem{b}) == f.add(Elem{b}, x));
      }
    }
  }
}

TEST_CASE("division by zero is rejected") {
  FieldCtx f(7, 1);
  CHECK_THROWS_AS(f.inv(Elem{0}), qmlab::Error);
  try {
    f.div(Elem{3}, Elem{0});
    FAIL("expected throw");
  } catch (const qmlab::Error& err) {
    CHECK(err.code() == Errc::kDivisionByZero);
  }
}

TEST_CASE("trace is F_p-linear, surjective, and Frobenius invariant") {
  FieldCtx f8(2, 3);
  CHECK(f8.trace(f8.one()) == Elem{1});
  for (auto [p, e] : kSmallFields) {
    FieldCtx f(p, e);
    if (f.q() > 128) continue;
    CAPTURE(f.q());
    std::uint32_t kernel = 0;
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      const Elem x{a};
      CHECK(f.trace(x).value < p);
      // Oracle: sum of conjugates by repeated multiplication.
      Elem conj = x;
      Elem sum = f.zero();
      for (std::uint32_t i = 0; i < e; ++i) {
        sum = f.add(sum, conj);
        Elem next = f.one();
        for (std::uint32_t k = 0; k < p; ++k) next = f.mul(next, conj);
        conj = next;
      }
      CHECK(f.trace(x) == sum);
      CHECK(f.trace(f.frobenius(x)) == f.trace(x));
      if (f.trace(x).value == 0) ++kernel;
      if (e == 1) CHECK(f.trace(x) == x);
      for (std::uint32_t c = 0; c < p; ++c) {
        CHECK(f.trace(f.mul(Elem{c}, x)) == f.mul(Elem{c}, f.trace(x)));
      }
      for (std::uint32_t b = 0; b < f.q(); b += 3) {
        CHECK(f.trace(f.add(x, Elem{b})) ==
              f.add(f.trace(x), f.trace(Elem{b})));
      }
    }
    CHECK(kernel * p == f.q());
  }
}

TEST_CASE("primitive elements") {
  CHECK(qmlab::find_primitive(FieldCtx(7, 1)) == Elem{3});
  CHECK(qmlab::find_primitive(FieldCtx(2, 1)) == Elem{1});
  CHECK(qmlab::find_primitive(FieldCtx(2, 2)) == Elem{2});
  for (auto [p, e] : kSmallFields) {
    FieldCtx f(p, e);
    const Elem g = qmlab::find_primitive(f);
    CHECK(order_of(f, g) == f.q() - 1);
    for (std::uint32_t v = 1; v < g.value; ++v) {
      CHECK(order_of(f, Elem{v}) < f.q() - 1);
    }
  }
}

TEST_CASE("primitive element with inverse trace zero") {
  CHECK_THROWS_AS(qmlab::find_primitive_zero_inv_trace(FieldCtx(2, 2)),
                  qmlab::Error);
  CHECK_THROWS_AS(qmlab::find_primitive_zero_inv_trace(FieldCtx(7, 1)),
                  qmlab::Error);
  for (std::uint32_t e = 3; e <= 7; ++e) {
    FieldCtx f(2, e);
    const Elem w = qmlab::find_primitive_zero_inv_trace(f);
    CHECK(order_of(f, w) == f.q() - 1);
    CHECK(f.trace(f.inv(w)) == f.zero());
    for (std::uint32_t v = 1; v < w.value; ++v) {
      const Elem x{v};
      CHECK_FALSE((order_of(f, x) == f.q() - 1 &&
                   f.trace(f.inv(x)) == f.zero()));
    }
  }
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(FieldCtx(6, 1), qmlab::Error);
  CHECK_THROWS_AS(FieldCtx(2, 21), qmlab::Error);
  CHECK_THROWS_AS(FieldCtx(2, 2, {1, 0, 1}), qmlab::Error);  // (x+1)^2
  CHECK_NOTHROW(FieldCtx(2, 3, {1, 0, 1, 1}));
  CHECK(FieldCtx::of_order(9)->p() == 3);
  CHECK(FieldCtx::of_order(9)->e() == 2);
  CHECK_THROWS_AS(FieldCtx::of_order(12), qmlab::Error);
  FieldCtx f9(3, 2);
  for (std::uint32_t v = 0; v < 9; ++v) {
    CHECK(f9.from_digits(f9.digits(Elem{v})) == Elem{v});
  }
}
