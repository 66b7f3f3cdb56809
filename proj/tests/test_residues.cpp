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

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "field_list.hpp"
#include "qmlab/error.hpp"
#include "qmlab/residues.hpp"
#include "qmlab/rscode.hpp"

using namespace qmlab;

namespace {

std::vector<std::uint32_t> vals(const OmegaSet& o) {
  std::vector<std::uint32_t> out;
  for (Elem x : o.elements) out.push_back(x.value);
  return out;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::kInvalidArgument;
}

}  // namespace

TEST_CASE("Omega_q for small fields") {
  CHECK(vals(omega_set(FieldCtx::of_order(5))) ==
        std::vector<std::uint32_t>{1, 4});
  CHECK(vals(omega_set(FieldCtx::of_order(3))) ==
        std::vector<std::uint32_t>{1});
  CHECK(vals(omega_set(FieldCtx::of_order(7))) ==
        std::vector<std::uint32_t>{1, 2, 4});

  auto f8 = FieldCtx::of_order(8);
  const OmegaSet w = omega_set(f8);
  CHECK(w.kind == OmegaKind::kW);
  const Elem om = w.omega;
  const Elem om2 = f8->mul(om, om);
  CHECK(w.elements == std::vector<Elem>{f8->one(), om2, f8->mul(om2, om2)});
  CHECK(f8->trace(f8->inv(om)) == f8->zero());

  CHECK(code_of([] { omega_set(FieldCtx::of_order(4)); }) ==
        Errc::kUnsupportedField);
  CHECK(code_of([] { omega_set(FieldCtx::of_order(2)); }) ==
        Errc::kUnsupportedField);

  for (std::uint32_t q : testing::prime_powers(3, 128)) {
    if (q == 4) continue;
    auto f = FieldCtx::of_order(q);
    const OmegaSet o = omega_set(f);
    CHECK(o.mask.size() == o.elements.size());
    if (q % 2 == 1) {
      CHECK(o.elements.size() == (q - 1) / 2);
    } else {
      CHECK(o.elements.size() == q / 2 - 1);
    }
  }
}

TEST_CASE("quadratic character") {
  auto f7 = FieldCtx::of_order(7);
  CHECK(quadratic_character(*f7, Elem{1}) == 1);
  CHECK(quadratic_character(*f7, Elem{0}) == 0);
  CHECK(quadratic_character(*f7, Elem{6}) == -1);
  CHECK(code_of([] { quadratic_character(*FieldCtx::of_order(8), Elem{1}); }) ==
        Errc::kUnsupportedField);

  for (std::uint32_t q : testing::prime_powers(3, 49, 1)) {
    auto f = FieldCtx::of_order(q);
    CAPTURE(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      // Euler's criterion as the oracle.
      const Elem euler = f->pow(Elem{a}, (q - 1) / 2);
      CHECK(quadratic_character(*f, Elem{a}) == (euler == f->one() ? 1 : -1));
      CHECK(quadratic_character(*f, Elem{a}) ==
            quadratic_character(*f, f->inv(Elem{a})));
      for (std::uint32_t b = 0; b < q; ++b) {
        REQUIRE(quadratic_character(*f, f->mul(Elem{a}, Elem{b})) ==
                quadratic_character(*f, Elem{a}) *
                    quadratic_character(*f, Elem{b}));
      }
    }
  }
}

TEST_CASE("-1 is a residue unless p = 3 mod 4 with e odd") {
  CHECK_FALSE(minus_one_is_residue(*FieldCtx::of_order(7)));
  CHECK(minus_one_is_residue(*FieldCtx::of_order(5)));
  CHECK(minus_one_is_residue(*FieldCtx::of_order(9)));
  for (std::uint32_t q : testing::prime_powers(3, 128, 1)) {
    auto f = FieldCtx::of_order(q);
    bool square = false;
    for (std::uint32_t x = 1; x < q; ++x) {
      square |= f->mul(Elem{x}, Elem{x}) == f->neg(f->one());
    }
    CHECK(minus_one_is_residue(*f) == square);
    CHECK(square == !(f->p() % 4 == 3 && f->e() % 2 == 1));
  }
}

TEST_CASE("quartic residues") {
  CHECK(quartic_residues(*FieldCtx::of_order(5)).values() ==
        std::vector<std::uint32_t>{1});
  CHECK(quartic_residues(*FieldCtx::of_order(13)).values() ==
        std::vector<std::uint32_t>{1, 3, 9});
  CHECK(quartic_residues(*FieldCtx::of_order(3)).values() ==
        std::vector<std::uint32_t>{1});
  for (std::uint32_t q : testing::prime_powers(3, 128, 1)) {
    auto f = FieldCtx::of_order(q);
    ElemSet sq_of_qr(q);
    for (auto r : quadratic_residues(*f).values()) {
      sq_of_qr.insert(f->mul(Elem{r}, Elem{r}));
    }
    CHECK(quartic_residues(*f) == sq_of_qr);
  }
}

TEST_CASE("Upsilon set") {
  for (std::uint32_t q : {9u, 13u, 17u, 25u, 29u, 37u, 41u, 49u, 81u}) {
    auto f = FieldCtx::of_order(q);
    CAPTURE(q);
    const SqrtSystem sys = build_sqrt_system(f);
    REQUIRE(sys.regime() == Regime::kP1Mod4OrEEven);
    const ElemSet r4 = quartic_residues(*f);
    const ElemSet& ups = sys.upsilon();
    CHECK(ups.size() == r4.size());
    CHECK_FALSE(ups.intersects(quadratic_residues(*f)));
    CHECK_FALSE(ups.contains(f->zero()));
    for (auto y : ups.values()) CHECK_FALSE(ups.contains(f->neg(Elem{y})));
    // The (b/a) form shares the non-residue and no-inverse-pair properties.
    const Elem a = sys.upsilon_pair().a;
    const Elem b = sys.upsilon_pair().b;
    ElemSet other(q);
    for (auto g : r4.values()) {
      other.insert(f->mul(f->div(b, a), sys.sqrt(Elem{g})));
    }
    CHECK(other.size() == r4.size());
    CHECK_FALSE(other.intersects(quadratic_residues(*f)));
    for (auto y : other.values()) CHECK_FALSE(other.contains(f->neg(Elem{y})));
  }
  // The (a/b) and (b/a) forms are not equal in general: over F_13 with
  // (a, b) = (1, 2) they differ for every residue-valued choice of roots.
  {
    auto f13 = FieldCtx::of_order(13);
    const std::vector<std::uint32_t> r4 = quartic_residues(*f13).values();
    const ElemSet qr = quadratic_residues(*f13);
    const Elem a{1}, b{2};
    int equal = 0, choices = 0;
    for (unsigned signs = 0; signs < (1u << r4.size()); ++signs) {
      std::vector<Elem> root(13);
      for (std::size_t k = 0; k < r4.size(); ++k) {
        Elem r{1};
        while (f13->mul(r, r) != Elem{r4[k]} || !qr.contains(r)) r.value++;
        root[r4[k]] = (signs >> k) & 1 ? f13->neg(r) : r;
      }
      ++choices;
      ElemSet fwd(13), bwd(13);
      for (auto g : r4) {
        fwd.insert(f13->mul(f13->div(a, b), root[g]));
        bwd.insert(f13->mul(f13->div(b, a), root[g]));
      }
      CHECK(fwd == upsilon_set(*f13, a, b, root));
      if (fwd == bwd) ++equal;
    }
    CHECK(choices == 8);
    CHECK(equal == 0);
  }
  auto f13 = FieldCtx::of_order(13);
  CHECK(build_sqrt_system(f13).upsilon().size() == 3);
  CHECK(build_sqrt_system(FieldCtx::of_order(9)).upsilon().size() == 2);
  CHECK(code_of([] {
          auto f7 = FieldCtx::of_order(7);
          upsilon_set(*f7, Elem{1}, Elem{5}, std::vector<Elem>(7));
        }) == Errc::kRegimeMismatch);
}

TEST_CASE("square-root systems") {
  auto f7 = FieldCtx::of_order(7);
  const SqrtSystem s7 = build_sqrt_system(f7);
  CHECK(s7.regime() == Regime::kP3Mod4EOdd);
  CHECK(s7.sqrt(Elem{4}) == Elem{2});
  CHECK(s7.sqrt(Elem{1}) == Elem{1});
  CHECK(code_of([&] { s7.sqrt(Elem{3}); }) == Errc::kRegimeMismatch);

  auto f8 = FieldCtx::of_order(8);
  const SqrtSystem s8 = build_sqrt_system(f8);
  const Elem w = s8.omega_set().omega;
  CHECK(s8.sqrt(f8->mul(w, w)) == w);

  for (std::uint32_t q : {2u, 4u, 5u}) {
    CHECK(code_of([q] { build_sqrt_system(FieldCtx::of_order(q)); }) ==
          Errc::kUnsupportedField);
  }

  for (std::uint32_t q : testing::sqrt_fields(128)) {
    auto f = FieldCtx::of_order(q);
    CAPTURE(q);
    const SqrtSystem sys = build_sqrt_system(f);
    const ElemSet qr = f->p() == 2 ? ElemSet(q) : quadratic_residues(*f);
    std::set<std::uint32_t> image;
    for (Elem g : sys.omega_set().elements) {
      const Elem r = sys.sqrt(g);
      CHECK(f->mul(r, r) == g);
      image.insert(r.value);
    }
    CHECK(sys.sqrt(f->one()) == f->one());
    switch (sys.regime()) {
      case Regime::kP3Mod4EOdd:
        // A bijection of Omega_q onto itself.
        CHECK(image.size() == sys.omega_set().elements.size());
        for (auto r : image) CHECK(qr.contains(Elem{r}));
        break;
      case Regime::kP1Mod4OrEEven: {
        const ElemSet r4 = quartic_residues(*f);
        for (Elem g : sys.omega_set().elements) {
          const Elem r = sys.sqrt(g);
          if (r4.contains(g)) {
            CHECK(qr.contains(r));
          } else {
            CHECK_FALSE(qr.contains(r));
            CHECK_FALSE(sys.upsilon().contains(r));
          }
        }
        break;
      }
      case Regime::kBinary: {
        const Elem om = sys.omega_set().omega;
        for (std::uint32_t i = 0; i < sys.omega_set().elements.size(); ++i) {
          CHECK(sys.sqrt(f->pow(om, 2 * i)) == f->pow(om, i));
        }
        break;
      }
    }
  }
}

TEST_CASE("scaled pairs") {
  auto f3 = FieldCtx::of_order(3);
  const ScaledPair p3 = scaled_pair(build_sqrt_system(f3));
  CHECK(p3.a == Elem{1});
  CHECK(p3.b == Elem{2});
  CHECK(code_of([] { canonical_scaled_pair(FieldCtx::of_order(5)); }) ==
        Errc::kNoPairExists);
  // Over F_9, B_1(1) = {0, +-1, +-i} and every nonzero member is a residue.
  CHECK(code_of([] { canonical_scaled_pair(FieldCtx::of_order(9)); }) ==
        Errc::kNoPairExists);
  const SqrtSystem s9 = build_sqrt_system(FieldCtx::of_order(9));
  CHECK_FALSE(s9.has_scaled_pair());
  CHECK(code_of([&] { scaled_pair(s9); }) == Errc::kNoPairExists);
  const ScaledPair p7 = scaled_pair(build_sqrt_system(FieldCtx::of_order(7)));
  CHECK(p7.a == Elem{1});
  CHECK(p7.b == Elem{5});

  for (std::uint32_t q : testing::sqrt_fields(128)) {
    if (q == 9) continue;
    auto f = FieldCtx::of_order(q);
    CAPTURE(q);
    const SqrtSystem sys = build_sqrt_system(f);
    const ScaledPair pr = scaled_pair(sys);
    const ElemSet b = b11(*f);
    CHECK(pr.a != pr.b);
    CHECK(pr.a.value != 0);
    CHECK(pr.b.value != 0);
    CHECK(b.contains(pr.a));
    CHECK(b.contains(pr.b));
    CHECK(sys.omega_set().contains(pr.a));
    CHECK_FALSE(sys.omega_set().contains(pr.b));
    if (f->p() == 2) {
      const Elem om = sys.omega_set().omega;
      CHECK(pr.a == f->pow(om, q / 2));
      CHECK(pr.b == om);
    }
  }
}

TEST_CASE("scaled-pair union size") {
  const SqrtSystem s7 = build_sqrt_system(FieldCtx::of_order(7));
  CHECK(scaled_pair_union_size(s7, s7.pair(), Elem{1}) == 4);
  CHECK(code_of([&] { scaled_pair_union_size(s7, s7.pair(), Elem{3}); }) ==
        Errc::kInvalidDelta);
  const SqrtSystem s8 = build_sqrt_system(FieldCtx::of_order(8));
  for (Elem d : s8.omega_set().elements) {
    CHECK(scaled_pair_union_size(s8, s8.pair(), d) == 4);
  }
  // Exhaustive over all (a, b) with a a residue and b a non-residue, both in
  // B_1(1): there are none over F_9, so no pair can reach q - 3.
  {
    auto f9 = FieldCtx::of_order(9);
    const ElemSet b = b11(*f9);
    int pairs = 0;
    for (auto a : b.values())
      for (auto c : b.values())
        if (quadratic_character(*f9, Elem{a}) == 1 &&
            quadratic_character(*f9, Elem{c}) == -1)
          ++pairs;
    CHECK(pairs == 0);
  }
  for (std::uint32_t q : testing::sqrt_fields(128)) {
    const SqrtSystem sys = build_sqrt_system(FieldCtx::of_order(q));
    if (sys.regime() == Regime::kP1Mod4OrEEven) continue;
    const std::size_t want = q % 2 == 1 ? q - 3 : q - 4;
    for (Elem d : sys.omega_set().elements) {
      CAPTURE(q);
      CHECK(scaled_pair_union_size(sys, sys.pair(), d) == want);
    }
  }
}

namespace {

// Whether some (a, b) in B_1(1) and some choice of roots on QR_q gives union
// size q - 3 for every delta. Exhaustive over both.
bool any_choice_reaches_q_minus_3(std::uint32_t q) {
  auto f = FieldCtx::of_order(q);
  const ElemSet qr = quadratic_residues(*f);
  const std::vector<std::uint32_t> om = qr.values();
  std::vector<Elem> base(om.size());
  for (std::size_t k = 0; k < om.size(); ++k) {
    Elem r{1};
    while (f->mul(r, r) != Elem{om[k]}) r.value++;
    base[k] = r;
  }
  const ElemSet b = b11(*f);
  for (auto a : b.values()) {
    if (a == 0 || !qr.contains(Elem{a})) continue;
    for (auto c : b.values()) {
      if (c == 0 || qr.contains(Elem{c})) continue;
      for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << om.size());
           ++signs) {
        bool all = true;
        for (std::size_t d = 0; d < om.size() && all; ++d) {
          ElemSet u(q);
          for (std::size_t k = 0; k < om.size(); ++k) {
            if (k == d) continue;
            const Elem r = (signs >> k) & 1 ? f->neg(base[k]) : base[k];
            u.insert(f->mul(r, Elem{a}));
            u.insert(f->mul(r, Elem{c}));
          }
          all = u.size() == q - 3;
        }
        if (all) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("q = 1 mod 4: no pair and root choice reaches q - 3") {
  CHECK(any_choice_reaches_q_minus_3(7));
  CHECK(any_choice_reaches_q_minus_3(11));
  for (std::uint32_t q : {9u, 13u, 17u, 25u}) {
    CAPTURE(q);
    CHECK_FALSE(any_choice_reaches_q_minus_3(q));
  }
  // The canonical system falls short on every such field.
  for (std::uint32_t q : testing::sqrt_fields(128)) {
    const SqrtSystem sys = build_sqrt_system(FieldCtx::of_order(q));
    if (sys.regime() != Regime::kP1Mod4OrEEven || !sys.has_scaled_pair()) {
      continue;
    }
    std::size_t worst = q;
    for (Elem d : sys.omega_set().elements) {
      worst = std::min(worst, scaled_pair_union_size(sys, sys.pair(), d));
    }
    CAPTURE(q);
    CHECK(worst < q - 3);
  }
}
