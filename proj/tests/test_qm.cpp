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

#include <bit>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "field_list.hpp"
#include "qmlab/error.hpp"
#include "qmlab/qm.hpp"
#include "qmlab/search.hpp"
#include "qmlab/shamir7.hpp"

using namespace qmlab;

namespace {

MessageVec line(std::uint32_t m, std::uint32_t b) { return {Elem{b}, Elem{m}}; }

ElemSet random_subset(std::uint32_t q, std::mt19937_64& rng) {
  ElemSet s(q);
  for (std::uint32_t v = 0; v < q; ++v) {
    if (rng() & 1) s.insert(Elem{v});
  }
  return s;
}

LeakageScheme random_scheme(const FieldPtr& ctx, std::size_t t,
                            std::mt19937_64& rng) {
  LeakageScheme s;
  s.ctx = ctx;
  for (std::uint32_t v = 0; v < ctx->q(); ++v) s.servers.push_back(Elem{v});
  for (std::size_t z = 0; z < t; ++z) {
    s.schedule.push_back(Elem{static_cast<std::uint32_t>(rng() % ctx->q())});
    s.sets.push_back(random_subset(ctx->q(), rng));
  }
  return s;
}

}  // namespace

TEST_CASE("leak bits") {
  const ElemSet empty(7);
  const ElemSet full = ElemSet::full(7);
  for (std::uint32_t x = 0; x < 7; ++x) {
    CHECK(leak_bit(empty, Elem{x}) == 1);
    CHECK(leak_bit(full, Elem{x}) == 0);
  }
  CHECK(leak_bit(ElemSet::of(7, {0, 1, 6}), Elem{3}) == 1);
}

TEST_CASE("transcripts") {
  const LeakageScheme s = gf7_scheme();
  // Zero message: every bit is 0 since 0 lies in every set.
  CHECK(transcript(s, line(0, 0)) == Transcript{0, 0, 0, 0, 0});
  // f = x + 1 takes 1..5 at 0..4.
  CHECK(transcript(s, line(1, 1)) == Transcript{1, 1, 0, 1, 1});
  CHECK(transcript(s, line(2, 2)) != transcript(s, line(4, 4)));
}

TEST_CASE("run_qm outcomes") {
  auto f7 = FieldCtx::of_order(7);
  LeakageScheme empty;
  empty.ctx = f7;
  CHECK(run_qm(empty, {}).status == QmStatus::kFail);

  const LeakageScheme s = gf7_scheme();
  const ElemSet nz = domain_mask(f7, ProductDomain::kNonzero);
  const QmOutcome out = run_qm(s, transcript(s, line(1, 1)), nz);
  CHECK(out.status == QmStatus::kSuccess);
  CHECK(out.gamma == Elem{1});

  LeakageScheme full = s;
  full.sets[2] = ElemSet::full(7);
  CHECK(run_qm(full, Transcript{1, 1, 1, 1, 1}).status ==
        QmStatus::kInvalidTranscript);

  CHECK_THROWS_AS(run_qm(s, Transcript{1, 1}), Error);
}

TEST_CASE("scheme validation") {
  LeakageScheme s = gf7_scheme();
  s.validate();
  LeakageScheme bad = s;
  bad.schedule[0] = Elem{6};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = s;
  bad.sets.pop_back();
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = s;
  bad.j = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = s;
  bad.j = 2;
  CHECK_THROWS_AS(bad.validate(), Error);
  try {
    bad.validate();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kInvalidScheme);
  }
}

TEST_CASE("verify_scheme examples") {
  CHECK(verify_scheme(gf7_scheme(), ProductDomain::kNonzero));
  CHECK_FALSE(verify_scheme(gf7_scheme(), ProductDomain::kAll));
  for (std::size_t z = 0; z < 5; ++z) {
    LeakageScheme s = gf7_scheme();
    s.sets[z] = ElemSet(7);
    CHECK_FALSE(verify_scheme(s, ProductDomain::kNonzero));
  }
  // Bit-slicing two full symbols determines the line.
  for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
    auto f = FieldCtx::of_order(q);
    LeakageScheme s;
    s.ctx = f;
    s.servers = {Elem{1}, Elem{2}};
    for (Elem a : s.servers) {
      for (std::uint32_t bit = 0; (1u << bit) < q; ++bit) {
        ElemSet T(q);
        for (std::uint32_t v = 0; v < q; ++v) {
          if (((v >> bit) & 1) == 0) T.insert(Elem{v});
        }
        s.schedule.push_back(a);
        s.sets.push_back(T);
      }
    }
    CHECK(verify_scheme(s, ProductDomain::kAll));
    CHECK(verify_scheme_by_algorithm(s, ProductDomain::kAll));
  }
}

TEST_CASE("separation agrees with QM on random schemes") {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    auto f = FieldCtx::of_order(q);
    for (int trial = 0; trial < 40; ++trial) {
      const LeakageScheme s = random_scheme(f, 2 + trial % 6, rng);
      for (ProductDomain d : {ProductDomain::kAll, ProductDomain::kNonzero}) {
        CHECK(verify_scheme(s, d) == verify_scheme_by_algorithm(s, d));
      }
    }
  }
}

TEST_CASE("appending a query keeps a valid scheme valid") {
  std::mt19937_64 rng(5);
  const LeakageScheme base = gf7_scheme();
  for (int trial = 0; trial < 30; ++trial) {
    LeakageScheme s = base;
    s.schedule.push_back(Elem{static_cast<std::uint32_t>(rng() % 5)});
    s.sets.push_back(random_subset(7, rng));
    CHECK(verify_scheme(s, ProductDomain::kNonzero));
  }
}

TEST_CASE("mqm_check") {
  auto f3 = FieldCtx::of_order(3);
  LeakageScheme t0;
  t0.ctx = f3;
  t0.servers = {Elem{1}};
  CHECK(mqm_check(t0));

  auto f7 = FieldCtx::of_order(7);
  SearchOptions o;
  o.mode = SearchMode::kMqm;
  const auto found = search_min_bandwidth(f7, o);
  REQUIRE(found);
  CHECK(mqm_check(found->scheme));

  LeakageScheme off = found->scheme;
  off.servers.push_back(Elem{3});  // 3 is a non-residue mod 7
  off.schedule[0] = Elem{3};
  CHECK_FALSE(mqm_check(off));

  LeakageScheme k3 = found->scheme;
  k3.k = 3;
  CHECK_THROWS_AS(mqm_check(k3), Error);
  CHECK_FALSE(mqm_check(gf7_scheme()));  // queries server 0
}

TEST_CASE("restriction to Omega keeps a QM scheme valid") {
  for (std::uint32_t q : {7u, 8u, 9u}) {
    auto f = FieldCtx::of_order(q);
    SearchOptions o;
    o.mode = SearchMode::kQm;
    o.servers = default_servers(f, SearchMode::kMqm);
    const auto found = search_min_bandwidth(f, o);
    REQUIRE(found);
    CHECK(verify_scheme(found->scheme, ProductDomain::kAll));
    CHECK(mqm_check(found->scheme));
  }
}

TEST_CASE("eliminator conversion") {
  auto f7 = FieldCtx::of_order(7);
  const SqrtSystem sys = build_sqrt_system(f7);
  CHECK(convert_eliminator(sys, ElemSet(7), Elem{1}).empty());

  ElemSet all(7);
  const ElemSet b = b11(*f7);
  for (Elem g : sys.omega_set().elements) all |= b.scaled(*f7, sys.sqrt(g));
  for (Elem a : sys.omega_set().elements) {
    CHECK(convert_eliminator(sys, ElemSet::full(7), a) == all);
  }
  CHECK_THROWS_AS(convert_eliminator(sys, ElemSet::full(7), Elem{3}), Error);

  const ElemSet T = ElemSet::of(7, {2});
  const ElemSet V = convert_eliminator(sys, T, Elem{1});
  CHECK(V == convert_eliminator_closed_form(sys, T, Elem{1}));
  for (Elem g : sys.omega_set().elements) {
    for (std::uint32_t m = 1; m < 7; ++m) {
      if (T.contains(eval(*f7, h_line(sys, g, Elem{m}), Elem{1}))) {
        CHECK(V.contains(f7->mul(sys.sqrt(g), g_at_one(*f7, Elem{m}))));
      }
    }
  }
}

TEST_CASE("conversion implication over singletons and random sets") {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {7u, 8u, 9u}) {
    auto f = FieldCtx::of_order(q);
    const SqrtSystem sys = build_sqrt_system(f);
    std::vector<ElemSet> sets;
    for (std::uint32_t v = 0; v < q; ++v) sets.push_back(ElemSet::of(q, {v}));
    for (int r = 0; r < 64; ++r) sets.push_back(random_subset(q, rng));
    bool ok = true;
    for (Elem a : sys.omega_set().elements) {
      for (const ElemSet& T : sets) {
        const ElemSet V = convert_eliminator(sys, T, a);
        if (V != convert_eliminator_closed_form(sys, T, a)) ok = false;
        for (Elem g : sys.omega_set().elements) {
          const Elem rg_inv = f->inv(sys.sqrt(g));
          for (std::uint32_t m = 1; m < q; ++m) {
            if (!T.contains(eval(*f, h_line(sys, g, Elem{m}), a))) continue;
            if (!V.scaled(*f, rg_inv).contains(g_at_one(*f, Elem{m}))) ok = false;
          }
        }
      }
    }
    CHECK_MESSAGE(ok, "q=" << q);
  }
}

TEST_CASE("k > 2 reduction") {
  auto f7 = FieldCtx::of_order(7);
  const KReduction id = reduce_k_to_2(*f7, 2, 0, 1, Elem{5});
  CHECK(id.r == 1);
  CHECK(id.rescale == Elem{1});
  CHECK(id.beta == Elem{5});

  const KReduction r = reduce_k_to_2(*f7, 4, 1, 3, Elem{3});
  CHECK(r.r == 2);
  CHECK(r.rescale == Elem{5});
  CHECK(r.beta == Elem{2});
  CHECK(reachable_betas(*f7, 3) == ElemSet::of(7, {1, 6}));
  CHECK(reachable_betas(*f7, 1) == domain_mask(f7, ProductDomain::kNonzero));

  CHECK_THROWS_AS(reduce_k_to_2(*f7, 4, 3, 1, Elem{3}), Error);
  CHECK_THROWS_AS(reduce_k_to_2(*f7, 4, 1, 3, Elem{0}), Error);

  // alpha^{-i} f(alpha) = c_i + c_j beta for f supported on {i, j}.
  for (std::uint32_t q : {7u, 8u, 9u}) {
    auto f = FieldCtx::of_order(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      const KReduction kr = reduce_k_to_2(*f, 5, 1, 4, Elem{a});
      for (std::uint32_t ci = 0; ci < q; ++ci) {
        for (std::uint32_t cj = 0; cj < q; ++cj) {
          MessageVec m(5, Elem{0});
          m[1] = Elem{ci};
          m[4] = Elem{cj};
          const Elem local = f->mul(kr.rescale, eval(*f, m, Elem{a}));
          CHECK(local == f->add(Elem{ci}, f->mul(Elem{cj}, kr.beta)));
        }
      }
    }
  }
}

TEST_CASE("message enumeration order and limits") {
  auto f3 = FieldCtx::of_order(3);
  std::vector<MessageVec> seen;
  for_each_message(*f3, 2, 0, 1, ElemSet::full(3),
                   [&](const MessageVec& m) { seen.push_back(m); });
  REQUIRE(seen.size() == 9);
  CHECK(seen[1] == line(0, 1));  // constant varies fastest
  CHECK(seen[3] == line(1, 0));
  auto f16 = FieldCtx::of_order(16);
  CHECK_THROWS_AS(for_each_message(*f16, 7, 0, 1, ElemSet::full(16),
                                   [](const MessageVec&) {}),
                  Error);
  CHECK(parse_domain("omega") == ProductDomain::kOmega);
  CHECK_THROWS_AS(parse_domain("bogus"), Error);
}

TEST_CASE("bit-sliced schemes read two evaluations") {
  for (std::uint32_t q : testing::sqrt_fields(16)) {
    if (q == 3) continue;  // Omega_3 = {1}
    auto f = FieldCtx::of_order(q);
    const auto& om = omega_set(f).elements;
    const LeakageScheme s = bitsliced_scheme(f, {om[0], om[1]});
    CHECK(s.t() == 2 * std::bit_width(q - 1));
    CHECK(verify_scheme(s, ProductDomain::kAll));
    CHECK(mqm_check(s));
  }
  // One server cannot pin down a line.
  auto f7 = FieldCtx::of_order(7);
  CHECK_FALSE(verify_scheme(bitsliced_scheme(f7, {Elem{1}}),
                            ProductDomain::kNonzero));
}

TEST_CASE("collision witnesses") {
  const LeakageScheme s = gf7_scheme();
  CHECK_FALSE(find_collision(s, ProductDomain::kNonzero).has_value());
  // Zero products collide with nonzero ones once the domain includes 0.
  const auto c = find_collision(s, ProductDomain::kAll);
  REQUIRE(c.has_value());
  const FieldCtx& f = *s.ctx;
  CHECK(transcript(s, c->f) == c->bits);
  CHECK(transcript(s, c->l) == c->bits);
  CHECK(coefficient_product(f, c->f, 0, 1) != coefficient_product(f, c->l, 0, 1));

  LeakageScheme half = s;
  half.schedule.resize(2);
  half.sets.resize(2);
  const auto h = find_collision(half, ProductDomain::kNonzero);
  REQUIRE(h.has_value());
  CHECK(transcript(half, h->f) == transcript(half, h->l));
}
