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

#include "qmlab/battery.hpp"

#include <cmath>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>

#include "qmlab/charsum.hpp"
#include "qmlab/error.hpp"
#include "qmlab/bucket_golden.hpp"
#include "qmlab/linleak.hpp"
#include "qmlab/pqm.hpp"
#include "qmlab/residues.hpp"
#include "qmlab/rscode.hpp"
#include "qmlab/search.hpp"
#include "qmlab/shamir7.hpp"

namespace qmlab {
namespace {

bool has_sqrt_system(std::uint32_t q) {
  return q >= 3 && q != 4 && q != 5;
}

ElemSet set_of(std::uint32_t q, const std::vector<std::uint32_t>& xs) {
  return ElemSet::of(q, xs);
}

Json message_to_json(const MessageVec& f) {
  return elems_to_json(std::vector<Elem>(f.begin(), f.end()));
}

// Runs fn and reports whether it threw the expected code.
CheckResult expect_error(std::string name, Errc want,
                         const std::function<void()>& fn) {
  CheckResult c{std::move(name), false, Json::object()};
  c.witness["expected"] = errc_name(want);
  try {
    fn();
    c.witness["got"] = "no error";
  } catch (const Error& e) {
    c.witness["got"] = errc_name(e.code());
    c.pass = e.code() == want;
  }
  return c;
}

CheckResult expect_set(std::string name, const ElemSet& got,
                       const ElemSet& want) {
  return CheckResult{std::move(name), got == want,
                     Json{{"expected", set_to_json(want)},
                          {"got", set_to_json(got)}}};
}

template <typename T>
CheckResult expect_value(std::string name, const T& got, const T& want) {
  return CheckResult{std::move(name), got == want,
                     Json{{"expected", want}, {"got", got}}};
}

Json replay_to_json(const ReplayReport& r) {
  Json j{{"valid_transcripts", r.valid_transcripts},
         {"valid_successes", r.valid_successes},
         {"all_transcripts", r.all_transcripts},
         {"all_successes", r.all_successes},
         {"max_terminal_survivors", r.max_terminal_survivors},
         {"empty_terminals", r.empty_terminals},
         {"survivor_bound_holds", r.survivor_bound_holds},
         {"monotone", r.monotone}};
  if (r.failing_valid) j["failing_transcript"] = transcript_string(*r.failing_valid);
  return j;
}

Json bound_to_json(const BoundReport& b) {
  Json j{{"q", b.q}, {"initial_points", b.initial_points}};
  j["real_bound"] = b.real_bound ? fixed6(*b.real_bound) : Json(nullptr);
  j["integer_round_bound"] =
      b.integer_round_bound ? Json(*b.integer_round_bound) : Json(nullptr);
  return j;
}

Json linleak_to_json(const LinleakReport& r) {
  Json j{{"q", r.q}, {"k", r.k}, {"i", r.i}, {"j", r.j}, {"t", r.t},
         {"tuples", r.tuples}, {"verified", r.verified},
         {"min_nullity", r.min_nullity}};
  auto queries = [](const std::vector<TraceQuery>& qs) {
    Json a = Json::array();
    for (const TraceQuery& x : qs) a.push_back({x.alpha.value, x.gamma.value});
    return a;
  };
  if (r.sample_queries) j["sample_queries"] = queries(*r.sample_queries);
  if (r.sample) {
    j["sample_collision"] = {{"f", message_to_json(r.sample->f)},
                             {"l", message_to_json(r.sample->l)},
                             {"product_f", r.sample->product_f.value},
                             {"product_l", r.sample->product_l.value}};
  }
  if (r.first_failure) j["first_failure"] = queries(*r.first_failure);
  return j;
}

LeakageScheme searched_mqm(std::uint32_t q, std::uint64_t budget) {
  SearchOptions o;
  o.mode = SearchMode::kMqm;
  o.budget = budget;
  const auto r = search_min_bandwidth(FieldCtx::of_order(q), o);
  if (!r) throw Error(Errc::kBudgetExceeded, "no mQM scheme within t_max");
  return r->scheme;
}

}  // namespace

Json check_to_json(const CheckResult& c) {
  return Json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}};
}

std::vector<std::uint32_t> prime_powers(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = std::max(lo, 2u); n <= hi; ++n) {
    std::uint32_t m = n, d = 2;
    while (m % d != 0) ++d;
    while (m % d == 0) m /= d;
    if (m == 1) out.push_back(n);
  }
  return out;
}

Json collision_to_json(const FieldCtx& ctx, const LeakageScheme& scheme,
                       const SchemeCollision& c) {
  return Json{
      {"f", message_to_json(c.f)},
      {"l", message_to_json(c.l)},
      {"product_f", coefficient_product(ctx, c.f, scheme.i, scheme.j).value},
      {"product_l", coefficient_product(ctx, c.l, scheme.i, scheme.j).value},
      {"transcript", transcript_string(c.bits)}};
}

CheckResult check_gf7_five_bit() {
  const LeakageScheme s = gf7_scheme();
  const FieldCtx& f = *s.ctx;
  std::size_t lines = 0;
  for_each_message(f, 2, 0, 1, domain_mask(s.ctx, ProductDomain::kNonzero),
                   [&](const MessageVec&) { ++lines; });
  const auto col = find_collision(s, ProductDomain::kNonzero);
  const bool by_alg = verify_scheme_by_algorithm(s, ProductDomain::kNonzero);
  const std::uint32_t naive = naive_interpolation_bits(7);
  CheckResult c{"gf7_five_bit", !col && by_alg && verify_gf7() && s.t() == 5 &&
                                    naive == 6 && lines == 36,
                Json::object()};
  c.witness = {{"bits", s.t()},
               {"naive_bits", naive},
               {"lines", lines},
               {"verified_by_algorithm", by_alg}};
  if (col) c.witness["collision"] = collision_to_json(f, s, *col);
  return c;
}

CheckResult check_bucket_table() {
  const auto table = figure1_table();
  CheckResult c{"figure1_table", true, Json{{"cells", 49}}};
  for (std::uint32_t a = 0; a < 7 && c.pass; ++a) {
    for (std::uint32_t g = 0; g < 7; ++g) {
      const std::set<std::uint32_t> want = expand_cell(kBucketGolden[a][g]);
      const ElemSet w = set_of(7, {want.begin(), want.end()});
      if (table[a][g] != w) {
        c.pass = false;
        c.witness = {{"alpha", a}, {"gamma", g},
                     {"expected", set_to_json(w)},
                     {"got", set_to_json(table[a][g])}};
        break;
      }
    }
  }
  return c;
}

CheckResult check_one_bit_leak() {
  const FieldPtr f = gf7_field();
  const ElemSet T = set_of(7, {0, 1, 6});
  const ElemSet b0 = one_bit_leak(f, f->one(), T, 0);
  const ElemSet b1 = one_bit_leak(f, f->one(), T, 1);
  return CheckResult{"one_bit_leak",
                     b0 == set_of(7, {4}) && b1 == set_of(7, {5}),
                     Json{{"alpha", 1},
                          {"T", set_to_json(T)},
                          {"bit0_eliminates", set_to_json(b0)},
                          {"bit1_eliminates", set_to_json(b1)}}};
}

CheckResult check_scaled_pair_union(std::uint32_t qmax) {
  std::vector<std::uint32_t> fields;
  for (std::uint32_t q : prime_powers(3, qmax)) {
    if (q % 2 == 1 && q != 5) fields.push_back(q);
  }
  for (std::uint32_t q : {8u, 16u, 32u, 64u}) {
    if (q <= qmax) fields.push_back(q);
  }
  Json failing = Json::array();
  Json first = nullptr;
  std::size_t deltas = 0;
  for (std::uint32_t q : fields) {
    const std::size_t want = q % 2 == 1 ? q - 3 : q - 4;
    const SqrtSystem sys = build_sqrt_system(FieldCtx::of_order(q));
    bool ok = true;
    try {
      const ScaledPair pair = sys.pair();
      for (Elem d : sys.omega_set().elements) {
        ++deltas;
        const std::size_t got = scaled_pair_union_size(sys, pair, d);
        if (got != want && ok) {
          ok = false;
          if (first.is_null()) {
            first = {{"q", q}, {"a", pair.a.value}, {"b", pair.b.value},
                     {"delta", d.value}, {"expected", want}, {"got", got}};
          }
        }
      }
    } catch (const Error& e) {
      if (e.code() != Errc::kNoPairExists) throw;
      ok = false;
      if (first.is_null()) {
        first = {{"q", q}, {"expected", want}, {"got", "NoPairExists"}};
      }
    }
    if (!ok) failing.push_back(q);
  }
  CheckResult c{"scaled_pair_union", failing.empty(),
                Json{{"fields_checked", fields.size()},
                     {"deltas_checked", deltas},
                     {"failing_fields", failing}}};
  if (!first.is_null()) c.witness["first_counterexample"] = first;
  return c;
}

CheckResult check_scalar_evolution(std::uint32_t qmax) {
  std::size_t fields = 0, pairs = 0;
  CheckResult c{"scalar_evolution", true, Json::object()};
  for (std::uint32_t q : prime_powers(3, std::min(qmax, 64u))) {
    if (!has_sqrt_system(q)) continue;
    ++fields;
    const FieldPtr f = FieldCtx::of_order(q);
    const SqrtSystem sys = build_sqrt_system(f);
    const ElemSet base = b11_unchecked(*f);
    for (Elem a : sys.omega_set().elements) {
      for (Elem g : sys.omega_set().elements) {
        ++pairs;
        const Elem scale = f->mul(sys.sqrt(g), sys.sqrt(a));
        const ElemSet want = base.scaled(*f, scale);
        const ElemSet got = bucket_eval(*f, g, a);
        if (got != want && c.pass) {
          c.pass = false;
          c.witness["first_counterexample"] = {
              {"q", q}, {"alpha", a.value}, {"gamma", g.value},
              {"expected", set_to_json(want)}, {"got", set_to_json(got)}};
        }
      }
    }
  }
  c.witness["fields_checked"] = fields;
  c.witness["pairs_checked"] = pairs;
  return c;
}

CheckResult check_weil_and_pairs(std::uint32_t qmax) {
  CheckResult c{"weil_bound_and_pairs", true, Json::object()};
  std::size_t fields = 0;
  std::int64_t largest = 0;
  std::uint32_t largest_q = 0;
  Json pair_failures = Json::array();
  for (std::uint32_t q : prime_powers(3, qmax)) {
    if (q % 2 == 0) continue;
    ++fields;
    const FieldPtr f = FieldCtx::of_order(q);
    const CharSumReport r =
        complete_char_sum(*f, {Elem{0}, Elem{1}, Elem{0}, Elem{1}});
    const bool within = r.square_free && r.within_bound &&
                        double(std::llabs(r.value)) <= 2.0 * std::sqrt(double(q));
    if (std::llabs(r.value) > largest) {
      largest = std::llabs(r.value);
      largest_q = q;
    }
    if (!within && c.pass) {
      c.pass = false;
      c.witness["weil_counterexample"] = {
          {"q", q}, {"value", r.value}, {"bound", fixed6(r.bound)}};
    }
    std::string got = "pair";
    try {
      canonical_scaled_pair(f);
    } catch (const Error& e) {
      if (e.code() != Errc::kNoPairExists) throw;
      got = "NoPairExists";
    }
    const std::string want = q == 5 ? "NoPairExists" : "pair";
    if (got != want) {
      c.pass = false;
      pair_failures.push_back({{"q", q}, {"expected", want}, {"got", got}});
    }
  }
  c.witness["fields_checked"] = fields;
  c.witness["largest_abs_sum"] = {{"q", largest_q}, {"value", largest}};
  c.witness["pair_failures"] = pair_failures;
  return c;
}

CheckResult check_artin_schreier(std::uint32_t qmax) {
  CheckResult c{"artin_schreier", true, Json::object()};
  Json fields = Json::array();
  for (std::uint32_t q : {8u, 16u, 32u, 64u}) {
    if (q > qmax) continue;
    fields.push_back(q);
    const FieldPtr f = FieldCtx::of_order(q);
    for (std::uint32_t v = 0; v < q; ++v) {
      const Elem x{v};
      const ArtinSchreier as = artin_schreier_solvable(*f, x);
      const bool trace_zero = f->trace(x) == f->zero();
      bool root_ok = true;
      if (as.root) {
        const Elem y = *as.root;
        root_ok = f->add(f->add(f->mul(y, y), y), x) == f->zero();
      }
      if ((as.solvable != trace_zero || !root_ok) && c.pass) {
        c.pass = false;
        c.witness["first_counterexample"] = {
            {"q", q}, {"c", v}, {"solvable", as.solvable},
            {"trace", f->trace(x).value}};
      }
    }
    if (!b11_trace_kernel_check(*f) && c.pass) {
      c.pass = false;
      c.witness["first_counterexample"] = {{"q", q}, {"trace_kernel", false}};
    }
  }
  c.witness["fields_checked"] = fields;
  return c;
}

CheckResult check_mqm_to_pqm(std::uint64_t budget) {
  const FieldPtr f = FieldCtx::of_order(7);
  const SqrtSystem sys = build_sqrt_system(f);
  SearchOptions o;
  o.mode = SearchMode::kMqm;
  o.budget = budget;
  const auto found = search_min_bandwidth(f, o);
  const std::int64_t floor = *bandwidth_bound(*f).integer_round_bound;
  CheckResult c{"mqm_to_pqm", false, Json{{"round_floor", floor}}};
  if (!found) {
    c.witness["search"] = "no scheme within t_max";
    return c;
  }
  const LeakageScheme& s = found->scheme;
  const ReplayReport rep = replay_translation(sys, s, mqm_to_pqm(sys, s));
  c.witness["t"] = found->t;
  c.witness["scheme"] = scheme_to_json(s);
  c.witness["replay"] = replay_to_json(rep);
  c.pass = std::int64_t(found->t) >= floor && mqm_check(s) &&
           rep.valid_successes == rep.valid_transcripts &&
           rep.survivor_bound_holds &&
           rep.max_terminal_survivors <= survivor_limit(*f);
  return c;
}

CheckResult check_game_floor(std::uint64_t seed, std::uint32_t max_rounds) {
  CheckResult c{"game_floor", true, Json::object()};
  Json fields = Json::array();
  for (std::uint32_t q : {7u, 9u, 11u, 13u, 8u, 16u}) {
    const FieldPtr f = FieldCtx::of_order(q);
    const SqrtSystem sys = build_sqrt_system(f);
    const BoundReport bound = bandwidth_bound(*f);
    const std::int64_t floor = *bound.integer_round_bound;
    const auto& om = sys.omega_set().elements;
    const LeakageScheme bits = bitsliced_scheme(f, {om[0], om[1]});
    Json runs = Json::array();
    for (AliceStrategy a : {AliceStrategy::kGreedyHalving,
                            AliceStrategy::kRandomSet, AliceStrategy::kReplay}) {
      GameConfig cfg;
      cfg.strategy = a;
      cfg.seed = seed;
      cfg.max_rounds = max_rounds;
      if (a == AliceStrategy::kReplay) cfg.replay = mqm_to_pqm(sys, bits);
      const GameResult g = adversarial_game(sys, cfg);
      // A game that never ends needs infinitely many rounds.
      const bool meets = !g.terminated || std::int64_t(g.rounds) >= floor;
      runs.push_back({{"strategy", strategy_name(a)},
                      {"terminated", g.terminated},
                      {"rounds", g.terminated ? Json(g.rounds) : Json("inf")},
                      {"rounds_played", g.log.size()},
                      {"classes_left", g.final_state.nonempty_classes()},
                      {"meets_floor", meets}});
      if (!meets && c.pass) {
        c.pass = false;
        c.witness["first_counterexample"] = {{"q", q},
                                             {"strategy", strategy_name(a)},
                                             {"rounds", g.rounds},
                                             {"floor", floor}};
      }
    }
    Json entry = bound_to_json(bound);
    entry["runs"] = runs;
    fields.push_back(entry);
  }
  c.witness["fields"] = fields;
  const BoundReport b5 = bandwidth_bound(*FieldCtx::of_order(5));
  const BoundReport b4 = bandwidth_bound(*FieldCtx::of_order(4));
  c.witness["closed_form"] = {bound_to_json(b5), bound_to_json(b4)};
  if (!(b5.real_bound && *b5.real_bound == 1.0 && b4.real_bound &&
        *b4.real_bound == -2.0)) {
    c.pass = false;
  }
  return c;
}

CheckResult check_linear_leakage(std::uint64_t seed) {
  const LinleakReport f4 =
      linleak_exhaustive(FieldCtx::of_order(4), 2, 0, 1);
  const LinleakReport f8 =
      linleak_sampled(FieldCtx::of_order(8), 2, 0, 1, 1000, seed);
  return CheckResult{
      "linear_leakage",
      f4.tuples == 1728 && f4.verified == f4.tuples && f4.t == 3 &&
          f8.tuples == 1000 && f8.verified == f8.tuples && f8.t == 5,
      Json{{"f4_exhaustive", linleak_to_json(f4)},
           {"f8_sampled", linleak_to_json(f8)}}};
}

std::vector<CheckResult> worked_examples() {
  std::vector<CheckResult> out;
  const FieldPtr f3 = FieldCtx::of_order(3);
  const FieldPtr f4 = FieldCtx::of_order(4);
  const FieldPtr f5 = FieldCtx::of_order(5);
  const FieldPtr f7 = FieldCtx::of_order(7);
  const FieldPtr f8 = FieldCtx::of_order(8);

  out.push_back(expect_error("galois.f4_no_zero_inverse_trace_primitive",
                             Errc::kUnsupportedField,
                             [&] { find_primitive_zero_inv_trace(*f4); }));
  out.push_back(expect_set("residues.qr5", quadratic_residues(*f5),
                           set_of(5, {1, 4})));
  out.push_back(expect_set("residues.qr3", quadratic_residues(*f3),
                           set_of(3, {1})));
  out.push_back(expect_value("residues.chi_zero_f7",
                             quadratic_character(*f7, Elem{0}), 0));
  out.push_back(
      expect_value("residues.minus_one_in_qr5", minus_one_is_residue(*f5), true));
  {
    const ElemSet b = b11_unchecked(*f5);
    out.push_back(CheckResult{
        "residues.f5_b11_misses_qr5",
        b == set_of(5, {0, 2, 3}) && !b.intersects(quadratic_residues(*f5)),
        Json{{"b11", set_to_json(b)},
             {"qr", set_to_json(quadratic_residues(*f5))}}});
  }
  {
    const SqrtSystem sys = build_sqrt_system(f8);
    const Elem w = sys.omega_set().omega;
    out.push_back(expect_value("residues.f8_sqrt_omega_squared",
                               sys.sqrt(f8->mul(w, w)).value, w.value));
  }
  {
    const ScaledPair p = canonical_scaled_pair(f3);
    out.push_back(CheckResult{"residues.f3_pair",
                              p.a.value == 1 && p.b.value == 2,
                              Json{{"a", p.a.value}, {"b", p.b.value}}});
  }
  out.push_back(expect_error("residues.f5_no_pair", Errc::kNoPairExists,
                             [&] { canonical_scaled_pair(f5); }));
  {
    const SqrtSystem sys = build_sqrt_system(f7);
    out.push_back(expect_value(
        "residues.f7_union_delta1",
        scaled_pair_union_size(sys, sys.pair(), Elem{1}), std::size_t{4}));
  }
  {
    const SqrtSystem sys = build_sqrt_system(f8);
    Json sizes = Json::object();
    bool ok = true;
    for (Elem d : sys.omega_set().elements) {
      const std::size_t n = scaled_pair_union_size(sys, sys.pair(), d);
      sizes[std::to_string(d.value)] = n;
      ok = ok && n == 4;
    }
    out.push_back(CheckResult{"residues.f8_union_all_deltas", ok,
                              Json{{"sizes", sizes}}});
  }
  {
    const CharSumReport r =
        complete_char_sum(*f7, {Elem{0}, Elem{1}, Elem{0}, Elem{1}});
    out.push_back(CheckResult{
        "charsum.f7_weil",
        r.within_bound && double(std::llabs(r.value)) <= 2.0 * std::sqrt(7.0),
        Json{{"value", r.value}, {"bound", fixed6(r.bound)}}});
  }
  out.push_back(expect_error("charsum.f4_trace_kernel_unsupported",
                             Errc::kUnsupportedField,
                             [&] { b11_trace_kernel_check(*f4); }));
  {
    const Bucket b = bucket(*f7, Elem{1});
    bool ok = b.lines.size() == 6;
    for (std::uint32_t m = 1; m < 7 && ok; ++m) {
      const Line want = make_line(*f7, f7->inv(Elem{m}), Elem{m});
      bool seen = false;
      for (const Line& l : b.lines) seen = seen || l == want;
      ok = seen;
    }
    out.push_back(CheckResult{"rscode.f7_bucket_one", ok,
                              Json{{"lines", b.lines.size()}}});
  }
  out.push_back(expect_set("rscode.f7_b4_at_1", bucket_eval(*f7, Elem{4}, Elem{1}),
                           set_of(7, {2, 3, 4, 5})));
  out.push_back(expect_set("rscode.f7_b1_at_0", bucket_eval(*f7, Elem{1}, Elem{0}),
                           set_of(7, {1, 2, 3, 4, 5, 6})));
  out.push_back(expect_set("rscode.f7_b1_at_1", bucket_eval(*f7, Elem{1}, Elem{1}),
                           set_of(7, {1, 2, 5, 6})));
  out.push_back(expect_set("rscode.f5_b11", b11(*f5), set_of(5, {0, 2, 3})));
  out.push_back(expect_set("rscode.f3_b11", b11(*f3), set_of(3, {1, 2})));
  out.push_back(expect_value("rscode.f8_b11_size", b11(*f8).size(), std::size_t{4}));

  const LeakageScheme gf7 = gf7_scheme();
  out.push_back(expect_value("qm.leak_bit_t1_at_3",
                             leak_bit(set_of(7, {0, 1, 6}), Elem{3}), 1));
  out.push_back(expect_value("qm.gf7_verify_nonzero",
                             verify_scheme(gf7, ProductDomain::kNonzero), true));
  out.push_back(
      expect_value("qm.mqm_rejects_servers_outside_omega", mqm_check(gf7), false));
  {
    SearchOptions o;
    o.mode = SearchMode::kAppendix;
    const auto r = search_min_bandwidth(f7, o);
    CheckResult c{"search.f7_appendix_at_most_5", r && r->t <= 5,
                  Json::object()};
    if (r) {
      c.witness = {{"t", r->t}, {"scheme", scheme_to_json(r->scheme)}};
    }
    out.push_back(c);
  }
  {
    const SqrtSystem sys = build_sqrt_system(f8);
    const LeakageScheme s = searched_mqm(8, 50'000'000);
    const ReplayReport rep = replay_translation(sys, s, mqm_to_pqm(sys, s));
    out.push_back(CheckResult{
        "pqm.f8_survivors_at_most_3",
        rep.valid_successes > 0 && rep.survivor_bound_holds &&
            rep.max_terminal_survivors <= 3,
        Json{{"scheme", scheme_to_json(s)}, {"replay", replay_to_json(rep)}}});
  }
  {
    const BoundReport b = bandwidth_bound(*f5);
    out.push_back(CheckResult{"pqm.bound_q5",
                              b.real_bound && *b.real_bound == 1.0,
                              bound_to_json(b)});
  }
  {
    const BoundReport b = bandwidth_bound(*f4);
    out.push_back(CheckResult{"pqm.bound_q4",
                              b.real_bound && *b.real_bound == -2.0,
                              bound_to_json(b)});
  }
  out.push_back(expect_set("shamir7.set0", gf7.sets[0], set_of(7, {0, 2, 5})));
  out.push_back(expect_set("shamir7.set2", gf7.sets[2], set_of(7, {0, 3, 4})));
  out.push_back(expect_value("shamir7.rounds", gf7.t(), std::size_t{5}));
  out.push_back(expect_value("shamir7.verify", verify_gf7(), true));
  out.push_back(
      expect_value("shamir7.naive_bits", naive_interpolation_bits(7), 6u));
  {
    const ElemSet T = set_of(7, {0, 1, 6});
    out.push_back(expect_set("shamir7.leak_bit0",
                             one_bit_leak(f7, Elem{1}, T, 0), set_of(7, {4})));
    out.push_back(expect_set("shamir7.leak_bit1",
                             one_bit_leak(f7, Elem{1}, T, 1), set_of(7, {5})));
  }
  {
    const auto table = figure1_table();
    out.push_back(expect_set("shamir7.cell_2_3", table[2][3], set_of(7, {0, 2, 5})));
    out.push_back(
        expect_set("shamir7.cell_1_1", table[1][1], set_of(7, {1, 2, 5, 6})));
    out.push_back(expect_set("shamir7.cell_0_6", table[0][6],
                             set_of(7, {1, 2, 3, 4, 5, 6})));
  }
  return out;
}

std::vector<CheckResult> property_checks(const BatteryOptions& opts) {
  return {check_gf7_five_bit(),
          check_bucket_table(),
          check_one_bit_leak(),
          check_scaled_pair_union(opts.qmax),
          check_scalar_evolution(opts.qmax),
          check_weil_and_pairs(opts.qmax),
          check_artin_schreier(opts.qmax),
          check_mqm_to_pqm(opts.search_budget),
          check_game_floor(opts.seed, opts.game_rounds),
          check_linear_leakage(opts.seed)};
}

}  // namespace qmlab
