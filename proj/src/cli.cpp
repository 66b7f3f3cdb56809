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

#include "qmlab/cli.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "CLI11.hpp"
#include "qmlab/charsum.hpp"
#include "qmlab/error.hpp"
#include "qmlab/linleak.hpp"
#include "qmlab/pqm.hpp"
#include "qmlab/residues.hpp"
#include "qmlab/rscode.hpp"
#include "qmlab/search.hpp"
#include "qmlab/shamir7.hpp"

namespace qmlab {
namespace {

struct Opts {
  bool json = false;
  std::uint64_t seed = 0;
  std::uint32_t q = 0;
  std::string poly;
  std::string scheme_path;
  std::string domain = "all";
  std::string mode = "qm";
  std::uint32_t tmax = 8;
  std::uint64_t budget = 50'000'000;
  std::string out_path;
  bool unchecked = false;
  std::string vfile;
  std::string bits;
  bool leaked = false;
  std::string strategy = "greedy-halving";
  std::uint32_t max_rounds = 0;
  std::uint32_t k = 2, i = 0, j = 1;
  bool exhaustive = false;
  std::uint64_t samples = 1000;
  std::uint32_t alpha = 1;
  std::string set = "0,1,6";
  std::uint32_t qmax = 64;
};

std::vector<std::uint32_t> parse_uint_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size() || v > UINT32_MAX) {
      throw Error(Errc::kInvalidArgument, "bad list entry '" + tok + "'");
    }
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::vector<Elem> parse_elems(const FieldCtx& ctx, const std::string& text) {
  std::vector<Elem> out;
  for (std::uint32_t v : parse_uint_list(text)) {
    if (v >= ctx.q()) {
      throw Error(Errc::kInvalidArgument,
                  std::to_string(v) + " is not an element of F_" +
                      std::to_string(ctx.q()));
    }
    out.push_back(Elem{v});
  }
  return out;
}

ElemSet parse_set(const FieldCtx& ctx, const std::string& text) {
  ElemSet s(ctx.q());
  for (Elem x : parse_elems(ctx, text)) s.insert(x);
  return s;
}

std::string set_text(const ElemSet& s) {
  std::string out = "{";
  for (std::uint32_t v : s.values()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

// Rows alpha, columns gamma.
std::string grid_text(const std::vector<std::vector<ElemSet>>& table) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 0;
  for (const auto& row : table) {
    cells.emplace_back();
    for (const ElemSet& s : row) {
      cells.back().push_back(set_text(s));
      width = std::max(width, cells.back().back().size());
    }
  }
  std::ostringstream out;
  out << "alpha\\gamma";
  for (std::size_t g = 0; g < table.size(); ++g) {
    out << "  " << std::string(width - std::to_string(g).size(), ' ') << g;
  }
  out << "\n";
  for (std::size_t a = 0; a < cells.size(); ++a) {
    const std::string label = std::to_string(a);
    out << std::string(11 - label.size(), ' ') << label;
    for (const std::string& c : cells[a]) {
      out << "  " << std::string(width - c.size(), ' ') << c;
    }
    out << "\n";
  }
  return out.str();
}

Json table_to_json(const std::vector<std::vector<ElemSet>>& table) {
  Json rows = Json::array();
  for (const auto& row : table) {
    Json r = Json::array();
    for (const ElemSet& s : row) r.push_back(set_to_json(s));
    rows.push_back(r);
  }
  return rows;
}

Json state_to_json(const PqmState& st) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < st.gammas.size(); ++c) {
    classes.push_back(
        {{"gamma", st.gammas[c].value}, {"S", set_to_json(st.S[c])}});
  }
  return Json{{"round", st.round},
              {"nonempty_classes", st.nonempty_classes()},
              {"total_points", st.total_points()},
              {"classes", classes}};
}

Json bound_json(const BoundReport& b) {
  Json j{{"q", b.q}, {"p", b.p}, {"e", b.e}, {"initial_points", b.initial_points}};
  j["real_bound"] = b.real_bound ? fixed6(*b.real_bound) : Json(nullptr);
  j["integer_round_bound"] =
      b.integer_round_bound ? Json(*b.integer_round_bound) : Json(nullptr);
  return j;
}

RunReport make_report(std::string command, Json field) {
  RunReport r;
  r.command = std::move(command);
  r.field = std::move(field);
  return r;
}

std::optional<SqrtSystem> try_sqrt_system(const FieldPtr& f) {
  if (f->q() < 3 || f->q() == 4 || f->q() == 5) return std::nullopt;
  return build_sqrt_system(f);
}

RunReport cmd_field(const Opts& o) {
  const FieldPtr f = FieldCtx::of_order(o.q);
  RunReport r = make_report("field", field_to_json(*f));
  r.result = {{"q", f->q()},
              {"generator", f->generator().value},
              {"regime", f->p() == 2 && f->e() < 3
                             ? Json(nullptr)
                             : Json(regime_name(detect_regime(*f)))}};
  if (f->p() == 2 && f->e() >= 3) {
    r.result["zero_inverse_trace_primitive"] =
        find_primitive_zero_inv_trace(*f).value;
  }
  return r;
}

RunReport cmd_residues(const Opts& o) {
  const FieldPtr f = FieldCtx::of_order(o.q);
  RunReport r = make_report("residues", field_to_json(*f));
  const OmegaSet om = omega_set(f);
  r.result["omega"] = {{"kind", om.kind == OmegaKind::kQR ? "QR" : "W"},
                       {"elements", elems_to_json(om.elements)}};
  if (om.kind == OmegaKind::kW) r.result["omega"]["omega"] = om.omega.value;
  r.result["regime"] = regime_name(detect_regime(*f));
  const auto sys = try_sqrt_system(f);
  if (!sys) {
    r.result["sqrt"] = nullptr;
    r.result["pair"] = "NoPairExists";
    return r;
  }
  Json roots = Json::object();
  for (Elem g : om.elements) roots[std::to_string(g.value)] = sys->sqrt(g).value;
  r.result["sqrt"] = roots;
  r.result["upsilon"] = set_to_json(sys->upsilon());
  const std::size_t want = f->p() == 2 ? f->q() - 4 : f->q() - 3;
  r.result["expected_union_size"] = want;
  if (!sys->has_scaled_pair()) {
    r.result["pair"] = "NoPairExists";
    r.checks.push_back({"scaled_pair_exists", false,
                        Json{{"q", f->q()}, {"got", "NoPairExists"}}});
    return r;
  }
  const ScaledPair p = sys->pair();
  r.result["pair"] = {{"a", p.a.value}, {"b", p.b.value}};
  Json sizes = Json::object();
  CheckResult c{"union_size", true, Json::object()};
  for (Elem d : om.elements) {
    const std::size_t n = scaled_pair_union_size(*sys, p, d);
    sizes[std::to_string(d.value)] = n;
    if (n != want && c.pass) {
      c.pass = false;
      c.witness = {{"delta", d.value}, {"expected", want}, {"got", n}};
    }
  }
  r.result["union_sizes"] = sizes;
  r.checks.push_back(c);
  return r;
}

RunReport cmd_charsum(const Opts& o) {
  const FieldPtr f = FieldCtx::of_order(o.q);
  RunReport r = make_report("charsum", field_to_json(*f));
  const CharSumReport cs = complete_char_sum(*f, parse_elems(*f, o.poly));
  r.result = {{"poly", elems_to_json(cs.poly)},
              {"value", cs.value},
              {"degree", cs.degree},
              {"bound", fixed6(cs.bound)},
              {"square_free", cs.square_free}};
  if (cs.square_free) {
    r.checks.push_back({"weil_bound", cs.within_bound,
                        Json{{"value", cs.value}, {"bound", fixed6(cs.bound)}}});
  }
  return r;
}

RunReport cmd_buckets(const Opts& o) {
  const FieldPtr f = FieldCtx::of_order(o.q);
  if (f->q() > 64) {
    throw Error(Errc::kInvalidArgument, "bucket tables are limited to q <= 64");
  }
  RunReport r = make_report("buckets", field_to_json(*f));
  std::vector<std::vector<ElemSet>> table(f->q());
  for (std::uint32_t a = 0; a < f->q(); ++a) {
    for (std::uint32_t g = 0; g < f->q(); ++g) {
      table[a].push_back(bucket_eval(*f, Elem{g}, Elem{a}));
    }
  }
  r.result["table"] = table_to_json(table);
  r.text = grid_text(table);
  if (const auto sys = try_sqrt_system(f)) {
    const ElemSet base = b11_unchecked(*f);
    CheckResult c{"scalar_evolution", true, Json::object()};
    for (Elem a : sys->omega_set().elements) {
      for (Elem g : sys->omega_set().elements) {
        const ElemSet want =
            base.scaled(*f, f->mul(sys->sqrt(g), sys->sqrt(a)));
        if (table[a.value][g.value] != want && c.pass) {
          c.pass = false;
          c.witness = {{"alpha", a.value}, {"gamma", g.value},
                       {"expected", set_to_json(want)},
                       {"got", set_to_json(table[a.value][g.value])}};
        }
      }
    }
    r.checks.push_back(c);
  }
  return r;
}

RunReport cmd_qm_verify(const Opts& o) {
  const LeakageScheme s = read_scheme_file(o.scheme_path);
  const ProductDomain d = parse_domain(o.domain);
  RunReport r = make_report("qm verify", field_to_json(*s.ctx));
  r.result = {{"t", s.t()}, {"k", s.k}, {"i", s.i}, {"j", s.j},
              {"domain", domain_name(d)}};
  const auto col = find_collision(s, d);
  CheckResult sep{"separates_products", !col, Json::object()};
  if (col) sep.witness = collision_to_json(*s.ctx, s, *col);
  r.checks.push_back(sep);
  r.checks.push_back({"algorithm_recovers_products",
                      verify_scheme_by_algorithm(s, d), Json::object()});
  return r;
}

RunReport cmd_qm_search(const Opts& o) {
  const FieldPtr f = FieldCtx::of_order(o.q);
  RunReport r = make_report("qm search", field_to_json(*f));
  SearchOptions so;
  so.mode = parse_mode(o.mode);
  so.t_max = o.tmax;
  so.budget = o.budget;
  r.result = {{"mode", mode_name(so.mode)}, {"tmax", o.tmax}, {"budget", o.budget}};
  std::optional<SearchResult> found;
  try {
    found = search_min_bandwidth(f, so);
  } catch (const Error& e) {
    if (e.code() != Errc::kBudgetExceeded) throw;
    r.checks.push_back({"scheme_found", false, Json{{"error", e.what()}}});
    return r;
  }
  if (!found) {
    r.checks.push_back(
        {"scheme_found", false, Json{{"error", "no scheme with t <= tmax"}}});
    return r;
  }
  r.result["t"] = found->t;
  r.result["nodes"] = found->nodes;
  r.result["lower_bound"] = found->lower_bound;
  r.result["pairs"] = found->pairs;
  r.result["queries"] = found->queries;
  r.result["scheme"] = scheme_to_json(found->scheme);
  r.checks.push_back({"scheme_found", true, Json{{"t", found->t}}});
  r.checks.push_back(
      {"witness_verifies",
       verify_scheme(found->scheme, mode_domain(so.mode)), Json::object()});
  if (!o.out_path.empty()) write_scheme_file(o.out_path, found->scheme);
  return r;
}

RunReport cmd_qm_convert(const Opts& o) {
  const LeakageScheme s = read_scheme_file(o.scheme_path);
  const SqrtSystem sys = build_sqrt_system(s.ctx);
  RunReport r = make_report("qm convert", field_to_json(*s.ctx));
  VSequence seq{s.ctx, o.unchecked ? translate_eliminators(sys, s)
                                   : mqm_to_pqm(sys, s)};
  r.result = vsequence_to_json(seq);
  r.result["checked"] = !o.unchecked;
  if (!o.out_path.empty()) {
    write_text_file(o.out_path, canonical_dump(vsequence_to_json(seq)));
  }
  return r;
}

RunReport cmd_pqm_run(const Opts& o) {
  const VSequence seq = read_vsequence_file(o.vfile);
  const SqrtSystem sys = build_sqrt_system(seq.ctx);
  Transcript b = parse_transcript(o.bits);
  if (b.size() != seq.V.size()) {
    throw Error(Errc::kInvalidArgument, "transcript has " +
                                            std::to_string(b.size()) +
                                            " bits for " +
                                            std::to_string(seq.V.size()) +
                                            " rounds");
  }
  if (o.leaked) b = pruning_bits(b);
  RunReport r = make_report("pqm run", field_to_json(*seq.ctx));
  const PqmResult res = run_pqm(sys, seq.V, b);
  r.result = {{"pruning_bits", transcript_string(b)},
              {"status", pqm_status_name(res.status)},
              {"final_state", state_to_json(res.state)}};
  r.checks.push_back({"success", res.status == PqmStatus::kSuccess,
                      Json{{"nonempty_classes", res.state.nonempty_classes()}}});
  if (res.state.nonempty_classes() == 1) {
    r.checks.push_back({"survivor_bound",
                        survivor_size_check(*seq.ctx, res.state),
                        Json{{"limit", survivor_limit(*seq.ctx)},
                             {"survivors", res.state.total_points()}}});
  }
  return r;
}

RunReport cmd_game(const Opts& o, const std::string& name) {
  FieldPtr f;
  GameConfig cfg;
  cfg.strategy = parse_strategy(o.strategy);
  cfg.seed = o.seed;
  if (o.max_rounds > 0) cfg.max_rounds = o.max_rounds;
  Json replay_source = nullptr;
  if (cfg.strategy == AliceStrategy::kReplay && !o.vfile.empty()) {
    VSequence seq = read_vsequence_file(o.vfile);
    f = seq.ctx;
    cfg.replay = std::move(seq.V);
    replay_source = o.vfile;
  } else {
    f = FieldCtx::of_order(o.q);
  }
  const SqrtSystem sys = build_sqrt_system(f);
  if (cfg.strategy == AliceStrategy::kReplay && o.vfile.empty()) {
    const auto& om = sys.omega_set().elements;
    if (om.size() < 2) {
      throw Error(Errc::kInvalidArgument,
                  "the default replay needs two servers in Omega_q");
    }
    cfg.replay = mqm_to_pqm(sys, bitsliced_scheme(f, {om[0], om[1]}));
    replay_source = "bitsliced";
  }
  RunReport r = make_report(name, field_to_json(*f));
  const GameResult g = adversarial_game(sys, cfg);
  const BoundReport bound = bandwidth_bound(*f);
  Json log = Json::array();
  for (const GameRound& x : g.log) {
    log.push_back({{"V", x.V.to_hex()}, {"keep0", x.keep0}, {"keep1", x.keep1},
                   {"bit", x.bit}, {"tie", x.tie}, {"total_after", x.total_after},
                   {"classes_after", x.classes_after}});
  }
  r.result = {{"strategy", strategy_name(cfg.strategy)},
              {"seed", o.seed},
              {"max_rounds", cfg.max_rounds ? *cfg.max_rounds
                                            : default_max_rounds(*f)},
              {"terminated", g.terminated},
              {"rounds", g.terminated ? Json(g.rounds) : Json("inf")},
              {"rounds_played", g.log.size()},
              {"initial_points", g.initial_points},
              {"bound", bound_json(bound)},
              {"log", log},
              {"final_state", state_to_json(g.final_state)}};
  if (!replay_source.is_null()) r.result["replay_source"] = replay_source;
  if (bound.integer_round_bound) {
    const std::int64_t floor = *bound.integer_round_bound;
    r.checks.push_back(
        {"meets_round_floor", !g.terminated || std::int64_t(g.rounds) >= floor,
         Json{{"floor", floor},
              {"rounds", g.terminated ? Json(g.rounds) : Json("inf")}}});
  }
  return r;
}

RunReport cmd_bound(const Opts& o) {
  const FieldPtr f = FieldCtx::of_order(o.q);
  RunReport r = make_report("bound", field_to_json(*f));
  r.result = bound_json(bandwidth_bound(*f));
  return r;
}

RunReport cmd_linleak(const Opts& o) {
  const FieldPtr f = FieldCtx::of_order(o.q);
  RunReport r = make_report("linleak check", field_to_json(*f));
  const LinleakReport rep =
      o.exhaustive ? linleak_exhaustive(f, o.k, o.i, o.j)
                   : linleak_sampled(f, o.k, o.i, o.j, o.samples, o.seed);
  r.result = {{"k", rep.k}, {"i", rep.i}, {"j", rep.j}, {"t", rep.t},
              {"tuples", rep.tuples}, {"verified", rep.verified},
              {"min_nullity", rep.min_nullity},
              {"exhaustive", o.exhaustive}};
  if (!o.exhaustive) r.result["seed"] = o.seed;
  CheckResult c{"collisions_verify", rep.verified == rep.tuples,
                Json{{"tuples", rep.tuples}, {"verified", rep.verified}}};
  if (rep.first_failure) {
    Json qs = Json::array();
    for (const TraceQuery& x : *rep.first_failure) {
      qs.push_back({x.alpha.value, x.gamma.value});
    }
    c.witness["first_failure"] = qs;
  }
  if (rep.sample) {
    r.result["sample_collision"] = {
        {"f", elems_to_json(rep.sample->f)},
        {"l", elems_to_json(rep.sample->l)},
        {"product_f", rep.sample->product_f.value},
        {"product_l", rep.sample->product_l.value}};
  }
  r.checks.push_back(c);
  return r;
}

RunReport cmd_gf7_verify() {
  const LeakageScheme s = gf7_scheme();
  RunReport r = make_report("gf7 verify", field_to_json(*s.ctx));
  r.result["scheme"] = scheme_to_json(s);
  r.checks.push_back(check_gf7_five_bit());
  return r;
}

RunReport cmd_gf7_table() {
  const FieldPtr f = gf7_field();
  RunReport r = make_report("gf7 table", field_to_json(*f));
  const auto table = figure1_table();
  r.result["table"] = table_to_json(table);
  r.text = grid_text(table);
  r.checks.push_back(check_bucket_table());
  return r;
}

RunReport cmd_gf7_leak(const Opts& o) {
  const FieldPtr f = gf7_field();
  if (o.alpha >= 7) throw Error(Errc::kInvalidArgument, "alpha must be < 7");
  const ElemSet T = parse_set(*f, o.set);
  RunReport r = make_report("gf7 leak", field_to_json(*f));
  r.result = {{"alpha", o.alpha},
              {"T", set_to_json(T)},
              {"bit0_eliminates", set_to_json(one_bit_leak(f, Elem{o.alpha}, T, 0))},
              {"bit1_eliminates", set_to_json(one_bit_leak(f, Elem{o.alpha}, T, 1))}};
  return r;
}

RunReport cmd_suite(const Opts& o) {
  RunReport r = make_report("suite", nullptr);
  BatteryOptions bo;
  bo.qmax = o.qmax;
  bo.seed = o.seed;
  r.checks = property_checks(bo);
  for (CheckResult& c : worked_examples()) r.checks.push_back(std::move(c));
  std::size_t passed = 0;
  for (const CheckResult& c : r.checks) passed += c.pass;
  r.result = {{"qmax", o.qmax},
              {"seed", o.seed},
              {"passed", passed},
              {"failed", r.checks.size() - passed}};
  return r;
}

void print_text(const RunReport& r, double seconds, std::ostream& out) {
  out << "command: " << r.command << "\n";
  if (!r.field.is_null()) {
    out << "field: p=" << r.field["p"] << " e=" << r.field["e"]
        << " irreducible=" << r.field["irreducible"].dump() << "\n";
  }
  if (!r.text.empty()) out << r.text;
  for (const auto& [key, value] : r.result.items()) {
    if (!r.text.empty() && key == "table") continue;
    out << key << ": " << value.dump() << "\n";
  }
  for (const CheckResult& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass) out << " " << c.witness.dump();
    out << "\n";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  out << "wall time: " << buf << " s\n";
  out << "overall: " << (r.pass() ? "PASS" : "FAIL") << "\n";
}

}  // namespace

bool RunReport::pass() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

Json report_to_json(const RunReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) checks.push_back(check_to_json(c));
  return Json{{"command", r.command},
              {"field", r.field},
              {"checks", checks},
              {"pass", r.pass()},
              {"result", r.result}};
}

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  Opts o;
  CLI::App app{"Leakage-resilient secret sharing lab over finite fields",
               "qmlab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print the report as canonical JSON");
  app.add_option("--seed", o.seed, "Seed for every random choice")
      ->capture_default_str();

  auto add_q = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "Field order, a prime power")->required();
  };

  auto* field = app.add_subcommand("field", "Field parameters");
  add_q(field);
  auto* residues = app.add_subcommand(
      "residues", "Omega_q, square roots, the scaled pair and union sizes");
  add_q(residues);
  auto* charsum =
      app.add_subcommand("charsum", "Quadratic character sum of a polynomial");
  add_q(charsum);
  charsum->add_option("--poly", o.poly, "Coefficients, constant term first")
      ->required();
  auto* buckets = app.add_subcommand("buckets", "Bucket image table B_g(alpha)");
  add_q(buckets);

  auto* qm = app.add_subcommand("qm", "Leakage schemes");
  qm->require_subcommand(1);
  auto* qm_verify = qm->add_subcommand("verify", "Check a scheme file");
  qm_verify->add_option("--scheme", o.scheme_path, "Scheme JSON")->required();
  qm_verify->add_option("--domain", o.domain, "all, omega or nonzero")
      ->capture_default_str();
  auto* qm_search = qm->add_subcommand("search", "Minimum-bandwidth search");
  add_q(qm_search);
  qm_search->add_option("--mode", o.mode, "qm, mqm or appendix")
      ->capture_default_str();
  qm_search->add_option("--tmax", o.tmax)->capture_default_str();
  qm_search->add_option("--budget", o.budget, "Search node budget")
      ->capture_default_str();
  qm_search->add_option("--out", o.out_path, "Write the witness scheme here");
  auto* qm_convert =
      qm->add_subcommand("convert", "Translate an mQM scheme to a V sequence");
  qm_convert->add_option("--scheme", o.scheme_path, "Scheme JSON")->required();
  qm_convert->add_flag("--unchecked", o.unchecked,
                       "Skip the mQM validity check");
  qm_convert->add_option("--out", o.out_path, "Write the V-file here");

  auto* pqm = app.add_subcommand("pqm", "Pruning-based reconstruction and the Alice/Eve game");
  pqm->require_subcommand(1);
  auto* pqm_run = pqm->add_subcommand("run", "Run pQM on one transcript");
  pqm_run->add_option("--v-file", o.vfile, "V sequence JSON")->required();
  pqm_run->add_option("--transcript", o.bits, "Pruning bits, e.g. 0110")
      ->required();
  pqm_run->add_flag("--leaked", o.leaked,
                    "Treat the transcript as leaked bits and complement it");
  auto add_game = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "Field order");
    sub->add_option("--strategy", o.strategy,
                    "greedy-halving, random-set or replay")
        ->capture_default_str();
    sub->add_option("--max-rounds", o.max_rounds,
                    "Round cap; 0 means 4 e ceil(log2 p)")
        ->capture_default_str();
    sub->add_option("--v-file", o.vfile, "V sequence for the replay strategy");
  };
  auto* pqm_game = pqm->add_subcommand("game", "Alice against Eve");
  add_game(pqm_game);
  auto* game = app.add_subcommand("game", "Same as pqm game");
  add_game(game);

  auto* bound = app.add_subcommand("bound", "Closed-form bandwidth bounds");
  add_q(bound);

  auto* linleak = app.add_subcommand("linleak", "Trace leakage collisions");
  linleak->require_subcommand(1);
  auto* linleak_check =
      linleak->add_subcommand("check", "Collisions for 2e-1 trace queries");
  add_q(linleak_check);
  linleak_check->add_option("--k", o.k)->capture_default_str();
  linleak_check->add_option("--i", o.i)->capture_default_str();
  linleak_check->add_option("--j", o.j)->capture_default_str();
  auto* exh = linleak_check->add_flag("--exhaustive", o.exhaustive,
                                      "Every query tuple");
  linleak_check->add_option("--samples", o.samples, "Seeded tuples")
      ->capture_default_str()
      ->excludes(exh);

  auto* gf7 = app.add_subcommand("gf7", "The 5-bit F_7 scheme");
  gf7->require_subcommand(1);
  auto* gf7_verify = gf7->add_subcommand("verify", "Check the scheme");
  auto* gf7_table = gf7->add_subcommand("table", "Bucket images over F_7");
  auto* gf7_leak = gf7->add_subcommand("leak", "Products ruled out by one bit");
  gf7_leak->add_option("--alpha", o.alpha)->capture_default_str();
  gf7_leak->add_option("--set", o.set, "Leakage set T, comma separated")
      ->capture_default_str();

  auto* suite = app.add_subcommand("suite", "Run the verification battery");
  suite->add_option("--qmax", o.qmax, "Largest field order")
      ->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    if (field->parsed()) report = cmd_field(o);
    else if (residues->parsed()) report = cmd_residues(o);
    else if (charsum->parsed()) report = cmd_charsum(o);
    else if (buckets->parsed()) report = cmd_buckets(o);
    else if (qm_verify->parsed()) report = cmd_qm_verify(o);
    else if (qm_search->parsed()) report = cmd_qm_search(o);
    else if (qm_convert->parsed()) report = cmd_qm_convert(o);
    else if (pqm_run->parsed()) report = cmd_pqm_run(o);
    else if (pqm_game->parsed()) report = cmd_game(o, "pqm game");
    else if (game->parsed()) report = cmd_game(o, "game");
    else if (bound->parsed()) report = cmd_bound(o);
    else if (linleak_check->parsed()) report = cmd_linleak(o);
    else if (gf7_verify->parsed()) report = cmd_gf7_verify();
    else if (gf7_table->parsed()) report = cmd_gf7_table();
    else if (gf7_leak->parsed()) report = cmd_gf7_leak(o);
    else if (suite->parsed()) report = cmd_suite(o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::kBudgetExceeded ? kExitCheckFailed : kExitUsage;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (o.json) {
    out << canonical_dump(report_to_json(report));
  } else {
    print_text(report, seconds, out);
  }
  return report.pass() ? kExitPass : kExitCheckFailed;
}

}  // namespace qmlab
