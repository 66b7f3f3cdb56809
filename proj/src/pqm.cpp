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

#include "qmlab/pqm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "qmlab/error.hpp"
#include "qmlab/rscode.hpp"

namespace qmlab {

std::size_t PqmState::nonempty_classes() const {
  return std::count_if(S.begin(), S.end(),
                       [](const ElemSet& s) { return !s.empty(); });
}

std::size_t PqmState::total_points() const {
  std::size_t n = 0;
  for (const ElemSet& s : S) n += s.size();
  return n;
}

PqmState pqm_initial(const SqrtSystem& sys) {
  PqmState st;
  st.gammas = sys.omega_set().elements;
  const ElemSet start = b11_unchecked(*sys.ctx());
  st.S.assign(st.gammas.size(), start);
  return st;
}

void pqm_step(const SqrtSystem& sys, PqmState& state, const ElemSet& V,
              int bit) {
  const FieldCtx& f = *sys.ctx();
  ElemSet base = V;
  if (bit != 0) {
    base = V.complement();
    base.erase(f.zero());
  }
  for (std::size_t c = 0; c < state.gammas.size(); ++c) {
    state.S[c] -= base.scaled(f, f.inv(sys.sqrt(state.gammas[c])));
  }
  ++state.round;
}

std::string_view pqm_status_name(PqmStatus s) {
  return s == PqmStatus::kSuccess ? "Success" : "Fail";
}

PqmResult run_pqm(const SqrtSystem& sys, const std::vector<ElemSet>& V,
                  const Transcript& b) {
  if (V.size() != b.size()) {
    throw Error(Errc::kInvalidArgument, "V and transcript differ in length");
  }
  PqmResult res;
  res.state = pqm_initial(sys);
  for (std::size_t z = 0; z < V.size(); ++z) {
    if (V[z].universe() != sys.ctx()->q()) {
      throw Error(Errc::kInvalidArgument, "V set has wrong universe");
    }
    pqm_step(sys, res.state, V[z], b[z]);
  }
  res.status = res.state.nonempty_classes() <= 1 ? PqmStatus::kSuccess
                                                 : PqmStatus::kFail;
  return res;
}

Transcript pruning_bits(const Transcript& leaked) {
  Transcript b(leaked.size());
  for (std::size_t z = 0; z < leaked.size(); ++z) b[z] = leaked[z] ^ 1;
  return b;
}

std::vector<ElemSet> translate_eliminators(const SqrtSystem& sys,
                                           const LeakageScheme& scheme) {
  scheme.validate();
  std::vector<ElemSet> V;
  for (std::size_t z = 0; z < scheme.t(); ++z) {
    V.push_back(convert_eliminator(sys, scheme.sets[z], scheme.schedule[z]));
  }
  return V;
}

std::vector<ElemSet> mqm_to_pqm(const SqrtSystem& sys,
                                const LeakageScheme& scheme) {
  if (!mqm_check(scheme)) {
    throw Error(Errc::kInvalidScheme, "scheme is not a valid mQM");
  }
  return translate_eliminators(sys, scheme);
}

std::size_t survivor_limit(const FieldCtx& ctx) { return ctx.p() == 2 ? 3 : 2; }

bool survivor_size_check(const FieldCtx& ctx, const PqmState& final_state) {
  if (final_state.nonempty_classes() != 1) {
    throw Error(Errc::kPreconditionViolated,
                "need exactly one nonempty class, have " +
                    std::to_string(final_state.nonempty_classes()));
  }
  return final_state.total_points() <= survivor_limit(ctx);
}

ReplayReport replay_translation(const SqrtSystem& sys,
                                const LeakageScheme& scheme,
                                const std::vector<ElemSet>& V) {
  const FieldCtx& f = *sys.ctx();
  if (V.size() != scheme.t()) {
    throw Error(Errc::kInvalidArgument, "V and scheme differ in length");
  }
  if (scheme.t() > 20) {
    throw Error(Errc::kInvalidArgument, "t > 20 is too long to replay");
  }
  ReplayReport rep;
  std::set<Transcript> valid;
  for_each_message(f, 2, 0, 1, sys.omega_set().mask,
                   [&](const MessageVec& m) { valid.insert(transcript(scheme, m)); });

  auto replay = [&](const Transcript& b) {
    PqmState st = pqm_initial(sys);
    for (std::size_t z = 0; z < V.size(); ++z) {
      const PqmState before = st;
      pqm_step(sys, st, V[z], b[z]);
      for (std::size_t c = 0; c < st.S.size(); ++c) {
        if (!st.S[c].subset_of(before.S[c])) rep.monotone = false;
      }
    }
    return st;
  };

  for (const Transcript& b : valid) {
    ++rep.valid_transcripts;
    const PqmState st = replay(pruning_bits(b));
    const std::size_t classes = st.nonempty_classes();
    if (classes > 1) {
      if (!rep.failing_valid) rep.failing_valid = b;
      continue;
    }
    ++rep.valid_successes;
    if (classes == 0) {
      ++rep.empty_terminals;
      continue;
    }
    rep.max_terminal_survivors =
        std::max(rep.max_terminal_survivors, st.total_points());
    if (!survivor_size_check(f, st)) rep.survivor_bound_holds = false;
  }

  const std::uint64_t n = std::uint64_t{1} << scheme.t();
  for (std::uint64_t code = 0; code < n; ++code) {
    Transcript b(scheme.t());
    for (std::size_t z = 0; z < scheme.t(); ++z) b[z] = (code >> z) & 1;
    ++rep.all_transcripts;
    if (replay(b).nonempty_classes() <= 1) ++rep.all_successes;
  }
  return rep;
}

std::string_view strategy_name(AliceStrategy s) {
  switch (s) {
    case AliceStrategy::kGreedyHalving: return "greedy-halving";
    case AliceStrategy::kRandomSet: return "random-set";
    case AliceStrategy::kReplay: return "replay";
  }
  return "greedy-halving";
}

AliceStrategy parse_strategy(std::string_view name) {
  if (name == "greedy-halving") return AliceStrategy::kGreedyHalving;
  if (name == "random-set") return AliceStrategy::kRandomSet;
  if (name == "replay") return AliceStrategy::kReplay;
  throw Error(Errc::kUnknownStrategy,
              "unknown Alice strategy '" + std::string(name) + "'");
}

std::uint32_t default_max_rounds(const FieldCtx& ctx) {
  return 4 * ctx.e() * static_cast<std::uint32_t>(std::bit_width(ctx.p() - 1));
}

namespace {

// Symbol weights w(x) = #{(g, s) : s in S_g, sqrt(g) s = x}. Bit 0 removes
// the weight inside V, bit 1 the nonzero weight outside it.
std::vector<std::size_t> symbol_weights(const SqrtSystem& sys,
                                        const PqmState& st) {
  const FieldCtx& f = *sys.ctx();
  std::vector<std::size_t> w(f.q(), 0);
  for (std::size_t c = 0; c < st.gammas.size(); ++c) {
    const Elem r = sys.sqrt(st.gammas[c]);
    for (std::uint32_t s : st.S[c].values()) ++w[f.mul(r, Elem{s}).value];
  }
  return w;
}

// Largest-first partition of the nonzero symbol weights into two halves; 0
// joins V since bit 1 never removes it.
ElemSet greedy_halving(const SqrtSystem& sys, const PqmState& st) {
  const FieldCtx& f = *sys.ctx();
  const std::vector<std::size_t> w = symbol_weights(sys, st);
  std::vector<std::uint32_t> order(f.q() - 1);
  std::iota(order.begin(), order.end(), 1u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t x, std::uint32_t y) { return w[x] > w[y]; });
  ElemSet V(f.q());
  V.insert(f.zero());
  std::size_t in = 0, out = 0;
  for (std::uint32_t x : order) {
    if (w[x] == 0) break;
    if (in <= out) {
      V.insert(Elem{x});
      in += w[x];
    } else {
      out += w[x];
    }
  }
  return V;
}

// Each symbol joins V on one bit of the mt19937_64 stream.
ElemSet random_set(std::uint32_t q, std::mt19937_64& rng) {
  ElemSet V(q);
  std::uint64_t word = 0;
  for (std::uint32_t x = 0; x < q; ++x) {
    if (x % 64 == 0) word = rng();
    if ((word >> (x % 64)) & 1) V.insert(Elem{x});
  }
  return V;
}

}  // namespace

GameResult adversarial_game(const SqrtSystem& sys, const GameConfig& config) {
  const FieldCtx& f = *sys.ctx();
  const std::uint32_t max_rounds =
      config.max_rounds ? *config.max_rounds : default_max_rounds(f);
  std::mt19937_64 rng(config.seed);
  GameResult res;
  PqmState st = pqm_initial(sys);
  res.initial_points = st.total_points();
  while (true) {
    if (st.nonempty_classes() <= 1) {
      res.terminated = true;
      break;
    }
    if (st.round >= max_rounds) break;
    ElemSet V(f.q());
    switch (config.strategy) {
      case AliceStrategy::kGreedyHalving: V = greedy_halving(sys, st); break;
      case AliceStrategy::kRandomSet: V = random_set(f.q(), rng); break;
      case AliceStrategy::kReplay:
        if (st.round >= config.replay.size()) goto done;
        V = config.replay[st.round];
        break;
    }
    {
      PqmState s0 = st, s1 = st;
      pqm_step(sys, s0, V, 0);
      pqm_step(sys, s1, V, 1);
      GameRound r;
      r.V = V;
      r.keep0 = s0.total_points();
      r.keep1 = s1.total_points();
      r.bit = r.keep1 > r.keep0 ? 1 : 0;
      r.tie = r.keep0 == r.keep1;
      st = r.bit ? std::move(s1) : std::move(s0);
      r.total_after = st.total_points();
      r.classes_after = st.nonempty_classes();
      res.log.push_back(std::move(r));
    }
  }
done:
  res.rounds = st.round;
  res.final_state = std::move(st);
  return res;
}

BoundReport bandwidth_bound(const FieldCtx& ctx) {
  BoundReport r;
  r.q = ctx.q();
  r.p = ctx.p();
  r.e = ctx.e();
  const std::uint64_t q = ctx.q();
  const bool binary = ctx.p() == 2;
  const std::uint64_t shift = binary ? 2 : 1;
  if (q > shift) {
    r.real_bound = 2.0 * std::log2(double(q - shift)) - (binary ? 4.0 : 3.0);
  }
  r.initial_points = binary ? (q - 2) * q / 4 : (q - 1) * (q + 1) / 4;
  if (r.initial_points > 0) {
    r.integer_round_bound =
        static_cast<std::int64_t>(std::bit_width(r.initial_points - 1)) -
        static_cast<std::int64_t>(binary ? 2 : 1);
  }
  return r;
}

}  // namespace qmlab
