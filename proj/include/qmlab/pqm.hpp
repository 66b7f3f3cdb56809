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

// pQM reconstruction, the mQM to pQM translation, the output-list-size check,
// the Alice and Eve game and the closed-form bandwidth bounds.

#ifndef QMLAB_PQM_HPP_
#define QMLAB_PQM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmlab/elemset.hpp"
#include "qmlab/galois.hpp"
#include "qmlab/qm.hpp"
#include "qmlab/residues.hpp"

namespace qmlab {

// S[c] is the surviving copy of B_1(1) for gamma = omega_set().elements[c].
struct PqmState {
  std::vector<Elem> gammas;
  std::vector<ElemSet> S;
  std::uint32_t round = 0;

  std::size_t nonempty_classes() const;
  std::size_t total_points() const;
};

PqmState pqm_initial(const SqrtSystem& sys);
// One round: bit 0 removes (1/sqrt(g)) V from S_g, bit 1 removes
// (1/sqrt(g)) (F_q^* \ V). The element 0 is never removed by bit 1.
void pqm_step(const SqrtSystem& sys, PqmState& state, const ElemSet& V,
              int bit);

enum class PqmStatus { kSuccess, kFail };
std::string_view pqm_status_name(PqmStatus s);

struct PqmResult {
  PqmStatus status = PqmStatus::kFail;
  PqmState state;
};

// pQM takes pruning bits: 0 prunes by V, matching QM pruning by T. For leaked bits c these are the complement of c.
Transcript pruning_bits(const Transcript& leaked);

// Success iff at most one class is nonempty after the last round.
PqmResult run_pqm(const SqrtSystem& sys, const std::vector<ElemSet>& V,
                  const Transcript& b);

// V_z = convert_eliminator(T_z, alpha_z). Throws Errc::kInvalidScheme unless
// mqm_check(scheme) holds.
std::vector<ElemSet> mqm_to_pqm(const SqrtSystem& sys,
                                const LeakageScheme& scheme);
// The same conversion without the validity check.
std::vector<ElemSet> translate_eliminators(const SqrtSystem& sys,
                                           const LeakageScheme& scheme);

// 2 for odd p, 3 for p = 2.
std::size_t survivor_limit(const FieldCtx& ctx);
// |S_d| <= survivor_limit for the unique nonempty class d. Throws
// Errc::kPreconditionViolated unless exactly one class is nonempty.
bool survivor_size_check(const FieldCtx& ctx, const PqmState& final_state);

// Replays a translated scheme on the pruning bits of every valid transcript
// (the leaks of a line with product in Omega_q) and on every b in {0,1}^t.
struct ReplayReport {
  std::size_t valid_transcripts = 0;
  std::size_t valid_successes = 0;
  std::size_t all_transcripts = 0;
  std::size_t all_successes = 0;
  // Over valid successes with one nonempty class.
  std::size_t max_terminal_survivors = 0;
  std::size_t empty_terminals = 0;  // valid successes with no class left
  bool survivor_bound_holds = true;
  bool monotone = true;
  std::optional<Transcript> failing_valid;  // leaked bits of the first failure
};
ReplayReport replay_translation(const SqrtSystem& sys,
                                const LeakageScheme& scheme,
                                const std::vector<ElemSet>& V);

enum class AliceStrategy { kGreedyHalving, kRandomSet, kReplay };
std::string_view strategy_name(AliceStrategy s);
// "greedy-halving", "random-set", "replay"; throws Errc::kUnknownStrategy.
AliceStrategy parse_strategy(std::string_view name);

struct GameConfig {
  AliceStrategy strategy = AliceStrategy::kGreedyHalving;
  std::uint64_t seed = 0;
  std::vector<ElemSet> replay;           // kReplay only
  std::optional<std::uint32_t> max_rounds;  // default_max_rounds when unset
};

// 4 e ceil(log2 p).
std::uint32_t default_max_rounds(const FieldCtx& ctx);

struct GameRound {
  ElemSet V;
  std::size_t keep0 = 0;  // total survivors if Eve answers 0
  std::size_t keep1 = 0;
  int bit = 0;
  bool tie = false;
  std::size_t total_after = 0;
  std::size_t classes_after = 0;
};

struct GameResult {
  bool terminated = false;  // at most one class left within max_rounds
  std::uint32_t rounds = 0;
  std::size_t initial_points = 0;
  std::vector<GameRound> log;
  PqmState final_state;
};

// Alice emits V each round; Eve answers with the bit that keeps more points,
// bit 0 on ties. Ends when at most one class is nonempty, when max_rounds is
// reached, or when a replay sequence runs out.
GameResult adversarial_game(const SqrtSystem& sys, const GameConfig& config);

struct BoundReport {
  std::uint32_t q = 0, p = 0, e = 0;
  // 2 log2(q-1) - 3 for odd p, 2 log2(q-2) - 4 for p = 2; unset at q = 2.
  std::optional<double> real_bound;
  // (q-1)(q+1)/4 for odd p, (q-2)q/4 for p = 2.
  std::uint64_t initial_points = 0;
  // ceil(log2 initial_points) - 1 for odd p, - 2 for p = 2; unset when
  // initial_points = 0.
  std::optional<std::int64_t> integer_round_bound;
};
BoundReport bandwidth_bound(const FieldCtx& ctx);

}  // namespace qmlab

#endif  // QMLAB_PQM_HPP_
