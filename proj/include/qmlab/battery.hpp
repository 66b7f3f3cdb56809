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

// The verification battery behind `suite` and the acceptance binary: one
// check per headline property plus the worked examples, each with a JSON
// witness. Checks are deterministic given their arguments.

#ifndef QMLAB_BATTERY_HPP_
#define QMLAB_BATTERY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmlab/elemset.hpp"
#include "qmlab/qm.hpp"
#include "qmlab/scheme_io.hpp"

namespace qmlab {

struct CheckResult {
  std::string name;
  bool pass = false;
  Json witness;  // the first counterexample on failure, evidence otherwise
};
Json check_to_json(const CheckResult& c);

// Prime powers in [lo, hi], ascending.
std::vector<std::uint32_t> prime_powers(std::uint32_t lo, std::uint32_t hi);

Json collision_to_json(const FieldCtx& ctx, const LeakageScheme& scheme,
                       const SchemeCollision& c);

// The F_7 scheme separates all 36 lines with nonzero coefficients in 5 bits
// against 6 for naive interpolation.
CheckResult check_gf7_five_bit();
// figure1_table against the transcribed golden table.
CheckResult check_bucket_table();
// alpha = 1, T = {0, +-1}: bit 0 rules out product 4, bit 1 rules out 5.
CheckResult check_one_bit_leak();
// Union size q - 3 (odd q in [3, qmax] minus 5) or q - 4 (2^e <= qmax,
// e >= 3) for every delta in Omega_q.
CheckResult check_scaled_pair_union(std::uint32_t qmax);
// B_g(alpha) = sqrt(g) sqrt(alpha) B_1(1) for alpha, g in Omega_q, every
// field with a square-root system and q <= qmax.
CheckResult check_scalar_evolution(std::uint32_t qmax);
// |sum chi(x(x^2+1))| <= 2 sqrt(q) for odd q <= qmax, and the scaled pair
// exists for every such q except 5.
CheckResult check_weil_and_pairs(std::uint32_t qmax);
// y^2 + y + c solvable iff Tr(c) = 0 and the trace-kernel form of B_1(1), for
// q in {8, 16, 32, 64} up to qmax.
CheckResult check_artin_schreier(std::uint32_t qmax);
// A searched F_7 mQM scheme has t at or above the round floor, its pQM
// translation succeeds on every valid transcript and leaves at most 2 points.
CheckResult check_mqm_to_pqm(std::uint64_t budget);
// Every Alice strategy needs at least the integer round floor against Eve for
// q in {7, 9, 11, 13, 8, 16}; a game that never ends counts as infinitely
// many rounds. Also reports the closed-form bounds, with q = 5 and q = 4.
CheckResult check_game_floor(std::uint64_t seed, std::uint32_t max_rounds);
// All 1728 F_4 query tuples and 1000 seeded F_8 tuples admit a verified
// trace-transcript collision.
CheckResult check_linear_leakage(std::uint64_t seed);

// Worked examples from the module documentation, one check each.
std::vector<CheckResult> worked_examples();

struct BatteryOptions {
  std::uint32_t qmax = 64;
  std::uint64_t seed = 0;
  std::uint32_t game_rounds = 64;
  std::uint64_t search_budget = 50'000'000;
};
// The ten property checks in order.
std::vector<CheckResult> property_checks(const BatteryOptions& opts);

}  // namespace qmlab

#endif  // QMLAB_BATTERY_HPP_
