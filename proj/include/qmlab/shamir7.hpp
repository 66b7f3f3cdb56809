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

// The 5-bit multiplicative-Shamir scheme over F_7, its bucket image table and
// the single-bit leakage example.

#ifndef QMLAB_SHAMIR7_HPP_
#define QMLAB_SHAMIR7_HPP_

#include <cstdint>
#include <vector>

#include "qmlab/elemset.hpp"
#include "qmlab/galois.hpp"
#include "qmlab/qm.hpp"

namespace qmlab {

FieldPtr gf7_field();

// k = 2, servers and schedule 0..4, sets {0,+-2} {0,+-1} {0,+-3} {0,+-2}
// {0,+-1}.
LeakageScheme gf7_scheme();

// Equal transcripts imply equal products over the 36 lines with both
// coefficients nonzero.
bool verify_gf7();
bool verify_gf7(const LeakageScheme& scheme);

// 2 ceil(log2(q - 1)): bits to download both coefficients of a line in F_q^*.
std::uint32_t naive_interpolation_bits(std::uint32_t q);

// Products g in F_q whose image B_g(alpha) misses the symbols consistent with
// the bit: T for bit 0, F_q \ T for bit 1.
ElemSet one_bit_leak(const FieldPtr& ctx, Elem alpha, const ElemSet& T,
                     int bit);

// table[alpha][g] = B_g(alpha) over F_7.
std::vector<std::vector<ElemSet>> figure1_table();

}  // namespace qmlab

#endif  // QMLAB_SHAMIR7_HPP_
