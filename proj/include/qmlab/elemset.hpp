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

#ifndef QMLAB_ELEMSET_HPP_
#define QMLAB_ELEMSET_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qmlab/galois.hpp"

namespace qmlab {

// Subset of F_q as a q-bit membership mask; bit i is the element with
// encoding i.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::uint32_t q) : q_(q), words_((q + 63) / 64, 0) {}
  static ElemSet full(std::uint32_t q);
  static ElemSet of(std::uint32_t q, const std::vector<std::uint32_t>& values);

  std::uint32_t universe() const { return q_; }

  bool contains(Elem x) const {
    return (words_[x.value >> 6] >> (x.value & 63)) & 1u;
  }
  void insert(Elem x) { words_[x.value >> 6] |= std::uint64_t{1} << (x.value & 63); }
  void erase(Elem x) { words_[x.value >> 6] &= ~(std::uint64_t{1} << (x.value & 63)); }

  std::size_t size() const;
  bool empty() const;
  bool intersects(const ElemSet& o) const;
  bool subset_of(const ElemSet& o) const;

  ElemSet& operator|=(const ElemSet& o);
  ElemSet& operator&=(const ElemSet& o);
  ElemSet& operator-=(const ElemSet& o);
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }
  ElemSet complement() const;
  friend bool operator==(const ElemSet&, const ElemSet&) = default;
  // Orders by the integer sum_i 2^i over members.
  friend bool operator<(const ElemSet& a, const ElemSet& b);

  // {c * x : x in this}.
  ElemSet scaled(const FieldCtx& ctx, Elem c) const;

  // Ascending encodings.
  std::vector<std::uint32_t> values() const;

  // Fixed width: ceil(q/4) lowercase hex digits of sum_i 2^i.
  std::string to_hex() const;
  // Accepts an optional "0x" prefix and fewer digits than the fixed width;
  // more digits, a bit >= q, or a non-hex character throw Errc::kSchemaError.
  static ElemSet from_hex(std::uint32_t q, std::string_view hex);

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void clear_tail();

  std::uint32_t q_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qmlab

#endif  // QMLAB_ELEMSET_HPP_
