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

#include "qmlab/elemset.hpp"

#include <algorithm>

#include "qmlab/error.hpp"

namespace qmlab {

ElemSet ElemSet::full(std::uint32_t q) {
  ElemSet s(q);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.clear_tail();
  return s;
}

ElemSet ElemSet::of(std::uint32_t q, const std::vector<std::uint32_t>& values) {
  ElemSet s(q);
  for (auto v : values) {
    if (v >= q) {
      throw Error(Errc::kInvalidArgument,
                  "element " + std::to_string(v) + " not in F_" +
                      std::to_string(q));
    }
    s.insert(Elem{v});
  }
  return s;
}

void ElemSet::clear_tail() {
  if (q_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (q_ % 64)) - 1;
  }
}

std::size_t ElemSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool ElemSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool ElemSet::intersects(const ElemSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

bool ElemSet::subset_of(const ElemSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

ElemSet& ElemSet::operator|=(const ElemSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

ElemSet& ElemSet::operator&=(const ElemSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

ElemSet& ElemSet::operator-=(const ElemSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

ElemSet ElemSet::complement() const {
  ElemSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.clear_tail();
  return s;
}

bool operator<(const ElemSet& a, const ElemSet& b) {
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

ElemSet ElemSet::scaled(const FieldCtx& ctx, Elem c) const {
  ElemSet s(q_);
  for (auto v : values()) s.insert(ctx.mul(c, Elem{v}));
  return s;
}

std::vector<std::uint32_t> ElemSet::values() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

std::string ElemSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint32_t width = (q_ + 3) / 4;
  std::string out(width, '0');
  for (std::uint32_t d = 0; d < width; ++d) {
    const std::uint32_t bit = 4 * d;
    const unsigned nibble = (words_[bit >> 6] >> (bit & 63)) & 0xf;
    out[width - 1 - d] = kDigits[nibble];
  }
  return out;
}

ElemSet ElemSet::from_hex(std::uint32_t q, std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw Error(Errc::kSchemaError, "empty hex mask");
  const std::size_t n = hex.size();
  if (n > (q + 3) / 4) {
    throw Error(Errc::kSchemaError, "mask has " + std::to_string(n) +
                                        " hex digits, more than q=" +
                                        std::to_string(q) + " allows");
  }
  ElemSet s(q);
  for (std::size_t d = 0; d < n; ++d) {
    const char c = hex[n - 1 - d];
    unsigned nibble;
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      nibble = c - 'A' + 10;
    } else {
      throw Error(Errc::kSchemaError,
                  "non-hex character '" + std::string(1, c) + "' in mask");
    }
    for (unsigned b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1)) continue;
      const std::uint64_t bit = 4 * d + b;
      if (bit >= q) {
        throw Error(Errc::kSchemaError, "mask sets bit " + std::to_string(bit) +
                                            " but q=" + std::to_string(q));
      }
      s.insert(Elem{static_cast<std::uint32_t>(bit)});
    }
  }
  return s;
}

}  // namespace qmlab
