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

#include "qmlab/galois.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "qmlab/error.hpp"

namespace qmlab {
namespace {

using Poly = std::vector<std::uint32_t>;  // over F_p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t powmod(std::uint64_t a, std::uint64_t n, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (n > 0) {
    if (n & 1) r = r * a % p;
    a = a * a % p;
    n >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return powmod(a, p - 2, p);
}

// a mod f, f monic or at least with invertible leading coefficient.
Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c =
        static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::uint64_t sub = c * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t n, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (n > 0) {
    if (n & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    n >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

Poly to_poly(std::uint32_t value, std::uint32_t p) {
  Poly a;
  while (value > 0) {
    a.push_back(value % p);
    value /= p;
  }
  return a;
}

std::uint32_t from_poly(const Poly& a, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Ben-Or: f of degree e is irreducible iff gcd(f, x^{p^i} - x) = 1 for
// 1 <= i <= e/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t e = f.size() - 1;
  if (e == 1) return true;
  if (f[0] == 0) return false;
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= e / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    const Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p,
                                                std::uint32_t e) {
  std::uint64_t pe = 1;
  for (std::uint32_t i = 0; i < e; ++i) pe *= p;
  for (std::uint64_t n = pe; n < 2 * pe; ++n) {
    Poly f = to_poly(static_cast<std::uint32_t>(n), p);
    if (is_irreducible(p, f)) return f;
  }
  throw Error(Errc::kInvalidField, "no irreducible polynomial found");
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e)
    : FieldCtx(p, e, {}) {}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e,
                   std::vector<std::uint32_t> irreducible)
    : p_(p), e_(e), q_(0), irreducible_(std::move(irreducible)) {
  if (!is_prime(p)) {
    throw Error(Errc::kInvalidField, "characteristic " + std::to_string(p) +
                                         " is not prime");
  }
  if (e < 1) throw Error(Errc::kInvalidField, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(Errc::kUnsupportedField, "field order exceeds 2^20");
    }
  }
  q_ = static_cast<std::uint32_t>(q);
  if (irreducible_.empty()) {
    irreducible_ = smallest_irreducible(p, e);
  } else {
    if (irreducible_.size() != e + 1 || irreducible_.back() != 1) {
      throw Error(Errc::kInvalidField,
                  "irreducible polynomial must be monic of degree " +
                      std::to_string(e));
    }
    for (auto c : irreducible_) {
      if (c >= p) {
        throw Error(Errc::kInvalidField, "coefficient out of range for F_" +
                                             std::to_string(p));
      }
    }
    if (!is_irreducible(p, irreducible_)) {
      throw Error(Errc::kInvalidField, "polynomial is reducible over F_" +
                                           std::to_string(p));
    }
  }
  build();
}

FieldPtr FieldCtx::make(std::uint32_t p, std::uint32_t e) {
  return std::make_shared<const FieldCtx>(p, e);
}

FieldPtr FieldCtx::make(std::uint32_t p, std::uint32_t e,
                        std::vector<std::uint32_t> irreducible) {
  return std::make_shared<const FieldCtx>(p, e, std::move(irreducible));
}

FieldPtr FieldCtx::of_order(std::uint32_t q) {
  if (q < 2 || q > kMaxFieldOrder) {
    throw Error(Errc::kUnsupportedField,
                "field order " + std::to_string(q) + " out of range");
  }
  const auto factors = prime_factors(q);
  if (factors.size() != 1) {
    throw Error(Errc::kUnsupportedField,
                std::to_string(q) + " is not a prime power");
  }
  const std::uint32_t p = factors.front();
  std::uint32_t e = 0;
  for (std::uint32_t r = q; r > 1; r /= p) ++e;
  return make(p, e);
}

void FieldCtx::build() {
  const Poly& f = irreducible_;
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    return from_poly(poly_mulmod(to_poly(a, p_), to_poly(b, p_), f, p_), p_);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t n) {
    return from_poly(poly_powmod(to_poly(a, p_), n, f, p_), p_);
  };

  const std::uint32_t order = q_ - 1;
  const auto factors = prime_factors(order);
  std::uint32_t g = 1;
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(cand, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  generator_ = Elem{g};

  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    exp_[k] = x;
    exp_[k + order] = x;
    log_[x] = k;
    x = slow_mul(x, g);
  }

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t r = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t v = a, i = 0; i < e_; ++i, v /= p_, scale *= p_) {
      r += ((p_ - v % p_) % p_) * scale;
    }
    neg_[a] = r;
  }

  if (p_ != 2 && q_ <= 512) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    add_table_.clear();
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t r = 0;
        std::uint32_t scale = 1;
        for (std::uint32_t va = a, vb = b, i = 0; i < e_;
             ++i, va /= p_, vb /= p_, scale *= p_) {
          r += ((va % p_ + vb % p_) % p_) * scale;
        }
        add_table_[static_cast<std::size_t>(a) * q_ + b] = r;
      }
    }
  }

  trace_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Elem s{a};
    Elem y{a};
    for (std::uint32_t i = 1; i < e_; ++i) {
      y = frobenius(y);
      s = add(s, y);
    }
    if (s.value >= p_) {
      throw Error(Errc::kInvalidField, "trace left the prime subfield");
    }
    trace_[a] = s.value;
  }
}

Elem FieldCtx::elem(std::uint32_t value) const {
  if (value >= q_) {
    throw Error(Errc::kInvalidArgument, "encoding " + std::to_string(value) +
                                            " out of range for q=" +
                                            std::to_string(q_));
  }
  return Elem{value};
}

Elem FieldCtx::add(Elem a, Elem b) const {
  if (p_ == 2) return Elem{a.value ^ b.value};
  if (!add_table_.empty()) {
    return Elem{add_table_[static_cast<std::size_t>(a.value) * q_ + b.value]};
  }
  std::uint32_t r = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t va = a.value, vb = b.value, i = 0; i < e_;
       ++i, va /= p_, vb /= p_, scale *= p_) {
    r += ((va % p_ + vb % p_) % p_) * scale;
  }
  return Elem{r};
}

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::inv(Elem a) const {
  if (a.value == 0) throw Error(Errc::kDivisionByZero, "inverse of zero");
  const std::uint32_t order = q_ - 1;
  return Elem{exp_[(order - log_[a.value]) % order]};
}

Elem FieldCtx::div(Elem a, Elem b) const {
  if (b.value == 0) throw Error(Errc::kDivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Elem FieldCtx::pow(Elem a, std::uint64_t n) const {
  if (n == 0) return one();
  if (a.value == 0) return zero();
  const std::uint64_t order = q_ - 1;
  return Elem{exp_[(static_cast<std::uint64_t>(log_[a.value]) * (n % order)) %
                   order]};
}

std::uint32_t FieldCtx::log(Elem a) const {
  if (a.value == 0) throw Error(Errc::kDivisionByZero, "logarithm of zero");
  return log_[a.value];
}

bool FieldCtx::is_primitive(Elem a) const {
  if (a.value == 0 || a.value >= q_) return false;
  return std::gcd(log_[a.value], q_ - 1) == 1;
}

std::vector<std::uint32_t> FieldCtx::digits(Elem a) const {
  std::vector<std::uint32_t> d(e_);
  std::uint32_t v = a.value;
  for (std::uint32_t i = 0; i < e_; ++i, v /= p_) d[i] = v % p_;
  return d;
}

Elem FieldCtx::from_digits(const std::vector<std::uint32_t>& digits) const {
  if (digits.size() != e_) {
    throw Error(Errc::kInvalidArgument, "digit vector has wrong length");
  }
  std::uint32_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw Error(Errc::kInvalidArgument, "digit >= p");
    v = v * p_ + digits[i];
  }
  return Elem{v};
}

Elem find_primitive(const FieldCtx& ctx) { return ctx.generator(); }

Elem find_primitive_zero_inv_trace(const FieldCtx& ctx) {
  if (ctx.p() != 2 || ctx.e() < 3) {
    throw Error(Errc::kUnsupportedField,
                "a primitive element with Tr(1/w) = 0 needs p = 2 and e >= 3");
  }
  for (std::uint32_t v = 1; v < ctx.q(); ++v) {
    const Elem w{v};
    if (ctx.is_primitive(w) && ctx.trace(ctx.inv(w)).value == 0) return w;
  }
  throw Error(Errc::kUnsupportedField, "no primitive element with Tr(1/w) = 0");
}

}  // namespace qmlab
