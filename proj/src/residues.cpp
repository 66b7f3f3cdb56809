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

#include "qmlab/residues.hpp"

#include <string>

#include "qmlab/error.hpp"
#include "qmlab/rscode.hpp"

namespace qmlab {
namespace {

void require_odd(const FieldCtx& ctx, const char* what) {
  if (ctx.p() == 2) {
    throw Error(Errc::kUnsupportedField,
                std::string(what) + " needs odd characteristic");
  }
}

void require_supported(const FieldCtx& ctx) {
  if (ctx.q() == 2 || ctx.q() == 4) {
    throw Error(Errc::kUnsupportedField,
                "Omega_q is undefined for q=" + std::to_string(ctx.q()));
  }
}

}  // namespace

OmegaSet omega_set(const FieldPtr& ctx) {
  require_supported(*ctx);
  OmegaSet out;
  out.ctx = ctx;
  out.mask = ElemSet(ctx->q());
  if (ctx->p() == 2) {
    out.kind = OmegaKind::kW;
    out.omega = find_primitive_zero_inv_trace(*ctx);
    const std::uint32_t count = (1u << (ctx->e() - 1)) - 1;
    for (std::uint32_t i = 0; i < count; ++i) {
      const Elem x = ctx->pow(out.omega, 2 * i);
      out.elements.push_back(x);
      out.mask.insert(x);
    }
  } else {
    out.kind = OmegaKind::kQR;
    out.mask = quadratic_residues(*ctx);
    for (auto v : out.mask.values()) out.elements.push_back(Elem{v});
  }
  return out;
}

ElemSet quadratic_residues(const FieldCtx& ctx) {
  require_odd(ctx, "QR_q");
  ElemSet qr(ctx.q());
  for (std::uint32_t v = 1; v < ctx.q(); ++v) {
    qr.insert(ctx.mul(Elem{v}, Elem{v}));
  }
  return qr;
}

// A nonzero x is a residue iff its discrete log is even, since q - 1 is even.
int quadratic_character(const FieldCtx& ctx, Elem x) {
  require_odd(ctx, "the quadratic character");
  if (x.value == 0) return 0;
  return ctx.log(x) % 2 == 0 ? 1 : -1;
}

bool minus_one_is_residue(const FieldCtx& ctx) {
  return quadratic_character(ctx, ctx.neg(ctx.one())) == 1;
}

ElemSet quartic_residues(const FieldCtx& ctx) {
  require_odd(ctx, "R_q(4)");
  ElemSet r4(ctx.q());
  for (std::uint32_t v = 1; v < ctx.q(); ++v) {
    r4.insert(ctx.pow(Elem{v}, 4));
  }
  return r4;
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::kP3Mod4EOdd: return "P3MOD4_E_ODD";
    case Regime::kP1Mod4OrEEven: return "P1MOD4_OR_E_EVEN";
    case Regime::kBinary: return "BINARY";
  }
  return "UNKNOWN";
}

Regime detect_regime(const FieldCtx& ctx) {
  if (ctx.p() == 2) return Regime::kBinary;
  if (ctx.p() % 4 == 3 && ctx.e() % 2 == 1) return Regime::kP3Mod4EOdd;
  return Regime::kP1Mod4OrEEven;
}

ScaledPair canonical_scaled_pair(const FieldPtr& ctx) {
  require_supported(*ctx);
  if (ctx->p() == 2) {
    if (ctx->e() < 3) {
      throw Error(Errc::kUnsupportedField, "binary fields need e >= 3");
    }
    const Elem w = find_primitive_zero_inv_trace(*ctx);
    return {ctx->pow(w, std::uint64_t{1} << (ctx->e() - 1)), w};
  }
  const ElemSet b = b11(*ctx);
  const ElemSet qr = quadratic_residues(*ctx);
  ElemSet nonres = qr.complement();
  nonres.erase(ctx->zero());
  const ElemSet as = b & qr;
  const ElemSet bs = b & nonres;
  if (as.empty() || bs.empty()) {
    throw Error(Errc::kNoPairExists,
                "B_1(1) \\ {0} lacks a residue or a non-residue for q=" +
                    std::to_string(ctx->q()));
  }
  return {Elem{as.values().front()}, Elem{bs.values().front()}};
}

ElemSet upsilon_set(const FieldCtx& ctx, Elem a, Elem b,
                    const std::vector<Elem>& root_of) {
  if (detect_regime(ctx) != Regime::kP1Mod4OrEEven) {
    throw Error(Errc::kRegimeMismatch,
                "Upsilon is defined only when -1 is a residue");
  }
  if (quadratic_character(ctx, a) != 1 || quadratic_character(ctx, b) != -1) {
    throw Error(Errc::kRegimeMismatch, "need a in QR_q and b outside QR_q");
  }
  if (root_of.size() != ctx.q()) {
    throw Error(Errc::kInvalidArgument, "root table must have q entries");
  }
  const Elem ratio = ctx.div(a, b);
  ElemSet out(ctx.q());
  for (auto g : quartic_residues(ctx).values()) {
    const Elem r = root_of[g];
    if (ctx.mul(r, r) != Elem{g} || quadratic_character(ctx, r) != 1) {
      throw Error(Errc::kPreconditionViolated,
                  "root of quartic residue " + std::to_string(g) +
                      " is not a residue square root");
    }
    out.insert(ctx.mul(ratio, r));
  }
  return out;
}

const ScaledPair& SqrtSystem::pair() const {
  if (!pair_) {
    throw Error(Errc::kNoPairExists,
                "no scaled pair in B_1(1) for q=" + std::to_string(ctx_->q()));
  }
  return *pair_;
}

Elem SqrtSystem::sqrt(Elem g) const {
  if (!ctx_->contains(g) || !omega_.contains(g)) {
    throw Error(Errc::kRegimeMismatch,
                std::to_string(g.value) + " is not in Omega_q");
  }
  return root_[g.value];
}

SqrtSystem build_sqrt_system(const FieldPtr& ctx) {
  const FieldCtx& f = *ctx;
  if (f.q() == 2 || f.q() == 4 || f.q() == 5) {
    throw Error(Errc::kUnsupportedField,
                "no square-root system for q=" + std::to_string(f.q()));
  }
  SqrtSystem sys;
  sys.ctx_ = ctx;
  sys.omega_ = omega_set(ctx);
  sys.regime_ = detect_regime(f);
  try {
    sys.pair_ = canonical_scaled_pair(ctx);
  } catch (const Error& err) {
    if (err.code() != Errc::kNoPairExists) throw;
  }
  sys.root_.assign(f.q(), Elem{0});

  auto smallest_root = [&](Elem g, auto&& accept) {
    for (std::uint32_t v = 1; v < f.q(); ++v) {
      if (f.mul(Elem{v}, Elem{v}) == g && accept(Elem{v})) return Elem{v};
    }
    throw Error(Errc::kRegimeMismatch,
                "no admissible root for " + std::to_string(g.value));
  };
  auto is_qr = [&](Elem x) { return quadratic_character(f, x) == 1; };

  switch (sys.regime_) {
    case Regime::kBinary: {
      sys.upsilon_pair_ = *sys.pair_;
      const Elem w = sys.omega_.omega;
      for (std::uint32_t i = 0; i < sys.omega_.elements.size(); ++i) {
        sys.root_[sys.omega_.elements[i].value] = f.pow(w, i);
      }
      break;
    }
    case Regime::kP3Mod4EOdd:
      if (sys.pair_) sys.upsilon_pair_ = *sys.pair_;
      for (Elem g : sys.omega_.elements) {
        sys.root_[g.value] = smallest_root(g, is_qr);
      }
      break;
    case Regime::kP1Mod4OrEEven: {
      const ElemSet r4 = quartic_residues(f);
      for (auto g : r4.values()) {
        sys.root_[g] = smallest_root(Elem{g}, is_qr);
      }
      if (sys.pair_) {
        sys.upsilon_pair_ = *sys.pair_;
      } else {
        // Upsilon itself only needs a residue a and a non-residue b.
        std::uint32_t b = 2;
        while (is_qr(Elem{b})) ++b;
        sys.upsilon_pair_ = {f.one(), Elem{b}};
      }
      sys.upsilon_ = upsilon_set(f, sys.upsilon_pair_.a, sys.upsilon_pair_.b,
                                 sys.root_);
      for (Elem g : sys.omega_.elements) {
        if (r4.contains(g)) continue;
        sys.root_[g.value] = smallest_root(g, [&](Elem r) {
          return !is_qr(r) && !sys.upsilon_.contains(r);
        });
      }
      break;
    }
  }
  return sys;
}

ScaledPair scaled_pair(const SqrtSystem& sys) { return sys.pair(); }

std::size_t scaled_pair_union_size(const SqrtSystem& sys,
                                   const ScaledPair& pair, Elem delta) {
  const FieldCtx& f = *sys.ctx();
  if (!f.contains(delta) || !sys.omega_set().contains(delta)) {
    throw Error(Errc::kInvalidDelta,
                std::to_string(delta.value) + " is not in Omega_q");
  }
  ElemSet u(f.q());
  for (Elem g : sys.omega_set().elements) {
    if (g == delta) continue;
    const Elem r = sys.sqrt(g);
    u.insert(f.mul(r, pair.a));
    u.insert(f.mul(r, pair.b));
  }
  return u.size();
}

}  // namespace qmlab
