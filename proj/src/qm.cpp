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

#include "qmlab/qm.hpp"

#include <bit>
#include <optional>
#include <string>
#include <unordered_map>

#include "qmlab/error.hpp"

namespace qmlab {

void LeakageScheme::validate() const {
  if (!ctx) throw Error(Errc::kInvalidScheme, "scheme has no field");
  if (k < 2) throw Error(Errc::kInvalidScheme, "dimension k must be >= 2");
  if (i == j || i >= k || j >= k) {
    throw Error(Errc::kInvalidScheme, "need distinct i, j in [0, k-1]");
  }
  if (schedule.size() != sets.size()) {
    throw Error(Errc::kInvalidScheme, "schedule and sets differ in length");
  }
  ElemSet seen(ctx->q());
  for (Elem s : servers) {
    if (!ctx->contains(s)) {
      throw Error(Errc::kInvalidScheme, "server label out of range");
    }
    if (seen.contains(s)) {
      throw Error(Errc::kInvalidScheme,
                  "server " + std::to_string(s.value) + " listed twice");
    }
    seen.insert(s);
  }
  for (std::size_t z = 0; z < schedule.size(); ++z) {
    if (!ctx->contains(schedule[z]) || !seen.contains(schedule[z])) {
      throw Error(Errc::kInvalidScheme, "round " + std::to_string(z) +
                                            " queries a server outside S");
    }
    if (sets[z].universe() != ctx->q()) {
      throw Error(Errc::kInvalidScheme,
                  "leakage set " + std::to_string(z) + " has wrong universe");
    }
  }
}

Transcript transcript(const LeakageScheme& scheme, const MessageVec& f) {
  const FieldCtx& ctx = *scheme.ctx;
  Transcript b(scheme.t());
  for (std::size_t z = 0; z < scheme.t(); ++z) {
    b[z] = static_cast<std::uint8_t>(
        leak_bit(scheme.sets[z], eval(ctx, f, scheme.schedule[z])));
  }
  return b;
}

std::string_view domain_name(ProductDomain d) {
  switch (d) {
    case ProductDomain::kAll: return "all";
    case ProductDomain::kOmega: return "omega";
    case ProductDomain::kNonzero: return "nonzero";
  }
  return "all";
}

ProductDomain parse_domain(std::string_view name) {
  if (name == "all") return ProductDomain::kAll;
  if (name == "omega") return ProductDomain::kOmega;
  if (name == "nonzero") return ProductDomain::kNonzero;
  throw Error(Errc::kInvalidArgument,
              "unknown product domain '" + std::string(name) + "'");
}

ElemSet domain_mask(const FieldPtr& ctx, ProductDomain d) {
  switch (d) {
    case ProductDomain::kAll: return ElemSet::full(ctx->q());
    case ProductDomain::kOmega: return omega_set(ctx).mask;
    case ProductDomain::kNonzero: {
      ElemSet s = ElemSet::full(ctx->q());
      s.erase(ctx->zero());
      return s;
    }
  }
  return ElemSet(ctx->q());
}

Elem coefficient_product(const FieldCtx& ctx, const MessageVec& f,
                         std::uint32_t i, std::uint32_t j) {
  return ctx.mul(f[i], f[j]);
}

void for_each_message(const FieldCtx& ctx, std::uint32_t k, std::uint32_t i,
                      std::uint32_t j, const ElemSet& products,
                      const std::function<void(const MessageVec&)>& visit) {
  double total = 1;
  for (std::uint32_t z = 0; z < k; ++z) total *= ctx.q();
  if (total > double(1u << 24)) {
    throw Error(Errc::kInvalidArgument,
                "q^k exceeds the 2^24 message enumeration limit");
  }
  MessageVec f(k, Elem{0});
  while (true) {
    if (products.contains(ctx.mul(f[i], f[j]))) visit(f);
    std::uint32_t z = 0;
    while (z < k && f[z].value + 1 == ctx.q()) f[z++] = Elem{0};
    if (z == k) break;
    f[z].value++;
  }
}

std::string_view status_name(QmStatus s) {
  switch (s) {
    case QmStatus::kSuccess: return "Success";
    case QmStatus::kInvalidTranscript: return "InvalidTranscript";
    case QmStatus::kFail: return "Fail";
  }
  return "Fail";
}

QmOutcome run_qm(const LeakageScheme& scheme, const Transcript& b,
                 const ElemSet& products) {
  scheme.validate();
  if (b.size() != scheme.t()) {
    throw Error(Errc::kInvalidArgument, "transcript length differs from t");
  }
  const FieldCtx& ctx = *scheme.ctx;
  // B(g) is nonempty iff some message with product g survives every round.
  ElemSet nonempty(ctx.q());
  for_each_message(ctx, scheme.k, scheme.i, scheme.j, products,
                   [&](const MessageVec& f) {
                     for (std::size_t z = 0; z < scheme.t(); ++z) {
                       const bool in_t = scheme.sets[z].contains(
                           eval(ctx, f, scheme.schedule[z]));
                       // Keep f iff its leak in round z equals b_z.
                       if (in_t != (b[z] == 0)) return;
                     }
                     nonempty.insert(ctx.mul(f[scheme.i], f[scheme.j]));
                   });
  const std::size_t n = nonempty.size();
  if (n == 0) return {QmStatus::kInvalidTranscript, Elem{0}};
  if (n == 1) return {QmStatus::kSuccess, Elem{nonempty.values().front()}};
  return {QmStatus::kFail, Elem{0}};
}

QmOutcome run_qm(const LeakageScheme& scheme, const Transcript& b) {
  return run_qm(scheme, b, ElemSet::full(scheme.ctx->q()));
}

std::optional<SchemeCollision> find_collision(const LeakageScheme& scheme,
                                              ProductDomain domain) {
  scheme.validate();
  const FieldCtx& ctx = *scheme.ctx;
  std::unordered_map<std::string, MessageVec> first;
  std::optional<SchemeCollision> found;
  for_each_message(
      ctx, scheme.k, scheme.i, scheme.j, domain_mask(scheme.ctx, domain),
      [&](const MessageVec& f) {
        if (found) return;
        const Transcript b = transcript(scheme, f);
        auto [it, inserted] = first.emplace(std::string(b.begin(), b.end()), f);
        const MessageVec& l = it->second;
        if (!inserted && coefficient_product(ctx, l, scheme.i, scheme.j) !=
                             coefficient_product(ctx, f, scheme.i, scheme.j)) {
          found = SchemeCollision{l, f, b};
        }
      });
  return found;
}

bool verify_scheme(const LeakageScheme& scheme, ProductDomain domain) {
  return !find_collision(scheme, domain).has_value();
}

bool verify_scheme_by_algorithm(const LeakageScheme& scheme,
                                ProductDomain domain) {
  scheme.validate();
  const FieldCtx& ctx = *scheme.ctx;
  const ElemSet products = domain_mask(scheme.ctx, domain);
  bool ok = true;
  for_each_message(ctx, scheme.k, scheme.i, scheme.j, products,
                   [&](const MessageVec& f) {
                     if (!ok) return;
                     const QmOutcome out =
                         run_qm(scheme, transcript(scheme, f), products);
                     ok = out.status == QmStatus::kSuccess &&
                          out.gamma == ctx.mul(f[scheme.i], f[scheme.j]);
                   });
  return ok;
}

bool mqm_check(const LeakageScheme& scheme) {
  scheme.validate();
  if (scheme.k != 2 || scheme.i != 0 || scheme.j != 1) {
    throw Error(Errc::kPreconditionViolated, "mQM needs k = 2, i = 0, j = 1");
  }
  const OmegaSet om = omega_set(scheme.ctx);
  for (Elem a : scheme.schedule) {
    if (!om.contains(a)) return false;
  }
  return verify_scheme(scheme, ProductDomain::kOmega);
}

LeakageScheme bitsliced_scheme(const FieldPtr& ctx, std::vector<Elem> servers) {
  LeakageScheme s;
  s.ctx = ctx;
  s.servers = std::move(servers);
  const std::uint32_t q = ctx->q();
  const std::uint32_t width = std::bit_width(q - 1);
  for (Elem a : s.servers) {
    for (std::uint32_t c = 0; c < width; ++c) {
      ElemSet T(q);
      for (std::uint32_t x = 0; x < q; ++x) {
        if (((x >> c) & 1u) == 0) T.insert(Elem{x});
      }
      s.schedule.push_back(a);
      s.sets.push_back(T);
    }
  }
  s.validate();
  return s;
}

ElemSet convert_eliminator(const SqrtSystem& sys, const ElemSet& T,
                           Elem alpha) {
  const FieldCtx& f = *sys.ctx();
  const Elem ra_inv = f.inv(sys.sqrt(alpha));
  ElemSet v(f.q());
  for (Elem g : sys.omega_set().elements) {
    for (const Line& h : bucket(f, g).lines) {
      if (!T.contains(eval(f, h, alpha))) continue;
      const Line u = relabel(sys, h, alpha);
      v.insert(f.mul(ra_inv, eval(f, u, alpha)));
    }
  }
  return v;
}

ElemSet convert_eliminator_closed_form(const SqrtSystem& sys, const ElemSet& T,
                                       Elem alpha) {
  const FieldCtx& f = *sys.ctx();
  sys.sqrt(alpha);  // membership check
  ElemSet v(f.q());
  for (Elem g : sys.omega_set().elements) {
    const Elem rg = sys.sqrt(g);
    for (std::uint32_t mv = 1; mv < f.q(); ++mv) {
      const Elem m{mv};
      if (T.contains(eval(f, h_line(sys, g, m), alpha))) {
        v.insert(f.mul(rg, g_at_one(f, m)));
      }
    }
  }
  return v;
}

KReduction reduce_k_to_2(const FieldCtx& ctx, std::uint32_t k, std::uint32_t i,
                         std::uint32_t j, Elem alpha) {
  if (!(i < j && j < k)) {
    throw Error(Errc::kInvalidArgument, "need i < j < k");
  }
  if (alpha.value == 0 || !ctx.contains(alpha)) {
    throw Error(Errc::kInvalidArgument, "server label must be nonzero");
  }
  KReduction out;
  out.r = j - i;
  out.rescale = ctx.inv(ctx.pow(alpha, i));
  out.beta = ctx.pow(alpha, out.r);
  return out;
}

ElemSet reachable_betas(const FieldCtx& ctx, std::uint32_t r) {
  ElemSet out(ctx.q());
  for (std::uint32_t v = 1; v < ctx.q(); ++v) out.insert(ctx.pow(Elem{v}, r));
  return out;
}

}  // namespace qmlab
