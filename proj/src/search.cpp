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

#include "qmlab/search.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <numeric>
#include <unordered_map>

#include "qmlab/error.hpp"
#include "qmlab/residues.hpp"

namespace qmlab {
namespace {

using Bits = std::vector<std::uint64_t>;
constexpr std::uint32_t kNone = ~std::uint32_t{0};

std::uint32_t ceil_log2(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::uint32_t>(std::bit_width(n - 1));
}

class CoverSearch {
 public:
  CoverSearch(const FieldPtr& ctx, const std::vector<Elem>& servers,
              const ElemSet& products, std::uint64_t budget)
      : ctx_(ctx), servers_(servers), budget_(budget) {
    const FieldCtx& f = *ctx;
    for_each_message(f, 2, 0, 1, products, [&](const MessageVec& m) {
      lines_.push_back(m);
      product_.push_back(f.mul(m[0], m[1]).value);
    });
    for (std::uint32_t u = 0; u < lines_.size(); ++u) {
      for (std::uint32_t v = u + 1; v < lines_.size(); ++v) {
        if (product_[u] != product_[v]) pairs_.push_back({u, v});
      }
    }
    words_ = (pairs_.size() + 63) / 64;
    values_.resize(servers_.size());
    for (std::size_t a = 0; a < servers_.size(); ++a) {
      for (const MessageVec& m : lines_) {
        values_[a].push_back(eval(f, m, servers_[a]).value);
      }
    }
    build_queries();
    build_orbits(products);
  }

  std::size_t pairs() const { return pairs_.size(); }
  std::size_t queries() const { return query_bits_.size(); }
  std::uint64_t nodes() const { return nodes_; }

  std::uint32_t root_lower_bound() const {
    std::vector<std::uint32_t> ps(product_);
    std::sort(ps.begin(), ps.end());
    return ceil_log2(std::unique(ps.begin(), ps.end()) - ps.begin());
  }

  // Query indices of a cover of size t, or empty when none exists.
  std::optional<std::vector<std::uint32_t>> solve(std::uint32_t t) {
    chosen_.clear();
    excluded_.assign(query_bits_.size(), 0);
    Bits covered(words_, 0);
    std::vector<std::uint64_t> keys(lines_.size(), 0);
    if (dfs(t, covered, keys)) return chosen_;
    return std::nullopt;
  }

  std::uint32_t server_of(std::uint32_t qi) const { return query_server_[qi]; }
  std::uint64_t mask_of(std::uint32_t qi) const { return query_mask_[qi]; }

 private:
  struct Pair {
    std::uint32_t u, v;
  };

  void build_queries() {
    const std::uint32_t q = ctx_->q();
    // T and its complement separate the same pairs; keep the one without q-1.
    const std::uint64_t limit = std::uint64_t{1} << (q - 1);
    std::unordered_map<std::string, std::uint32_t> seen;
    index_of_.assign(servers_.size() * limit, kNone);
    for (std::uint32_t a = 0; a < servers_.size(); ++a) {
      for (std::uint64_t mask = 1; mask < limit; ++mask) {
        Bits bits(words_, 0);
        bool any = false;
        for (std::size_t z = 0; z < pairs_.size(); ++z) {
          const bool x = (mask >> values_[a][pairs_[z].u]) & 1;
          const bool y = (mask >> values_[a][pairs_[z].v]) & 1;
          if (x != y) {
            bits[z >> 6] |= std::uint64_t{1} << (z & 63);
            any = true;
          }
        }
        if (!any) continue;
        std::string key(reinterpret_cast<const char*>(bits.data()),
                        bits.size() * sizeof(std::uint64_t));
        auto [it, inserted] = seen.emplace(
            std::move(key), static_cast<std::uint32_t>(query_bits_.size()));
        index_of_[a * limit + mask] = it->second;
        if (!inserted) continue;
        query_bits_.push_back(std::move(bits));
        query_server_.push_back(a);
        query_mask_.push_back(mask);
      }
    }
    cover_count_.assign(pairs_.size(), 0);
    for (const Bits& b : query_bits_) {
      for (std::size_t z = 0; z < pairs_.size(); ++z) {
        cover_count_[z] += (b[z >> 6] >> (z & 63)) & 1;
      }
    }
  }

  // Maps of lines that permute product classes, and their action on queries
  // (server index, value permutation). A generator is kept only when it maps
  // the server list and the product domain onto themselves.
  void build_orbits(const ElemSet& products) {
    const FieldCtx& f = *ctx_;
    const std::uint32_t q = f.q();
    const std::uint64_t limit = std::uint64_t{1} << (q - 1);
    parent_.resize(query_bits_.size());
    std::iota(parent_.begin(), parent_.end(), 0u);
    if (query_bits_.empty()) return;

    std::vector<std::uint32_t> pos(q, kNone);
    for (std::uint32_t a = 0; a < servers_.size(); ++a) pos[servers_[a].value] = a;
    auto try_generator = [&](auto server_map, auto value_map, auto product_map) {
      std::vector<std::uint32_t> smap(servers_.size());
      for (std::uint32_t a = 0; a < servers_.size(); ++a) {
        smap[a] = pos[server_map(servers_[a]).value];
        if (smap[a] == kNone) return;
      }
      for (std::uint32_t g = 0; g < q; ++g) {
        if (products.contains(Elem{g}) != products.contains(product_map(Elem{g}))) {
          return;
        }
      }
      std::vector<std::uint32_t> vmap(q);
      for (std::uint32_t v = 0; v < q; ++v) vmap[v] = value_map(Elem{v}).value;
      for (std::uint32_t a = 0; a < servers_.size(); ++a) {
        for (std::uint64_t mask = 1; mask < limit; ++mask) {
          const std::uint32_t from = index_of_[a * limit + mask];
          if (from == kNone) continue;
          std::uint64_t image = 0;
          for (std::uint32_t v = 0; v < q; ++v) {
            if ((mask >> v) & 1) image |= std::uint64_t{1} << vmap[v];
          }
          if ((image >> (q - 1)) & 1) image ^= (std::uint64_t{1} << q) - 1;
          unite(from, index_of_[smap[a] * limit + image]);
        }
      }
    };
    const Elem g = f.generator();
    // f -> c f: products scale by c^2, symbols by c.
    try_generator([](Elem a) { return a; },
                  [&](Elem v) { return f.mul(g, v); },
                  [&](Elem x) { return f.mul(f.mul(g, g), x); });
    // f(x) -> f(d x): products scale by d, server a becomes a / d.
    for (const Elem d : {g, f.mul(g, g)}) {
      try_generator([&](Elem a) { return f.div(a, d); },
                    [](Elem v) { return v; },
                    [&](Elem x) { return f.mul(d, x); });
    }
    // Coefficientwise Frobenius.
    if (f.e() > 1) {
      auto frob = [&](Elem x) { return f.frobenius(x); };
      try_generator(frob, frob, frob);
    }
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

  // max over transcript cells of ceil(log2 #products in the cell).
  std::uint32_t cell_bound(const std::vector<std::uint64_t>& keys) const {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> kp(lines_.size());
    for (std::size_t n = 0; n < lines_.size(); ++n) kp[n] = {keys[n], product_[n]};
    std::sort(kp.begin(), kp.end());
    std::uint32_t best = 0;
    std::size_t distinct = 0;
    for (std::size_t n = 0; n < kp.size(); ++n) {
      if (n == 0 || kp[n].first != kp[n - 1].first) {
        distinct = 1;
      } else if (kp[n].second != kp[n - 1].second) {
        ++distinct;
      }
      best = std::max(best, ceil_log2(distinct));
    }
    return best;
  }

  bool dfs(std::uint32_t t, const Bits& covered,
           const std::vector<std::uint64_t>& keys) {
    if (++nodes_ > budget_) {
      throw Error(Errc::kBudgetExceeded,
                  "search exceeded " + std::to_string(budget_) + " nodes");
    }
    // Uncovered pair with the fewest covering queries.
    std::size_t pick = pairs_.size();
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t open = ~covered[w];
      if (w + 1 == words_ && pairs_.size() % 64) {
        open &= (std::uint64_t{1} << (pairs_.size() % 64)) - 1;
      }
      while (open) {
        const std::size_t z = w * 64 + std::countr_zero(open);
        open &= open - 1;
        if (pick == pairs_.size() || cover_count_[z] < cover_count_[pick]) {
          pick = z;
        }
      }
    }
    if (pick == pairs_.size()) return true;
    const std::uint32_t depth = static_cast<std::uint32_t>(chosen_.size());
    if (depth >= t || depth + cell_bound(keys) > t) return false;

    struct Cand {
      std::size_t gain;
      std::uint32_t qi;
    };
    // Every cover is equivalent to one through the root query's orbit
    // representative, so the root branches over orbits.
    const bool root = depth == 0;
    std::vector<Cand> cands;
    for (std::uint32_t qi = 0; qi < query_bits_.size(); ++qi) {
      const Bits& b = query_bits_[qi];
      if (excluded_[qi]) continue;
      if (root ? find(qi) != qi : !((b[pick >> 6] >> (pick & 63)) & 1)) continue;
      std::size_t gain = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        gain += std::popcount(b[w] & ~covered[w]);
      }
      cands.push_back({gain, qi});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& x, const Cand& y) { return x.gain > y.gain; });

    std::vector<std::uint32_t> undo;
    bool found = false;
    for (const Cand& c : cands) {
      Bits next(covered);
      const Bits& b = query_bits_[c.qi];
      for (std::size_t w = 0; w < words_; ++w) next[w] |= b[w];
      std::vector<std::uint64_t> next_keys(keys);
      const std::uint32_t a = query_server_[c.qi];
      for (std::size_t n = 0; n < lines_.size(); ++n) {
        next_keys[n] = (next_keys[n] << 1) |
                       ((query_mask_[c.qi] >> values_[a][n]) & 1);
      }
      chosen_.push_back(c.qi);
      if (dfs(t, next, next_keys)) {
        found = true;
        break;
      }
      chosen_.pop_back();
      // Covers containing c.qi are exhausted for this subtree.
      if (root) {
        for (std::uint32_t qj = 0; qj < query_bits_.size(); ++qj) {
          if (find(qj) == c.qi) {
            excluded_[qj] = 1;
            undo.push_back(qj);
          }
        }
      } else {
        excluded_[c.qi] = 1;
        undo.push_back(c.qi);
      }
    }
    for (std::uint32_t qi : undo) excluded_[qi] = 0;
    return found;
  }

  FieldPtr ctx_;
  std::vector<Elem> servers_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<MessageVec> lines_;
  std::vector<std::uint32_t> product_;
  std::vector<Pair> pairs_;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint32_t>> values_;  // [server][line]
  std::vector<Bits> query_bits_;
  std::vector<std::uint32_t> query_server_;
  std::vector<std::uint64_t> query_mask_;
  std::vector<std::uint32_t> cover_count_;
  std::vector<std::uint32_t> chosen_;
  std::vector<char> excluded_;
  std::vector<std::uint32_t> index_of_;  // [server * 2^(q-1) + mask]
  std::vector<std::uint32_t> parent_;    // query orbits
};

}  // namespace

std::string_view mode_name(SearchMode m) {
  switch (m) {
    case SearchMode::kQm: return "qm";
    case SearchMode::kMqm: return "mqm";
    case SearchMode::kAppendix: return "appendix";
  }
  return "qm";
}

SearchMode parse_mode(std::string_view name) {
  if (name == "qm") return SearchMode::kQm;
  if (name == "mqm") return SearchMode::kMqm;
  if (name == "appendix") return SearchMode::kAppendix;
  throw Error(Errc::kInvalidArgument,
              "unknown search mode '" + std::string(name) + "'");
}

ProductDomain mode_domain(SearchMode m) {
  switch (m) {
    case SearchMode::kQm: return ProductDomain::kAll;
    case SearchMode::kMqm: return ProductDomain::kOmega;
    case SearchMode::kAppendix: return ProductDomain::kNonzero;
  }
  return ProductDomain::kAll;
}

std::vector<Elem> default_servers(const FieldPtr& ctx, SearchMode m) {
  std::vector<Elem> s;
  switch (m) {
    case SearchMode::kQm:
      for (std::uint32_t v = 0; v < ctx->q(); ++v) s.push_back(Elem{v});
      break;
    case SearchMode::kMqm:
      s = omega_set(ctx).elements;
      std::sort(s.begin(), s.end());
      break;
    case SearchMode::kAppendix:
      for (std::uint32_t v = 0; v < std::min<std::uint32_t>(5, ctx->q()); ++v) {
        s.push_back(Elem{v});
      }
      break;
  }
  return s;
}

std::optional<SearchResult> search_min_bandwidth(const FieldPtr& ctx,
                                                 const SearchOptions& opts) {
  if (ctx->q() > 11) {
    throw Error(Errc::kInvalidArgument, "exhaustive search needs q <= 11");
  }
  std::vector<Elem> servers =
      opts.servers ? *opts.servers : default_servers(ctx, opts.mode);
  std::sort(servers.begin(), servers.end());
  const ProductDomain domain = mode_domain(opts.mode);
  if (opts.mode == SearchMode::kMqm) {
    const OmegaSet om = omega_set(ctx);
    for (Elem a : servers) {
      if (!om.contains(a)) {
        throw Error(Errc::kInvalidArgument, "mQM servers must lie in Omega_q");
      }
    }
  }

  CoverSearch cs(ctx, servers, domain_mask(ctx, domain), opts.budget);
  SearchResult res;
  res.lower_bound = cs.root_lower_bound();
  res.pairs = cs.pairs();
  res.queries = cs.queries();
  res.scheme.ctx = ctx;
  res.scheme.servers = servers;
  res.scheme.validate();

  for (std::uint32_t t = res.lower_bound; t <= opts.t_max; ++t) {
    std::optional<std::vector<std::uint32_t>> cover = cs.solve(t);
    if (!cover) continue;
    std::vector<std::uint32_t> qs = *cover;
    // Queries are generated in (alpha, mask) order, so indices sort canonically.
    std::sort(qs.begin(), qs.end());
    for (std::uint32_t qi : qs) {
      res.scheme.schedule.push_back(servers[cs.server_of(qi)]);
      ElemSet T(ctx->q());
      for (std::uint32_t v = 0; v < ctx->q(); ++v) {
        if ((cs.mask_of(qi) >> v) & 1) T.insert(Elem{v});
      }
      res.scheme.sets.push_back(std::move(T));
    }
    res.t = static_cast<std::uint32_t>(qs.size());
    res.nodes = cs.nodes();
    return res;
  }
  return std::nullopt;
}

}  // namespace qmlab
