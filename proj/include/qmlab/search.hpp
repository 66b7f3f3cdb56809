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

// Exact minimum-bandwidth search for non-adaptive one-bit schemes.
//
// A query (alpha, T) separates two messages with different products when
// exactly one of their evaluations at alpha lies in T. A scheme is valid iff
// its queries separate every such pair, so the minimum t is a minimum set
// cover, solved here by branch and bound with iterative deepening.

#ifndef QMLAB_SEARCH_HPP_
#define QMLAB_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qmlab/galois.hpp"
#include "qmlab/qm.hpp"

namespace qmlab {

// kQm: products in F_q, S = F_q. kMqm: products and S in Omega_q.
// kAppendix: products in F_q^*, S = {0, ..., min(5, q) - 1}.
enum class SearchMode { kQm, kMqm, kAppendix };
std::string_view mode_name(SearchMode m);
SearchMode parse_mode(std::string_view name);  // "qm", "mqm", "appendix"

ProductDomain mode_domain(SearchMode m);
std::vector<Elem> default_servers(const FieldPtr& ctx, SearchMode m);

struct SearchOptions {
  SearchMode mode = SearchMode::kQm;
  std::optional<std::vector<Elem>> servers;  // default_servers when unset
  std::uint32_t t_max = 8;
  std::uint64_t budget = 50'000'000;  // search nodes over all depths
};

struct SearchResult {
  std::uint32_t t = 0;
  LeakageScheme scheme;  // queries sorted by (alpha, mask)
  std::uint64_t nodes = 0;
  std::uint32_t lower_bound = 0;  // ceil(log2 #products)
  std::size_t pairs = 0;          // cross-product message pairs
  std::size_t queries = 0;        // distinct queries after reduction
};

// Minimal t <= t_max, or nullopt when no scheme of that size exists. Requires
// q <= 11. Throws Errc::kBudgetExceeded when the node budget runs out.
std::optional<SearchResult> search_min_bandwidth(const FieldPtr& ctx,
                                                 const SearchOptions& opts);

}  // namespace qmlab

#endif  // QMLAB_SEARCH_HPP_
