// Copyright 2026 The xset Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xset/lex.h"

#include <algorithm>
#include <stdexcept>

#include "subset_search.h"

namespace xset {
namespace {

// First index in [lo, hi) where `pred` holds; `pred` is monotone
// false...true. Returns hi when it never holds.
template <typename Pred>
std::size_t FirstWhere(std::size_t lo, std::size_t hi, Pred pred,
                       SearchStrategy strategy) {
  if (strategy == SearchStrategy::kGalloping) {
    for (std::size_t step = 1;; step *= 2) {
      const std::size_t probe = lo + step - 1;
      if (probe >= hi) break;
      if (pred(probe)) {
        hi = probe + 1;
        break;
      }
      lo = probe + 1;
    }
  }
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

std::optional<std::size_t> NextItem(ItemView s, std::size_t j, Item target,
                                    RangeSearchStats& stats,
                                    SearchStrategy strategy) {
  ++stats.next_item_calls;
  const std::size_t k = FirstWhere(
      j, s.size(), [&](std::size_t x) { return s[x] >= target; }, strategy);
  if (k == s.size()) return std::nullopt;
  return k;
}

std::size_t NextEndRange(const Dataset& d, std::size_t b, std::size_t e,
                         Item item, std::size_t column, RangeSearchStats& stats,
                         SearchStrategy strategy) {
  ++stats.next_end_range_calls;
  const std::size_t past = FirstWhere(
      b, e + 1, [&](std::size_t k) { return d.at(k, column) > item; },
      strategy);
  return past - 1;
}

std::size_t NextBeginRange(const Dataset& d, std::size_t b, std::size_t e,
                           Item item, std::size_t column,
                           RangeSearchStats& stats, SearchStrategy strategy) {
  ++stats.next_begin_range_calls;
  return FirstWhere(
      b, e + 1, [&](std::size_t k) { return d.at(k, column) >= item; },
      strategy);
}

std::optional<std::size_t> FindProperSubset(const Dataset& d,
                                            const QueryCursor& c, ItemView s,
                                            RangeSearchStats& stats,
                                            SearchStrategy strategy) {
  internal::SearchConfig cfg;
  cfg.strategy = strategy;
  internal::NullRecorder rec;
  internal::SubsetSearch<internal::NullRecorder> search(d, s, cfg, rec, stats);
  internal::NullRecorder::Node root;
  return search.Run(c, root);
}

MinimalityFlags PrefixSubsumePass(const Dataset& d) {
  MinimalityFlags flags(d.size(), true);
  if (d.empty()) return flags;
  std::size_t rep = 0;
  for (std::size_t i = 1; i < d.size(); ++i) {
    const ItemView s = d[rep];
    const ItemView row = d[i];
    if (s.size() <= row.size() && std::equal(s.begin(), s.end(), row.begin())) {
      flags[i] = false;
    } else {
      rep = i;
    }
  }
  return flags;
}

MinimalResult GetMinimalItemsetsLex(const Dataset& d,
                                    const LexOptions& options) {
  RequireCanonical(d);
  MinimalResult out{PrefixSubsumePass(d), {}};
  const std::size_t n = d.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!out.flags[i]) continue;
    ++out.stats.subset_queries;
    auto witness = FindProperSubset(d, {i + 1, n - 1, 0, 0}, d[i], out.stats,
                                    options.search);
    if (!witness) continue;
    if (options.verify_witness && !IsProperSubset(d[*witness], d[i])) {
      throw std::logic_error(
          "subset search reported row " + std::to_string(*witness) +
          " which is not a proper subset of row " + std::to_string(i));
    }
    out.flags[i] = false;
  }
  return out;
}

MinimalityFlags GetMaximalItemsetsNaiveBridge(const Dataset& d) {
  return NaiveMaximal(d);
}

}  // namespace xset
