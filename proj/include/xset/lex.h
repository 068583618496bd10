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

#ifndef XSET_LEX_H_
#define XSET_LEX_H_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "xset/itemset.h"
#include "xset/oracle.h"

namespace xset {

// Call counters for the three search subroutines plus the number of subset
// queries issued. Begin/end range searches are the cost proxy reported by
// the benchmarks.
struct RangeSearchStats {
  std::uint64_t next_item_calls = 0;
  std::uint64_t next_begin_range_calls = 0;
  std::uint64_t next_end_range_calls = 0;
  std::uint64_t subset_queries = 0;

  std::uint64_t range_searches() const {
    return next_begin_range_calls + next_end_range_calls;
  }
  std::uint64_t total_searches() const {
    return range_searches() + next_item_calls;
  }

  RangeSearchStats& operator+=(const RangeSearchStats& o) {
    next_item_calls += o.next_item_calls;
    next_begin_range_calls += o.next_begin_range_calls;
    next_end_range_calls += o.next_end_range_calls;
    subset_queries += o.subset_queries;
    return *this;
  }
  friend bool operator==(const RangeSearchStats&,
                         const RangeSearchStats&) = default;
};

enum class SearchStrategy {
  kBinary,
  // Doubling probe from the range start, then binary search in the last
  // step. Counters still count one call per subroutine invocation.
  kGalloping,
};

// State of one subset-search invocation. Positions are 0-based: rows
// [begin, end] of the dataset, `cursor` indexes the query itemset and
// `depth` items are shared by every row in the range and matched in the
// query before `cursor`.
struct QueryCursor {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t cursor = 0;
  std::size_t depth = 0;

  friend bool operator==(const QueryCursor&, const QueryCursor&) = default;
};

// Smallest k >= j with s[k] >= target.
std::optional<std::size_t> NextItem(
    ItemView s, std::size_t j, Item target, RangeSearchStats& stats,
    SearchStrategy strategy = SearchStrategy::kBinary);

// Last row in [b, e] whose item at `column` equals `item`. Requires
// d.at(b, column) == item and every row in range longer than `column`.
std::size_t NextEndRange(const Dataset& d, std::size_t b, std::size_t e,
                         Item item, std::size_t column, RangeSearchStats& stats,
                         SearchStrategy strategy = SearchStrategy::kBinary);

// First row in [b, e] whose item at `column` is >= `item`, or e + 1.
std::size_t NextBeginRange(const Dataset& d, std::size_t b, std::size_t e,
                           Item item, std::size_t column,
                           RangeSearchStats& stats,
                           SearchStrategy strategy = SearchStrategy::kBinary);

// Searches rows [c.begin, c.end] for a proper subset of `s` and returns the
// position of the one found. Only rows sharing the matched prefix are
// reachable; with a top-level cursor {i + 1, n - 1, 0, 0} on a canonical
// dataset that covers every non-prefix subset of row i.
std::optional<std::size_t> FindProperSubset(
    const Dataset& d, const QueryCursor& c, ItemView s, RangeSearchStats& stats,
    SearchStrategy strategy = SearchStrategy::kBinary);

inline bool ContainsSubsetOf(
    const Dataset& d, const QueryCursor& c, ItemView s, RangeSearchStats& stats,
    SearchStrategy strategy = SearchStrategy::kBinary) {
  return FindProperSubset(d, c, s, stats, strategy).has_value();
}

// Clears every row that starts with the running representative (the last
// row left set), i.e. rows extending an earlier row and repeated rows.
MinimalityFlags PrefixSubsumePass(const Dataset& d);

struct LexOptions {
  SearchStrategy search = SearchStrategy::kBinary;
  // Check every reported subset against IsProperSubset; throws
  // std::logic_error on a bad witness.
  bool verify_witness = false;
};

struct MinimalResult {
  MinimalityFlags flags;
  RangeSearchStats stats;
};

// Prefix pass followed by one subset query per surviving row against the
// rows after it. Throws std::invalid_argument on a non-canonical dataset.
MinimalResult GetMinimalItemsetsLex(const Dataset& d,
                                    const LexOptions& options = {});

// Maximal sets are only available through the brute-force scan.
MinimalityFlags GetMaximalItemsetsNaiveBridge(const Dataset& d);

}  // namespace xset

#endif  // XSET_LEX_H_
