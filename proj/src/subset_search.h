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

#ifndef XSET_SRC_SUBSET_SEARCH_H_
#define XSET_SRC_SUBSET_SEARCH_H_

// Shared body of the subset search. The plain engine instantiates it with
// NullRecorder; the memoized engine records every invocation as a call-graph
// node.

#include <cassert>
#include <cstddef>
#include <optional>

#include "xset/itemset.h"
#include "xset/lex.h"

namespace xset::internal {

struct SearchConfig {
  SearchStrategy strategy = SearchStrategy::kBinary;
  // false explores the whole call graph: a direct hit is recorded and the
  // search moves on to the next range.
  bool stop_on_hit = true;
  // When stopping early, record each unexplored continuation as a pending
  // node so the graph still covers the full range.
  bool keep_frontier = false;
};

struct NullRecorder {
  using Node = int;
  static constexpr Node kNone = -1;
  Node Open(const QueryCursor&) { return 0; }
  void OpenPending(Node, const QueryCursor&) {}
  void SetNeed(Node, std::size_t) {}
  void SetHit(Node) {}
  void Descend(Node, Node) {}
  void Next(Node, Node) {}
  void Truncate() {}
};

// Recorder concept: Open() creates a node for an invocation at cursor c,
// Next()/Descend() link continuation and descend children, SetNeed() stores
// how many leading query items the node's own work depended on.
template <typename Recorder>
class SubsetSearch {
 public:
  using Node = typename Recorder::Node;

  SubsetSearch(const Dataset& d, ItemView s, const SearchConfig& cfg,
               Recorder& rec, RangeSearchStats& stats)
      : d_(d), s_(s), cfg_(cfg), rec_(rec), stats_(stats) {}

  // Runs from `c`; `first` receives the node opened for `c`.
  std::optional<std::size_t> Run(QueryCursor c, Node& first) {
    std::optional<std::size_t> found;
    Node prev = Recorder::kNone;
    first = Recorder::kNone;
    for (;;) {
      assert(c.begin <= c.end && c.end < d_.size());
      assert(c.cursor < s_.size() && c.depth <= c.cursor);
      assert(c.depth < d_.row_size(c.begin));
      const Node node = rec_.Open(c);
      if (prev == Recorder::kNone) {
        first = node;
      } else {
        rec_.Next(prev, node);
      }
      prev = node;

      const Item head = d_.at(c.begin, c.depth);
      std::size_t j = c.cursor;
      if (s_[j] < head) {
        auto k = NextItem(s_, j, head, stats_, cfg_.strategy);
        if (!k) {
          // Depends on where the query ends.
          rec_.SetNeed(node, s_.size() + 1);
          return found;
        }
        j = *k;
      }
      std::size_t need = j + 1;
      std::size_t next_begin;
      if (s_[j] == head) {
        const std::size_t group_end = NextEndRange(
            d_, c.begin, c.end, head, c.depth, stats_, cfg_.strategy);
        next_begin = group_end + 1;
        const bool head_complete = d_.row_size(c.begin) == c.depth + 1;
        if (head_complete && s_.size() > c.depth + 1) {
          rec_.SetNeed(node, need);
          rec_.SetHit(node);
          if (!found) found = c.begin;
          if (cfg_.stop_on_hit) {
            return Stop(node, {next_begin, c.end, j, c.depth}, found);
          }
        } else if (j + 1 < s_.size()) {
          rec_.SetNeed(node, need);
          Node child;
          auto sub = Run({c.begin, group_end, j + 1, c.depth + 1}, child);
          rec_.Descend(node, child);
          if (sub) {
            if (!found) found = sub;
            if (cfg_.stop_on_hit) {
              return Stop(node, {next_begin, c.end, j, c.depth}, found);
            }
          }
        } else {
          // The size test or the descend guard read the query length.
          rec_.SetNeed(node, s_.size() + 1);
        }
      } else {
        rec_.SetNeed(node, need);
        next_begin = NextBeginRange(d_, c.begin, c.end, s_[j], c.depth, stats_,
                                    cfg_.strategy);
      }
      if (next_begin > c.end) return found;
      c = {next_begin, c.end, j, c.depth};
    }
  }

 private:
  std::optional<std::size_t> Stop(Node node, const QueryCursor& rest,
                                  std::optional<std::size_t> found) {
    if (rest.begin <= rest.end) {
      if (cfg_.keep_frontier) {
        rec_.OpenPending(node, rest);
      } else {
        rec_.Truncate();
      }
    }
    return found;
  }

  const Dataset& d_;
  ItemView s_;
  const SearchConfig& cfg_;
  Recorder& rec_;
  RangeSearchStats& stats_;
};

}  // namespace xset::internal

#endif  // XSET_SRC_SUBSET_SEARCH_H_
