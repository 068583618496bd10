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

#ifndef XSET_MEMO_H_
#define XSET_MEMO_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xset/itemset.h"
#include "xset/lex.h"

namespace xset {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// prefix_needed of a node whose work has not been done yet.
inline constexpr std::size_t kPendingNeed =
    std::numeric_limits<std::size_t>::max();

// One invocation of the subset search for a query itemset.
struct CallNode {
  QueryCursor entry;
  // Number of leading query items this invocation read, descendants
  // excluded. The node's own work is identical for any query that shares
  // that many leading items. One past the query length when the outcome
  // depended on where the query ends.
  std::size_t prefix_needed = 0;
  // The range head was a proper subset of the query.
  bool hit = false;
  NodeId descend = kNoNode;  // search one item deeper in the head's group
  NodeId next = kNoNode;     // continuation over the rest of the range

  bool pending() const { return prefix_needed == kPendingNeed; }
};

// Call graph of one query. Nodes are stored in execution order, so every
// child id is larger than its parent's.
struct CallGraph {
  std::vector<CallNode> nodes;
  NodeId root = kNoNode;
  // Set when the search stopped with part of its range unexplored and no
  // pending node records it. Truncated graphs cannot be reused.
  bool truncated = false;
  // The itemset the graph answers for.
  std::vector<Item> query;

  bool empty() const { return root == kNoNode; }
  std::size_t size() const { return nodes.size(); }

  // Subgraph of nodes entered at 1-based query position < prefix_len,
  // i.e. cursor + 1 < prefix_len. Pending nodes are dropped.
  CallGraph Restricted(std::size_t prefix_len) const;

  // Nodes as {id, b, e, j, d, t, m, c1, c2} records in execution order
  // (0-based positions, m = prefix_needed, null for absent children), plus
  // "pending" on nodes not yet executed.
  std::string ToJson() const;
};

// Checks out-degree/acyclicity by id order, the shape of every edge, the
// need bound and that each hit row is a proper subset of the query. Returns
// a description of the first violation.
std::optional<std::string> ValidateCallGraph(const CallGraph& g,
                                             const Dataset& d);

struct MemoOptions {
  SearchStrategy search = SearchStrategy::kBinary;
  // Keep graphs after a subset is found by recording unexplored
  // continuations as pending nodes. Off: graphs are dropped after every
  // positive answer.
  bool frontier_resume = false;
  bool verify_witness = false;
};

struct MemoCounters {
  std::uint64_t fresh_queries = 0;
  std::uint64_t memoized_queries = 0;
  std::uint64_t nodes_reused = 0;
  std::uint64_t subtrees_reexecuted = 0;
  std::uint64_t subtrees_dropped = 0;
  std::uint64_t graphs_discarded = 0;
  std::uint64_t peak_graph_nodes = 0;
};

struct TracedResult {
  std::optional<std::size_t> witness;
  CallGraph graph;
};

// Subset search that also returns its call graph. With
// frontier_resume = false a positive answer may leave the graph truncated.
TracedResult ContainsSubsetOfTraced(const Dataset& d, const QueryCursor& c,
                                    ItemView s, RangeSearchStats& stats,
                                    const MemoOptions& options = {});

// Explores the whole call graph: direct hits are recorded and the search
// continues with the rest of the range.
CallGraph TraceFull(const Dataset& d, const QueryCursor& c, ItemView s,
                    RangeSearchStats* stats = nullptr);

struct MemoizedAnswer {
  bool found = false;
  std::optional<std::size_t> witness;
};

// Answers whether row i has a proper subset among the rows after it by
// replaying `graph`, built for an earlier query sharing p leading items with
// row i. Nodes needing more than p items are re-run over their range clipped
// to rows after i. On return `graph` is the call graph for row i. Throws
// std::invalid_argument if `graph` is empty or truncated, or if p exceeds the
// common prefix of its query and row i.
MemoizedAnswer ContainsSubsetOfMemoized(const Dataset& d, std::size_t i,
                                        std::size_t p, CallGraph& graph,
                                        RangeSearchStats& stats,
                                        const MemoOptions& options = {},
                                        MemoCounters* counters = nullptr);

// Carries the graph of the last queried row from one query to the next.
class MemoState {
 public:
  MemoState(const Dataset& d, MemoOptions options);
  ~MemoState();

  // Queries row i against rows i+1.. , reusing the held graph when there
  // is one.
  MemoizedAnswer Query(std::size_t i, RangeSearchStats& stats);

  // Whether the next query will replay the held graph.
  bool has_graph() const { return has_graph_; }
  // Call graph of the most recent query, in execution order. Also
  // available when it cannot be reused.
  CallGraph last_graph() const;
  std::optional<std::size_t> prev() const { return prev_; }
  const MemoCounters& counters() const { return counters_; }

 private:
  const Dataset& d_;
  MemoOptions options_;
  std::optional<std::size_t> prev_;
  CallGraph graph_;
  bool has_graph_ = false;
  struct Summaries;
  std::unique_ptr<Summaries> sum_;
  MemoCounters counters_;
};

struct MemoizedResult {
  MinimalityFlags flags;
  RangeSearchStats stats;
  MemoCounters counters;
};

// Same flags as GetMinimalItemsetsLex, reusing call graphs between
// consecutive queries.
MemoizedResult GetMinimalItemsetsMemoized(const Dataset& d,
                                          const MemoOptions& options = {});

}  // namespace xset

#endif  // XSET_MEMO_H_
