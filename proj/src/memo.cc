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

#include "xset/memo.h"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "subset_search.h"

namespace xset {
namespace {

struct GraphRecorder {
  using Node = NodeId;
  static constexpr Node kNone = kNoNode;

  explicit GraphRecorder(CallGraph& g) : g(g) {}

  Node Open(const QueryCursor& c) {
    g.nodes.push_back(CallNode{c});
    return static_cast<Node>(g.nodes.size() - 1);
  }
  void OpenPending(Node at, const QueryCursor& c) {
    const Node p = Open(c);
    g.nodes[p].prefix_needed = kPendingNeed;
    g.nodes[at].next = p;
  }
  void SetNeed(Node n, std::size_t need) { g.nodes[n].prefix_needed = need; }
  void SetHit(Node n) { g.nodes[n].hit = true; }
  void Descend(Node n, Node child) { g.nodes[n].descend = child; }
  void Next(Node n, Node next) { g.nodes[n].next = next; }
  void Truncate() { g.truncated = true; }

  CallGraph& g;
};

// Runs a traced search from `c`, appending its nodes to `g`.
std::optional<std::size_t> TraceInto(const Dataset& d, const QueryCursor& c,
                                     ItemView s,
                                     const internal::SearchConfig& cfg,
                                     CallGraph& g, NodeId& first,
                                     RangeSearchStats& stats) {
  GraphRecorder rec(g);
  internal::SubsetSearch<GraphRecorder> search(d, s, cfg, rec, stats);
  return search.Run(c, first);
}

// Per-node summary of everything reachable from a node, itself included.
struct Summary {
  std::size_t need = 0;  // largest prefix_needed
  std::uint32_t nodes = 0;
  bool hit = false;
};

Summary Closure(const CallGraph& g, const std::vector<Summary>& sum,
                NodeId id) {
  const CallNode& v = g.nodes[id];
  Summary s{v.prefix_needed, 1, v.hit};
  for (NodeId c : {v.descend, v.next}) {
    if (c == kNoNode) continue;
    s.need = std::max(s.need, sum[c].need);
    s.nodes += sum[c].nodes;
    s.hit = s.hit || sum[c].hit;
  }
  return s;
}

// Fills summaries for nodes [from, size). Nodes in that range only point
// into it, and children have larger ids than parents.
void Summarize(const CallGraph& g, std::vector<Summary>& sum,
               std::size_t from) {
  sum.resize(g.size());
  for (std::size_t k = g.size(); k-- > from;) {
    sum[k] = Closure(g, sum, static_cast<NodeId>(k));
  }
}

// Renumbers the nodes reachable from the root in execution order (node,
// its descend subtree, then its continuation) and drops the rest.
void Compact(CallGraph& g, std::vector<Summary>* sum) {
  std::vector<NodeId> order;
  std::vector<NodeId> renamed(g.size(), kNoNode);
  if (g.root != kNoNode) {
    std::vector<NodeId> stack{g.root};
    while (!stack.empty()) {
      const NodeId id = stack.back();
      stack.pop_back();
      renamed[id] = static_cast<NodeId>(order.size());
      order.push_back(id);
      if (g.nodes[id].next != kNoNode) stack.push_back(g.nodes[id].next);
      if (g.nodes[id].descend != kNoNode) stack.push_back(g.nodes[id].descend);
    }
  }
  std::vector<CallNode> nodes;
  nodes.reserve(order.size());
  std::vector<Summary> sums;
  for (NodeId id : order) {
    CallNode v = g.nodes[id];
    if (v.descend != kNoNode) v.descend = renamed[v.descend];
    if (v.next != kNoNode) v.next = renamed[v.next];
    nodes.push_back(v);
    if (sum) sums.push_back((*sum)[id]);
  }
  g.nodes = std::move(nodes);
  if (g.root != kNoNode) g.root = 0;
  if (sum) *sum = std::move(sums);
}

// Updates a graph built for an earlier query, in place, into the graph of a
// query sharing `p` leading items with it. Subtrees whose nodes all need at
// most p items and hold no hit are kept without being visited; nodes
// needing more are re-run and their old subtrees left unreachable.
class Replayer {
 public:
  Replayer(const Dataset& d, std::size_t i, std::size_t p, CallGraph& g,
           std::vector<Summary>& sum, RangeSearchStats& stats,
           const MemoOptions& options, MemoCounters& counters)
      : d_(d),
        query_(d[i]),
        i_(i),
        p_(p),
        g_(g),
        sum_(sum),
        stats_(stats),
        options_(options),
        counters_(counters) {}

  // Replays the continuation chain starting at `id`; returns its new head.
  NodeId Chain(NodeId id) {
    NodeId head = kNoNode;
    NodeId prev = kNoNode;
    auto link = [&](NodeId n) {
      if (prev == kNoNode) {
        head = n;
      } else {
        g_.nodes[prev].next = n;
      }
    };
    const std::size_t mark = walked_.size();
    while (id != kNoNode) {
      if (Clean(id)) {
        counters_.nodes_reused += sum_[id].nodes;
        link(id);
        break;
      }
      if (Stopped()) {
        g_.truncated = true;
        link(kNoNode);
        break;
      }
      if (g_.nodes[id].prefix_needed > p_) {
        // Re-running from the entry state covers the continuation too.
        link(Reexecute(id));
        break;
      }
      link(id);
      prev = id;
      walked_.push_back(id);
      ++counters_.nodes_reused;
      const CallNode& v = g_.nodes[id];
      // The stored size test held for the old query; repeat it for this one.
      if (v.hit && query_.size() > v.entry.depth + 1 && !witness_) {
        witness_ = v.entry.begin;
      }
      if (v.descend != kNoNode) {
        if (Stopped()) {
          g_.nodes[id].descend = g_.nodes[id].next = kNoNode;
          g_.truncated = true;
          break;
        }
        const NodeId child = Chain(v.descend);
        g_.nodes[id].descend = child;
      }
      id = g_.nodes[id].next;
    }
    for (std::size_t k = walked_.size(); k-- > mark;) {
      sum_[walked_[k]] = Closure(g_, sum_, walked_[k]);
    }
    walked_.resize(mark);
    return head;
  }

  std::optional<std::size_t> witness() const { return witness_; }

 private:
  bool Stopped() const { return witness_ && !options_.frontier_resume; }

  bool Clean(NodeId id) const {
    return sum_[id].need <= p_ && (!sum_[id].hit || witness_);
  }

  NodeId Reexecute(NodeId id) {
    const QueryCursor entry = g_.nodes[id].entry;
    const QueryCursor c{std::max(entry.begin, i_ + 1), entry.end, entry.cursor,
                        entry.depth};
    if (c.begin > c.end) {
      ++counters_.subtrees_dropped;
      return kNoNode;
    }
    const auto from = static_cast<NodeId>(g_.size());
    if (witness_) {
      // The answer is known; leave the work pending for the next query.
      g_.nodes.push_back(CallNode{c, kPendingNeed});
      Summarize(g_, sum_, from);
      return from;
    }
    ++counters_.subtrees_reexecuted;
    internal::SearchConfig cfg;
    cfg.strategy = options_.search;
    cfg.keep_frontier = options_.frontier_resume;
    NodeId first = kNoNode;
    witness_ = TraceInto(d_, c, query_, cfg, g_, first, stats_);
    Summarize(g_, sum_, from);
    return first;
  }

  const Dataset& d_;
  ItemView query_;
  std::size_t i_;
  std::size_t p_;
  CallGraph& g_;
  std::vector<Summary>& sum_;
  RangeSearchStats& stats_;
  const MemoOptions& options_;
  MemoCounters& counters_;
  std::vector<NodeId> walked_;
  std::optional<std::size_t> witness_;
};

// Checks the preconditions and replays `graph` for row i in place.
MemoizedAnswer Replay(const Dataset& d, std::size_t i, std::size_t p,
                      CallGraph& graph, std::vector<Summary>& sum,
                      RangeSearchStats& stats, const MemoOptions& options,
                      MemoCounters& counters) {
  if (graph.empty()) throw std::invalid_argument("memoized graph is empty");
  if (graph.truncated) {
    throw std::invalid_argument("memoized graph is truncated");
  }
  const ItemView query = d[i];
  if (p > LongestCommonPrefix(graph.query, query)) {
    throw std::invalid_argument(
        "common prefix length exceeds the prefix shared with the memoized "
        "query");
  }
  // Every replayed cursor must stay inside the new query.
  p = std::min(p, query.size() - 1);
  Replayer replay(d, i, p, graph, sum, stats, options, counters);
  graph.root = replay.Chain(graph.root);
  graph.query.assign(query.begin(), query.end());
  const std::uint64_t live = graph.empty() ? 0 : sum[graph.root].nodes;
  counters.peak_graph_nodes = std::max(counters.peak_graph_nodes, live);
  return {replay.witness().has_value(), replay.witness()};
}

void CheckWitness(const Dataset& d, std::size_t i,
                  const std::optional<std::size_t>& w) {
  if (w && !IsProperSubset(d[*w], d[i])) {
    throw std::logic_error(
        "memoized search reported row " + std::to_string(*w) +
        " which is not a proper subset of row " + std::to_string(i));
  }
}

}  // namespace

CallGraph CallGraph::Restricted(std::size_t prefix_len) const {
  CallGraph out;
  out.query = query;
  auto keep = [&](NodeId id) {
    return id != kNoNode && !nodes[id].pending() &&
           nodes[id].entry.cursor + 1 < prefix_len;
  };
  // Children always follow their parent, so one forward pass suffices.
  std::vector<NodeId> remap(nodes.size(), kNoNode);
  if (keep(root)) {
    std::vector<bool> reachable(nodes.size(), false);
    reachable[root] = true;
    for (NodeId id = 0; id < nodes.size(); ++id) {
      if (!reachable[id]) continue;
      remap[id] = static_cast<NodeId>(out.nodes.size());
      CallNode copy = nodes[id];
      copy.descend = copy.next = kNoNode;
      out.nodes.push_back(copy);
      for (NodeId c : {nodes[id].descend, nodes[id].next}) {
        if (keep(c)) reachable[c] = true;
      }
    }
    for (NodeId id = 0; id < nodes.size(); ++id) {
      if (remap[id] == kNoNode) continue;
      CallNode& copy = out.nodes[remap[id]];
      if (keep(nodes[id].descend)) copy.descend = remap[nodes[id].descend];
      if (keep(nodes[id].next)) copy.next = remap[nodes[id].next];
    }
    out.root = 0;
  }
  return out;
}

std::string CallGraph::ToJson() const {
  auto child = [](NodeId c) -> nlohmann::json {
    return c == kNoNode ? nlohmann::json(nullptr) : nlohmann::json(c);
  };
  nlohmann::json nodes_json = nlohmann::json::array();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const CallNode& v = nodes[k];
    nlohmann::json rec = {
        {"id", k},
        {"b", v.entry.begin},
        {"e", v.entry.end},
        {"j", v.entry.cursor},
        {"d", v.entry.depth},
        {"t", v.hit},
        {"m", v.pending() ? nlohmann::json(nullptr)
                          : nlohmann::json(v.prefix_needed)},
        {"c1", child(v.descend)},
        {"c2", child(v.next)},
    };
    if (v.pending()) rec["pending"] = true;
    nodes_json.push_back(std::move(rec));
  }
  nlohmann::json out = {{"root", child(root)},
                        {"truncated", truncated},
                        {"query", query},
                        {"nodes", std::move(nodes_json)}};
  return out.dump();
}

std::optional<std::string> ValidateCallGraph(const CallGraph& g,
                                             const Dataset& d) {
  auto fail = [](std::size_t id, const std::string& what) {
    return std::optional<std::string>("node " + std::to_string(id) + ": " +
                                      what);
  };
  const ItemView s = g.query;
  if (g.root == kNoNode) {
    if (!g.nodes.empty()) return std::string("nodes without a root");
    return std::nullopt;
  }
  if (g.root != 0) return std::string("root is not the first node");
  std::vector<int> parents(g.size(), 0);
  for (std::size_t id = 0; id < g.size(); ++id) {
    const CallNode& v = g.nodes[id];
    const QueryCursor& c = v.entry;
    if (c.begin > c.end || c.end >= d.size()) return fail(id, "bad range");
    if (c.cursor >= s.size() || c.depth > c.cursor) {
      return fail(id, "bad cursor");
    }
    if (c.depth >= d.row_size(c.begin)) return fail(id, "range head too short");
    if (!v.pending()) {
      if (v.prefix_needed < c.cursor + 1 || v.prefix_needed > s.size() + 1) {
        return fail(id, "need out of bounds");
      }
      // The need is where NextItem stopped: the first query item at or
      // after the cursor that is not below the range head.
      if (v.prefix_needed <= s.size()) {
        const Item head = d.at(c.begin, c.depth);
        const std::size_t k = v.prefix_needed - 1;
        if (s[k] < head || (k > c.cursor && s[k - 1] >= head)) {
          return fail(id, "need exceeds the NextItem position");
        }
      }
    } else if (v.descend != kNoNode || v.next != kNoNode || v.hit) {
      return fail(id, "pending node with results");
    }
    if (v.hit) {
      if (v.descend != kNoNode) return fail(id, "hit node descends");
      if (d.row_size(c.begin) != c.depth + 1 ||
          !IsProperSubset(d[c.begin], s)) {
        return fail(id, "hit without a proper subset at the range head");
      }
    }
    if (v.descend != kNoNode) {
      if (v.descend <= id || v.descend >= g.size()) {
        return fail(id, "descend edge breaks execution order");
      }
      const QueryCursor& k = g.nodes[v.descend].entry;
      if (k.depth != c.depth + 1 || k.cursor <= c.cursor || k.begin < c.begin ||
          k.end > c.end) {
        return fail(id, "descend edge does not narrow the search");
      }
      ++parents[v.descend];
    }
    if (v.next != kNoNode) {
      if (v.next <= id || v.next >= g.size()) {
        return fail(id, "next edge breaks execution order");
      }
      const QueryCursor& k = g.nodes[v.next].entry;
      if (k.depth != c.depth || k.cursor < c.cursor || k.begin <= c.begin ||
          k.end != c.end) {
        return fail(id, "next edge does not advance the range");
      }
      ++parents[v.next];
    }
  }
  for (std::size_t id = 0; id < g.size(); ++id) {
    if (parents[id] != (id == 0 ? 0 : 1)) {
      return fail(id, "node is not reached exactly once");
    }
  }
  return std::nullopt;
}

TracedResult ContainsSubsetOfTraced(const Dataset& d, const QueryCursor& c,
                                    ItemView s, RangeSearchStats& stats,
                                    const MemoOptions& options) {
  TracedResult out;
  out.graph.query.assign(s.begin(), s.end());
  internal::SearchConfig cfg;
  cfg.strategy = options.search;
  cfg.keep_frontier = options.frontier_resume;
  out.witness = TraceInto(d, c, s, cfg, out.graph, out.graph.root, stats);
  return out;
}

CallGraph TraceFull(const Dataset& d, const QueryCursor& c, ItemView s,
                    RangeSearchStats* stats) {
  RangeSearchStats scratch;
  CallGraph g;
  g.query.assign(s.begin(), s.end());
  internal::SearchConfig cfg;
  cfg.stop_on_hit = false;
  TraceInto(d, c, s, cfg, g, g.root, stats ? *stats : scratch);
  return g;
}

MemoizedAnswer ContainsSubsetOfMemoized(const Dataset& d, std::size_t i,
                                        std::size_t p, CallGraph& graph,
                                        RangeSearchStats& stats,
                                        const MemoOptions& options,
                                        MemoCounters* counters) {
  MemoCounters scratch;
  std::vector<Summary> sum;
  Summarize(graph, sum, 0);
  const MemoizedAnswer answer = Replay(d, i, p, graph, sum, stats, options,
                                       counters ? *counters : scratch);
  Compact(graph, nullptr);
  return answer;
}

struct MemoState::Summaries {
  std::vector<Summary> of;
};

MemoState::MemoState(const Dataset& d, MemoOptions options)
    : d_(d), options_(options), sum_(std::make_unique<Summaries>()) {}

MemoState::~MemoState() = default;

MemoizedAnswer MemoState::Query(std::size_t i, RangeSearchStats& stats) {
  const std::size_t n = d_.size();
  MemoizedAnswer answer;
  if (!has_graph_) {
    ++counters_.fresh_queries;
    TracedResult traced = ContainsSubsetOfTraced(d_, {i + 1, n - 1, 0, 0},
                                                 d_[i], stats, options_);
    answer = {traced.witness.has_value(), traced.witness};
    graph_ = std::move(traced.graph);
    counters_.peak_graph_nodes =
        std::max<std::uint64_t>(counters_.peak_graph_nodes, graph_.size());
    sum_->of.clear();
  } else {
    ++counters_.memoized_queries;
    const std::size_t p = LongestCommonPrefix(d_[*prev_], d_[i]);
    answer = Replay(d_, i, p, graph_, sum_->of, stats, options_, counters_);
  }
  prev_ = i;
  has_graph_ = !graph_.empty() && !graph_.truncated &&
               (options_.frontier_resume || !answer.found);
  if (!has_graph_ && answer.found) ++counters_.graphs_discarded;
  if (has_graph_) {
    if (sum_->of.size() != graph_.size()) Summarize(graph_, sum_->of, 0);
    // Replaced subtrees stay in storage until they outweigh the live graph.
    const std::size_t live = sum_->of[graph_.root].nodes;
    if (graph_.size() > 2 * live + 1024) Compact(graph_, &sum_->of);
  }
  if (options_.verify_witness) CheckWitness(d_, i, answer.witness);
  return answer;
}

CallGraph MemoState::last_graph() const {
  CallGraph g = graph_;
  Compact(g, nullptr);
  return g;
}

MemoizedResult GetMinimalItemsetsMemoized(const Dataset& d,
                                          const MemoOptions& options) {
  RequireCanonical(d);
  MemoizedResult out{PrefixSubsumePass(d), {}, {}};
  MemoState state(d, options);
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (!out.flags[i]) continue;
    ++out.stats.subset_queries;
    if (state.Query(i, out.stats).found) out.flags[i] = false;
  }
  out.counters = state.counters();
  return out;
}

}  // namespace xset
