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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "test_support.h"
#include "xset/oracle.h"

namespace xset {
namespace {

using testing::ExampleFamily;
using testing::Letters;
using testing::Rows;

// Nodes equal field by field, children by id.
void ExpectSameGraph(const CallGraph& a, const CallGraph& b,
                     bool compare_results = true) {
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a.root, b.root);
  for (std::size_t k = 0; k < a.size(); ++k) {
    SCOPED_TRACE("node " + std::to_string(k));
    EXPECT_EQ(a.nodes[k].entry, b.nodes[k].entry);
    EXPECT_EQ(a.nodes[k].descend, b.nodes[k].descend);
    EXPECT_EQ(a.nodes[k].next, b.nodes[k].next);
    if (compare_results) {
      EXPECT_EQ(a.nodes[k].prefix_needed, b.nodes[k].prefix_needed);
      EXPECT_EQ(a.nodes[k].hit, b.nodes[k].hit);
    }
  }
}

QueryCursor Cursor(std::size_t b, std::size_t e, std::size_t j,
                   std::size_t depth) {
  return {b, e, j, depth};
}

TEST(ContainsSubsetOfTraced, FirstRowOfExample) {
  const Dataset d = ExampleFamily();
  RangeSearchStats st;
  const TracedResult r = ContainsSubsetOfTraced(d, {1, 4, 0, 0}, d[0], st);
  EXPECT_EQ(r.witness, 4u);
  const CallGraph& g = r.graph;
  EXPECT_EQ(ValidateCallGraph(g, d), std::nullopt);
  EXPECT_FALSE(g.truncated);
  ASSERT_EQ(g.size(), 6u);
  // Execution order: the a-group descends twice, then b, its descend, c.
  EXPECT_EQ(g.nodes[0].entry, Cursor(1, 4, 0, 0));
  EXPECT_EQ(g.nodes[1].entry, Cursor(1, 2, 1, 1));
  EXPECT_EQ(g.nodes[2].entry, Cursor(1, 2, 2, 2));
  EXPECT_EQ(g.nodes[3].entry, Cursor(3, 4, 0, 0));
  EXPECT_EQ(g.nodes[4].entry, Cursor(3, 3, 2, 1));
  EXPECT_EQ(g.nodes[5].entry, Cursor(4, 4, 1, 0));
  EXPECT_EQ(g.nodes[0].descend, 1u);
  EXPECT_EQ(g.nodes[0].next, 3u);
  EXPECT_EQ(g.nodes[1].descend, 2u);
  EXPECT_EQ(g.nodes[3].descend, 4u);
  EXPECT_EQ(g.nodes[3].next, 5u);
  EXPECT_TRUE(g.nodes[5].hit);
  EXPECT_EQ(g.nodes[2].prefix_needed, 4u);  // ran off the end of abc
  EXPECT_EQ(g.nodes[5].prefix_needed, 3u);
}

TEST(ContainsSubsetOfTraced, MinimalRowGivesSingleNode) {
  const Dataset d = ExampleFamily();
  RangeSearchStats st;
  const TracedResult r = ContainsSubsetOfTraced(d, {4, 4, 0, 0}, d[3], st);
  EXPECT_EQ(r.witness, std::nullopt);
  ASSERT_EQ(r.graph.size(), 1u);
  const CallNode& v = r.graph.nodes[0];
  EXPECT_FALSE(v.hit);
  EXPECT_EQ(v.descend, kNoNode);
  EXPECT_EQ(v.next, kNoNode);
  EXPECT_EQ(v.prefix_needed, 2u);
}

TEST(ContainsSubsetOfTraced, AgreesWithPlainSearch) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 150; ++t) {
    const Dataset d = testing::RandomFamily(rng, 120, 10);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      const QueryCursor c{i + 1, d.size() - 1, 0, 0};
      RangeSearchStats plain, traced, full;
      const auto w = FindProperSubset(d, c, d[i], plain);
      for (bool frontier : {false, true}) {
        MemoOptions opt;
        opt.frontier_resume = frontier;
        RangeSearchStats st;
        const TracedResult r = ContainsSubsetOfTraced(d, c, d[i], st, opt);
        ASSERT_EQ(r.witness, w);
        EXPECT_EQ(st, plain);
        EXPECT_EQ(ValidateCallGraph(r.graph, d), std::nullopt);
        if (frontier) {
          EXPECT_FALSE(r.graph.truncated);
        }
        // Each executed node ran at least one search.
        const auto executed =
            std::count_if(r.graph.nodes.begin(), r.graph.nodes.end(),
                          [](const CallNode& v) { return !v.pending(); });
        EXPECT_LE(static_cast<std::uint64_t>(executed), st.total_searches());
      }
      const CallGraph g = TraceFull(d, c, d[i], &full);
      EXPECT_EQ(ValidateCallGraph(g, d), std::nullopt);
      EXPECT_FALSE(g.truncated);
      EXPECT_LE(g.size(), full.total_searches());
      EXPECT_GE(full.total_searches(), plain.total_searches());
    }
  }
}

TEST(ValidateCallGraph, CatchesBrokenGraphs) {
  const Dataset d = ExampleFamily();
  RangeSearchStats st;
  const CallGraph good =
      ContainsSubsetOfTraced(d, {1, 4, 0, 0}, d[0], st).graph;
  ASSERT_EQ(ValidateCallGraph(good, d), std::nullopt);

  CallGraph g = good;
  g.nodes[1].descend = 0;
  EXPECT_NE(ValidateCallGraph(g, d), std::nullopt);

  g = good;
  g.nodes[3].hit = true;  // b-group head bd is no subset of abc
  EXPECT_NE(ValidateCallGraph(g, d), std::nullopt);

  g = good;
  g.nodes[0].prefix_needed = 3;
  EXPECT_NE(ValidateCallGraph(g, d), std::nullopt);

  g = good;
  g.nodes[3].next = 2;
  EXPECT_NE(ValidateCallGraph(g, d), std::nullopt);
}

TEST(CallGraph, JsonListsNodes) {
  const Dataset d = ExampleFamily();
  RangeSearchStats st;
  const CallGraph g = ContainsSubsetOfTraced(d, {4, 4, 0, 0}, d[3], st).graph;
  EXPECT_EQ(g.ToJson(),
            R"({"nodes":[{"b":4,"c1":null,"c2":null,"d":0,"e":4,"id":0,"j":0,)"
            R"("m":2,"t":false}],"query":[2,4],"root":0,"truncated":false})");
}

// Rows (1,2,4), (1,2,5), (3,6). The first query fails with a complete graph
// that the second, sharing two items, reuses.
TEST(ContainsSubsetOfMemoized, ReusesSharedPrefix) {
  const Dataset d = Rows({{1, 2, 4}, {1, 2, 5}, {3, 6}});
  RangeSearchStats st;
  TracedResult first = ContainsSubsetOfTraced(d, {1, 2, 0, 0}, d[0], st);
  EXPECT_EQ(first.witness, std::nullopt);
  CallGraph g = first.graph;
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.nodes[0].entry, Cursor(1, 2, 0, 0));
  EXPECT_EQ(g.nodes[1].entry, Cursor(1, 1, 1, 1));
  EXPECT_EQ(g.nodes[2].entry, Cursor(1, 1, 2, 2));
  EXPECT_EQ(g.nodes[3].entry, Cursor(2, 2, 0, 0));
  EXPECT_EQ(g.nodes[0].prefix_needed, 1u);
  EXPECT_EQ(g.nodes[1].prefix_needed, 2u);
  EXPECT_EQ(g.nodes[2].prefix_needed, 4u);
  EXPECT_EQ(g.nodes[3].prefix_needed, 3u);
  EXPECT_EQ(st.next_item_calls, 2u);
  EXPECT_EQ(st.next_begin_range_calls, 1u);
  EXPECT_EQ(st.next_end_range_calls, 2u);

  RangeSearchStats reuse;
  MemoCounters ctr;
  const MemoizedAnswer a =
      ContainsSubsetOfMemoized(d, 1, 2, g, reuse, {}, &ctr);
  EXPECT_FALSE(a.found);
  EXPECT_EQ(ctr.nodes_reused, 2u);
  EXPECT_EQ(ctr.subtrees_dropped, 1u);     // row 1 only, now excluded
  EXPECT_EQ(ctr.subtrees_reexecuted, 1u);  // the (3,6) group
  EXPECT_EQ(reuse.next_item_calls, 1u);
  EXPECT_EQ(reuse.next_begin_range_calls, 1u);
  EXPECT_EQ(reuse.next_end_range_calls, 0u);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.nodes[1].descend, kNoNode);
  EXPECT_EQ(g.nodes[2].entry, Cursor(2, 2, 0, 0));
  EXPECT_EQ(ValidateCallGraph(g, d), std::nullopt);

  // Same work as a fresh query of the second row.
  RangeSearchStats fresh;
  EXPECT_FALSE(ContainsSubsetOf(d, {2, 2, 0, 0}, d[1], fresh));
  EXPECT_EQ(reuse, fresh);

  EXPECT_EQ(GetMinimalItemsetsMemoized(d).flags, MinimalityFlags(3, true));
}

TEST(ContainsSubsetOfMemoized, ZeroPrefixRerunsEverything) {
  std::mt19937_64 rng(52);
  int compared = 0;
  for (int t = 0; t < 200; ++t) {
    const Dataset d = testing::RandomFamily(rng, 80, 10);
    if (d.size() < 3) continue;
    const std::size_t n = d.size();
    const std::size_t i0 = rng() % (n - 2);
    const std::size_t i = i0 + 1 + rng() % (n - 2 - i0);
    MemoOptions opt;
    opt.frontier_resume = true;
    RangeSearchStats st;
    CallGraph g =
        ContainsSubsetOfTraced(d, {i0 + 1, n - 1, 0, 0}, d[i0], st, opt).graph;
    RangeSearchStats replayed, fresh;
    const MemoizedAnswer a =
        ContainsSubsetOfMemoized(d, i, 0, g, replayed, opt);
    const TracedResult r =
        ContainsSubsetOfTraced(d, {i + 1, n - 1, 0, 0}, d[i], fresh, opt);
    EXPECT_EQ(a.witness, r.witness);
    EXPECT_EQ(replayed, fresh);
    ExpectSameGraph(g, r.graph);
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

// abdf after abde: the shared abd part is replayed, the hit on bd is reused
// and no search runs.
TEST(ContainsSubsetOfMemoized, ReusesHitAcrossSharedPrefix) {
  const Dataset d = ExampleFamily();
  for (bool frontier : {false, true}) {
    SCOPED_TRACE(frontier ? "frontier" : "default");
    CallGraph g = TraceFull(d, {2, 4, 0, 0}, d[1]);
    ASSERT_EQ(g.size(), 7u);
    EXPECT_TRUE(g.nodes[5].hit);
    MemoOptions opt;
    opt.frontier_resume = frontier;
    RangeSearchStats st;
    MemoCounters ctr;
    const MemoizedAnswer a =
        ContainsSubsetOfMemoized(d, 2, 3, g, st, opt, &ctr);
    EXPECT_TRUE(a.found);
    EXPECT_EQ(a.witness, 3u);
    EXPECT_EQ(st, RangeSearchStats{});
    EXPECT_EQ(ctr.subtrees_dropped, 1u);  // the f-column node under abd
    EXPECT_EQ(ctr.subtrees_reexecuted, 0u);
    // The c node after the hit needs only the shared prefix and is kept.
    EXPECT_FALSE(g.truncated);
    EXPECT_EQ(g.size(), 6u);
    EXPECT_EQ(ValidateCallGraph(g, d), std::nullopt);
  }
}

TEST(ContainsSubsetOfMemoized, RejectsBadArguments) {
  const Dataset d = ExampleFamily();
  RangeSearchStats st;
  CallGraph empty;
  EXPECT_THROW(ContainsSubsetOfMemoized(d, 1, 0, empty, st),
               std::invalid_argument);
  CallGraph truncated = ContainsSubsetOfTraced(d, {1, 4, 0, 0}, d[0], st).graph;
  truncated.truncated = true;
  EXPECT_THROW(ContainsSubsetOfMemoized(d, 1, 0, truncated, st),
               std::invalid_argument);
  // abc and abde share two items, not three.
  CallGraph g = TraceFull(d, {1, 4, 0, 0}, d[0]);
  EXPECT_THROW(ContainsSubsetOfMemoized(d, 1, 3, g, st), std::invalid_argument);
  EXPECT_NO_THROW(ContainsSubsetOfMemoized(d, 1, 2, g, st));
}

// Query pairs sharing a prefix: full graphs agree on every node entered
// before the end of the shared prefix.
TEST(TraceFull, SharedPrefixGivesSameRestrictedGraph) {
  const Dataset d = ExampleFamily();
  const CallGraph s = TraceFull(d, {2, 4, 0, 0}, d[1]);
  const CallGraph t = TraceFull(d, {2, 4, 0, 0}, d[2]);
  const CallGraph rs = s.Restricted(3);
  EXPECT_EQ(rs.size(), 4u);  // entered at the a, b and c columns
  ExpectSameGraph(rs, t.Restricted(3), false);
  EXPECT_TRUE(s.Restricted(0).empty());
  EXPECT_TRUE(t.Restricted(0).empty());

  std::mt19937_64 rng(53);
  std::size_t nonempty = 0;
  for (int t = 0; t < 300; ++t) {
    const Dataset data = testing::RandomFamily(rng, 120, 10);
    if (data.size() < 2) continue;
    const std::size_t alphabet = 10;
    auto a = testing::RandomItemset(rng, alphabet, 0.5);
    const std::size_t keep = rng() % (a.size() + 1);
    std::vector<Item> b(a.begin(), a.begin() + keep);
    const Item floor = keep ? b.back() + 1 : 1;
    for (Item x = floor; x <= alphabet; ++x) {
      if (std::bernoulli_distribution(0.5)(rng)) b.push_back(x);
    }
    if (b.empty()) b.push_back(floor <= alphabet ? floor : 1);
    if (b == a) continue;
    const std::size_t p = LongestCommonPrefix(a, b);
    const QueryCursor c{rng() % data.size(), data.size() - 1, 0, 0};
    const CallGraph ga = TraceFull(data, c, a);
    const CallGraph gb = TraceFull(data, c, b);
    ASSERT_EQ(ValidateCallGraph(ga, data), std::nullopt);
    const CallGraph ra = ga.Restricted(p);
    ExpectSameGraph(ra, gb.Restricted(p), false);
    nonempty += !ra.empty();
  }
  EXPECT_GT(nonempty, 50u);
}

TEST(GetMinimalItemsetsMemoized, Examples) {
  const auto r = GetMinimalItemsetsMemoized(ExampleFamily());
  EXPECT_EQ(r.flags, MinimalityFlags({false, false, false, true, true}));
  const auto single = GetMinimalItemsetsMemoized(Rows({{3, 9}}));
  EXPECT_EQ(single.flags, MinimalityFlags({true}));
  EXPECT_EQ(single.stats, RangeSearchStats{});
  EXPECT_EQ(single.counters.fresh_queries + single.counters.memoized_queries,
            0u);
  EXPECT_THROW(GetMinimalItemsetsMemoized(Rows({{2}, {1}})),
               std::invalid_argument);
}

TEST(GetMinimalItemsetsMemoized, MatchesOracleAndLex) {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 300; ++t) {
    const Dataset d = testing::RandomFamily(rng, 200, 12);
    const MinimalityFlags expected = NaiveMinimal(d);
    const auto lex = GetMinimalItemsetsLex(d);
    ASSERT_EQ(lex.flags, expected);
    for (bool frontier : {false, true}) {
      MemoOptions opt;
      opt.frontier_resume = frontier;
      opt.verify_witness = true;
      const auto memo = GetMinimalItemsetsMemoized(d, opt);
      ASSERT_EQ(memo.flags, expected)
          << "dataset " << t << " frontier " << frontier;
      EXPECT_EQ(memo.stats.subset_queries, lex.stats.subset_queries);
      EXPECT_LE(memo.counters.peak_graph_nodes, d.total_items());
    }
  }
}

// Every graph the engine holds is well formed.
TEST(MemoState, GraphsStayValid) {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 100; ++t) {
    const Dataset d = testing::RandomFamily(rng, 120, 10);
    for (bool frontier : {false, true}) {
      MemoOptions opt;
      opt.frontier_resume = frontier;
      const MinimalityFlags flags = PrefixSubsumePass(d);
      MemoState state(d, opt);
      for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (!flags[i]) continue;
        RangeSearchStats st;
        state.Query(i, st);
        const CallGraph g = state.last_graph();
        ASSERT_EQ(ValidateCallGraph(g, d), std::nullopt)
            << "dataset " << t << " row " << i;
        EXPECT_LE(g.size(), d.total_items());
        if (state.has_graph()) {
          EXPECT_FALSE(g.truncated);
        }
      }
    }
  }
}

// Fixed-size distinct rows form an antichain: every query fails, graphs are
// never truncated, and reuse can only save range searches.
TEST(GetMinimalItemsetsMemoized, NeverSearchesMoreWhenAllQueriesFail) {
  std::mt19937_64 rng(56);
  for (int t = 0; t < 200; ++t) {
    const std::size_t alphabet = 6 + rng() % 8;
    const std::size_t k = 1 + rng() % 4;
    std::vector<std::vector<Item>> rows;
    const std::size_t n = rng() % 150;
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Item> all(alphabet);
      for (std::size_t x = 0; x < alphabet; ++x) all[x] = Item(x + 1);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(k);
      std::sort(all.begin(), all.end());
      rows.push_back(all);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    const Dataset d = Rows(rows);
    const auto lex = GetMinimalItemsetsLex(d);
    const auto memo = GetMinimalItemsetsMemoized(d);
    ASSERT_EQ(memo.flags, MinimalityFlags(d.size(), true));
    EXPECT_EQ(memo.counters.graphs_discarded, 0u);
    EXPECT_LE(memo.stats.range_searches(), lex.stats.range_searches())
        << "dataset " << t;
  }
}

}  // namespace
}  // namespace xset
