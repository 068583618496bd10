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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// nonzero if any criterion fails.
//
// Environment:
//   XSET_ACCEPT_SKIP_TREND=1  skip the large range-search trend run
//   XSET_ACCEPT_SCALING=1     also time P=4 against P=1 on 10^6 itemsets
//                             (informational; needs >= 4 hardware threads)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "test_support.h"
#include "xset/bench.h"
#include "xset/dataset_io.h"
#include "xset/generator.h"
#include "xset/lex.h"
#include "xset/memo.h"
#include "xset/oracle.h"
#include "xset/parallel.h"

namespace {

using namespace xset;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Acceptance datasets: n <= 200, alphabet <= 12, with duplicates, prefixes
// and extensions injected.
Dataset Fuzzed(std::mt19937_64& rng) {
  return testing::RandomFamily(rng, 200, 12);
}

Outcome WorkedExample() {
  const Dataset d = testing::ExampleFamily();
  const MinimalityFlags expected{false, false, false, true, true};
  std::vector<std::pair<std::string, MinimalityFlags>> runs = {
      {"naive", NaiveMinimal(d)},
      {"lex", GetMinimalItemsetsLex(d).flags},
      {"memo", GetMinimalItemsetsMemoized(d).flags},
      {"par4", GetMinimalItemsetsParallel(d, 4).flags},
  };
  MemoOptions frontier;
  frontier.frontier_resume = true;
  runs.push_back(
      {"memo-frontier", GetMinimalItemsetsMemoized(d, frontier).flags});
  for (const auto& [name, flags] : runs) {
    if (flags != expected) return {false, name + " differs"};
  }
  return {true, "minimal = {bd, c} from naive, lex, memo, memo-frontier, par4"};
}

Outcome OracleDifferential() {
  std::mt19937_64 rng(20260901);
  const int kDatasets = 1000;
  MemoOptions frontier;
  frontier.frontier_resume = true;
  for (int t = 0; t < kDatasets; ++t) {
    const Dataset d = Fuzzed(rng);
    const MinimalityFlags expected = NaiveMinimal(d);
    const std::vector<std::pair<const char*, MinimalityFlags>> runs = {
        {"lex", GetMinimalItemsetsLex(d).flags},
        {"memo", GetMinimalItemsetsMemoized(d).flags},
        {"memo-frontier", GetMinimalItemsetsMemoized(d, frontier).flags},
        {"par", GetMinimalItemsetsParallel(d, 3).flags},
    };
    for (const auto& [name, flags] : runs) {
      if (auto k = FirstDifference(expected, flags)) {
        return {false, std::string(name) + " differs on dataset " +
                           std::to_string(t) + " at row " + std::to_string(*k)};
      }
    }
  }
  return {true, std::to_string(kDatasets) + " datasets, 0 mismatches"};
}

bool SameRestriction(const CallGraph& a, const CallGraph& b) {
  if (a.size() != b.size() || a.root != b.root) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const CallNode& x = a.nodes[k];
    const CallNode& y = b.nodes[k];
    if (!(x.entry == y.entry) || x.descend != y.descend || x.next != y.next) {
      return false;
    }
  }
  return true;
}

Outcome SharedPrefixStructure() {
  std::mt19937_64 rng(20260902);
  // Triples with an empty restriction compare nothing; draw until enough
  // have at least one node.
  const int kTriples = 150;
  int nonempty = 0;
  int drawn = 0;
  std::size_t nodes = 0;
  while (nonempty < kTriples) {
    Dataset d;
    while (d.size() < 2) d = Fuzzed(rng);
    // S is a dataset row; T keeps a random prefix of it and continues
    // with random larger items.
    const ItemView row = d[rng() % d.size()];
    const std::vector<Item> s(row.begin(), row.end());
    const std::size_t keep = rng() % (s.size() + 1);
    std::vector<Item> u(s.begin(), s.begin() + keep);
    for (Item x = keep ? u.back() + 1 : 1; x <= 12; ++x) {
      if (std::bernoulli_distribution(0.5)(rng)) u.push_back(x);
    }
    if (u.empty() || u == s) continue;
    ++drawn;
    const std::size_t p = LongestCommonPrefix(s, u);
    const QueryCursor c{rng() % d.size(), d.size() - 1, 0, 0};
    const CallGraph gs = TraceFull(d, c, s).Restricted(p);
    const CallGraph gt = TraceFull(d, c, u).Restricted(p);
    if (!SameRestriction(gs, gt)) {
      return {false, "triple " + std::to_string(drawn) +
                         " differs (|P| = " + std::to_string(p) + ")"};
    }
    nonempty += !gs.empty();
    nodes += gs.size();
  }
  return {true, std::to_string(drawn) + " triples, " +
                    std::to_string(nonempty) +
                    " with non-empty restrictions, " + std::to_string(nodes) +
                    " nodes compared"};
}

Outcome RangeSearchTrend() {
  if (const char* skip = std::getenv("XSET_ACCEPT_SKIP_TREND");
      skip && std::string(skip) == "1") {
    return {false, "skipped by XSET_ACCEPT_SKIP_TREND"};
  }
  const double grid[] = {0.5, 0.7, 0.9, 0.95};
  std::ostringstream detail;
  detail.precision(3);
  // Judged on the default policy only. Frontier-resume ratios are printed
  // alongside for diagnosis.
  MemoOptions frontier;
  frontier.frontier_resume = true;
  std::ostringstream resumed;
  resumed.precision(3);
  bool pass = true;
  double prev = 0;
  for (double f_min : grid) {
    const Dataset d = Generate({100000, 140, f_min, 7}).data;
    const auto lex = GetMinimalItemsetsLex(d);
    const auto memo = GetMinimalItemsetsMemoized(d);
    if (memo.flags != lex.flags) return {false, "memo differs from lex"};
    const auto alt = GetMinimalItemsetsMemoized(d, frontier);
    if (alt.flags != lex.flags) return {false, "memo-frontier differs"};
    const auto lex_rs = static_cast<double>(lex.stats.range_searches());
    const double ratio =
        lex_rs / static_cast<double>(memo.stats.range_searches());
    detail << (prev == 0 ? "" : ", ") << f_min << ":" << ratio;
    resumed << (prev == 0 ? "" : ", ") << f_min << ":"
            << lex_rs / static_cast<double>(alt.stats.range_searches());
    pass = pass && ratio >= 1.0 && ratio > prev;
    prev = ratio;
  }
  pass = pass && prev >= 5.0;
  detail << " (lex/memo range searches, need >=1, increasing, >=5 at 0.95;"
         << " frontier-resume, not judged: " << resumed.str() << ")";
  return {pass, detail.str()};
}

Outcome ParallelEquivalence(std::string& scaling) {
  std::mt19937_64 rng(20260905);
  const int kDatasets = 300;
  for (int t = 0; t < kDatasets; ++t) {
    const Dataset d = Fuzzed(rng);
    const MinimalityFlags expected = NaiveMinimal(d);
    for (std::size_t workers : {1, 2, 4, 8}) {
      if (GetMinimalItemsetsParallel(d, workers).flags != expected) {
        return {false, "P=" + std::to_string(workers) + " differs on dataset " +
                           std::to_string(t)};
      }
    }
  }

  const unsigned cores = std::thread::hardware_concurrency();
  const char* opt_in = std::getenv("XSET_ACCEPT_SCALING");
  if (!opt_in || std::string(opt_in) != "1") {
    scaling = "not measured (set XSET_ACCEPT_SCALING=1; " +
              std::to_string(cores) + " hardware thread(s) here)";
  } else if (cores < 4) {
    scaling = "not measured: " + std::to_string(cores) +
              " hardware thread(s), needs >= 4";
  } else {
    const Dataset d = Generate({1000000, 100, 0.7, 11}).data;
    auto time = [&](std::size_t workers) {
      const auto start = Clock::now();
      GetMinimalItemsetsParallel(d, workers);
      return std::chrono::duration<double>(Clock::now() - start).count();
    };
    const double one = time(1);
    const double four = time(4);
    std::ostringstream s;
    s.precision(3);
    s << "P=4 speedup " << one / four << "x (" << one << " s -> " << four
      << " s), target >= 2.0: " << (one / four >= 2.0 ? "met" : "not met");
    scaling = s.str();
  }
  return {true, "P in {1,2,4,8} on " + std::to_string(kDatasets) +
                    " datasets, 0 mismatches"};
}

Outcome PrefixPass() {
  std::mt19937_64 rng(20260906);
  const int kDatasets = 500;
  for (int t = 0; t < kDatasets; ++t) {
    const Dataset d = Fuzzed(rng);
    const MinimalityFlags flags = PrefixSubsumePass(d);
    for (std::size_t i = 0; i < d.size(); ++i) {
      bool cleared = false;
      for (std::size_t j = 0; j < i && !cleared; ++j) {
        const ItemView a = d[j];
        const ItemView b = d[i];
        cleared =
            a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
      }
      if (flags[i] == cleared) {
        return {false,
                "dataset " + std::to_string(t) + " row " + std::to_string(i)};
      }
    }
  }
  return {true, std::to_string(kDatasets) + " datasets match brute force"};
}

Outcome BinaryRoundTrip() {
  std::mt19937_64 rng(20260907);
  const int kDatasets = 100;
  for (int t = 0; t < kDatasets; ++t) {
    const Dataset d = Fuzzed(rng);
    std::ostringstream first;
    WriteBinary(d, first);
    std::istringstream in(first.str());
    const Dataset back = ParseBinary(in);
    std::ostringstream second;
    WriteBinary(back, second);
    if (!(back == d) || first.str() != second.str()) {
      return {false, "dataset " + std::to_string(t)};
    }
  }
  return {true, std::to_string(kDatasets) + " datasets byte-identical"};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name,
                    const std::function<Outcome()>& run) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] criterion %d  %-28s %s  (%.1f s)\n",
                o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), s);
    std::fflush(stdout);
    failures += !o.pass;
  };

  std::string scaling;
  report(1, "worked example", WorkedExample);
  report(2, "oracle differential", OracleDifferential);
  report(3, "shared-prefix structure", SharedPrefixStructure);
  report(4, "range-search reduction", RangeSearchTrend);
  report(5, "parallel equivalence",
         [&] { return ParallelEquivalence(scaling); });
  std::printf("[INFO] criterion 5  scaling: %s\n", scaling.c_str());
  report(6, "prefix pass", PrefixPass);
  report(7, "binary round trip", BinaryRoundTrip);
  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK",
              failures);
  return failures ? 1 : 0;
}
