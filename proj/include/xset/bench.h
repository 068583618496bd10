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

#ifndef XSET_BENCH_H_
#define XSET_BENCH_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "xset/itemset.h"
#include "xset/lex.h"
#include "xset/memo.h"

namespace xset {

enum class Engine { kNaive, kLex, kMemo, kParallel };

// Accepts naive, lex, memo and par. Throws std::invalid_argument otherwise.
Engine ParseEngine(const std::string& name);
std::vector<Engine> ParseEngineList(const std::string& csv);
const char* EngineName(Engine e);

struct EngineConfig {
  std::size_t threads = 1;
  SearchStrategy search = SearchStrategy::kBinary;
  bool frontier_resume = false;
  bool verify_witness = false;
};

struct EngineRun {
  Engine engine = Engine::kLex;
  MinimalityFlags flags;
  RangeSearchStats stats;
  double wall_ms = 0;
  std::optional<MemoCounters> memo;
};

// Runs one engine on a canonical dataset and times it.
EngineRun RunEngine(Engine engine, const Dataset& d, const EngineConfig& cfg);

// Counter fields plus range_searches, wall_ms and result_count.
nlohmann::json StatsToJson(const RangeSearchStats& stats, double wall_ms,
                           std::size_t result_count);

// First position where the flags differ (or the shorter length).
std::optional<std::size_t> FirstDifference(const MinimalityFlags& a,
                                           const MinimalityFlags& b);

struct EngineMeasurement {
  Engine engine = Engine::kLex;
  std::vector<double> runs_ms;
  double mean_ms = 0;
  RangeSearchStats stats;  // from the last repetition
  std::size_t result_count = 0;
  double speedup = 1;             // lex mean / this mean
  double range_search_ratio = 1;  // lex range searches / these
};

struct BenchmarkReport {
  std::string label;
  std::size_t itemsets = 0;
  std::size_t total_items = 0;
  std::size_t threads = 1;
  double prepare_ms = 0;  // parse/generate + canonicalize, not in speedups
  std::vector<EngineMeasurement> engines;

  nlohmann::json ToJson() const;
  std::string ToTable() const;
};

// Times each engine `reps` times on `d`. The lex engine is always measured
// as the baseline. Throws std::runtime_error if engines disagree.
BenchmarkReport RunBenchmark(const Dataset& d, std::vector<Engine> engines,
                             const EngineConfig& cfg, std::size_t reps,
                             std::string label, double prepare_ms = 0);

}  // namespace xset

#endif  // XSET_BENCH_H_
