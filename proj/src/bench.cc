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

#include "xset/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "xset/oracle.h"
#include "xset/parallel.h"

namespace xset {

Engine ParseEngine(const std::string& name) {
  if (name == "naive") return Engine::kNaive;
  if (name == "lex") return Engine::kLex;
  if (name == "memo") return Engine::kMemo;
  if (name == "par") return Engine::kParallel;
  throw std::invalid_argument("unknown engine '" + name +
                              "' (expected naive, lex, memo or par)");
}

std::vector<Engine> ParseEngineList(const std::string& csv) {
  std::vector<Engine> out;
  std::stringstream ss(csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (!name.empty()) out.push_back(ParseEngine(name));
  }
  if (out.empty()) throw std::invalid_argument("no engines given");
  return out;
}

const char* EngineName(Engine e) {
  switch (e) {
    case Engine::kNaive:
      return "naive";
    case Engine::kLex:
      return "lex";
    case Engine::kMemo:
      return "memo";
    case Engine::kParallel:
      return "par";
  }
  return "?";
}

EngineRun RunEngine(Engine engine, const Dataset& d, const EngineConfig& cfg) {
  RequireCanonical(d);
  EngineRun run;
  run.engine = engine;
  const auto start = std::chrono::steady_clock::now();
  switch (engine) {
    case Engine::kNaive:
      run.flags = NaiveMinimal(d);
      break;
    case Engine::kLex: {
      auto r = GetMinimalItemsetsLex(d, {cfg.search, cfg.verify_witness});
      run.flags = std::move(r.flags);
      run.stats = r.stats;
      break;
    }
    case Engine::kMemo: {
      MemoOptions opt;
      opt.search = cfg.search;
      opt.frontier_resume = cfg.frontier_resume;
      opt.verify_witness = cfg.verify_witness;
      auto r = GetMinimalItemsetsMemoized(d, opt);
      run.flags = std::move(r.flags);
      run.stats = r.stats;
      run.memo = r.counters;
      break;
    }
    case Engine::kParallel: {
      ParallelOptions opt;
      opt.search = cfg.search;
      auto r = GetMinimalItemsetsParallel(d, cfg.threads, opt);
      run.flags = std::move(r.flags);
      run.stats = r.stats;
      break;
    }
  }
  run.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return run;
}

nlohmann::json StatsToJson(const RangeSearchStats& stats, double wall_ms,
                           std::size_t result_count) {
  return {
      {"next_item_calls", stats.next_item_calls},
      {"next_begin_range_calls", stats.next_begin_range_calls},
      {"next_end_range_calls", stats.next_end_range_calls},
      {"subset_queries", stats.subset_queries},
      {"range_searches", stats.range_searches()},
      {"wall_ms", wall_ms},
      {"result_count", result_count},
  };
}

std::optional<std::size_t> FirstDifference(const MinimalityFlags& a,
                                           const MinimalityFlags& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] != b[k]) return k;
  }
  if (a.size() != b.size()) return n;
  return std::nullopt;
}

BenchmarkReport RunBenchmark(const Dataset& d, std::vector<Engine> engines,
                             const EngineConfig& cfg, std::size_t reps,
                             std::string label, double prepare_ms) {
  if (reps == 0) throw std::invalid_argument("reps must be >= 1");
  engines.erase(std::remove(engines.begin(), engines.end(), Engine::kLex),
                engines.end());
  engines.insert(engines.begin(), Engine::kLex);

  BenchmarkReport report;
  report.label = std::move(label);
  report.itemsets = d.size();
  report.total_items = d.total_items();
  report.threads = cfg.threads;
  report.prepare_ms = prepare_ms;

  MinimalityFlags baseline;
  for (Engine e : engines) {
    EngineMeasurement m;
    m.engine = e;
    for (std::size_t r = 0; r < reps; ++r) {
      EngineRun run = RunEngine(e, d, cfg);
      m.runs_ms.push_back(run.wall_ms);
      m.stats = run.stats;
      m.result_count = CountRetained(run.flags);
      if (e == Engine::kLex && r == 0) {
        baseline = std::move(run.flags);
      } else if (auto k = FirstDifference(baseline, run.flags)) {
        throw std::runtime_error(std::string("engine ") + EngineName(e) +
                                 " disagrees with lex at row " +
                                 std::to_string(*k));
      }
    }
    double sum = 0;
    for (double ms : m.runs_ms) sum += ms;
    m.mean_ms = sum / static_cast<double>(reps);
    report.engines.push_back(std::move(m));
  }
  const EngineMeasurement& lex = report.engines.front();
  for (auto& m : report.engines) {
    m.speedup = m.mean_ms > 0 ? lex.mean_ms / m.mean_ms : 1.0;
    const double mine = static_cast<double>(m.stats.range_searches());
    const double base = static_cast<double>(lex.stats.range_searches());
    m.range_search_ratio = mine > 0 ? base / mine : (base > 0 ? 0.0 : 1.0);
  }
  report.engines.front().speedup = 1.0;
  report.engines.front().range_search_ratio = 1.0;
  return report;
}

nlohmann::json BenchmarkReport::ToJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& m : engines) {
    nlohmann::json j = StatsToJson(m.stats, m.mean_ms, m.result_count);
    j["engine"] = EngineName(m.engine);
    j["runs_ms"] = m.runs_ms;
    j["speedup"] = m.speedup;
    if (m.engine != Engine::kNaive) {
      j["range_search_ratio"] = m.range_search_ratio;
    }
    rows.push_back(std::move(j));
  }
  return {{"label", label},
          {"itemsets", itemsets},
          {"total_items", total_items},
          {"threads", threads},
          {"prepare_ms", prepare_ms},
          {"engines", std::move(rows)}};
}

std::string BenchmarkReport::ToTable() const {
  std::ostringstream out;
  char line[256];
  out << label << "  (n=" << itemsets << ", N=" << total_items
      << ", threads=" << threads << ", prepare " << prepare_ms << " ms)\n";
  std::snprintf(line, sizeof line, "  %-6s %12s %9s %14s %10s %10s\n", "engine",
                "wall_ms", "speedup", "range_searches", "rs_ratio", "minimal");
  out << line;
  for (const auto& m : engines) {
    std::snprintf(line, sizeof line,
                  "  %-6s %12.3f %9.3f %14llu %10.3f %10zu\n",
                  EngineName(m.engine), m.mean_ms, m.speedup,
                  static_cast<unsigned long long>(m.stats.range_searches()),
                  m.range_search_ratio, m.result_count);
    out << line;
  }
  return out.str();
}

}  // namespace xset
