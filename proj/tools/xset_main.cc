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

// Command-line front end: generate, canonicalize, extract minimal sets,
// cross-check engines and benchmark them.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "xset/bench.h"
#include "xset/dataset_io.h"
#include "xset/generator.h"
#include "xset/itemset.h"
#include "xset/memo.h"
#include "xset/oracle.h"
#include "xset/parallel.h"

namespace {

using namespace xset;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Thrown for bad option values that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double MsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void WriteJson(const nlohmann::json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::vector<double> ParseDoubleList(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError("not a number: '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty number list");
  return out;
}

struct GenOpts {
  std::size_t n = 1000;
  std::size_t alphabet = 20;
  double f_min = 0.5;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "text";
  std::string meta_json;
};

int RunGen(const GenOpts& o) {
  const auto gen = Generate({o.n, o.alphabet, o.f_min, o.seed});
  SaveDataset(gen.data, o.out, o.format == "bin");
  if (!o.meta_json.empty()) {
    WriteJson({{"n", o.n},
               {"alphabet", o.alphabet},
               {"f_min", o.f_min},
               {"seed", o.seed},
               {"itemsets", gen.data.size()},
               {"total_items", gen.data.total_items()},
               {"dropped_empty", gen.dropped_empty},
               {"frequencies", gen.frequencies},
               {"slot_counts", gen.slot_counts}},
              o.meta_json);
  }
  std::cerr << "generated " << gen.data.size() << " itemsets ("
            << gen.dropped_empty << " empty slots dropped)\n";
  return kExitOk;
}

struct CanonOpts {
  std::string in;
  std::string out;
  std::string remap = "none";
  std::string format = "text";
  std::string perm_json;
};

int RunCanon(const CanonOpts& o) {
  const RemapMode mode = ParseRemapMode(o.remap);
  const auto canon = Canonicalize(LoadDataset(o.in), mode);
  SaveDataset(canon.data, o.out, o.format == "bin");
  if (!o.perm_json.empty()) {
    nlohmann::json perm = nlohmann::json::array();
    for (std::size_t k = 0; k < canon.remap.original.size(); ++k) {
      perm.push_back({{"old", canon.remap.original[k]}, {"new", k}});
    }
    WriteJson({{"remap", o.remap}, {"permutation", perm}}, o.perm_json);
  }
  return kExitOk;
}

struct MinOpts {
  std::string in;
  std::string algo = "lex";
  std::size_t threads = 0;
  std::string out;
  std::string stats_json;
  bool canonicalize = false;
  std::string remap = "none";
  bool frontier_resume = false;
  bool galloping = false;
  bool verify_witness = false;
  std::string dump_graphs;
};

int RunMin(const MinOpts& o) {
  const Engine engine = ParseEngine(o.algo);
  const RemapMode mode = ParseRemapMode(o.remap);
  const auto prep_start = Clock::now();
  Dataset raw = LoadDataset(o.in);
  CanonicalDataset canon{std::move(raw), {}};
  if (o.canonicalize || mode != RemapMode::kNone) {
    canon = Canonicalize(canon.data, mode);
  } else if (!canon.data.canonical()) {
    std::cerr << "error: " << o.in
              << " is not lexicographically sorted; rerun with "
                 "--canonicalize or sort it with 'xset canon'\n";
    return kExitFailure;
  }
  const double prepare_ms = MsSince(prep_start);

  EngineConfig cfg;
  cfg.threads = o.threads ? o.threads : DefaultWorkerCount();
  cfg.search =
      o.galloping ? SearchStrategy::kGalloping : SearchStrategy::kBinary;
  cfg.frontier_resume = o.frontier_resume;
  cfg.verify_witness = o.verify_witness;

  EngineRun run;
  if (!o.dump_graphs.empty() && engine == Engine::kMemo) {
    // Same loop as the memoized engine, writing each query's graph.
    std::ofstream dump(o.dump_graphs);
    if (!dump) throw std::runtime_error("cannot write " + o.dump_graphs);
    MemoOptions opt{cfg.search, cfg.frontier_resume, cfg.verify_witness};
    const auto start = Clock::now();
    run.engine = engine;
    run.flags = PrefixSubsumePass(canon.data);
    MemoState state(canon.data, opt);
    for (std::size_t i = 0; i + 1 < canon.data.size(); ++i) {
      if (!run.flags[i]) continue;
      ++run.stats.subset_queries;
      if (state.Query(i, run.stats).found) run.flags[i] = false;
      dump << "{\"row\":" << i << ",\"graph\":" << state.last_graph().ToJson()
           << "}\n";
    }
    run.wall_ms = MsSince(start);
    run.memo = state.counters();
  } else {
    run = RunEngine(engine, canon.data, cfg);
  }

  std::ofstream file;
  if (!o.out.empty() && o.out != "-") {
    file.open(o.out);
    if (!file) throw std::runtime_error("cannot write " + o.out);
  }
  std::ostream& out = file.is_open() ? file : std::cout;
  for (std::size_t i = 0; i < canon.data.size(); ++i) {
    if (!run.flags[i]) continue;
    const Itemset row = canon.remap.Restore(canon.data[i]);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ' ';
      out << row[k];
    }
    out << '\n';
  }

  nlohmann::json stats =
      StatsToJson(run.stats, run.wall_ms, CountRetained(run.flags));
  stats["engine"] = EngineName(engine);
  stats["itemsets"] = canon.data.size();
  stats["prepare_ms"] = prepare_ms;
  if (engine == Engine::kParallel) stats["threads"] = cfg.threads;
  if (run.memo) {
    stats["memo"] = {{"fresh_queries", run.memo->fresh_queries},
                     {"memoized_queries", run.memo->memoized_queries},
                     {"nodes_reused", run.memo->nodes_reused},
                     {"subtrees_reexecuted", run.memo->subtrees_reexecuted},
                     {"subtrees_dropped", run.memo->subtrees_dropped},
                     {"graphs_discarded", run.memo->graphs_discarded},
                     {"peak_graph_nodes", run.memo->peak_graph_nodes}};
  }
  if (o.stats_json.empty()) {
    std::cerr << stats.dump() << '\n';
  } else {
    WriteJson(stats, o.stats_json);
  }
  return kExitOk;
}

struct VerifyOpts {
  std::string algos = "naive,lex,memo,par";
  std::size_t trials = 50;
  std::size_t n = 150;
  std::size_t alphabet = 12;
  std::string fmin_grid = "0.1,0.3,0.5,0.7,0.9";
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  std::size_t oracle_cap = 5000;
  bool frontier_resume = false;
};

int RunVerify(const VerifyOpts& o) {
  std::vector<Engine> engines = ParseEngineList(o.algos);
  const std::vector<double> grid = ParseDoubleList(o.fmin_grid);
  EngineConfig cfg;
  cfg.threads = o.threads ? o.threads : DefaultWorkerCount();
  cfg.frontier_resume = o.frontier_resume;
  cfg.verify_witness = true;

  std::size_t checked = 0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const double f_min = grid[t % grid.size()];
    const GeneratorConfig gc{o.n, o.alphabet, f_min, o.seed + t};
    const Dataset d = Generate(gc).data;
    std::optional<EngineRun> reference;
    for (Engine e : engines) {
      if (e == Engine::kNaive && d.size() > o.oracle_cap) continue;
      EngineRun run = RunEngine(e, d, cfg);
      if (!reference) {
        reference = std::move(run);
        continue;
      }
      if (auto k = FirstDifference(reference->flags, run.flags)) {
        std::cout << "DISAGREEMENT trial " << t << " (seed " << gc.seed
                  << ", f_min " << f_min << "): " << EngineName(run.engine)
                  << " vs " << EngineName(reference->engine) << " at row " << *k
                  << '\n';
        return kExitFailure;
      }
    }
    ++checked;
  }
  std::cout << "ok: " << checked << " datasets, engines " << o.algos
            << " agree\n";
  return kExitOk;
}

struct BenchOpts {
  std::string in;
  std::string gen_grid;
  std::string algos = "lex,memo,par";
  std::size_t threads = 0;
  std::size_t reps = 3;
  std::string json_out;
  std::uint64_t seed = 1;
  std::string remap = "none";
  bool frontier_resume = false;
};

int RunBench(const BenchOpts& o) {
  if (o.in.empty() == o.gen_grid.empty()) {
    throw UsageError("bench needs exactly one of --in or --gen-grid");
  }
  const std::vector<Engine> engines = ParseEngineList(o.algos);
  EngineConfig cfg;
  cfg.threads = o.threads ? o.threads : DefaultWorkerCount();
  cfg.frontier_resume = o.frontier_resume;

  std::vector<BenchmarkReport> reports;
  if (!o.in.empty()) {
    const auto start = Clock::now();
    const auto canon = Canonicalize(LoadDataset(o.in), ParseRemapMode(o.remap));
    reports.push_back(
        RunBenchmark(canon.data, engines, cfg, o.reps, o.in, MsSince(start)));
  } else {
    // N:D:F1,F2,...
    const auto first = o.gen_grid.find(':');
    const auto second = o.gen_grid.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
      throw UsageError("--gen-grid expects N:D:FMIN[,FMIN...]");
    }
    std::size_t n = 0, alphabet = 0;
    try {
      n = std::stoull(o.gen_grid.substr(0, first));
      alphabet = std::stoull(o.gen_grid.substr(first + 1, second - first - 1));
    } catch (const std::exception&) {
      throw UsageError("--gen-grid expects N:D:FMIN[,FMIN...]");
    }
    for (double f_min : ParseDoubleList(o.gen_grid.substr(second + 1))) {
      const auto start = Clock::now();
      const Dataset d = Generate({n, alphabet, f_min, o.seed}).data;
      std::ostringstream label;
      label << "g(n=" << n << ", d=" << alphabet << ", f_min=" << f_min << ")";
      reports.push_back(
          RunBenchmark(d, engines, cfg, o.reps, label.str(), MsSince(start)));
    }
  }
  nlohmann::json all = nlohmann::json::array();
  for (const auto& r : reports) {
    std::cout << r.ToTable() << '\n';
    all.push_back(r.ToJson());
  }
  if (!o.json_out.empty()) WriteJson(all, o.json_out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Minimal itemset identification: lexicographic, memoized and "
      "parallel engines"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* g = app.add_subcommand("gen", "Generate a synthetic dataset");
  g->add_option("--n", gen.n, "Itemset slots")->required();
  g->add_option("--alphabet", gen.alphabet, "Alphabet size")->required();
  g->add_option("--fmin", gen.f_min, "Minimal item frequency")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--out", gen.out, "Output path")->required();
  g->add_option("--format", gen.format, "text or bin")
      ->check(CLI::IsMember({"text", "bin"}));
  g->add_option("--meta-json", gen.meta_json,
                "Write generator metadata (dropped slots, frequencies)");

  CanonOpts canon;
  auto* c =
      app.add_subcommand("canon", "Sort (and optionally remap) a dataset");
  c->add_option("--in", canon.in, "Input path")->required();
  c->add_option("--out", canon.out, "Output path")->required();
  c->add_option("--remap", canon.remap, "none, freq-asc or freq-desc")
      ->check(CLI::IsMember({"none", "freq-asc", "freq-desc"}));
  c->add_option("--format", canon.format, "text or bin")
      ->check(CLI::IsMember({"text", "bin"}));
  c->add_option("--perm-json", canon.perm_json, "Write the id permutation");

  MinOpts min;
  auto* m = app.add_subcommand("min", "Write the minimal itemsets");
  m->add_option("--in", min.in, "Input path (text or binary)")->required();
  m->add_option("--algo", min.algo, "naive, lex, memo or par");
  m->add_option("--threads", min.threads, "Workers for par (default: all)");
  m->add_option("--out", min.out, "Output path (default stdout)");
  m->add_option("--stats-json", min.stats_json,
                "Stats output path (default stderr)");
  m->add_flag("--canonicalize", min.canonicalize, "Sort unsorted input first");
  m->add_option("--remap", min.remap, "Item order: none, freq-asc, freq-desc");
  m->add_flag("--frontier-resume", min.frontier_resume,
              "memo: keep graphs after positive answers");
  m->add_flag("--galloping", min.galloping, "Galloping range searches");
  m->add_flag("--verify-witness", min.verify_witness,
              "Check every reported subset");
  m->add_option("--dump-graphs", min.dump_graphs,
                "memo: write each query's call graph as JSON lines");

  VerifyOpts verify;
  auto* v = app.add_subcommand("verify", "Cross-check engines on random data");
  v->add_option("--algos", verify.algos, "Comma-separated engines");
  v->add_option("--trials", verify.trials, "Number of datasets");
  v->add_option("--n", verify.n, "Itemset slots per dataset");
  v->add_option("--alphabet", verify.alphabet, "Alphabet size");
  v->add_option("--fmin-grid", verify.fmin_grid,
                "Comma-separated f_min values");
  v->add_option("--seed", verify.seed, "First seed");
  v->add_option("--threads", verify.threads, "Workers for par");
  v->add_option("--oracle-cap", verify.oracle_cap,
                "Skip the brute-force engine above this many itemsets");
  v->add_flag("--frontier-resume", verify.frontier_resume,
              "memo: keep graphs after positive answers");

  BenchOpts bench;
  auto* b = app.add_subcommand("bench", "Time engines against lex");
  b->add_option("--in", bench.in, "Dataset path");
  b->add_option("--gen-grid", bench.gen_grid,
                "Generated datasets N:D:FMIN[,FMIN...]");
  b->add_option("--algos", bench.algos, "Comma-separated engines");
  b->add_option("--threads", bench.threads, "Workers for par");
  b->add_option("--reps", bench.reps, "Repetitions per engine")
      ->check(CLI::PositiveNumber);
  b->add_option("--json-out", bench.json_out, "Write the report as JSON");
  b->add_option("--seed", bench.seed, "Generator seed");
  b->add_option("--remap", bench.remap, "Item order for --in");
  b->add_flag("--frontier-resume", bench.frontier_resume,
              "memo: keep graphs after positive answers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g->parsed()) return RunGen(gen);
    if (c->parsed()) return RunCanon(canon);
    if (m->parsed()) return RunMin(min);
    if (v->parsed()) return RunVerify(verify);
    if (b->parsed()) return RunBench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
