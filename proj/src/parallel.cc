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

#include "xset/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace xset {

std::size_t DefaultWorkerCount() {
  if (const char* env = std::getenv("XSET_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MinimalResult GetMinimalItemsetsParallel(const Dataset& d, std::size_t workers,
                                         const ParallelOptions& options) {
  if (workers == 0) throw std::invalid_argument("worker count must be >= 1");
  if (options.chunk == 0) throw std::invalid_argument("chunk must be >= 1");
  RequireCanonical(d);

  const std::size_t n = d.size();
  const MinimalityFlags prefix = PrefixSubsumePass(d);
  std::vector<std::atomic<bool>> keep(n);
  for (std::size_t i = 0; i < n; ++i) {
    keep[i].store(prefix[i], std::memory_order_relaxed);
  }

  std::atomic<std::size_t> next_row{0};
  std::vector<RangeSearchStats> per_worker(workers);
  auto work = [&](RangeSearchStats& stats) {
    for (;;) {
      const std::size_t first =
          next_row.fetch_add(options.chunk, std::memory_order_relaxed);
      if (first >= n) return;
      const std::size_t last = std::min(n, first + options.chunk);
      for (std::size_t i = first; i < last; ++i) {
        // The last row has nothing after it to search.
        if (i + 1 >= n || !keep[i].load(std::memory_order_relaxed)) continue;
        ++stats.subset_queries;
        if (ContainsSubsetOf(d, {i + 1, n - 1, 0, 0}, d[i], stats,
                             options.search)) {
          keep[i].store(false, std::memory_order_relaxed);
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
      pool.emplace_back(work, std::ref(per_worker[w]));
    }
    work(per_worker[0]);
  }  // join

  MinimalResult out;
  out.flags.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.flags[i] = keep[i].load();
  for (const auto& s : per_worker) out.stats += s;
  return out;
}

}  // namespace xset
