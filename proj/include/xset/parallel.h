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

#ifndef XSET_PARALLEL_H_
#define XSET_PARALLEL_H_

#include <cstddef>

#include "xset/itemset.h"
#include "xset/lex.h"

namespace xset {

struct ParallelOptions {
  SearchStrategy search = SearchStrategy::kBinary;
  // Rows taken per fetch-and-add on the shared counter.
  std::size_t chunk = 1;
};

// Number of workers to use when none is requested: the XSET_THREADS
// environment variable if set, else the hardware concurrency (at least 1).
std::size_t DefaultWorkerCount();

// Sequential prefix pass, then `workers` threads draining a shared row
// counter, each running read-only subset queries and clearing flags of rows
// that have a subset. Per-worker stats are summed after the join. Flags do
// not depend on `workers` or on scheduling. Throws std::invalid_argument if
// workers == 0 or the dataset is not canonical.
MinimalResult GetMinimalItemsetsParallel(const Dataset& d, std::size_t workers,
                                         const ParallelOptions& options = {});

}  // namespace xset

#endif  // XSET_PARALLEL_H_
