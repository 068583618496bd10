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

#ifndef XSET_ORACLE_H_
#define XSET_ORACLE_H_

#include <cstddef>
#include <vector>

#include "xset/itemset.h"

namespace xset {

// One verdict per dataset position; true means the itemset is retained.
using MinimalityFlags = std::vector<bool>;

inline std::size_t CountRetained(const MinimalityFlags& flags) {
  std::size_t n = 0;
  for (bool f : flags) n += f;
  return n;
}

// Brute-force O(n^2) scans used as ground truth. Among equal itemsets only
// the first occurrence is retained, which is what the prefix pass of the
// lexicographic engines produces.
MinimalityFlags NaiveMinimal(const Dataset& d);
MinimalityFlags NaiveMaximal(const Dataset& d);

}  // namespace xset

#endif  // XSET_ORACLE_H_
