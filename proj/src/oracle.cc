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

#include "xset/oracle.h"

#include <algorithm>

namespace xset {
namespace {

bool Equal(ItemView a, ItemView b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

// keep[i] is false when some other row is a proper subset (minimal) or a
// proper superset (maximal) of row i, or an earlier row equals it.
MinimalityFlags Scan(const Dataset& d, bool maximal) {
  const std::size_t n = d.size();
  MinimalityFlags keep(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n && keep[i]; ++j) {
      if (j == i) continue;
      const bool dominated =
          maximal ? IsProperSubset(d[i], d[j]) : IsProperSubset(d[j], d[i]);
      if (dominated || (j < i && Equal(d[j], d[i]))) keep[i] = false;
    }
  }
  return keep;
}

}  // namespace

MinimalityFlags NaiveMinimal(const Dataset& d) { return Scan(d, false); }

MinimalityFlags NaiveMaximal(const Dataset& d) { return Scan(d, true); }

}  // namespace xset
