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

#include "xset/generator.h"

#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "xset/dataset_io.h"

namespace xset {

std::uint64_t PortableRng::Below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = -bound % bound;
  for (;;) {
    const std::uint64_t x = Next();
    if (x >= limit) return x % bound;
  }
}

GeneratedDataset Generate(const GeneratorConfig& cfg) {
  if (cfg.alphabet == 0) throw std::invalid_argument("alphabet must be >= 1");
  if (!(cfg.f_min >= 0.0 && cfg.f_min <= 1.0)) {
    throw std::invalid_argument("f_min must lie in [0, 1]");
  }
  const std::size_t n = cfg.n;
  const std::size_t words = (cfg.alphabet + 63) / 64;
  // Membership bits, one row of `words` words per slot.
  std::vector<std::uint64_t> bits(n * words, 0);
  std::vector<std::size_t> slots(n);
  std::iota(slots.begin(), slots.end(), std::size_t{0});

  GeneratedDataset out;
  out.frequencies.reserve(cfg.alphabet);
  out.slot_counts.reserve(cfg.alphabet);
  PortableRng rng(cfg.seed);
  for (std::size_t k = 0; k < cfg.alphabet; ++k) {
    const double f = cfg.f_min + (1.0 - cfg.f_min) * rng.Unit();
    const auto count = std::min(
        n, static_cast<std::size_t>(std::floor(f * static_cast<double>(n))));
    // Partial Fisher-Yates: the first `count` entries become a uniform
    // sample without replacement.
    for (std::size_t s = 0; s < count; ++s) {
      const std::size_t pick = s + rng.Below(n - s);
      std::swap(slots[s], slots[pick]);
      bits[slots[s] * words + k / 64] |= std::uint64_t{1} << (k % 64);
    }
    out.frequencies.push_back(f);
    out.slot_counts.push_back(count);
  }

  Dataset raw;
  std::vector<Item> row;
  std::vector<std::size_t> seen(cfg.alphabet, 0);
  for (std::size_t s = 0; s < n; ++s) {
    row.clear();
    for (std::size_t k = 0; k < cfg.alphabet; ++k) {
      if (bits[s * words + k / 64] >> (k % 64) & 1) {
        row.push_back(static_cast<Item>(k + 1));
        ++seen[k];
      }
    }
    if (row.empty()) {
      ++out.dropped_empty;
    } else {
      raw.push_back(row);
    }
  }
  assert(seen == out.slot_counts);
  out.data = Canonicalize(raw, RemapMode::kNone).data;
  return out;
}

}  // namespace xset
