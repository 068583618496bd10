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

#ifndef XSET_GENERATOR_H_
#define XSET_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "xset/itemset.h"

namespace xset {

struct GeneratorConfig {
  std::size_t n = 0;         // itemset slots
  std::size_t alphabet = 1;  // items are 1..alphabet
  double f_min = 0.0;        // lower bound of each item's frequency
  std::uint64_t seed = 0;
};

struct GeneratedDataset {
  Dataset data;  // canonical
  // Slots that received no item; they are not in `data`.
  std::size_t dropped_empty = 0;
  // frequencies[k] and slot_counts[k] describe item k + 1.
  std::vector<double> frequencies;
  std::vector<std::size_t> slot_counts;
};

// Random source with a fixed, documented output: std::mt19937_64 (whose
// sequence the standard pins down) with hand-written conversions, so a
// seed yields the same dataset on every platform.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, 1) from the top 53 bits.
  double Unit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t Below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// For each item k in 1..alphabet draws f_k uniformly from [f_min, 1] and
// puts k into floor(f_k * n) distinct slots chosen uniformly. Empty slots
// are dropped; the rest are canonicalized without remapping. Throws
// std::invalid_argument for alphabet == 0 or f_min outside [0, 1].
GeneratedDataset Generate(const GeneratorConfig& cfg);

}  // namespace xset

#endif  // XSET_GENERATOR_H_
