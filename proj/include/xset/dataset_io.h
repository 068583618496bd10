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

#ifndef XSET_DATASET_IO_H_
#define XSET_DATASET_IO_H_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "xset/itemset.h"

namespace xset {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format: one itemset per line, base-10 ids separated by spaces. Blank
// lines and lines starting with '#' are skipped. Items within a line are
// sorted and deduplicated. Throws FormatError naming the offending line.
Dataset ParseText(std::istream& in);
void WriteText(const Dataset& d, std::ostream& out);

// Binary format, little-endian:
//   "XSET" | u32 version (=1) | u64 count | count x (u32 len, len x u32 id)
inline constexpr char kBinaryMagic[4] = {'X', 'S', 'E', 'T'};
inline constexpr std::uint32_t kBinaryVersion = 1;

Dataset ParseBinary(std::istream& in);
void WriteBinary(const Dataset& d, std::ostream& out);

// Reads either format, choosing by the leading magic bytes. Throws
// FormatError if the file cannot be opened.
Dataset LoadDataset(const std::string& path);
void SaveDataset(const Dataset& d, const std::string& path, bool binary);

enum class RemapMode {
  kNone,
  // Rare items get the small ids, so common items end up late in each row
  // and adjacent rows rarely share long prefixes.
  kFrequencyAscending,
  // The opposite: frequent items first, producing long shared prefixes.
  kFrequencyDescending,
};

// Bijection between the ids of the input and the ids after remapping.
struct ItemRemap {
  RemapMode mode = RemapMode::kNone;
  // original[new_id] = old_id. Empty for kNone (identity).
  std::vector<Item> original;
  std::unordered_map<Item, Item> renamed;  // old_id -> new_id

  bool identity() const { return mode == RemapMode::kNone; }
  Item ToNew(Item old_id) const {
    return identity() ? old_id : renamed.at(old_id);
  }
  Item ToOld(Item new_id) const {
    return identity() ? new_id : original.at(new_id);
  }
  // Maps a row back to original ids, re-sorted ascending.
  Itemset Restore(ItemView row) const;
};

struct CanonicalDataset {
  Dataset data;
  ItemRemap remap;
};

// Remaps ids per `mode` (frequency ties broken by ascending id, new ids
// dense from 0), re-sorts every row and stable-sorts the rows
// lexicographically. The result is flagged canonical.
CanonicalDataset Canonicalize(const Dataset& d,
                              RemapMode mode = RemapMode::kNone);

RemapMode ParseRemapMode(const std::string& name);

}  // namespace xset

#endif  // XSET_DATASET_IO_H_
