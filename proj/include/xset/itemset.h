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

#ifndef XSET_ITEMSET_H_
#define XSET_ITEMSET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace xset {

// Opaque item identifier. Items order numerically.
using Item = std::uint32_t;

// Read-only view of a strictly increasing run of items. Every set relation
// below works on views so that dataset rows need not be copied.
using ItemView = std::span<const Item>;

// A non-empty, strictly increasing sequence of items.
class Itemset {
 public:
  // Throws std::invalid_argument unless `items` is non-empty and strictly
  // increasing.
  explicit Itemset(std::vector<Item> items);
  Itemset(std::initializer_list<Item> items)
      : Itemset(std::vector<Item>(items)) {}
  explicit Itemset(ItemView items)
      : Itemset(std::vector<Item>(items.begin(), items.end())) {}

  // Sorts and deduplicates `items` first. Still throws on empty input.
  static Itemset FromUnsorted(std::vector<Item> items);

  ItemView view() const { return items_; }
  operator ItemView() const { return items_; }  // NOLINT

  std::size_t size() const { return items_.size(); }
  Item operator[](std::size_t k) const { return items_[k]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const Itemset&, const Itemset&) = default;

 private:
  std::vector<Item> items_;
};

// True iff `items` is non-empty and strictly increasing.
bool IsValidItemset(ItemView items);

std::strong_ordering LexCompare(ItemView a, ItemView b);

// Linear merge over the two sorted runs; `a` must be strictly smaller.
bool IsProperSubset(ItemView a, ItemView b);

bool IsProperPrefix(ItemView a, ItemView b);

std::size_t LongestCommonPrefix(ItemView a, ItemView b);

// Lexicographically ordered multiset of itemsets in flat storage.
//
// Rows are addressed by 0-based position. The canonical flag is only ever
// set after a linear scan has confirmed the ordering, so engines can trust it.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::initializer_list<Itemset> rows);

  // Throws std::invalid_argument for an invalid row. Clears the canonical
  // flag unless the new row keeps the order.
  void push_back(ItemView row);

  std::size_t size() const { return offsets_.size() - 1; }
  bool empty() const { return size() == 0; }

  ItemView operator[](std::size_t k) const {
    return {items_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
  }
  std::size_t row_size(std::size_t k) const {
    return offsets_[k + 1] - offsets_[k];
  }
  // Item at `column` of row `k`; caller guarantees column < row_size(k).
  Item at(std::size_t k, std::size_t column) const {
    return items_[offsets_[k] + column];
  }

  // Sum of row cardinalities.
  std::size_t total_items() const { return items_.size(); }

  bool canonical() const { return canonical_; }

  // Scans the rows and sets the canonical flag iff they are sorted. Returns
  // the flag.
  bool VerifyCanonical();

  void reserve(std::size_t rows, std::size_t items);

  // Row-wise equality; the canonical flag is not compared.
  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.offsets_ == b.offsets_ && a.items_ == b.items_;
  }

 private:
  std::vector<Item> items_;
  std::vector<std::size_t> offsets_{0};
  bool canonical_ = true;
};

// Throws std::invalid_argument if `d` is not flagged canonical.
void RequireCanonical(const Dataset& d);

}  // namespace xset

#endif  // XSET_ITEMSET_H_
