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

#include "xset/itemset.h"

#include <algorithm>
#include <stdexcept>

namespace xset {

Itemset::Itemset(std::vector<Item> items) : items_(std::move(items)) {
  if (items_.empty()) throw std::invalid_argument("itemset must be non-empty");
  if (!IsValidItemset(items_)) {
    throw std::invalid_argument("itemset items must be strictly increasing");
  }
}

Itemset Itemset::FromUnsorted(std::vector<Item> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return Itemset(std::move(items));
}

bool IsValidItemset(ItemView items) {
  if (items.empty()) return false;
  return std::adjacent_find(items.begin(), items.end(), [](Item x, Item y) {
           return x >= y;
         }) == items.end();
}

std::strong_ordering LexCompare(ItemView a, ItemView b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

bool IsProperSubset(ItemView a, ItemView b) {
  if (a.size() >= b.size()) return false;
  std::size_t k = 0;
  for (Item x : a) {
    while (k < b.size() && b[k] < x) ++k;
    if (k == b.size() || b[k] != x) return false;
    ++k;
  }
  return true;
}

bool IsProperPrefix(ItemView a, ItemView b) {
  return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

std::size_t LongestCommonPrefix(ItemView a, ItemView b) {
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(ia - a.begin());
}

Dataset::Dataset(std::initializer_list<Itemset> rows) {
  for (const auto& r : rows) push_back(r.view());
}

void Dataset::push_back(ItemView row) {
  if (!IsValidItemset(row)) {
    throw std::invalid_argument(
        "dataset rows must be non-empty and strictly increasing");
  }
  if (canonical_ && !empty() && LexCompare((*this)[size() - 1], row) > 0) {
    canonical_ = false;
  }
  items_.insert(items_.end(), row.begin(), row.end());
  offsets_.push_back(items_.size());
}

bool Dataset::VerifyCanonical() {
  canonical_ = true;
  for (std::size_t k = 1; k < size(); ++k) {
    if (LexCompare((*this)[k - 1], (*this)[k]) > 0) {
      canonical_ = false;
      break;
    }
  }
  return canonical_;
}

void Dataset::reserve(std::size_t rows, std::size_t items) {
  offsets_.reserve(rows + 1);
  items_.reserve(items);
}

void RequireCanonical(const Dataset& d) {
  if (!d.canonical()) {
    throw std::invalid_argument("dataset is not lexicographically sorted");
  }
}

}  // namespace xset
