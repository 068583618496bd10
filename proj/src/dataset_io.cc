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

#include "xset/dataset_io.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>

namespace xset {
namespace {

void PutU32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b;
  for (int k = 0; k < 4; ++k) b[k] = static_cast<char>((v >> (8 * k)) & 0xff);
  out.write(b.data(), b.size());
}

void PutU64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b;
  for (int k = 0; k < 8; ++k) b[k] = static_cast<char>((v >> (8 * k)) & 0xff);
  out.write(b.data(), b.size());
}

template <typename T>
bool Get(std::istream& in, T& v) {
  std::array<unsigned char, sizeof(T)> b;
  in.read(reinterpret_cast<char*>(b.data()), b.size());
  if (in.gcount() != static_cast<std::streamsize>(b.size())) return false;
  v = 0;
  for (std::size_t k = 0; k < sizeof(T); ++k) v |= T{b[k]} << (8 * k);
  return true;
}

}  // namespace

Dataset ParseText(std::istream& in) {
  Dataset d;
  std::string line;
  std::vector<Item> row;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    row.clear();
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
      if (*p == ' ' || *p == '\t') {
        ++p;
        continue;
      }
      Item v = 0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec == std::errc::result_out_of_range) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": item id does not fit in 32 bits");
      }
      if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t')) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": malformed item id");
      }
      row.push_back(v);
      p = next;
    }
    if (row.empty()) continue;
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    d.push_back(row);
  }
  return d;
}

void WriteText(const Dataset& d, std::ostream& out) {
  for (std::size_t k = 0; k < d.size(); ++k) {
    const ItemView row = d[k];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << row[c];
    }
    out << '\n';
  }
}

Dataset ParseBinary(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (in.gcount() != 4 || std::memcmp(magic, kBinaryMagic, 4) != 0) {
    throw FormatError("bad magic: not an XSET binary dataset");
  }
  std::uint32_t version = 0;
  if (!Get(in, version)) throw FormatError("truncated header");
  if (version != kBinaryVersion) {
    throw FormatError("unsupported version " + std::to_string(version));
  }
  std::uint64_t count = 0;
  if (!Get(in, count)) throw FormatError("truncated header");

  Dataset d;
  std::vector<Item> row;
  for (std::uint64_t r = 0; r < count; ++r) {
    std::uint32_t len = 0;
    if (!Get(in, len)) {
      throw FormatError("truncated record " + std::to_string(r));
    }
    row.resize(len);
    for (std::uint32_t c = 0; c < len; ++c) {
      if (!Get(in, row[c])) {
        throw FormatError("truncated record " + std::to_string(r) +
                          ": declared " + std::to_string(len) + " items");
      }
    }
    if (!IsValidItemset(row)) {
      throw FormatError("record " + std::to_string(r) +
                        " is empty or not strictly increasing");
    }
    d.push_back(row);
  }
  return d;
}

void WriteBinary(const Dataset& d, std::ostream& out) {
  out.write(kBinaryMagic, 4);
  PutU32(out, kBinaryVersion);
  PutU64(out, d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    const ItemView row = d[k];
    PutU32(out, static_cast<std::uint32_t>(row.size()));
    for (Item x : row) PutU32(out, x);
  }
}

Dataset LoadDataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  char magic[4] = {};
  in.read(magic, 4);
  const bool binary =
      in.gcount() == 4 && std::memcmp(magic, kBinaryMagic, 4) == 0;
  in.clear();
  in.seekg(0);
  return binary ? ParseBinary(in) : ParseText(in);
}

void SaveDataset(const Dataset& d, const std::string& path, bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  if (binary) {
    WriteBinary(d, out);
  } else {
    WriteText(d, out);
  }
  if (!out) throw FormatError("write failed: " + path);
}

Itemset ItemRemap::Restore(ItemView row) const {
  std::vector<Item> items;
  items.reserve(row.size());
  for (Item x : row) items.push_back(ToOld(x));
  return Itemset::FromUnsorted(std::move(items));
}

CanonicalDataset Canonicalize(const Dataset& d, RemapMode mode) {
  ItemRemap remap;
  remap.mode = mode;
  if (mode != RemapMode::kNone) {
    std::unordered_map<Item, std::size_t> freq;
    for (std::size_t k = 0; k < d.size(); ++k) {
      for (Item x : d[k]) ++freq[x];
    }
    std::vector<std::pair<std::size_t, Item>> order;
    order.reserve(freq.size());
    for (auto [item, count] : freq) order.emplace_back(count, item);
    if (mode == RemapMode::kFrequencyAscending) {
      std::sort(order.begin(), order.end());
    } else {
      std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
      });
    }
    remap.original.reserve(order.size());
    for (const auto& [count, item] : order) {
      remap.renamed.emplace(item, static_cast<Item>(remap.original.size()));
      remap.original.push_back(item);
    }
  }

  // Remapped rows go to scratch storage; without a remap the input rows
  // are ordered in place.
  std::vector<Item> items;
  std::vector<std::size_t> offsets{0};
  if (!remap.identity()) {
    items.reserve(d.total_items());
    offsets.reserve(d.size() + 1);
    for (std::size_t k = 0; k < d.size(); ++k) {
      const std::size_t start = items.size();
      for (Item x : d[k]) items.push_back(remap.ToNew(x));
      std::sort(items.begin() + start, items.end());
      offsets.push_back(items.size());
    }
  }
  auto row = [&](std::size_t k) {
    if (remap.identity()) return d[k];
    return ItemView(items.data() + offsets[k], offsets[k + 1] - offsets[k]);
  };
  std::vector<std::size_t> perm(d.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return LexCompare(row(a), row(b)) < 0;
  });

  Dataset sorted;
  sorted.reserve(d.size(), d.total_items());
  for (std::size_t k : perm) sorted.push_back(row(k));
  sorted.VerifyCanonical();
  return {std::move(sorted), std::move(remap)};
}

RemapMode ParseRemapMode(const std::string& name) {
  if (name == "none") return RemapMode::kNone;
  if (name == "freq-asc") return RemapMode::kFrequencyAscending;
  if (name == "freq-desc") return RemapMode::kFrequencyDescending;
  throw std::invalid_argument("unknown remap mode '" + name +
                              "' (expected none, freq-asc or freq-desc)");
}

}  // namespace xset
