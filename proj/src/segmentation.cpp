// Copyright 2026 The QNQ Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnq/segmentation.hpp"

#include <limits>
#include <string>
#include <utility>

#include "qnq/error.hpp"
#include "qnq/parallel.hpp"

namespace qnq {

namespace {

constexpr SegmentId kNoLabel = std::numeric_limits<SegmentId>::max();

}  // namespace

SegmentId EquivalenceStore::make() {
  if (parent_.size() >= kNoLabel) fail(ErrorKind::Capacity, "segment id space exhausted");
  const auto id = static_cast<SegmentId>(parent_.size());
  parent_.push_back(id);
  rank_.push_back(0);
  return id;
}

SegmentId EquivalenceStore::find(SegmentId x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void EquivalenceStore::unite(SegmentId a, SegmentId b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
}

void EquivalenceStore::append(const EquivalenceStore& other) {
  const std::size_t offset = parent_.size();
  if (offset + other.parent_.size() >= kNoLabel)
    fail(ErrorKind::Capacity, "segment id space exhausted");
  for (SegmentId p : other.parent_) parent_.push_back(static_cast<SegmentId>(p + offset));
  rank_.insert(rank_.end(), other.rank_.begin(), other.rank_.end());
}

namespace {

// First pass over rows [r0, r1), ignoring everything above r0. Writes
// stripe-local provisional labels into `prov`.
EquivalenceStore label_stripe(const ColorMap& map, RowRange rows, bool eight,
                              std::vector<SegmentId>& prov) {
  EquivalenceStore eq;
  const std::size_t w = map.width;
  const std::uint8_t* codes = map.codes.data();
  for (std::size_t r = rows.begin; r < rows.end; ++r) {
    const bool has_up = r > rows.begin;
    for (std::size_t c = 0; c < w; ++c) {
      const std::size_t i = r * w + c;
      const std::uint8_t code = codes[i];
      SegmentId label = kNoLabel;
      auto join = [&](std::size_t j) {
        if (codes[j] != code) return;
        if (label == kNoLabel)
          label = prov[j];
        else if (prov[j] != label)
          eq.unite(label, prov[j]);
      };
      if (c > 0) join(i - 1);
      if (has_up) {
        join(i - w);
        if (eight) {
          if (c > 0) join(i - w - 1);
          if (c + 1 < w) join(i - w + 1);
        }
      }
      prov[i] = label == kNoLabel ? eq.make() : label;
    }
  }
  return eq;
}

}  // namespace

LabelMap label_components_streamed(const ColorMap& map, const TileScheme& scheme,
                                   Connectivity connectivity, std::size_t threads) {
  scheme.validate(map.height);
  if (map.codes.size() != map.width * map.height)
    fail(ErrorKind::Integrity, "color map size does not match its dimensions");
  if (map.codes.size() >= kNoLabel)
    fail(ErrorKind::Capacity, "image too large for 32-bit segment ids");

  const bool eight = connectivity == Connectivity::Eight;
  const std::size_t w = map.width;
  const auto stripes = stripe_ranges(map.height, scheme.tile_height);

  LabelMap out;
  out.width = map.width;
  out.height = map.height;
  out.ids.assign(map.codes.size(), kNoLabel);

  // Pass 1, stripe interiors.
  std::vector<EquivalenceStore> local(stripes.size());
  parallel_for(stripes.size(), threads, [&](std::size_t s) {
    local[s] = label_stripe(map, stripes[s], eight, out.ids);
  });

  // Shift stripe-local labels into one global forest, in stripe order.
  EquivalenceStore eq;
  for (std::size_t s = 0; s < stripes.size(); ++s) {
    const auto offset = static_cast<SegmentId>(eq.size());
    eq.append(local[s]);
    local[s] = {};
    if (offset == 0) continue;
    for (std::size_t i = stripes[s].begin * w; i < stripes[s].end * w; ++i) out.ids[i] += offset;
  }

  // Seam merge: first row of each stripe against the last row of the one above.
  const std::uint8_t* codes = map.codes.data();
  for (std::size_t s = 1; s < stripes.size(); ++s) {
    const std::size_t row = stripes[s].begin;
    for (std::size_t c = 0; c < w; ++c) {
      const std::size_t i = row * w + c;
      auto join = [&](std::size_t j) {
        if (codes[j] == codes[i]) eq.unite(out.ids[i], out.ids[j]);
      };
      join(i - w);
      if (eight) {
        if (c > 0) join(i - w - 1);
        if (c + 1 < w) join(i - w + 1);
      }
    }
  }

  // Pass 2: roots to dense ids in order of first appearance.
  std::vector<SegmentId> dense(eq.size(), kNoLabel);
  SegmentId next = 0;
  for (auto& id : out.ids) {
    const SegmentId root = eq.find(id);
    if (dense[root] == kNoLabel) dense[root] = next++;
    id = dense[root];
  }
  out.segment_count = next;
  return out;
}

LabelMap label_components(const ColorMap& map, Connectivity connectivity) {
  return label_components_streamed(map, TileScheme{map.height}, connectivity, 1);
}

LabelMap canonical_relabel(const LabelMap& labels) {
  LabelMap out = labels;
  std::vector<SegmentId> dense;
  SegmentId next = 0;
  for (auto& id : out.ids) {
    if (id >= dense.size()) dense.resize(static_cast<std::size_t>(id) + 1, kNoLabel);
    if (dense[id] == kNoLabel) dense[id] = next++;
    id = dense[id];
  }
  out.segment_count = next;
  return out;
}

}  // namespace qnq
