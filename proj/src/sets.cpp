// Copyright 2026 The Authors.
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

#include "qlift/sets.hpp"

#include <algorithm>
#include <unordered_set>

#include "qlift/error.hpp"

namespace qlift {

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

SubsetMask compress(SubsetMask mask, SubsetMask keep) {
  SubsetMask::Bits out = 0;
  int pos = 0;
  for (int e : keep.elements()) {
    if (mask.contains(e)) out |= SubsetMask::Bits{1} << pos;
    ++pos;
  }
  return SubsetMask(out);
}

SubsetMask expand(SubsetMask packed, SubsetMask keep) {
  SubsetMask::Bits out = 0;
  int pos = 0;
  for (int e : keep.elements()) {
    if (packed.contains(pos)) out |= SubsetMask::Bits{1} << e;
    ++pos;
  }
  return SubsetMask(out);
}

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(ErrorKind::InvalidGround, "ground set must be non-empty");
  }
  if (size() > kMaxGroundSize) {
    throw Error(ErrorKind::GroundTooLarge,
                "ground set has " + std::to_string(size()) +
                    " elements; the limit is " +
                    std::to_string(kMaxGroundSize));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!is_valid_label(l)) {
      throw Error(ErrorKind::InvalidGround, "invalid label '" + l + "'");
    }
    if (!seen.insert(l).second) {
      throw Error(ErrorKind::DuplicateLabel, "duplicate label '" + l + "'");
    }
  }
}

GroundSet::GroundSet(std::initializer_list<std::string_view> labels)
    : GroundSet(std::vector<std::string>(labels.begin(), labels.end())) {}

GroundSet GroundSet::letters(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                            : "e" + std::to_string(i));
  }
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

GroundSet GroundSet::restrict(SubsetMask keep) const {
  std::vector<std::string> out;
  for (int e : keep.elements()) out.push_back(labels_[e]);
  return GroundSet(std::move(out));
}

GroundSet GroundSet::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> out = labels_;
  for (const auto& l : extra) {
    if (index_of(l)) {
      throw Error(ErrorKind::LabelClash,
                  "label '" + l + "' already belongs to the ground set");
    }
    out.push_back(l);
  }
  try {
    return GroundSet(std::move(out));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DuplicateLabel) {
      throw Error(ErrorKind::LabelClash, e.what());
    }
    throw;
  }
}

SubsetMask GroundSet::mask_of(const std::vector<std::string>& labels) const {
  SubsetMask m;
  for (const auto& l : labels) {
    auto idx = index_of(l);
    if (!idx) throw Error(ErrorKind::UnknownLabel, "unknown label '" + l + "'");
    m = m.with(*idx);
  }
  return m;
}

std::string GroundSet::format(SubsetMask m) const {
  return "{" + join(m, ",") + "}";
}

std::string GroundSet::join(SubsetMask m, std::string_view sep) const {
  std::string out;
  for (int e : m.elements()) {
    if (!out.empty()) out += sep;
    out += labels_[e];
  }
  return out;
}

namespace {

void canonicalize(std::vector<SubsetMask>& v) {
  std::sort(v.begin(), v.end(), [](SubsetMask a, SubsetMask b) {
    return canonical_less(a, b);
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

SetFamily::SetFamily(std::initializer_list<SubsetMask> members)
    : members_(members) {
  canonicalize(members_);
}

SetFamily::SetFamily(std::vector<SubsetMask> members)
    : members_(std::move(members)) {
  canonicalize(members_);
}

bool SetFamily::contains(SubsetMask m) const {
  return std::binary_search(
      members_.begin(), members_.end(), m,
      [](SubsetMask a, SubsetMask b) { return canonical_less(a, b); });
}

bool SetFamily::insert(SubsetMask m) {
  auto it = std::lower_bound(
      members_.begin(), members_.end(), m,
      [](SubsetMask a, SubsetMask b) { return canonical_less(a, b); });
  if (it != members_.end() && *it == m) return false;
  members_.insert(it, m);
  return true;
}

void SetFamily::insert_all(const SetFamily& other) {
  members_.insert(members_.end(), other.members_.begin(), other.members_.end());
  canonicalize(members_);
}

SubsetMask SetFamily::support() const {
  SubsetMask u;
  for (SubsetMask m : members_) u |= m;
  return u;
}

SetFamily SetFamily::inside(SubsetMask set) const {
  SetFamily out;
  for (SubsetMask m : members_) {
    if (m.subset_of(set)) out.members_.push_back(m);
  }
  return out;
}

bool SetFamily::is_clutter() const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      // canonical order puts any subset before its supersets
      if (members_[i].subset_of(members_[j])) return false;
    }
  }
  return true;
}

SetFamily minimal_members(const SetFamily& family) {
  std::vector<SubsetMask> out;
  for (SubsetMask m : family) {
    bool minimal = true;
    for (SubsetMask kept : out) {
      if (kept.subset_of(m)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(m);
  }
  return SetFamily(std::move(out));
}

SetFamily maximal_members(const SetFamily& family) {
  std::vector<SubsetMask> out;
  const auto& ms = family.members();
  for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
    bool maximal = true;
    for (SubsetMask kept : out) {
      if (it->subset_of(kept)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(*it);
  }
  return SetFamily(std::move(out));
}

}  // namespace qlift
