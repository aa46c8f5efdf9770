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

#ifndef QLIFT_COVER_INDEX_HPP_
#define QLIFT_COVER_INDEX_HPP_

#include <vector>

#include "qlift/sets.hpp"

namespace qlift {

/// Answers "union of the family members contained in S" for a fixed family.
/// Small grounds get a full lookup table; larger ones scan the members.
class CoverIndex {
 public:
  static constexpr int kTableLimit = 16;

  CoverIndex(int ground_size, const SetFamily& family);

  SubsetMask union_inside(SubsetMask s) const {
    if (!table_.empty()) {
      return SubsetMask(table_[s.bits() & (table_.size() - 1)]);
    }
    SubsetMask u;
    for (SubsetMask m : members_) {
      if (m.subset_of(s)) u |= m;
    }
    return u;
  }
  /// Some member lies inside `s`.
  bool any_inside(SubsetMask s) const {
    if (!table_.empty()) {
      return table_[s.bits() & (table_.size() - 1)] != 0 || has_empty_;
    }
    for (SubsetMask m : members_) {
      if (m.subset_of(s)) return true;
    }
    return false;
  }

 private:
  std::vector<SubsetMask::Bits> table_;
  std::vector<SubsetMask> members_;
  bool has_empty_ = false;
};

}  // namespace qlift

#endif  // QLIFT_COVER_INDEX_HPP_
