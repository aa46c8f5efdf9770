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

#include "qlift/cover_index.hpp"

namespace qlift {

CoverIndex::CoverIndex(int ground_size, const SetFamily& family)
    : members_(family.members()) {
  has_empty_ = !members_.empty() && members_.front().empty();
  // members outside the ground fall back to scanning; callers reject them
  if (ground_size > kTableLimit ||
      !family.support().subset_of(SubsetMask::prefix(ground_size))) {
    return;
  }
  const std::size_t n = std::size_t{1} << ground_size;
  table_.assign(n, 0);
  for (SubsetMask m : members_) table_[m.bits()] = m.bits();
  // superset-OR transform: table[S] = OR of members inside S
  for (int bit = 0; bit < ground_size; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t s = 0; s < n; ++s) {
      if (s & b) table_[s] |= table_[s ^ b];
    }
  }
}

}  // namespace qlift
