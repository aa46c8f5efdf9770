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

#ifndef QLIFT_SETS_HPP_
#define QLIFT_SETS_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qlift {

/// Largest supported ground set; every subset fits one 32-bit word.
inline constexpr int kMaxGroundSize = 24;

/// A subset of a ground set, stored as a bit mask in ground order.
class SubsetMask {
 public:
  using Bits = std::uint32_t;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(Bits bits) : bits_(bits) {}

  static constexpr SubsetMask single(int element) {
    return SubsetMask(Bits{1} << element);
  }
  /// The first `n` elements of the ground order.
  static constexpr SubsetMask prefix(int n) {
    return SubsetMask(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1);
  }
  static constexpr SubsetMask of(std::initializer_list<int> elements) {
    Bits b = 0;
    for (int e : elements) b |= Bits{1} << e;
    return SubsetMask(b);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int element) const { return (bits_ >> element) & 1U; }
  constexpr bool subset_of(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool proper_subset_of(SubsetMask other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(SubsetMask other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Lowest element, or -1 for the empty set.
  constexpr int first() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  constexpr SubsetMask with(int element) const {
    return SubsetMask(bits_ | (Bits{1} << element));
  }
  constexpr SubsetMask without(int element) const {
    return SubsetMask(bits_ & ~(Bits{1} << element));
  }

  std::vector<int> elements() const;

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ | b.bits_);
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & ~b.bits_);
  }
  SubsetMask& operator|=(SubsetMask o) {
    bits_ |= o.bits_;
    return *this;
  }
  SubsetMask& operator&=(SubsetMask o) {
    bits_ &= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;

  /// Canonical order: by cardinality, then by numeric mask value.
  friend constexpr bool canonical_less(SubsetMask a, SubsetMask b) {
    const int sa = a.size();
    const int sb = b.size();
    return sa != sb ? sa < sb : a.bits_ < b.bits_;
  }

 private:
  Bits bits_ = 0;
};

/// Calls `fn(subset)` for every subset of `set`, including the empty set
/// and `set` itself, in increasing numeric order.
template <typename Fn>
void for_each_subset(SubsetMask set, Fn&& fn) {
  const SubsetMask::Bits full = set.bits();
  SubsetMask::Bits sub = 0;
  while (true) {
    fn(SubsetMask(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

/// Packs the bits of `mask` selected by `keep` into the low positions.
SubsetMask compress(SubsetMask mask, SubsetMask keep);
/// Inverse of compress: spreads low bits of `packed` onto the positions of
/// `keep`.
SubsetMask expand(SubsetMask packed, SubsetMask keep);

/// Ordered, duplicate-free element labels. Labels are non-empty tokens over
/// [A-Za-z0-9_].
class GroundSet {
 public:
  /// Throws Error(InvalidGround) on an empty, oversized, or duplicated list.
  explicit GroundSet(std::vector<std::string> labels);
  GroundSet(std::initializer_list<std::string_view> labels);

  /// Single-letter labels a, b, c, ... (then e26, e27, ...).
  static GroundSet letters(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int element) const { return labels_[element]; }
  std::optional<int> index_of(std::string_view label) const;
  SubsetMask full() const { return SubsetMask::prefix(size()); }
  bool contains_mask(SubsetMask m) const { return m.subset_of(full()); }

  /// Ground set restricted to `keep`, preserving relative order.
  GroundSet restrict(SubsetMask keep) const;
  /// This ground set followed by `extra` labels; throws on clashes.
  GroundSet extended(const std::vector<std::string>& extra) const;

  /// Looks up each label; throws Error(UnknownLabel).
  SubsetMask mask_of(const std::vector<std::string>& labels) const;
  /// Renders `{a,b,c}`.
  std::string format(SubsetMask m) const;
  /// Renders labels joined by `sep`.
  std::string join(SubsetMask m, std::string_view sep) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

bool is_valid_label(std::string_view label);

/// Duplicate-free collection of subsets kept in canonical order
/// (cardinality, then mask value).
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::initializer_list<SubsetMask> members);
  explicit SetFamily(std::vector<SubsetMask> members);

  const std::vector<SubsetMask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  SubsetMask operator[](std::size_t i) const { return members_[i]; }

  bool contains(SubsetMask m) const;
  /// Returns false if already present.
  bool insert(SubsetMask m);
  void insert_all(const SetFamily& other);

  /// Union of all members.
  SubsetMask support() const;
  /// Members contained in `set`.
  SetFamily inside(SubsetMask set) const;
  /// True when no member contains another.
  bool is_clutter() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::vector<SubsetMask> members_;
};

/// Members with no proper subset in the family.
SetFamily minimal_members(const SetFamily& family);
/// Members with no proper superset in the family.
SetFamily maximal_members(const SetFamily& family);

/// Y ∩ Z.
constexpr SubsetMask trace(SubsetMask y, SubsetMask z) { return y & z; }

}  // namespace qlift

#endif  // QLIFT_SETS_HPP_
