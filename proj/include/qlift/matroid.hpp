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

#ifndef QLIFT_MATROID_HPP_
#define QLIFT_MATROID_HPP_

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qlift/cover_index.hpp"
#include "qlift/sets.hpp"

namespace qlift {

/// Largest ground set cyclic_sets() scans without a nullity filter.
inline constexpr int kCyclicScanLimit = 16;

/// Fundamental circuits C(x, I) of the roots x over an independent set I.
struct FundamentalFamily {
  SubsetMask base_independent;
  SubsetMask roots;
  /// (root, C(root, I)) in increasing root order.
  std::vector<std::pair<int, SubsetMask>> circuits;

  int size() const { return static_cast<int>(circuits.size()); }
  SubsetMask circuit_of(int root) const;
  SubsetMask union_all() const;
  SetFamily family() const;
};

/// A matroid held by its circuit clutter. Everything else (rank,
/// independence, bases) is derived. Values are immutable once built.
class Matroid {
 public:
  /// Validates AC0, AC1 and AC2; throws EmptyCircuit, NotClutter or
  /// EliminationFailure with the first violating witness.
  static Matroid from_circuits(GroundSet ground, SetFamily circuits);
  /// Throws EmptyBasisFamily, UnequalBasisSizes or ExchangeFailure.
  static Matroid from_bases(GroundSet ground, const SetFamily& bases);

  static Matroid uniform(int rank, int n);
  static Matroid uniform(int rank, const GroundSet& ground);
  static Matroid free(int n);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  const SetFamily& circuits() const { return circuits_; }

  /// ρ(M).
  int rank() const { return rank_; }
  int rank(SubsetMask a) const;
  /// |A| − ρ(A); the cyclomatic number of A.
  int nullity(SubsetMask a) const { return a.size() - rank(a); }

  bool is_independent(SubsetMask a) const { return !cover_->any_inside(a); }
  bool is_dependent(SubsetMask a) const { return cover_->any_inside(a); }
  bool is_circuit(SubsetMask a) const { return circuits_.contains(a); }
  /// Union of the circuits inside A.
  SubsetMask cyclic_part(SubsetMask a) const {
    return cover_->union_inside(a);
  }
  /// A equals the union of the circuits it contains (∅ included).
  bool is_cyclic(SubsetMask a) const { return cyclic_part(a) == a; }

  /// Greedy maximal independent subset of `a` containing `start` (which must
  /// be independent and inside `a`), scanning `a` in ground order.
  SubsetMask maximal_independent(SubsetMask a, SubsetMask start = {}) const;
  /// Same, scanning elements in the given order.
  SubsetMask maximal_independent(SubsetMask a, SubsetMask start,
                                 std::span<const int> order) const;

  SetFamily bases() const;
  /// Matroid whose bases are the complements of the bases of this one.
  Matroid dual() const;

  /// The unique circuit C with x ∈ C ⊆ I + x. Throws NotIndependent,
  /// PreconditionFailure (x ∈ I) or StillIndependent.
  SubsetMask fundamental_circuit(SubsetMask independent, int x) const;
  FundamentalFamily fundamental_family(SubsetMask independent,
                                       SubsetMask roots) const;

  /// Every cyclic set, optionally only those of the given nullity. Throws
  /// GroundTooLarge above kCyclicScanLimit without a filter.
  SetFamily cyclic_sets(std::optional<int> nullity_filter = std::nullopt) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.circuits_ == b.circuits_;
  }

 private:
  Matroid(GroundSet ground, SetFamily circuits,
          std::shared_ptr<const CoverIndex> cover);

  GroundSet ground_;
  SetFamily circuits_;
  std::shared_ptr<const CoverIndex> cover_;
  int rank_ = 0;
};

}  // namespace qlift

#endif  // QLIFT_MATROID_HPP_
