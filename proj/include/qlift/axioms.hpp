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

// Exhaustive verifiers for the circuit, independence and basis axiom
// systems. They work on raw families, so they can vet candidate circuit
// families before a Matroid exists.
//
// Axiom ids used in reports:
//   AC0  empty set is a circuit              witness: sets={∅}
//   AC1  one circuit contains another        witness: sets={C1, C2}
//   AC2  elimination fails                   witness: sets={C1, C2}, elements={e}
//   AC2! strong elimination fails            witness: sets={C1, C2}, elements={e, d}
//   AI0  ∅ is not independent                witness: none
//   AI1  not closed under removal            witness: sets={X}, elements={x}
//   AI2  augmentation fails                  witness: sets={X, Y}
//   BX0  empty basis family                  witness: none
//   BX1  bases of different sizes            witness: sets={B1, B2}
//   BX2  basis exchange fails                witness: sets={B1, B2}, elements={x}

#ifndef QLIFT_AXIOMS_HPP_
#define QLIFT_AXIOMS_HPP_

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "qlift/sets.hpp"

namespace qlift {

class CoverIndex;

struct Violation {
  std::string axiom;
  std::vector<SubsetMask> sets;
  std::vector<int> elements;

  std::string describe(const GroundSet& ground) const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct AxiomReport {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  /// One line per violation, `ok` when there are none.
  std::string describe(const GroundSet& ground) const;
};

inline constexpr std::size_t kAllViolations =
    std::numeric_limits<std::size_t>::max();

/// AC0, AC1, AC2 over every triple; `strong` adds AC2! for every d ∈ C1∖C2.
/// Violations are reported in scan order, which is lexicographic in the
/// canonical family order, so the first one is the least.
AxiomReport check_circuit_axioms(const GroundSet& ground,
                                 const SetFamily& family, bool strong,
                                 std::size_t max_violations = kAllViolations);
AxiomReport check_circuit_axioms(const GroundSet& ground,
                                 const SetFamily& family, bool strong,
                                 const CoverIndex& index,
                                 std::size_t max_violations);

AxiomReport check_independence_axioms(
    const GroundSet& ground, const SetFamily& family,
    std::size_t max_violations = kAllViolations);

AxiomReport check_basis_exchange(const GroundSet& ground,
                                 const SetFamily& family,
                                 std::size_t max_violations = kAllViolations);

/// Re-runs the single test a violation records; true when it still fails.
/// `family` is the family the report was produced from.
bool replay_violation(const SetFamily& family, const Violation& v);

/// All subsets of the ground set containing no member of `circuits`.
SetFamily independent_sets_of(const GroundSet& ground,
                              const SetFamily& circuits);

}  // namespace qlift

#endif  // QLIFT_AXIOMS_HPP_
