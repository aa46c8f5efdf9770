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

// The quotient-lift relation between two matroids M and L on one ground
// set E. M is a quotient of L (L a lift of M) when some N on E ∪ X has
// N / X = M and N \ X = L; equivalently every circuit of L is a union of
// circuits of M. This header tests the criterion, builds N explicitly,
// and factors the relation into single-element steps.

#ifndef QLIFT_QUOTIENT_HPP_
#define QLIFT_QUOTIENT_HPP_

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qlift/axioms.hpp"
#include "qlift/matroid.hpp"

namespace qlift {

/// Each circuit D of L with the circuits of M inside it; their union is D.
struct QuotientCertificate {
  Matroid m;
  Matroid l;
  /// ρ(L) − ρ(M).
  int step_s = 0;
  std::vector<std::pair<SubsetMask, SetFamily>> coverings;

  std::string describe() const;
};

/// A circuit of L that is not a union of circuits of M.
struct QuotientRefusal {
  SubsetMask circuit;
  /// Elements of the circuit outside every circuit of M inside it.
  SubsetMask uncovered;
};

class QuotientResult {
 public:
  explicit QuotientResult(QuotientCertificate c) : value_(std::move(c)) {}
  explicit QuotientResult(QuotientRefusal r) : value_(r) {}

  bool holds() const { return value_.index() == 0; }
  const QuotientCertificate& certificate() const;
  const QuotientRefusal& refusal() const;

 private:
  std::variant<QuotientCertificate, QuotientRefusal> value_;
};

/// Throws GroundMismatch. A certificate with step_s ≤ 0 for distinct
/// matroids contradicts the rank-order claim and throws LemmaCounterexample.
QuotientResult certify_quotient(const Matroid& m, const Matroid& l);

/// N on E ∪ X with N / X = M and N \ X = L.
struct LiftWitness {
  Matroid m;
  Matroid l;
  Matroid n;
  std::vector<std::string> x_labels;
  /// The added circuits A ∪ Z, as masks over the ground of n.
  SetFamily x_family;
  bool verified = false;

  /// X as a mask over the ground of n.
  SubsetMask x_mask() const;
};

/// Builds N with circuits C(L) ∪ {A ∪ Z}, where A runs over the non-empty
/// cyclic sets of M independent in L and ∅ ≠ Z ⊆ X with
/// nullity_M(A) + |Z| = s + 1. New elements are appended after E in the
/// given order.
///
/// Precondition failures: GroundMismatch, EmptyExtension (no labels),
/// QuotientViolation, RankMismatch (|X| ≠ s), LabelClash, GroundTooLarge.
/// ConstructionFailure (with a replayable dump) means the construction
/// disproved itself.
LiftWitness lift_witness(const Matroid& m, const Matroid& l,
                         const std::vector<std::string>& x_labels);

struct PairVerification {
  bool holds = false;
  /// Empty when holds; otherwise which side differs.
  std::string discrepancy;
};

/// N / X == M and N \ X == L, compared as labelled circuit families.
PairVerification verify_pair(const Matroid& n, SubsetMask x, const Matroid& m,
                             const Matroid& l);

struct ComposedWitness {
  LiftWitness witness;
  QuotientCertificate certificate;
};

/// Witness for (M, K) from witnesses for (M, L) and (L, K) with disjoint
/// labels; the new element order is X then Y.
ComposedWitness compose_witnesses(const LiftWitness& first,
                                  const LiftWitness& second);

struct HomotopySequence {
  /// L_0 = M, ..., L_k = L.
  std::vector<Matroid> steps;
  std::vector<std::string> x_order;
};

/// L_i = (N / {x_{i+1}..x_k}) \ {x_1..x_i} for the lift witness N.
/// Every returned sequence has been checked: endpoints, ranks, and each
/// consecutive pair certifying with step 1. Otherwise FactorizationFailure.
HomotopySequence factor_homotopy(const Matroid& m, const Matroid& l,
                                 const std::vector<std::string>& x_labels);

struct RemarkResult {
  SetFamily family;
  AxiomReport report;
};

/// {C ∈ C(L) : c_M(C) ≤ j} ∪ {A ≠ ∅ cyclic in M, independent in L,
/// c_M(A) = j}, plus its strong circuit-axiom report. Requires a quotient
/// pair and 0 ≤ j ≤ s + 1.
RemarkResult remark_circuits(const Matroid& m, const Matroid& l, int j);

/// Per index i of a factorization, whether the nullity-filtered family
/// matches C(L_i) when read with j = i (literal) and j = i + 1 (shifted).
struct RemarkComparison {
  HomotopySequence sequence;
  std::vector<bool> literal_agrees;
  std::vector<bool> shifted_agrees;

  bool all_literal() const;
  bool all_shifted() const;
};

RemarkComparison compare_remark(const Matroid& m, const Matroid& l,
                                const std::vector<std::string>& x_labels);

/// Every cyclic set of M with nullity s + 1 must be dependent in L.
/// Violations carry axiom id "CYC" and the offending set.
AxiomReport bigcyclo_check(const Matroid& m, const Matroid& l);

/// `count` labels x1, x2, ... that avoid the ground's labels.
std::vector<std::string> fresh_labels(const GroundSet& ground, int count);

/// Replayable dump: each matroid as a named document, then comment lines.
std::string witness_dump(
    const std::vector<std::pair<std::string, const Matroid*>>& matroids,
    const std::vector<std::string>& notes);

}  // namespace qlift

#endif  // QLIFT_QUOTIENT_HPP_
