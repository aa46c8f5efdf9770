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

// Constructive checkers for the facts about cyclic sets that the lift
// construction rests on. Each returns a witness and verifies it before
// returning; a witness that fails verification is thrown as
// LemmaCounterexample with a replayable dump.

#ifndef QLIFT_LEMMAS_HPP_
#define QLIFT_LEMMAS_HPP_

#include "qlift/matroid.hpp"

namespace qlift {

/// For dependent A: greedy maximal independent I ⊆ A and the fundamental
/// family over A ∖ I. Checks that its union is the union of all circuits
/// inside A and that it has nullity(A) members. Throws NotDependent.
FundamentalFamily lemma_span_witness(const Matroid& m, SubsetMask a);

/// Cyclic A ⊆ A1 ∪ A2 with nullity(A) = nullity(A1) + 1. Requires distinct
/// cyclic sets with A2 ⊄ A1; built as A1 ∪ C(q, I') for a maximal
/// independent I' of A1 ∪ A2 extending one of A1 and a root q ∈ A2 ∖ A1.
SubsetMask cyclic_extension(const Matroid& m, SubsetMask a1, SubsetMask a2);

/// Cyclic A with a ∉ A ⊆ A1 ∪ A2 and nullity(A) = nullity(A1). Requires
/// distinct cyclic sets with A2 ⊄ A1 and a ∈ A1 ∩ A2. Built from the
/// fundamental family of (A1 ∪ A2) − a; falls back to a full scan of its
/// cyclic subsets.
SubsetMask cyclic_elimination(const Matroid& m, SubsetMask a1, SubsetMask a2,
                              int a);

struct BaseFamilyWitness {
  SubsetMask basis;
  FundamentalFamily family;
};

/// For cyclic A, a circuit D ⊆ A and d ∈ D: a basis B with d ∉ B and a
/// fundamental family over an independent I ⊆ B with D among its circuits
/// and union A.
BaseFamilyWitness base_family_witness(const Matroid& m, SubsetMask a,
                                      SubsetMask d_circuit, int d);

}  // namespace qlift

#endif  // QLIFT_LEMMAS_HPP_
