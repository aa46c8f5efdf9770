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

#ifndef QLIFT_MINORS_HPP_
#define QLIFT_MINORS_HPP_

#include "qlift/matroid.hpp"

namespace qlift {

/// N \ Z: the circuits of N avoiding Z, on E ∖ Z.
/// Throws DeletesEverything when Z = E.
Matroid delete_set(const Matroid& n, SubsetMask z);

/// N / Z: minimal non-empty traces of the circuits of N on E ∖ Z.
/// When the cross-check is enabled the result is compared against
/// dual(delete(dual(N), Z)) and a mismatch throws Error(Internal).
Matroid contract(const Matroid& n, SubsetMask z);

/// (N / C) \ D for disjoint C, D given as masks over the ground of N.
Matroid minor(const Matroid& n, SubsetMask contracted_set, SubsetMask deleted);

/// Contraction through duality only; the independent second route.
Matroid contract_via_dual(const Matroid& n, SubsetMask z);

/// Toggles the dual-route check inside contract(). Defaults to on in builds
/// without NDEBUG. Thread-safe.
void set_contraction_cross_check(bool enabled);
bool contraction_cross_check();

}  // namespace qlift

#endif  // QLIFT_MINORS_HPP_
