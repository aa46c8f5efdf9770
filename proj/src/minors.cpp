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

#include "qlift/minors.hpp"

#include <atomic>

#include "qlift/error.hpp"

namespace qlift {

namespace {

#ifdef NDEBUG
std::atomic<bool> g_cross_check{false};
#else
std::atomic<bool> g_cross_check{true};
#endif

SubsetMask checked_remainder(const Matroid& n, SubsetMask z) {
  if (!n.ground().contains_mask(z)) {
    throw Error(ErrorKind::GroundMismatch,
                "minor set lies outside the ground set");
  }
  const SubsetMask keep = n.ground().full() - z;
  if (keep.empty()) {
    throw Error(ErrorKind::DeletesEverything,
                "removing " + n.ground().format(z) +
                    " leaves an empty ground set");
  }
  return keep;
}

}  // namespace

void set_contraction_cross_check(bool enabled) { g_cross_check = enabled; }
bool contraction_cross_check() { return g_cross_check; }

Matroid delete_set(const Matroid& n, SubsetMask z) {
  const SubsetMask keep = checked_remainder(n, z);
  std::vector<SubsetMask> circuits;
  for (SubsetMask c : n.circuits()) {
    if (c.subset_of(keep)) circuits.push_back(compress(c, keep));
  }
  return Matroid::from_circuits(n.ground().restrict(keep),
                                SetFamily(std::move(circuits)));
}

Matroid contract(const Matroid& n, SubsetMask z) {
  const SubsetMask keep = checked_remainder(n, z);
  std::vector<SubsetMask> traces;
  for (SubsetMask c : n.circuits()) {
    const SubsetMask t = trace(c, keep);
    // circuits inside Z leave an empty trace, which is never a circuit
    if (!t.empty()) traces.push_back(compress(t, keep));
  }
  Matroid result = Matroid::from_circuits(
      n.ground().restrict(keep), minimal_members(SetFamily(std::move(traces))));
  if (g_cross_check) {
    const Matroid other = contract_via_dual(n, z);
    if (!(other == result)) {
      throw Error(ErrorKind::Internal,
                  "trace contraction disagrees with dual-route contraction");
    }
  }
  return result;
}

Matroid minor(const Matroid& n, SubsetMask contracted_set,
              SubsetMask deleted) {
  if (contracted_set.intersects(deleted)) {
    throw Error(ErrorKind::PreconditionFailure,
                "contracted and deleted sets overlap");
  }
  checked_remainder(n, contracted_set | deleted);
  const Matroid contracted =
      contracted_set.empty() ? n : contract(n, contracted_set);
  if (deleted.empty()) return contracted;
  const SubsetMask keep = n.ground().full() - contracted_set;
  return delete_set(contracted, compress(deleted, keep));
}

Matroid contract_via_dual(const Matroid& n, SubsetMask z) {
  return delete_set(n.dual(), z).dual();
}

}  // namespace qlift
