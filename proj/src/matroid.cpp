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

#include "qlift/matroid.hpp"


#include "qlift/axioms.hpp"
#include "qlift/error.hpp"

namespace qlift {

namespace {

// Largest ground from_bases() handles; it tabulates every subset.
constexpr int kBasisTableLimit = 20;

ErrorKind circuit_error_kind(const std::string& axiom) {
  if (axiom == "AC0") return ErrorKind::EmptyCircuit;
  if (axiom == "AC1") return ErrorKind::NotClutter;
  return ErrorKind::EliminationFailure;
}

ErrorKind basis_error_kind(const std::string& axiom) {
  if (axiom == "BX0") return ErrorKind::EmptyBasisFamily;
  if (axiom == "BX1") return ErrorKind::UnequalBasisSizes;
  return ErrorKind::ExchangeFailure;
}

// Next integer with the same popcount (Gosper).
SubsetMask::Bits next_combination(SubsetMask::Bits v) {
  const SubsetMask::Bits t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

SubsetMask FundamentalFamily::circuit_of(int root) const {
  for (const auto& [x, c] : circuits) {
    if (x == root) return c;
  }
  throw Error(ErrorKind::PreconditionFailure,
              "element " + std::to_string(root) + " is not a root");
}

SubsetMask FundamentalFamily::union_all() const {
  SubsetMask u;
  for (const auto& entry : circuits) u |= entry.second;
  return u;
}

SetFamily FundamentalFamily::family() const {
  std::vector<SubsetMask> out;
  for (const auto& entry : circuits) out.push_back(entry.second);
  return SetFamily(std::move(out));
}

Matroid::Matroid(GroundSet ground, SetFamily circuits,
                 std::shared_ptr<const CoverIndex> cover)
    : ground_(std::move(ground)),
      circuits_(std::move(circuits)),
      cover_(std::move(cover)) {
  rank_ = maximal_independent(ground_.full()).size();
}

Matroid Matroid::from_circuits(GroundSet ground, SetFamily circuits) {
  auto cover = std::make_shared<const CoverIndex>(ground.size(), circuits);
  const AxiomReport report =
      check_circuit_axioms(ground, circuits, /*strong=*/false, *cover, 1);
  if (!report.passed()) {
    const Violation& v = report.violations.front();
    throw Error(circuit_error_kind(v.axiom), v.describe(ground));
  }
  return Matroid(std::move(ground), std::move(circuits), std::move(cover));
}

Matroid Matroid::from_bases(GroundSet ground, const SetFamily& bases) {
  const AxiomReport report = check_basis_exchange(ground, bases, 1);
  if (!report.passed()) {
    const Violation& v = report.violations.front();
    throw Error(basis_error_kind(v.axiom), v.describe(ground));
  }
  const int n = ground.size();
  if (n > kBasisTableLimit) {
    throw Error(ErrorKind::GroundTooLarge,
                "from_bases supports at most " +
                    std::to_string(kBasisTableLimit) + " elements");
  }
  // independent[S] = S lies in some basis (down-closure of the bases)
  const std::size_t count = std::size_t{1} << n;
  std::vector<char> independent(count, 0);
  for (SubsetMask b : bases) independent[b.bits()] = 1;
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t s = 0; s < count; ++s) {
      if (!(s & b) && independent[s | b]) independent[s] = 1;
    }
  }
  std::vector<SubsetMask> circuits;
  for (std::size_t s = 0; s < count; ++s) {
    if (independent[s]) continue;
    const SubsetMask set(static_cast<SubsetMask::Bits>(s));
    bool minimal = true;
    for (int e : set.elements()) {
      if (!independent[set.without(e).bits()]) {
        minimal = false;
        break;
      }
    }
    if (minimal) circuits.push_back(set);
  }
  return from_circuits(std::move(ground), SetFamily(std::move(circuits)));
}

Matroid Matroid::uniform(int rank, const GroundSet& ground) {
  std::vector<SubsetMask> circuits;
  for_each_subset(ground.full(), [&](SubsetMask s) {
    if (s.size() == rank + 1) circuits.push_back(s);
  });
  return from_circuits(ground, SetFamily(std::move(circuits)));
}

Matroid Matroid::uniform(int rank, int n) {
  return uniform(rank, GroundSet::letters(n));
}

Matroid Matroid::free(int n) {
  return from_circuits(GroundSet::letters(n), SetFamily());
}

int Matroid::rank(SubsetMask a) const {
  return maximal_independent(a).size();
}

SubsetMask Matroid::maximal_independent(SubsetMask a, SubsetMask start) const {
  SubsetMask basis = start;
  for (int e : (a - start).elements()) {
    if (!cover_->any_inside(basis.with(e))) basis = basis.with(e);
  }
  return basis;
}

SubsetMask Matroid::maximal_independent(SubsetMask a, SubsetMask start,
                                        std::span<const int> order) const {
  SubsetMask basis = start;
  for (int e : order) {
    if (!a.contains(e) || basis.contains(e)) continue;
    if (!cover_->any_inside(basis.with(e))) basis = basis.with(e);
  }
  return basis;
}

SetFamily Matroid::bases() const {
  std::vector<SubsetMask> out;
  const int n = size();
  if (rank_ == 0) return SetFamily{SubsetMask()};
  const SubsetMask::Bits limit = ground_.full().bits();
  for (SubsetMask::Bits v = SubsetMask::prefix(rank_).bits();
       v <= limit && v != 0; v = next_combination(v)) {
    if (static_cast<int>(std::bit_width(v)) > n) break;
    if (is_independent(SubsetMask(v))) out.push_back(SubsetMask(v));
  }
  return SetFamily(std::move(out));
}

Matroid Matroid::dual() const {
  std::vector<SubsetMask> complements;
  for (SubsetMask b : bases()) complements.push_back(ground_.full() - b);
  return from_bases(ground_, SetFamily(std::move(complements)));
}

SubsetMask Matroid::fundamental_circuit(SubsetMask independent, int x) const {
  if (!is_independent(independent)) {
    throw Error(ErrorKind::NotIndependent,
                ground_.format(independent) + " is dependent");
  }
  if (independent.contains(x)) {
    throw Error(ErrorKind::PreconditionFailure,
                ground_.label(x) + " already lies in " +
                    ground_.format(independent));
  }
  const SubsetMask span = independent.with(x);
  std::optional<SubsetMask> found;
  for (SubsetMask c : circuits_) {
    if (!c.contains(x) || !c.subset_of(span)) continue;
    if (found) {
      throw Error(ErrorKind::Internal,
                  "two fundamental circuits " + ground_.format(*found) +
                      " and " + ground_.format(c) + " in " +
                      ground_.format(span));
    }
    found = c;
  }
  if (!found) {
    throw Error(ErrorKind::StillIndependent,
                ground_.format(span) + " is independent");
  }
  return *found;
}

FundamentalFamily Matroid::fundamental_family(SubsetMask independent,
                                              SubsetMask roots) const {
  FundamentalFamily out{independent, roots, {}};
  for (int x : roots.elements()) {
    out.circuits.emplace_back(x, fundamental_circuit(independent, x));
  }
  return out;
}

SetFamily Matroid::cyclic_sets(std::optional<int> nullity_filter) const {
  if (size() > kCyclicScanLimit && !nullity_filter) {
    throw Error(ErrorKind::GroundTooLarge,
                "cyclic set enumeration needs a nullity filter above " +
                    std::to_string(kCyclicScanLimit) + " elements");
  }
  std::vector<SubsetMask> out;
  for_each_subset(ground_.full(), [&](SubsetMask s) {
    if (!is_cyclic(s)) return;
    if (nullity_filter && nullity(s) != *nullity_filter) return;
    out.push_back(s);
  });
  return SetFamily(std::move(out));
}

}  // namespace qlift
