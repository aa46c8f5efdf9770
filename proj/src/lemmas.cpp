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

#include "qlift/lemmas.hpp"

#include <optional>

#include "qlift/error.hpp"
#include "qlift/quotient.hpp"

namespace qlift {

namespace {

[[noreturn]] void counterexample(const Matroid& m, const std::string& lemma,
                                 const std::string& what) {
  throw Error(ErrorKind::LemmaCounterexample, lemma + ": " + what,
              witness_dump({{"M", &m}}, {lemma, what}));
}

void require_cyclic_pair(const Matroid& m, SubsetMask a1, SubsetMask a2) {
  const GroundSet& g = m.ground();
  if (!g.contains_mask(a1) || !g.contains_mask(a2)) {
    throw Error(ErrorKind::PreconditionFailure, "set outside the ground set");
  }
  if (a1 == a2) {
    throw Error(ErrorKind::PreconditionFailure,
                "cyclic sets must be distinct");
  }
  if (!m.is_cyclic(a1) || !m.is_cyclic(a2)) {
    throw Error(ErrorKind::PreconditionFailure,
                g.format(m.is_cyclic(a1) ? a2 : a1) + " is not cyclic");
  }
  if (a2.subset_of(a1)) {
    throw Error(ErrorKind::PreconditionFailure,
                g.format(a2) + " lies inside " + g.format(a1) +
                    "; the union adds nothing to the first set");
  }
}

}  // namespace

FundamentalFamily lemma_span_witness(const Matroid& m, SubsetMask a) {
  if (!m.ground().contains_mask(a) || !m.is_dependent(a)) {
    throw Error(ErrorKind::NotDependent,
                m.ground().format(a) + " is independent");
  }
  const SubsetMask basis = m.maximal_independent(a);
  FundamentalFamily family = m.fundamental_family(basis, a - basis);
  const std::string where = "span witness for " + m.ground().format(a);
  if (family.union_all() != m.cyclic_part(a)) {
    counterexample(m, where, "fundamental union " +
                                 m.ground().format(family.union_all()) +
                                 " differs from circuit union " +
                                 m.ground().format(m.cyclic_part(a)));
  }
  if (family.size() != m.nullity(a)) {
    counterexample(m, where, "family size differs from nullity");
  }
  return family;
}

SubsetMask cyclic_extension(const Matroid& m, SubsetMask a1, SubsetMask a2) {
  require_cyclic_pair(m, a1, a2);
  const SubsetMask both = a1 | a2;
  const SubsetMask inner = m.maximal_independent(a1);
  const SubsetMask outer = m.maximal_independent(both, inner);
  const std::string where =
      "cyclic extension of " + m.ground().format(a1) + " by " +
      m.ground().format(a2);
  const SubsetMask roots = (a2 - a1) - outer;
  if (roots.empty()) counterexample(m, where, "no root outside the first set");
  const SubsetMask grown = a1 | m.fundamental_circuit(outer, roots.first());
  if (!grown.subset_of(both) || !m.is_cyclic(grown) ||
      m.nullity(grown) != m.nullity(a1) + 1) {
    counterexample(m, where, "constructed set " + m.ground().format(grown) +
                                 " fails the postcondition");
  }
  return grown;
}

SubsetMask cyclic_elimination(const Matroid& m, SubsetMask a1, SubsetMask a2,
                              int a) {
  require_cyclic_pair(m, a1, a2);
  if (a < 0 || !a1.contains(a) || !a2.contains(a)) {
    throw Error(ErrorKind::PreconditionFailure,
                "eliminated element must lie in both sets");
  }
  const int target = m.nullity(a1);
  const SubsetMask pool = (a1 | a2).without(a);
  auto good = [&](SubsetMask s) {
    return !s.contains(a) && s.subset_of(a1 | a2) && m.is_cyclic(s) &&
           m.nullity(s) == target;
  };

  // fundamental circuits over the cyclic part of the pool; any `target` of
  // them span a cyclic set of exactly that nullity
  const SubsetMask cyclic = m.cyclic_part(pool);
  const SubsetMask basis = m.maximal_independent(cyclic);
  const std::vector<int> roots = (cyclic - basis).elements();
  if (static_cast<int>(roots.size()) >= target) {
    SubsetMask built;
    for (int i = 0; i < target; ++i) {
      built |= m.fundamental_circuit(basis, roots[i]);
    }
    if (good(built)) return built;
  }

  std::optional<SubsetMask> found;
  for_each_subset(pool, [&](SubsetMask s) {
    if (!found && good(s)) found = s;
  });
  if (!found) {
    counterexample(m,
                   "cyclic elimination of " + m.ground().label(a) + " from " +
                       m.ground().format(a1) + ", " + m.ground().format(a2),
                   "no cyclic subset of nullity " + std::to_string(target));
  }
  return *found;
}

BaseFamilyWitness base_family_witness(const Matroid& m, SubsetMask a,
                                      SubsetMask d_circuit, int d) {
  const GroundSet& g = m.ground();
  if (!g.contains_mask(a) || !m.is_cyclic(a)) {
    throw Error(ErrorKind::PreconditionFailure, g.format(a) + " is not cyclic");
  }
  if (!m.is_circuit(d_circuit) || !d_circuit.subset_of(a) || d < 0 ||
      !d_circuit.contains(d)) {
    throw Error(ErrorKind::PreconditionFailure,
                "need d ∈ D ⊆ A with D a circuit");
  }
  const SubsetMask independent =
      m.maximal_independent(a, d_circuit.without(d));
  const SubsetMask basis =
      m.maximal_independent(m.ground().full(), independent);
  FundamentalFamily family = m.fundamental_family(independent, a - independent);

  const std::string where = "base family for " + g.format(a) + ", circuit " +
                            g.format(d_circuit) + ", element " + g.label(d);
  if (basis.size() != m.rank() || basis.contains(d)) {
    counterexample(m, where, "basis " + g.format(basis) + " is unsuitable");
  }
  if (family.union_all() != a || family.size() != m.nullity(a) ||
      !family.family().contains(d_circuit)) {
    counterexample(m, where, "fundamental family fails the postcondition");
  }
  for (const auto& [x, c] : family.circuits) {
    if (m.fundamental_circuit(basis, x) != c) {
      counterexample(m, where, "circuit of " + g.label(x) +
                                   " is not fundamental for the basis");
    }
  }
  return BaseFamilyWitness{basis, std::move(family)};
}

}  // namespace qlift
