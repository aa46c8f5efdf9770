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


#include <doctest.h>

#include "oracle.hpp"
#include "qlift/enumeration.hpp"
#include "qlift/error.hpp"
#include "qlift/lemmas.hpp"
#include "qlift/sweeps.hpp"

using namespace qlift;
using oracle::F;
using oracle::S;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_SUITE("lemmas") {

TEST_CASE("span witness") {
  const Matroid u24 = Matroid::uniform(2, 4);
  const FundamentalFamily f = lemma_span_witness(u24, S("abcd"));
  CHECK(f.base_independent == S("ab"));
  CHECK(f.family() == F({"abc", "abd"}));
  CHECK(f.union_all() == S("abcd"));

  const FundamentalFamily g = lemma_span_witness(Matroid::uniform(1, 3), S("abc"));
  CHECK(g.family() == F({"ab", "ac"}));
  CHECK(kind_of([] { lemma_span_witness(Matroid::uniform(2, 3), S("ab")); }) ==
        ErrorKind::NotDependent);
}

TEST_CASE("cyclic extension") {
  const Matroid u13 = Matroid::uniform(1, 3);
  CHECK(cyclic_extension(u13, S("ab"), S("bc")) == S("abc"));
  const Matroid two_loops =
      Matroid::from_circuits(GroundSet::letters(2), F({"a", "b"}));
  const SubsetMask ab = cyclic_extension(two_loops, S("a"), S("b"));
  CHECK(ab == S("ab"));
  CHECK(two_loops.nullity(ab) == 2);
  CHECK(cyclic_extension(Matroid::uniform(2, 4), S("abc"), S("abd")) ==
        S("abcd"));
  CHECK(kind_of([&] { cyclic_extension(u13, S("abc"), S("ab")); }) ==
        ErrorKind::PreconditionFailure);
  CHECK(kind_of([&] { cyclic_extension(u13, S("a"), S("ab")); }) ==
        ErrorKind::PreconditionFailure);
}

TEST_CASE("cyclic elimination") {
  const Matroid u13 = Matroid::uniform(1, 3);
  CHECK(cyclic_elimination(u13, S("ab"), S("bc"), 1) == S("ac"));
  CHECK(cyclic_elimination(Matroid::uniform(2, 4), S("abc"), S("bcd"), 1) ==
        S("acd"));
  CHECK(kind_of([&] { cyclic_elimination(u13, S("ab"), S("ab"), 0); }) ==
        ErrorKind::PreconditionFailure);
  CHECK(kind_of([&] { cyclic_elimination(u13, S("ab"), S("bc"), 0); }) ==
        ErrorKind::PreconditionFailure);
}

TEST_CASE("nested cyclic pairs have no extension or elimination") {
  // U13: abc is cyclic of nullity 2 and contains ab; the union is abc, so
  // no cyclic set of nullity 3 exists, and abc - a = bc has nullity 1.
  const Matroid u13 = Matroid::uniform(1, 3);
  CHECK(u13.cyclic_sets(3).empty());
  CHECK(u13.nullity(S("bc")) == 1);
}

TEST_CASE("base family") {
  const Matroid u24 = Matroid::uniform(2, 4);
  const BaseFamilyWitness w = base_family_witness(u24, S("abcd"), S("abc"), 0);
  CHECK(w.basis == S("bc"));
  CHECK(w.family.family() == F({"abc", "bcd"}));
  CHECK(w.family.union_all() == S("abcd"));

  const BaseFamilyWitness v =
      base_family_witness(Matroid::uniform(1, 3), S("abc"), S("ab"), 0);
  CHECK(v.basis.contains(1));
  CHECK(v.family.family() == F({"ab", "bc"}));

  const BaseFamilyWitness t =
      base_family_witness(Matroid::uniform(2, 3), S("abc"), S("abc"), 2);
  CHECK(t.basis == S("ab"));
  CHECK(t.family.family() == F({"abc"}));
  CHECK(kind_of([&] {
          base_family_witness(u24, S("abcd"), S("ab"), 0);
        }) == ErrorKind::PreconditionFailure);
}

TEST_CASE("lemma results satisfy their postconditions under brute force") {
  for (int n = 1; n <= 4; ++n) {
    for (const Matroid& m : catalog(n).entries) {
      const oracle::Masks c = oracle::masks(m.circuits());
      const SetFamily cyclic = m.cyclic_sets();
      for (SubsetMask a1 : cyclic) {
        for (SubsetMask a2 : cyclic) {
          if (a1 == a2 || a2.subset_of(a1)) continue;
          const SubsetMask grown = cyclic_extension(m, a1, a2);
          CHECK(oracle::cyclic(c, grown.bits()));
          CHECK(a1.proper_subset_of(grown));
          CHECK(grown.subset_of(a1 | a2));
          CHECK(grown.size() - oracle::rank(c, grown.bits()) ==
                a1.size() - oracle::rank(c, a1.bits()) + 1);
          for (int a : (a1 & a2).elements()) {
            const SubsetMask e = cyclic_elimination(m, a1, a2, a);
            CHECK_FALSE(e.contains(a));
            CHECK(oracle::cyclic(c, e.bits()));
            CHECK(e.size() - oracle::rank(c, e.bits()) ==
                  a1.size() - oracle::rank(c, a1.bits()));
          }
        }
      }
    }
  }
}

TEST_CASE("every lemma holds on every matroid, n <= 4") {
  LemmaTally total;
  for (int n = 1; n <= 4; ++n) {
    for (const Matroid& m : catalog(n).entries) total += check_lemmas_on(m);
  }
  CHECK(total.span > 0);
  CHECK(total.extension > 0);
  CHECK(total.elimination > 0);
  CHECK(total.base_family > 0);
}

}  // TEST_SUITE
