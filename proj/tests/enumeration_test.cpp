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

#include <sstream>

#include "oracle.hpp"
#include "qlift/enumeration.hpp"
#include "qlift/error.hpp"
#include "qlift/quotient.hpp"
#include "qlift/text_format.hpp"

using namespace qlift;
using oracle::F;
using oracle::S;

TEST_SUITE("enumeration") {

TEST_CASE("known counts of labelled matroids") {
  const std::vector<std::size_t> expected{2, 5, 16, 68, 406, 3807};
  for (int n = 1; n <= 6; ++n) {
    CHECK(catalog(n).entries.size() == expected[n - 1]);
  }
}

TEST_CASE("one-element catalog is free and loop") {
  const auto& e = catalog(1).entries;
  REQUIRE(e.size() == 2);
  CHECK(e[0].circuits().empty() != e[1].circuits().empty());
}

TEST_CASE("basis and circuit filters agree, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const MatroidCatalog a = enumerate_matroids(n, EnumerationMethod::BasisFilter);
    const MatroidCatalog b =
        enumerate_matroids(n, EnumerationMethod::CircuitFilter);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      CHECK(a.entries[i] == b.entries[i]);
    }
  }
}

TEST_CASE("catalog has no duplicates and is closed under duality") {
  for (int n = 1; n <= 5; ++n) {
    const MatroidCatalog& c = catalog(n);
    for (std::size_t i = 1; i < c.entries.size(); ++i) {
      CHECK(catalog_line(c.entries[i - 1]) < catalog_line(c.entries[i]));
    }
    for (const Matroid& m : c.entries) CHECK(c.index_of(m.dual()).has_value());
  }
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_matroids(5, EnumerationMethod::CircuitFilter),
                  Error);
  CHECK_THROWS_AS(enumerate_matroids(7, EnumerationMethod::BasisFilter), Error);
  CHECK_THROWS_AS(enumerate_matroids(0, EnumerationMethod::BasisFilter), Error);
}

TEST_CASE("witness search") {
  const Matroid u13 = Matroid::uniform(1, 3);
  const Matroid u23 = Matroid::uniform(2, 3);
  const std::optional<Matroid> n = witness_search(u13, u23, "x");
  REQUIRE(n.has_value());
  const GroundSet& g = n->ground();
  SetFamily expected;
  for (auto s : std::vector<std::vector<std::string>>{
           {"a", "b", "c"}, {"a", "b", "x"}, {"a", "c", "x"}, {"b", "c", "x"}}) {
    expected.insert(g.mask_of(s));
  }
  CHECK(n->circuits() == expected);
  CHECK_FALSE(witness_search(u23, u13, "x").has_value());
  const Matroid f2 = Matroid::free(2);
  CHECK_THROWS_AS(witness_search(f2, f2, "x"), Error);
}

TEST_CASE("pair catalog rows") {
  const auto records = pair_catalog(3);
  const auto& e = catalog(3).entries;
  const std::size_t i13 = *catalog(3).index_of(Matroid::uniform(1, 3));
  const std::size_t i23 = *catalog(3).index_of(Matroid::uniform(2, 3));
  for (const PairRecord& r : records) {
    if (r.m_index == r.l_index) {
      CHECK(r.quotient);
      CHECK(r.s == 0);
      CHECK(r.witness == WitnessStatus::NotApplicable);
    }
    if (r.m_index == i13 && r.l_index == i23) {
      CHECK(r.quotient);
      CHECK(r.s == 1);
      CHECK(r.witness == WitnessStatus::Ok);
    }
    if (r.m_index == i23 && r.l_index == i13) CHECK_FALSE(r.quotient);
    CHECK(r.witness != WitnessStatus::Failed);
  }
  CHECK(records.size() == e.size() * e.size());
  std::ostringstream out;
  write_pair_catalog(out, {records.front()});
  CHECK(out.str() == "0;0;quotient=1;s=0;witness=na\n");
}

}  // TEST_SUITE
