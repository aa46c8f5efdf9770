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

#include <random>

#include "oracle.hpp"
#include "qlift/error.hpp"
#include "qlift/sets.hpp"

using namespace qlift;
using oracle::F;
using oracle::S;

TEST_SUITE("sets") {

TEST_CASE("subset mask basics") {
  const SubsetMask abc = S("abc");
  CHECK(abc.size() == 3);
  CHECK(abc.contains(1));
  CHECK_FALSE(abc.contains(3));
  CHECK(S("ab").proper_subset_of(abc));
  CHECK_FALSE(abc.proper_subset_of(abc));
  CHECK(abc.first() == 0);
  CHECK(SubsetMask().first() == -1);
  CHECK((abc - S("b")) == S("ac"));
  CHECK(abc.elements() == std::vector<int>{0, 1, 2});
  CHECK(SubsetMask::prefix(4) == S("abcd"));
}

TEST_CASE("for_each_subset visits every subset once") {
  std::vector<SubsetMask> seen;
  for_each_subset(S("acd"), [&](SubsetMask s) { seen.push_back(s); });
  CHECK(seen.size() == 8);
  CHECK(seen.front() == SubsetMask());
  CHECK(seen.back() == S("acd"));
  for (SubsetMask s : seen) CHECK(s.subset_of(S("acd")));
}

TEST_CASE("compress and expand are inverse on the kept elements") {
  const SubsetMask keep = S("bdf");
  CHECK(compress(S("bf"), keep) == S("ac"));
  CHECK(expand(S("ac"), keep) == S("bf"));
  for_each_subset(keep, [&](SubsetMask s) {
    CHECK(expand(compress(s, keep), keep) == s);
  });
}

TEST_CASE("set family keeps canonical order without duplicates") {
  const SetFamily f{S("abc"), S("a"), S("bc"), S("a"), S("b")};
  REQUIRE(f.size() == 4);
  CHECK(f[0] == S("a"));
  CHECK(f[1] == S("b"));
  CHECK(f[2] == S("bc"));
  CHECK(f[3] == S("abc"));
  CHECK(f.contains(S("bc")));
  CHECK_FALSE(f.contains(S("ac")));
  CHECK(f.support() == S("abc"));
  CHECK(f.inside(S("bc")) == F({"b", "bc"}));
  CHECK_FALSE(f.is_clutter());
  CHECK(F({"ab", "cd"}).is_clutter());
}

TEST_CASE("minimal members") {
  CHECK(minimal_members(F({"ab", "abc", "bc"})) == F({"ab", "bc"}));
  CHECK(minimal_members(SetFamily{}).empty());
  const SetFamily triples = F({"abc", "abd", "acd", "bcd"});
  CHECK(minimal_members(triples) == triples);
}

TEST_CASE("maximal members") {
  CHECK(maximal_members(F({"ab", "abc", "bc"})) == F({"abc"}));
  CHECK(maximal_members(F({"a"})) == F({"a"}));
  CHECK(maximal_members(F({"ab", "cd"})) == F({"ab", "cd"}));
}

TEST_CASE("trace") {
  CHECK(trace(S("abc"), S("bcd")) == S("bc"));
  CHECK(trace(S("ab"), S("cd")).empty());
  CHECK(trace(S("abc"), S("abc")) == S("abc"));
}

TEST_CASE("min and max members: idempotent antichains of the family") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    std::vector<SubsetMask> raw;
    const int k = static_cast<int>(rng() % 9);
    for (int i = 0; i < k; ++i) raw.push_back(SubsetMask(rng() % 64));
    const SetFamily f(raw);
    const SetFamily lo = minimal_members(f);
    const SetFamily hi = maximal_members(f);
    CHECK(lo.is_clutter());
    CHECK(hi.is_clutter());
    CHECK(minimal_members(lo) == lo);
    CHECK(maximal_members(hi) == hi);
    for (SubsetMask m : f) {
      bool below = false, above = false;
      for (SubsetMask x : lo) below = below || x.subset_of(m);
      for (SubsetMask x : hi) above = above || m.subset_of(x);
      CHECK(below);
      CHECK(above);
    }
    for (SubsetMask x : lo) CHECK(f.contains(x));
    for (SubsetMask x : hi) CHECK(f.contains(x));
  }
}

TEST_CASE("trace is symmetric and idempotent") {
  for (std::uint32_t y = 0; y < 32; ++y) {
    for (std::uint32_t z = 0; z < 32; ++z) {
      CHECK(trace(SubsetMask(y), SubsetMask(z)) ==
            trace(SubsetMask(z), SubsetMask(y)));
      CHECK(trace(trace(SubsetMask(y), SubsetMask(z)), SubsetMask(z)) ==
            trace(SubsetMask(y), SubsetMask(z)));
    }
  }
}

TEST_CASE("ground set labels") {
  const GroundSet g{"a", "b", "c"};
  CHECK(g.size() == 3);
  CHECK(g.index_of("c") == 2);
  CHECK_FALSE(g.index_of("z").has_value());
  CHECK(g.mask_of({"a", "c"}) == S("ac"));
  CHECK(g.format(S("ab")) == "{a,b}");
  CHECK(g.format(SubsetMask()) == "{}");
  CHECK(g.restrict(S("bc")).labels() == std::vector<std::string>{"b", "c"});
  CHECK(g.extended({"x"}).labels().back() == "x");
  CHECK(GroundSet::letters(3) == g);
  CHECK(is_valid_label("x_12"));
  CHECK_FALSE(is_valid_label("a-b"));
  CHECK_FALSE(is_valid_label(""));
}

TEST_CASE("ground set errors") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind_of([] { GroundSet{"a", "a", "b"}; }) == ErrorKind::DuplicateLabel);
  CHECK(kind_of([] { GroundSet(std::vector<std::string>{}); }) ==
        ErrorKind::InvalidGround);
  CHECK(kind_of([] { GroundSet{"a", "b c"}; }) == ErrorKind::InvalidGround);
  CHECK(kind_of([] { GroundSet::letters(25); }) == ErrorKind::GroundTooLarge);
  CHECK(kind_of([] { GroundSet{"a"}.extended({"a"}); }) ==
        ErrorKind::LabelClash);
  CHECK(kind_of([] { GroundSet{"a"}.mask_of({"q"}); }) ==
        ErrorKind::UnknownLabel);
}

}  // TEST_SUITE
