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

#include "qlift/axioms.hpp"

#include "qlift/cover_index.hpp"
#include "qlift/error.hpp"

namespace qlift {

std::string Violation::describe(const GroundSet& ground) const {
  std::string out = axiom;
  for (SubsetMask s : sets) out += " " + ground.format(s);
  for (int e : elements) {
    out += " " + (e >= 0 && e < ground.size() ? ground.label(e)
                                              : std::to_string(e));
  }
  return out;
}

std::string AxiomReport::describe(const GroundSet& ground) const {
  if (passed()) return "ok\n";
  std::string out;
  for (const auto& v : violations) out += v.describe(ground) + "\n";
  return out;
}

namespace {

// True when some member C satisfies d ∈ C ⊆ s.
bool member_through(const CoverIndex& index, SubsetMask s, int d) {
  return index.union_inside(s).contains(d);
}

}  // namespace

AxiomReport check_circuit_axioms(const GroundSet& ground,
                                 const SetFamily& family, bool strong,
                                 std::size_t max_violations) {
  CoverIndex index(ground.size(), family);
  return check_circuit_axioms(ground, family, strong, index, max_violations);
}

AxiomReport check_circuit_axioms(const GroundSet& ground,
                                 const SetFamily& family, bool strong,
                                 const CoverIndex& index,
                                 std::size_t max_violations) {
  AxiomReport report;
  auto full = [&] { return report.violations.size() >= max_violations; };
  const auto& cs = family.members();

  for (SubsetMask c : cs) {
    if (!ground.contains_mask(c)) {
      throw Error(ErrorKind::GroundMismatch,
                  "family member outside the ground set");
    }
  }
  if (!cs.empty() && cs.front().empty()) {
    report.violations.push_back({"AC0", {SubsetMask()}, {}});
    if (full()) return report;
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i].subset_of(cs[j])) {
        report.violations.push_back({"AC1", {cs[i], cs[j]}, {}});
        if (full()) return report;
      }
    }
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i == j) continue;
      const SubsetMask c1 = cs[i];
      const SubsetMask c2 = cs[j];
      const SubsetMask both = c1 | c2;
      for (int e : (c1 & c2).elements()) {
        const SubsetMask rest = both.without(e);
        if (i < j && !index.any_inside(rest)) {
          report.violations.push_back({"AC2", {c1, c2}, {e}});
          if (full()) return report;
        }
        if (!strong) continue;
        for (int d : (c1 - c2).elements()) {
          if (!member_through(index, rest, d)) {
            report.violations.push_back({"AC2!", {c1, c2}, {e, d}});
            if (full()) return report;
          }
        }
      }
    }
  }
  return report;
}

AxiomReport check_independence_axioms(const GroundSet& ground,
                                      const SetFamily& family,
                                      std::size_t max_violations) {
  AxiomReport report;
  auto full = [&] { return report.violations.size() >= max_violations; };
  const auto& is = family.members();
  for (SubsetMask x : is) {
    if (!ground.contains_mask(x)) {
      throw Error(ErrorKind::GroundMismatch,
                  "family member outside the ground set");
    }
  }
  if (!family.contains(SubsetMask())) {
    report.violations.push_back({"AI0", {}, {}});
    if (full()) return report;
  }
  for (SubsetMask x : is) {
    for (int e : x.elements()) {
      if (!family.contains(x.without(e))) {
        report.violations.push_back({"AI1", {x}, {e}});
        if (full()) return report;
      }
    }
  }
  for (SubsetMask x : is) {
    for (SubsetMask y : is) {
      if (x.size() >= y.size()) continue;
      bool augmented = false;
      for (int e : (y - x).elements()) {
        if (family.contains(x.with(e))) {
          augmented = true;
          break;
        }
      }
      if (!augmented) {
        report.violations.push_back({"AI2", {x, y}, {}});
        if (full()) return report;
      }
    }
  }
  return report;
}

AxiomReport check_basis_exchange(const GroundSet& ground,
                                 const SetFamily& family,
                                 std::size_t max_violations) {
  AxiomReport report;
  auto full = [&] { return report.violations.size() >= max_violations; };
  const auto& bs = family.members();
  for (SubsetMask b : bs) {
    if (!ground.contains_mask(b)) {
      throw Error(ErrorKind::GroundMismatch,
                  "family member outside the ground set");
    }
  }
  if (bs.empty()) {
    report.violations.push_back({"BX0", {}, {}});
    return report;
  }
  // canonical order sorts by size, so unequal sizes show up at the ends
  if (bs.front().size() != bs.back().size()) {
    report.violations.push_back({"BX1", {bs.front(), bs.back()}, {}});
    if (full()) return report;
  }
  for (SubsetMask b1 : bs) {
    for (SubsetMask b2 : bs) {
      if (b1 == b2) continue;
      const SubsetMask candidates = b2 - b1;
      for (int x : (b1 - b2).elements()) {
        const SubsetMask base = b1.without(x);
        bool exchanged = false;
        for (int y : candidates.elements()) {
          if (family.contains(base.with(y))) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          report.violations.push_back({"BX2", {b1, b2}, {x}});
          if (full()) return report;
        }
      }
    }
  }
  return report;
}

bool replay_violation(const SetFamily& family, const Violation& v) {
  auto none_inside = [&](SubsetMask s) {
    for (SubsetMask c : family) {
      if (c.subset_of(s)) return false;
    }
    return true;
  };
  const auto& a = v.axiom;
  if (a == "AC0") return family.contains(SubsetMask());
  if (a == "AC1") {
    return family.contains(v.sets[0]) && family.contains(v.sets[1]) &&
           v.sets[0].proper_subset_of(v.sets[1]);
  }
  if (a == "AC2") {
    const SubsetMask c1 = v.sets[0], c2 = v.sets[1];
    const int e = v.elements[0];
    return family.contains(c1) && family.contains(c2) && c1 != c2 &&
           c1.contains(e) && c2.contains(e) && none_inside((c1 | c2).without(e));
  }
  if (a == "AC2!") {
    const SubsetMask c1 = v.sets[0], c2 = v.sets[1];
    const int e = v.elements[0], d = v.elements[1];
    if (!(family.contains(c1) && family.contains(c2) && c1 != c2 &&
          c1.contains(e) && c2.contains(e) && c1.contains(d) &&
          !c2.contains(d))) {
      return false;
    }
    const SubsetMask rest = (c1 | c2).without(e);
    for (SubsetMask c : family) {
      if (c.contains(d) && c.subset_of(rest)) return false;
    }
    return true;
  }
  if (a == "AI0") return !family.contains(SubsetMask());
  if (a == "AI1") {
    return family.contains(v.sets[0]) && v.sets[0].contains(v.elements[0]) &&
           !family.contains(v.sets[0].without(v.elements[0]));
  }
  if (a == "AI2") {
    const SubsetMask x = v.sets[0], y = v.sets[1];
    if (!(family.contains(x) && family.contains(y) && x.size() < y.size())) {
      return false;
    }
    for (int e : (y - x).elements()) {
      if (family.contains(x.with(e))) return false;
    }
    return true;
  }
  if (a == "BX0") return family.empty();
  if (a == "BX1") {
    return family.contains(v.sets[0]) && family.contains(v.sets[1]) &&
           v.sets[0].size() != v.sets[1].size();
  }
  if (a == "BX2") {
    const SubsetMask b1 = v.sets[0], b2 = v.sets[1];
    const int x = v.elements[0];
    if (!(family.contains(b1) && family.contains(b2) && b1.contains(x) &&
          !b2.contains(x))) {
      return false;
    }
    for (int y : (b2 - b1).elements()) {
      if (family.contains(b1.without(x).with(y))) return false;
    }
    return true;
  }
  return false;
}

SetFamily independent_sets_of(const GroundSet& ground,
                              const SetFamily& circuits) {
  CoverIndex index(ground.size(), circuits);
  std::vector<SubsetMask> out;
  for_each_subset(ground.full(), [&](SubsetMask s) {
    if (!index.any_inside(s)) out.push_back(s);
  });
  return SetFamily(std::move(out));
}

}  // namespace qlift
