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

// Brute-force reference computations for tests. Everything here works on
// plain bit masks over n ≤ 8 elements and shares no code with the library
// beyond SubsetMask, so agreement is meaningful.

#ifndef QLIFT_TESTS_ORACLE_HPP_
#define QLIFT_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qlift/matroid.hpp"
#include "qlift/sets.hpp"

namespace oracle {

using qlift::SetFamily;
using qlift::SubsetMask;
using Masks = std::vector<std::uint32_t>;

inline int popcount(std::uint32_t v) { return __builtin_popcount(v); }

/// Mask from a string of letters, 'a' = element 0.
inline SubsetMask S(std::string_view letters) {
  SubsetMask m;
  for (char c : letters) m = m.with(c - 'a');
  return m;
}

inline SetFamily F(std::initializer_list<std::string_view> sets) {
  std::vector<SubsetMask> out;
  for (auto s : sets) out.push_back(S(s));
  return SetFamily(out);
}

inline Masks masks(const SetFamily& f) {
  Masks out;
  for (SubsetMask m : f) out.push_back(m.bits());
  std::sort(out.begin(), out.end());
  return out;
}

inline bool contains_member(const Masks& family, std::uint32_t set) {
  for (std::uint32_t c : family) {
    if ((c & ~set) == 0) return true;
  }
  return false;
}

/// Largest circuit-free subset of `a`, by scanning every subset.
inline int rank(const Masks& circuits, std::uint32_t a) {
  int best = 0;
  for (std::uint32_t s = a;; s = (s - 1) & a) {
    if (popcount(s) > best && !contains_member(circuits, s)) best = popcount(s);
    if (s == 0) break;
  }
  return best;
}

inline Masks bases(const Masks& circuits, int n) {
  const std::uint32_t full = (1U << n) - 1;
  const int r = rank(circuits, full);
  Masks out;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (popcount(s) == r && !contains_member(circuits, s)) out.push_back(s);
  }
  return out;
}

/// Minimal sets that lie in no basis.
inline Masks circuits_from_bases(const Masks& bases, int n) {
  const std::uint32_t full = (1U << n) - 1;
  auto independent = [&](std::uint32_t s) {
    for (std::uint32_t b : bases) {
      if ((s & ~b) == 0) return true;
    }
    return false;
  };
  Masks out;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (independent(s)) continue;
    bool minimal = true;
    for (int e = 0; e < n && minimal; ++e) {
      if (((s >> e) & 1U) && !independent(s & ~(1U << e))) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Packs the bits of `s` that lie in `keep` into the low positions.
inline std::uint32_t pack(std::uint32_t s, std::uint32_t keep) {
  std::uint32_t out = 0;
  int pos = 0;
  for (int e = 0; e < 32; ++e) {
    if ((keep >> e) & 1U) {
      if ((s >> e) & 1U) out |= 1U << pos;
      ++pos;
    }
  }
  return out;
}

/// Circuits of M / z: bases B − z over bases B with |B ∩ z| = r(z).
inline Masks contract(const Masks& circuits, int n, std::uint32_t z) {
  const std::uint32_t keep = ((1U << n) - 1) & ~z;
  const int rz = rank(circuits, z);
  Masks minor_bases;
  for (std::uint32_t b : bases(circuits, n)) {
    if (popcount(b & z) == rz) minor_bases.push_back(pack(b & keep, keep));
  }
  std::sort(minor_bases.begin(), minor_bases.end());
  minor_bases.erase(std::unique(minor_bases.begin(), minor_bases.end()),
                    minor_bases.end());
  return circuits_from_bases(minor_bases, n - popcount(z));
}

/// Circuits of M \ z: maximal members of {B − z}.
inline Masks delete_set(const Masks& circuits, int n, std::uint32_t z) {
  const std::uint32_t keep = ((1U << n) - 1) & ~z;
  Masks traces;
  for (std::uint32_t b : bases(circuits, n)) traces.push_back(b & keep);
  int top = 0;
  for (std::uint32_t t : traces) top = std::max(top, popcount(t));
  Masks minor_bases;
  for (std::uint32_t t : traces) {
    if (popcount(t) == top) minor_bases.push_back(pack(t, keep));
  }
  std::sort(minor_bases.begin(), minor_bases.end());
  minor_bases.erase(std::unique(minor_bases.begin(), minor_bases.end()),
                    minor_bases.end());
  return circuits_from_bases(minor_bases, n - popcount(z));
}

/// Dual via complements of bases.
inline Masks dual(const Masks& circuits, int n) {
  Masks co;
  for (std::uint32_t b : bases(circuits, n)) co.push_back(~b & ((1U << n) - 1));
  return circuits_from_bases(co, n);
}

/// No coloops in the restriction: removing any element keeps the rank.
inline bool cyclic(const Masks& circuits, std::uint32_t a) {
  const int r = rank(circuits, a);
  for (int e = 0; e < 32; ++e) {
    if (((a >> e) & 1U) && rank(circuits, a & ~(1U << e)) != r) return false;
  }
  return true;
}

inline std::uint32_t closure(const Masks& circuits, int n, std::uint32_t a) {
  const int r = rank(circuits, a);
  std::uint32_t out = a;
  for (int e = 0; e < n; ++e) {
    if (rank(circuits, a | (1U << e)) == r) out |= 1U << e;
  }
  return out;
}

/// Quotient test through flats: every flat of M is a flat of L.
inline bool is_quotient(const Masks& m, const Masks& l, int n) {
  const std::uint32_t full = (1U << n) - 1;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (closure(m, n, s) == s && closure(l, n, s) != s) return false;
  }
  return true;
}

/// Every antichain of non-empty subsets of an n-set (n ≤ 4).
inline std::vector<Masks> antichains(int n) {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 1; s < (1U << n); ++s) subsets.push_back(s);
  std::vector<Masks> out;
  const std::uint64_t count = std::uint64_t{1} << subsets.size();
  for (std::uint64_t f = 0; f < count; ++f) {
    Masks fam;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if ((f >> i) & 1U) fam.push_back(subsets[i]);
    }
    bool clutter = true;
    for (std::size_t i = 0; i < fam.size() && clutter; ++i) {
      for (std::size_t j = 0; j < fam.size() && clutter; ++j) {
        if (i != j && (fam[i] & ~fam[j]) == 0) clutter = false;
      }
    }
    if (clutter) out.push_back(fam);
  }
  return out;
}

/// Textbook circuit elimination on a raw family.
inline bool satisfies_circuit_axioms(const Masks& family) {
  for (std::uint32_t c : family) {
    if (c == 0) return false;
  }
  for (std::uint32_t c1 : family) {
    for (std::uint32_t c2 : family) {
      if (c1 == c2) continue;
      if ((c1 & ~c2) == 0) return false;
      const std::uint32_t common = c1 & c2;
      for (int e = 0; e < 32; ++e) {
        if (((common >> e) & 1U) &&
            !contains_member(family, (c1 | c2) & ~(1U << e))) {
          return false;
        }
      }
    }
  }
  return true;
}

inline qlift::Matroid to_matroid(const Masks& circuits, int n) {
  std::vector<SubsetMask> out;
  for (std::uint32_t c : circuits) out.push_back(SubsetMask(c));
  return qlift::Matroid::from_circuits(qlift::GroundSet::letters(n),
                                       SetFamily(out));
}

/// Uniform draw from a catalog.
template <typename Catalog>
const qlift::Matroid& draw(const Catalog& entries, std::mt19937_64& rng) {
  return entries[std::uniform_int_distribution<std::size_t>(
      0, entries.size() - 1)(rng)];
}

}  // namespace oracle

#endif  // QLIFT_TESTS_ORACLE_HPP_
