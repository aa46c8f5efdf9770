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

#ifndef QLIFT_ENUMERATION_HPP_
#define QLIFT_ENUMERATION_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qlift/matroid.hpp"

namespace qlift {

enum class EnumerationMethod { BasisFilter, CircuitFilter };

inline constexpr int kBasisFilterLimit = 6;
inline constexpr int kCircuitFilterLimit = 4;
inline constexpr int kPairCatalogLimit = 5;

/// Every labelled matroid on one ground set, sorted by catalog line.
struct MatroidCatalog {
  int n = 0;
  EnumerationMethod method = EnumerationMethod::BasisFilter;
  std::vector<Matroid> entries;

  /// Position of `m` in the catalog, if present.
  std::optional<std::size_t> index_of(const Matroid& m) const;
};

/// Basis filter: every non-empty family of r-subsets that passes the basis
/// exchange check, for each rank r (n ≤ 6). Circuit filter: every family of
/// non-empty subsets that passes the circuit axioms (n ≤ 4).
MatroidCatalog enumerate_matroids(const GroundSet& ground,
                                  EnumerationMethod method);
MatroidCatalog enumerate_matroids(int n, EnumerationMethod method);

/// Cached basis-filter catalog on letters a, b, ... (n ≤ 6). Thread-safe.
const MatroidCatalog& catalog(int n);

/// First N in the catalog on E + x_label with N / x = M and N \ x = L.
/// Equal ranks are rejected with PreconditionFailure.
std::optional<Matroid> witness_search(const Matroid& m, const Matroid& l,
                                      const std::string& x_label);

enum class WitnessStatus { Ok, NotApplicable, Failed };

struct PairRecord {
  std::size_t m_index = 0;
  std::size_t l_index = 0;
  bool quotient = false;
  /// ρ(L) − ρ(M).
  int s = 0;
  WitnessStatus witness = WitnessStatus::NotApplicable;

  /// `<idxM>;<idxL>;quotient=<0|1>;s=<int>;witness=<ok|na|FAIL>`
  std::string line() const;
};

/// Every ordered pair of the n-element catalog (n ≤ 5): criterion, step and,
/// for quotient pairs with s ≥ 1, whether the lift witness verified.
std::vector<PairRecord> pair_catalog(int n);

void write_catalog(std::ostream& out, const MatroidCatalog& catalog);
void write_pair_catalog(std::ostream& out,
                        const std::vector<PairRecord>& records);

}  // namespace qlift

#endif  // QLIFT_ENUMERATION_HPP_
