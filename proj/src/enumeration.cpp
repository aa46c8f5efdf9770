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

#include "qlift/enumeration.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <ostream>

#include "qlift/axioms.hpp"
#include "qlift/error.hpp"
#include "qlift/minors.hpp"
#include "qlift/quotient.hpp"
#include "qlift/text_format.hpp"

namespace qlift {

namespace {

// Exchange test on a family of subsets of a ground with at most 6
// elements, held as one bit per subset. Used to discard most candidate
// families before the full check_basis_exchange.
bool exchange_holds(std::uint64_t members,
                    const std::vector<SubsetMask>& bases) {
  for (SubsetMask b1 : bases) {
    for (SubsetMask b2 : bases) {
      if (b1 == b2) continue;
      for (int x : (b1 - b2).elements()) {
        const SubsetMask base = b1.without(x);
        bool ok = false;
        for (int y : (b2 - b1).elements()) {
          if ((members >> base.with(y).bits()) & 1U) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

void sort_catalog(std::vector<Matroid>& entries) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    keys.emplace_back(catalog_line(entries[i]), i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Matroid> sorted;
  sorted.reserve(entries.size());
  for (const auto& k : keys) sorted.push_back(entries[k.second]);
  entries = std::move(sorted);
}

MatroidCatalog by_bases(const GroundSet& ground) {
  const int n = ground.size();
  MatroidCatalog out{n, EnumerationMethod::BasisFilter, {}};
  for (int r = 0; r <= n; ++r) {
    std::vector<SubsetMask> subsets;
    for_each_subset(ground.full(), [&](SubsetMask s) {
      if (s.size() == r) subsets.push_back(s);
    });
    const std::size_t k = subsets.size();
    const std::uint64_t families = std::uint64_t{1} << k;
    std::vector<SubsetMask> bases;
    for (std::uint64_t f = 1; f < families; ++f) {
      bases.clear();
      std::uint64_t members = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if ((f >> i) & 1U) {
          bases.push_back(subsets[i]);
          members |= std::uint64_t{1} << subsets[i].bits();
        }
      }
      if (!exchange_holds(members, bases)) continue;
      SetFamily family(bases);
      if (!check_basis_exchange(ground, family, 1).passed()) continue;
      out.entries.push_back(Matroid::from_bases(ground, family));
    }
  }
  return out;
}

MatroidCatalog by_circuits(const GroundSet& ground) {
  const int n = ground.size();
  MatroidCatalog out{n, EnumerationMethod::CircuitFilter, {}};
  std::vector<SubsetMask> subsets;
  for_each_subset(ground.full(), [&](SubsetMask s) {
    if (!s.empty()) subsets.push_back(s);
  });
  const std::size_t k = subsets.size();
  const std::uint64_t families = std::uint64_t{1} << k;
  std::vector<SubsetMask> members;
  for (std::uint64_t f = 0; f < families; ++f) {
    members.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if ((f >> i) & 1U) members.push_back(subsets[i]);
    }
    SetFamily family(members);
    if (!family.is_clutter()) continue;
    if (!check_circuit_axioms(ground, family, false, 1).passed()) continue;
    out.entries.push_back(Matroid::from_circuits(ground, std::move(family)));
  }
  return out;
}

Matroid relabel(const Matroid& m, const GroundSet& ground) {
  return Matroid::from_circuits(ground, m.circuits());
}

}  // namespace

std::optional<std::size_t> MatroidCatalog::index_of(const Matroid& m) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == m) return i;
  }
  return std::nullopt;
}

MatroidCatalog enumerate_matroids(const GroundSet& ground,
                                  EnumerationMethod method) {
  const int n = ground.size();
  const int limit = method == EnumerationMethod::BasisFilter
                        ? kBasisFilterLimit
                        : kCircuitFilterLimit;
  if (n > limit) {
    throw Error(ErrorKind::GroundTooLarge,
                "enumeration supports at most " + std::to_string(limit) +
                    " elements with this method");
  }
  MatroidCatalog out = method == EnumerationMethod::BasisFilter
                           ? by_bases(ground)
                           : by_circuits(ground);
  sort_catalog(out.entries);
  return out;
}

MatroidCatalog enumerate_matroids(int n, EnumerationMethod method) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidGround, "catalogs need n >= 1");
  }
  if (n > kBasisFilterLimit) {
    throw Error(ErrorKind::GroundTooLarge,
                "enumeration supports at most " +
                    std::to_string(kBasisFilterLimit) + " elements");
  }
  return enumerate_matroids(GroundSet::letters(n), method);
}

const MatroidCatalog& catalog(int n) {
  static std::mutex mutex;
  static std::map<int, MatroidCatalog> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, enumerate_matroids(n, EnumerationMethod::BasisFilter))
             .first;
  }
  return it->second;
}

std::optional<Matroid> witness_search(const Matroid& m, const Matroid& l,
                                      const std::string& x_label) {
  if (!(m.ground() == l.ground())) {
    throw Error(ErrorKind::GroundMismatch,
                "matroids live on different ground sets");
  }
  if (m.rank() == l.rank()) {
    throw Error(ErrorKind::PreconditionFailure,
                "witness search needs rank(L) = rank(M) + 1");
  }
  const int n = m.size() + 1;
  if (n > kBasisFilterLimit) {
    throw Error(ErrorKind::GroundTooLarge,
                "witness search scans catalogs of at most " +
                    std::to_string(kBasisFilterLimit) + " elements");
  }
  const GroundSet ground = m.ground().extended({x_label});
  const SubsetMask x = SubsetMask::single(n - 1);
  for (const Matroid& entry : catalog(n).entries) {
    Matroid candidate = relabel(entry, ground);
    if (verify_pair(candidate, x, m, l).holds) return candidate;
  }
  return std::nullopt;
}

std::string PairRecord::line() const {
  const char* w = witness == WitnessStatus::Ok              ? "ok"
                  : witness == WitnessStatus::NotApplicable ? "na"
                                                            : "FAIL";
  return std::to_string(m_index) + ";" + std::to_string(l_index) +
         ";quotient=" + (quotient ? "1" : "0") + ";s=" + std::to_string(s) +
         ";witness=" + w;
}

std::vector<PairRecord> pair_catalog(int n) {
  if (n > kPairCatalogLimit) {
    throw Error(ErrorKind::GroundTooLarge,
                "pair catalogs support at most " +
                    std::to_string(kPairCatalogLimit) + " elements");
  }
  const auto& entries = catalog(n).entries;
  std::vector<PairRecord> out;
  out.reserve(entries.size() * entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries.size(); ++j) {
      const Matroid& m = entries[i];
      const Matroid& l = entries[j];
      PairRecord rec{i, j, false, l.rank() - m.rank(),
                     WitnessStatus::NotApplicable};
      rec.quotient = certify_quotient(m, l).holds();
      if (rec.quotient && rec.s >= 1) {
        try {
          const LiftWitness w =
              lift_witness(m, l, fresh_labels(m.ground(), rec.s));
          rec.witness = w.verified ? WitnessStatus::Ok : WitnessStatus::Failed;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::ConstructionFailure) throw;
          rec.witness = WitnessStatus::Failed;
        }
      }
      out.push_back(rec);
    }
  }
  return out;
}

void write_catalog(std::ostream& out, const MatroidCatalog& catalog) {
  for (const Matroid& m : catalog.entries) out << catalog_line(m) << '\n';
}

void write_pair_catalog(std::ostream& out,
                        const std::vector<PairRecord>& records) {
  for (const PairRecord& r : records) out << r.line() << '\n';
}

}  // namespace qlift
