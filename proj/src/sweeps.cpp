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

#include "qlift/sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "qlift/axioms.hpp"
#include "qlift/cli.hpp"
#include "qlift/enumeration.hpp"
#include "qlift/error.hpp"
#include "qlift/lemmas.hpp"
#include "qlift/minors.hpp"
#include "qlift/quotient.hpp"
#include "qlift/text_format.hpp"

namespace qlift {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// Records the first failure and counts the rest.
struct Failures {
  long count = 0;
  std::string first;

  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  void add(const Error& e) { add(std::string(e.what()) + "\n" + e.dump()); }
};

SweepResult start(std::string id, std::string title, double time_limit) {
  SweepResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.time_limit = time_limit;
  return r;
}

void finish(SweepResult& r, const Stopwatch& clock, const Failures& f,
            std::string detail) {
  r.seconds = clock.seconds();
  r.passed = f.count == 0;
  r.counterexample = f.first;
  r.detail = std::move(detail);
  if (f.count > 0) r.detail += "; " + std::to_string(f.count) + " violations";
}

Matroid relabel(const Matroid& m, const GroundSet& ground) {
  return Matroid::from_circuits(ground, m.circuits());
}

// quotient[i][j]: certify_quotient(entry i, entry j) holds.
std::vector<std::vector<char>> quotient_matrix(const MatroidCatalog& c) {
  const std::size_t k = c.entries.size();
  std::vector<std::vector<char>> q(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      q[i][j] = certify_quotient(c.entries[i], c.entries[j]).holds();
    }
  }
  return q;
}

// Exhaustive search for a cyclic subset of `pool` with the given nullity.
bool cyclic_subset_exists(const Matroid& m, SubsetMask pool, int nullity) {
  bool found = false;
  for_each_subset(pool, [&](SubsetMask s) {
    if (!found && m.is_cyclic(s) && m.nullity(s) == nullity) found = true;
  });
  return found;
}

// Rank order and high-nullity cyclic sets on one quotient pair.
void check_pair_lemmas(const Matroid& m, const Matroid& l, Failures& f) {
  if (!(m == l)) {
    if (l.rank() <= m.rank()) {
      f.add("rank order fails:\n" +
            witness_dump({{"M", &m}, {"L", &l}}, {}));
    }
    bool contained = true;
    for_each_subset(m.ground().full(), [&](SubsetMask a) {
      if (m.is_independent(a) && !l.is_independent(a)) contained = false;
    });
    if (!contained) {
      f.add("independent sets of M are not independent in L:\n" +
            witness_dump({{"M", &m}, {"L", &l}}, {}));
    }
  }
  const AxiomReport big = bigcyclo_check(m, l);
  if (!big.passed()) {
    f.add("cyclic set of nullity s+1 independent in L: " + big.describe(m.ground()) +
          witness_dump({{"M", &m}, {"L", &l}}, {}));
  }
}

std::string counts_line(const LemmaTally& t) {
  return "span=" + std::to_string(t.span) +
         " extension=" + std::to_string(t.extension) +
         " elimination=" + std::to_string(t.elimination) +
         " base-family=" + std::to_string(t.base_family);
}

}  // namespace

LemmaTally& LemmaTally::operator+=(const LemmaTally& o) {
  span += o.span;
  extension += o.extension;
  elimination += o.elimination;
  base_family += o.base_family;
  nested_extension_failures += o.nested_extension_failures;
  nested_elimination_failures += o.nested_elimination_failures;
  return *this;
}

LemmaTally check_lemmas_on(const Matroid& m) {
  LemmaTally t;
  const SubsetMask full = m.ground().full();
  for_each_subset(full, [&](SubsetMask a) {
    if (m.is_dependent(a)) {
      lemma_span_witness(m, a);
      ++t.span;
    }
  });
  const SetFamily cyclic = m.cyclic_sets();
  for (SubsetMask a1 : cyclic) {
    for (SubsetMask a2 : cyclic) {
      if (a1 == a2) continue;
      if (a2.subset_of(a1)) {
        // outside the checkers' precondition; probe the bare statement
        if (!cyclic_subset_exists(m, a1 | a2, m.nullity(a1) + 1)) {
          ++t.nested_extension_failures;
        }
        for (int a : (a1 & a2).elements()) {
          if (!cyclic_subset_exists(m, (a1 | a2).without(a), m.nullity(a1))) {
            ++t.nested_elimination_failures;
          }
        }
        continue;
      }
      cyclic_extension(m, a1, a2);
      ++t.extension;
      for (int a : (a1 & a2).elements()) {
        cyclic_elimination(m, a1, a2, a);
        ++t.elimination;
      }
    }
    for (SubsetMask d : m.circuits().inside(a1)) {
      for (int e : d.elements()) {
        base_family_witness(m, a1, d, e);
        ++t.base_family;
      }
    }
  }
  return t;
}

SweepResult sweep_catalog_cross_oracle(int max_n) {
  SweepResult r = start("C1", "axiom/enumeration cross-oracle", 30.0);
  Stopwatch clock;
  Failures f;
  std::string counts;
  for (int n = 1; n <= max_n; ++n) {
    const MatroidCatalog by_bases =
        enumerate_matroids(n, EnumerationMethod::BasisFilter);
    const MatroidCatalog by_circuits =
        enumerate_matroids(n, EnumerationMethod::CircuitFilter);
    std::vector<std::string> a, b;
    for (const Matroid& m : by_bases.entries) a.push_back(catalog_line(m));
    for (const Matroid& m : by_circuits.entries) b.push_back(catalog_line(m));
    if (a != b) {
      f.add("n=" + std::to_string(n) + ": basis filter found " +
            std::to_string(a.size()) + " matroids, circuit filter " +
            std::to_string(b.size()));
    }
    for (const Matroid& m : by_bases.entries) {
      const AxiomReport report =
          check_circuit_axioms(m.ground(), m.circuits(), true);
      if (!report.passed()) {
        f.add("strong axioms fail: " + report.describe(m.ground()) +
              serialize_matroid_text(m));
      }
      if (!(m.dual().dual() == m)) {
        f.add("dual is not an involution:\n" + serialize_matroid_text(m));
      }
    }
    counts += (counts.empty() ? "" : " ") + std::string("n=") +
              std::to_string(n) + ":" + std::to_string(a.size());
  }
  finish(r, clock, f, "catalog sizes " + counts);
  return r;
}

SweepResult sweep_lift_property(int max_n) {
  SweepResult r = start("C2", "circuits of N\\X are unions of circuits of N/X", 300.0);
  Stopwatch clock;
  Failures f;
  long checked = 0;
  for (int n = 2; n <= max_n; ++n) {
    for (const Matroid& big : catalog(n).entries) {
      const SubsetMask full = big.ground().full();
      for_each_subset(full, [&](SubsetMask x) {
        if (x.empty() || x == full) return;
        const Matroid m = contract(big, x);
        const Matroid l = delete_set(big, x);
        const QuotientResult q = certify_quotient(m, l);
        ++checked;
        if (!q.holds()) {
          f.add("X=" + big.ground().format(x) + "\n" +
                witness_dump({{"N", &big}, {"M", &m}, {"L", &l}}, {}));
        }
      });
    }
  }
  finish(r, clock, f, std::to_string(checked) + " (N, X) instances");
  return r;
}

SweepResult sweep_lift_criterion(int max_n) {
  SweepResult r = start("C3", "lift witness for every quotient pair with s >= 1", 300.0);
  Stopwatch clock;
  Failures f;
  long built = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto& entries = catalog(n).entries;
    for (const Matroid& m : entries) {
      for (const Matroid& l : entries) {
        const int s = l.rank() - m.rank();
        if (s < 1 || !certify_quotient(m, l).holds()) continue;
        try {
          const LiftWitness w = lift_witness(m, l, fresh_labels(m.ground(), s));
          if (!w.verified) f.add("unverified witness");
          ++built;
        } catch (const Error& e) {
          if (!e.is_counterexample()) throw;
          f.add(e);
        }
      }
    }
  }
  finish(r, clock, f, std::to_string(built) + " verified witnesses");
  return r;
}

SweepResult sweep_oracle_equivalence(int max_n) {
  SweepResult r = start("C4", "criterion at s = 1 <=> catalog witness exists", 120.0);
  Stopwatch clock;
  Failures f;
  long pairs = 0, positive = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto& entries = catalog(n).entries;
    const auto& bigger = catalog(n + 1);
    for (const Matroid& m : entries) {
      for (const Matroid& l : entries) {
        if (m.rank() == l.rank()) continue;
        ++pairs;
        const QuotientResult q = certify_quotient(m, l);
        const bool criterion = q.holds() && q.certificate().step_s == 1;
        const std::optional<Matroid> found = witness_search(m, l, "x");
        if (criterion != found.has_value()) {
          f.add(std::string("criterion ") + (criterion ? "holds" : "fails") +
                " but catalog search " + (found ? "found" : "found no") +
                " witness\n" + witness_dump({{"M", &m}, {"L", &l}}, {}));
          continue;
        }
        if (!criterion) continue;
        ++positive;
        const LiftWitness w = lift_witness(m, l, {"x"});
        const SubsetMask x = SubsetMask::single(n);
        const bool verifies = verify_pair(w.n, x, m, l).holds;
        const bool listed =
            bigger.index_of(relabel(w.n, GroundSet::letters(n + 1)))
                .has_value();
        if (!verifies || !listed) {
          f.add("constructed witness is not a verifying catalog entry\n" +
                witness_dump({{"M", &m}, {"L", &l}, {"N", &w.n}}, {}));
        }
      }
    }
  }
  finish(r, clock, f,
         std::to_string(pairs) + " pairs, " + std::to_string(positive) +
             " elementary quotients");
  return r;
}

SweepResult sweep_lemmas(int max_n, int random_instances, std::uint64_t seed) {
  SweepResult r = start("C5", "lemma sweeps", 600.0);
  Stopwatch clock;
  Failures f;
  LemmaTally tally;
  long pair_checks = 0, triple_checks = 0;

  auto guarded = [&](auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      if (!e.is_counterexample()) throw;
      f.add(e);
    }
  };

  for (int n = 1; n <= max_n; ++n) {
    const MatroidCatalog& c = catalog(n);
    for (const Matroid& m : c.entries) {
      guarded([&] { tally += check_lemmas_on(m); });
    }
    const auto q = quotient_matrix(c);
    const std::size_t k = c.entries.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (!q[i][j]) continue;
        guarded([&] { check_pair_lemmas(c.entries[i], c.entries[j], f); });
        ++pair_checks;
        for (std::size_t h = 0; h < k; ++h) {
          if (!q[j][h]) continue;
          ++triple_checks;
          if (!q[i][h]) {
            f.add("transitivity fails\n" +
                  witness_dump({{"M", &c.entries[i]},
                                {"L", &c.entries[j]},
                                {"K", &c.entries[h]}},
                               {}));
          }
        }
      }
    }
  }
  const std::string exhaustive = counts_line(tally);
  r.report.push_back("exhaustive n<=" + std::to_string(max_n) + ": " +
                     exhaustive + " pairs=" + std::to_string(pair_checks) +
                     " triples=" + std::to_string(triple_checks));
  r.report.push_back(
      "nested cyclic pairs (A2 inside A1), statement searched exhaustively: "
      "extension conclusion missing in " +
      std::to_string(tally.nested_extension_failures) +
      " cases, elimination conclusion missing in " +
      std::to_string(tally.nested_elimination_failures) + " cases");

  long random_done = 0;
  if (random_instances > 0) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t bound) {
      return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
    };
    const MatroidCatalog& five = catalog(5);
    const MatroidCatalog& six = catalog(6);
    const auto q5 = quotient_matrix(five);
    std::vector<std::vector<std::size_t>> lifts(five.entries.size());
    for (std::size_t i = 0; i < five.entries.size(); ++i) {
      for (std::size_t j = 0; j < five.entries.size(); ++j) {
        if (q5[i][j]) lifts[i].push_back(j);
      }
    }
    LemmaTally random_tally;
    long random_pairs = 0, random_triples = 0;
    while (random_done < random_instances) {
      const int kind = static_cast<int>(pick(6));
      if (kind >= 4) {
        const std::size_t i = pick(five.entries.size());
        const std::size_t j = lifts[i][pick(lifts[i].size())];
        if (kind == 4) {
          guarded([&] {
            check_pair_lemmas(five.entries[i], five.entries[j], f);
          });
          ++random_pairs;
        } else {
          const std::size_t h = lifts[j][pick(lifts[j].size())];
          if (!q5[i][h]) {
            f.add("transitivity fails\n" +
                  witness_dump({{"M", &five.entries[i]},
                                {"L", &five.entries[j]},
                                {"K", &five.entries[h]}},
                               {}));
          }
          ++random_triples;
        }
        ++random_done;
        continue;
      }
      const MatroidCatalog& source = pick(2) == 0 ? five : six;
      const Matroid& m = source.entries[pick(source.entries.size())];
      const std::vector<SubsetMask> cyclic = m.cyclic_sets().members();
      if (kind == 0) {
        std::vector<SubsetMask> dependent;
        for_each_subset(m.ground().full(), [&](SubsetMask a) {
          if (m.is_dependent(a)) dependent.push_back(a);
        });
        if (dependent.empty()) continue;
        guarded([&] { lemma_span_witness(m, dependent[pick(dependent.size())]); });
        ++random_tally.span;
      } else if (kind == 1 || kind == 2) {
        std::vector<std::pair<SubsetMask, SubsetMask>> pairs;
        for (SubsetMask a1 : cyclic) {
          for (SubsetMask a2 : cyclic) {
            if (a1 == a2 || a2.subset_of(a1)) continue;
            if (kind == 2 && !a1.intersects(a2)) continue;
            pairs.emplace_back(a1, a2);
          }
        }
        if (pairs.empty()) continue;
        const auto [a1, a2] = pairs[pick(pairs.size())];
        if (kind == 1) {
          guarded([&] { cyclic_extension(m, a1, a2); });
          ++random_tally.extension;
        } else {
          const std::vector<int> common = (a1 & a2).elements();
          guarded([&] {
            cyclic_elimination(m, a1, a2, common[pick(common.size())]);
          });
          ++random_tally.elimination;
        }
      } else {
        std::vector<std::tuple<SubsetMask, SubsetMask, int>> triples;
        for (SubsetMask a : cyclic) {
          for (SubsetMask d : m.circuits().inside(a)) {
            for (int e : d.elements()) triples.emplace_back(a, d, e);
          }
        }
        if (triples.empty()) continue;
        const auto [a, d, e] = triples[pick(triples.size())];
        guarded([&] { base_family_witness(m, a, d, e); });
        ++random_tally.base_family;
      }
      ++random_done;
    }
    r.report.push_back("random n=5..6: " + counts_line(random_tally) +
                       " pairs=" + std::to_string(random_pairs) +
                       " triples=" + std::to_string(random_triples));
  }
  finish(r, clock, f,
         "exhaustive n<=" + std::to_string(max_n) + " (" + exhaustive +
             "), " + std::to_string(random_done) + " random instances");
  return r;
}

SweepResult sweep_homotopy(int max_n) {
  SweepResult r = start("C6", "homotopy factorization for every ordering", 300.0);
  Stopwatch clock;
  Failures f;
  long pairs = 0, sequences = 0, order_independent = 0, order_dependent = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto& entries = catalog(n).entries;
    for (const Matroid& m : entries) {
      for (const Matroid& l : entries) {
        const int s = l.rank() - m.rank();
        if (s < 2 || !certify_quotient(m, l).holds()) continue;
        ++pairs;
        std::vector<std::string> labels = fresh_labels(m.ground(), s);
        std::sort(labels.begin(), labels.end());
        std::optional<std::vector<Matroid>> first;
        bool same = true;
        do {
          try {
            const HomotopySequence h = factor_homotopy(m, l, labels);
            ++sequences;
            bool ok = static_cast<int>(h.steps.size()) == s + 1 &&
                      h.steps.front() == m && h.steps.back() == l;
            for (int i = 0; ok && i <= s; ++i) {
              ok = h.steps[i].rank() == m.rank() + i;
            }
            for (int i = 1; ok && i <= s; ++i) {
              const QuotientResult q =
                  certify_quotient(h.steps[i - 1], h.steps[i]);
              ok = q.holds() && q.certificate().step_s == 1;
            }
            if (!ok) {
              f.add("invalid sequence\n" +
                    witness_dump({{"M", &m}, {"L", &l}}, labels));
            }
            if (!first) {
              first = h.steps;
            } else if (*first != h.steps) {
              same = false;
            }
          } catch (const Error& e) {
            if (!e.is_counterexample()) throw;
            f.add(e);
          }
        } while (std::next_permutation(labels.begin(), labels.end()));
        ++(same ? order_independent : order_dependent);
      }
    }
  }
  r.report.push_back("intermediate matroids independent of the ordering in " +
                     std::to_string(order_independent) + " pairs, dependent in " +
                     std::to_string(order_dependent) + " pairs");
  finish(r, clock, f,
         std::to_string(pairs) + " pairs with s>=2, " +
             std::to_string(sequences) + " sequences");
  return r;
}

SweepResult sweep_worked_fixtures() {
  SweepResult r = start("C7", "worked fixtures", 1.0);
  Stopwatch clock;
  Failures f;
  const GroundSet abc{"a", "b", "c"};
  const Matroid u13 = Matroid::uniform(1, abc);
  const Matroid u23 = Matroid::uniform(2, abc);
  const Matroid f3 = Matroid::free(3);

  {
    const LiftWitness w = lift_witness(u13, u23, {"x"});
    const GroundSet& g = w.n.ground();
    const SetFamily expected{g.mask_of({"a", "b", "c"}), g.mask_of({"a", "b", "x"}),
                             g.mask_of({"a", "c", "x"}), g.mask_of({"b", "c", "x"})};
    if (!(w.n.circuits() == expected)) {
      f.add("lift(U13, U23) circuits:\n" + serialize_matroid_text(w.n));
    }
  }
  {
    const LiftWitness w = lift_witness(u13, f3, {"x1", "x2"});
    const GroundSet& g = w.n.ground();
    const SetFamily expected{g.mask_of({"a", "b", "x1", "x2"}),
                             g.mask_of({"a", "c", "x1", "x2"}),
                             g.mask_of({"b", "c", "x1", "x2"}),
                             g.mask_of({"a", "b", "c", "x1"}),
                             g.mask_of({"a", "b", "c", "x2"})};
    if (!(w.n.circuits() == expected)) {
      f.add("lift(U13, F3) circuits:\n" + serialize_matroid_text(w.n));
    }
  }
  {
    const HomotopySequence h = factor_homotopy(u13, f3, {"x1", "x2"});
    const std::vector<Matroid> expected{u13, u23, f3};
    if (h.steps != expected) f.add("factor(U13, F3) differs from [U13, U23, F3]");
  }
  finish(r, clock, f, "3 exact fixtures");
  return r;
}

SweepResult sweep_remark(int max_n) {
  SweepResult r = start("C8", "nullity-filtered families against minor-based factorization", 300.0);
  Stopwatch clock;
  Failures f;
  const GroundSet abc{"a", "b", "c"};
  const Matroid u13 = Matroid::uniform(1, abc);
  const Matroid u23 = Matroid::uniform(2, abc);
  const Matroid f3 = Matroid::free(3);
  if (!compare_remark(u13, u23, {"x"}).all_shifted()) {
    f.add("shifted nullity-filtered family disagrees on (U13, U23)");
  }
  if (!compare_remark(u13, f3, {"x1", "x2"}).all_shifted()) {
    f.add("shifted nullity-filtered family disagrees on (U13, F3)");
  }

  long pairs = 0, shifted_all = 0, literal_all = 0;
  long shifted_steps_bad = 0, literal_steps_bad = 0, steps = 0;
  long bound_holds = 0, bound_fails = 0, axioms_fail = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto& entries = catalog(n).entries;
    for (const Matroid& m : entries) {
      for (const Matroid& l : entries) {
        const int s = l.rank() - m.rank();
        if (s < 1 || !certify_quotient(m, l).holds()) continue;
        ++pairs;
        const RemarkComparison c =
            compare_remark(m, l, fresh_labels(m.ground(), s));
        shifted_all += c.all_shifted();
        literal_all += c.all_literal();
        for (std::size_t i = 0; i < c.shifted_agrees.size(); ++i) {
          ++steps;
          shifted_steps_bad += !c.shifted_agrees[i];
          literal_steps_bad += !c.literal_agrees[i];
        }
        for (int j = 0; j <= s + 1; ++j) {
          axioms_fail += !remark_circuits(m, l, j).report.passed();
        }
        bool bounded = true;
        for (SubsetMask c2 : l.circuits()) {
          if (m.nullity(c2) > s + 1) bounded = false;
        }
        ++(bounded ? bound_holds : bound_fails);
      }
    }
  }
  r.report.push_back("quotient pairs with s>=1: " + std::to_string(pairs));
  r.report.push_back("shifted reading (j=i+1) agrees on every step in " +
                     std::to_string(shifted_all) + " pairs; disagreeing steps " +
                     std::to_string(shifted_steps_bad) + "/" +
                     std::to_string(steps));
  r.report.push_back("literal reading (j=i) agrees on every step in " +
                     std::to_string(literal_all) + " pairs; disagreeing steps " +
                     std::to_string(literal_steps_bad) + "/" +
                     std::to_string(steps));
  r.report.push_back("nullity-filtered families failing strong circuit axioms: " +
                     std::to_string(axioms_fail));
  r.report.push_back("every circuit C of L has nullity_M(C) <= s+1: holds in " +
                     std::to_string(bound_holds) + " pairs, fails in " +
                     std::to_string(bound_fails));
  finish(r, clock, f, "fixtures agree under j=i+1; tally over " +
                          std::to_string(pairs) + " pairs reported");
  return r;
}

SweepResult sweep_cli_contract(const std::string& scratch_dir, int max_n) {
  SweepResult r = start("C9", "CLI round trip and exit codes", 60.0);
  Stopwatch clock;
  Failures f;
  long round_trips = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const Matroid& m : catalog(n).entries) {
      const std::string text = serialize_matroid_text(m);
      const Matroid back = parse_matroid_text(text);
      ++round_trips;
      if (!(back == m) || serialize_matroid_text(back) != text) {
        f.add("round trip changed:\n" + text);
      }
    }
  }

  namespace fs = std::filesystem;
  const fs::path dir = fs::path(scratch_dir);
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream(dir / name) << body;
    return (dir / name).string();
  };
  const GroundSet abc{"a", "b", "c"};
  const std::string u13 = write("U13.m", serialize_matroid_text(Matroid::uniform(1, abc), "U13"));
  const std::string u23 = write("U23.m", serialize_matroid_text(Matroid::uniform(2, abc), "U23"));
  const std::string f3 = write("F3.m", serialize_matroid_text(Matroid::free(3), "F3"));
  const std::string u24 = write("U24.m", serialize_matroid_text(Matroid::uniform(2, 4), "U24"));
  const std::string bad = write("bad.m", "matroid bad\nground a b c\ncircuit a b\ncircuit a c\nend\n");
  const std::string out_dir = (dir / "factor_out").string();

  struct Case {
    std::vector<std::string> args;
    int expected;
    std::string must_print;
  };
  const std::vector<Case> script = {
      {{"check-axioms", u24, "--strong"}, 0, "ok"},
      {{"check-axioms", bad}, 1, "AC2"},
      {{"rank", u24, "--set", "a,b,c"}, 0, "rank 2"},
      {{"rank", u24, "--set", "a,z"}, 2, ""},
      {{"dual", u13}, 0, "circuit a b c"},
      {{"minor", u24, "--delete", "d"}, 0, "circuit a b c"},
      {{"minor", u24, "--contract", "d", "--delete", "d"}, 2, ""},
      {{"cyclic-sets", u13, "--nullity", "2"}, 0, "{a,b,c}"},
      {{"quotient", u13, u23, "--certificate"}, 0, "s=1"},
      {{"quotient", u23, u13}, 1, "{a,b}"},
      {{"lift", u13, u23, "--labels", "x"}, 0, "circuit b c x"},
      {{"lift", "bad-args"}, 2, ""},
      {{"lift", u23, u13, "--labels", "x"}, 1, ""},
      {{"factor", u13, f3, "--labels", "x1,x2", "--out", out_dir}, 0, "matroid L2"},
      {{"verify-pair", u24, "--x", "d", u13, u23}, 0, ""},
      {{"verify-pair", u24, "--x", "d", u23, u13}, 1, ""},
      {{"remark", u13, f3, "--j", "1", "--compare"}, 0, "shifted"},
      {{"enumerate", "--n", "3", "--method", "circuit", "--out",
        (dir / "cat3.txt").string()},
       0, "16"},
      {{"pairs", "--n", "2", "--out", (dir / "pairs2.txt").string()}, 0, ""},
      {{"check-lemmas", u24}, 0, ""},
  };
  for (const Case& c : script) {
    std::ostringstream out, err;
    const int code = run_command(c.args, out, err);
    std::string joined;
    for (const auto& a : c.args) joined += " " + a;
    if (code != c.expected) {
      f.add("`" + joined.substr(1) + "` exited " + std::to_string(code) +
            ", expected " + std::to_string(c.expected) + "\n" + out.str() +
            err.str());
    } else if (!c.must_print.empty() &&
               out.str().find(c.must_print) == std::string::npos) {
      f.add("`" + joined.substr(1) + "` did not print '" + c.must_print +
            "'\n" + out.str());
    }
  }
  finish(r, clock, f,
         std::to_string(round_trips) + " round trips, " +
             std::to_string(script.size()) + " scripted invocations");
  return r;
}

std::vector<SweepResult> run_all_sweeps(
    int cap, const std::string& scratch_dir,
    const std::function<void(const SweepResult&)>& on_result) {
  std::vector<SweepResult> out;
  auto run = [&](SweepResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  const auto bound = [&](int n) { return std::min(n, cap); };
  run(sweep_catalog_cross_oracle(bound(4)));
  run(sweep_lift_property(bound(5)));
  run(sweep_lift_criterion(bound(4)));
  run(sweep_oracle_equivalence(bound(3)));
  run(sweep_lemmas(bound(4), cap >= 5 ? 10000 : 0));
  run(sweep_homotopy(bound(4)));
  run(sweep_worked_fixtures());
  run(sweep_remark(bound(4)));
  run(sweep_cli_contract(scratch_dir, bound(5)));
  return out;
}

std::string format_result_line(const SweepResult& r) {
  char seconds[32];
  std::snprintf(seconds, sizeof(seconds), "%.2fs", r.seconds);
  const bool ok = r.passed && r.within_time();
  std::string line = std::string(ok ? "[PASS] " : "[FAIL] ") + r.id + " " +
                     r.title + " (" + seconds + ", limit " +
                     std::to_string(static_cast<int>(r.time_limit)) + "s): " +
                     r.detail;
  if (!r.within_time()) line += "; time limit exceeded";
  return line;
}

}  // namespace qlift
