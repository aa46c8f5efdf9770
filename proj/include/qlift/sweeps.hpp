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

// Exhaustive property sweeps over the small-matroid catalogs. Each sweep
// returns a SweepResult; the first counterexample, if any, is kept as a
// replayable dump.

#ifndef QLIFT_SWEEPS_HPP_
#define QLIFT_SWEEPS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qlift {

class Matroid;

/// How many instances of each lemma one matroid exercised.
struct LemmaTally {
  long span = 0;
  long extension = 0;
  long elimination = 0;
  long base_family = 0;
  /// Distinct cyclic pairs with A2 ⊊ A1: the conclusion was searched for
  /// exhaustively and not found. Reported, not asserted.
  long nested_extension_failures = 0;
  long nested_elimination_failures = 0;

  LemmaTally& operator+=(const LemmaTally& o);
};

/// Runs every lemma checker on every admissible argument tuple of `m`.
/// Counterexamples propagate as Error(LemmaCounterexample).
LemmaTally check_lemmas_on(const Matroid& m);

struct SweepResult {
  std::string id;
  std::string title;
  bool passed = false;
  /// One-line summary (counts).
  std::string detail;
  /// Informational lines that are reported but not asserted.
  std::vector<std::string> report;
  /// First counterexample, empty when passed.
  std::string counterexample;
  double seconds = 0.0;
  /// Upper bound on `seconds` the sweep is expected to meet.
  double time_limit = 0.0;

  bool within_time() const { return seconds < time_limit; }
};

/// Basis-filter and circuit-filter catalogs agree for n ≤ max_n; every entry
/// passes strong circuit axioms and dual(dual(M)) = M.
SweepResult sweep_catalog_cross_oracle(int max_n = 4);

/// For every N on n ≤ max_n and ∅ ≠ X ⊊ E, circuits of N \ X are unions of
/// circuits of N / X.
SweepResult sweep_lift_property(int max_n = 5);

/// Every quotient pair on n ≤ max_n with s ≥ 1 gets a verified witness.
SweepResult sweep_lift_criterion(int max_n = 4);

/// On n ≤ max_n: criterion with s = 1 ⇔ a catalog N on n + 1 elements
/// verifies the pair.
SweepResult sweep_oracle_equivalence(int max_n = 3);

/// Span, extension, elimination, base-family, high-nullity cyclic sets, rank order and
/// transitivity: exhaustive on n ≤ max_n, then `random_instances` random
/// instances drawn from the 5- and 6-element catalogs.
SweepResult sweep_lemmas(int max_n = 4, int random_instances = 10000,
                         std::uint64_t seed = 20261016);

/// factor_homotopy for every quotient pair on n ≤ max_n with s ≥ 2 and
/// every ordering of the new elements.
SweepResult sweep_homotopy(int max_n = 4);

/// The two hand-derived lift constructions and the three-step factorization.
SweepResult sweep_worked_fixtures();

/// Nullity-filtered families against minor-based factorizations: hard check on the
/// worked fixtures, tallies over all pairs on n ≤ max_n.
SweepResult sweep_remark(int max_n = 4);

/// Text round trip on every catalog entry for n ≤ max_n, and the exit-code
/// contract on a fixed script of CLI invocations run in `scratch_dir`.
SweepResult sweep_cli_contract(const std::string& scratch_dir, int max_n = 5);

/// All nine sweeps; `cap` lowers every size bound to at most `cap`.
std::vector<SweepResult> run_all_sweeps(
    int cap, const std::string& scratch_dir,
    const std::function<void(const SweepResult&)>& on_result = {});

std::string format_result_line(const SweepResult& r);

}  // namespace qlift

#endif  // QLIFT_SWEEPS_HPP_
