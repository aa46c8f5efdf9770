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

#include "qlift/quotient.hpp"

#include <set>

#include "qlift/error.hpp"
#include "qlift/minors.hpp"
#include "qlift/text_format.hpp"

namespace qlift {

namespace {

void require_same_ground(const Matroid& a, const Matroid& b) {
  if (!(a.ground() == b.ground())) {
    throw Error(ErrorKind::GroundMismatch,
                "matroids live on different ground sets");
  }
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l;
  return out;
}

// Document for a family that need not be a matroid.
std::string family_document(const std::string& name, const GroundSet& ground,
                            const SetFamily& family) {
  MatroidDocument doc;
  doc.name = name;
  doc.ground = ground.labels();
  for (SubsetMask c : family) {
    std::vector<std::string> labels;
    for (int e : c.elements()) labels.push_back(ground.label(e));
    doc.circuit_lines.push_back(std::move(labels));
  }
  return serialize_document(doc);
}

}  // namespace

std::string witness_dump(
    const std::vector<std::pair<std::string, const Matroid*>>& matroids,
    const std::vector<std::string>& notes) {
  std::string out;
  for (const auto& [name, m] : matroids) {
    out += serialize_matroid_text(*m, name);
  }
  for (const auto& note : notes) out += "# " + note + "\n";
  return out;
}

std::string QuotientCertificate::describe() const {
  const GroundSet& g = m.ground();
  std::string out = "s=" + std::to_string(step_s) + "\n";
  for (const auto& [d, cover] : coverings) {
    out += g.format(d) + " <-";
    for (SubsetMask c : cover) out += " " + g.format(c);
    out += "\n";
  }
  return out;
}

const QuotientCertificate& QuotientResult::certificate() const {
  if (!holds()) {
    throw Error(ErrorKind::QuotientViolation, "no certificate: criterion fails");
  }
  return std::get<QuotientCertificate>(value_);
}

const QuotientRefusal& QuotientResult::refusal() const {
  if (holds()) {
    throw Error(ErrorKind::PreconditionFailure, "criterion holds; no refusal");
  }
  return std::get<QuotientRefusal>(value_);
}

QuotientResult certify_quotient(const Matroid& m, const Matroid& l) {
  require_same_ground(m, l);
  QuotientCertificate cert{m, l, l.rank() - m.rank(), {}};
  for (SubsetMask d : l.circuits()) {
    SetFamily cover = m.circuits().inside(d);
    const SubsetMask covered = cover.support();
    if (covered != d) return QuotientResult(QuotientRefusal{d, d - covered});
    cert.coverings.emplace_back(d, std::move(cover));
  }
  if ((cert.step_s <= 0) != (m == l)) {
    throw Error(ErrorKind::LemmaCounterexample,
                "quotient pair with rank step " + std::to_string(cert.step_s),
                witness_dump({{"M", &m}, {"L", &l}},
                             {"circuit-union criterion holds but the rank "
                              "order fails"}));
  }
  return QuotientResult(std::move(cert));
}

SubsetMask LiftWitness::x_mask() const {
  const int e = m.size();
  return SubsetMask::prefix(e + static_cast<int>(x_labels.size())) -
         SubsetMask::prefix(e);
}

LiftWitness lift_witness(const Matroid& m, const Matroid& l,
                         const std::vector<std::string>& x_labels) {
  require_same_ground(m, l);
  if (x_labels.empty()) {
    throw Error(ErrorKind::EmptyExtension,
                "a lift witness needs at least one new element");
  }
  const QuotientResult check = certify_quotient(m, l);
  if (!check.holds()) {
    const auto& r = check.refusal();
    throw Error(ErrorKind::QuotientViolation,
                "circuit " + l.ground().format(r.circuit) +
                    " of L is not a union of circuits of M; uncovered " +
                    l.ground().format(r.uncovered));
  }
  const int s = check.certificate().step_s;
  if (static_cast<int>(x_labels.size()) != s) {
    throw Error(ErrorKind::RankMismatch,
                std::to_string(x_labels.size()) + " new labels for rank step " +
                    std::to_string(s));
  }
  std::set<std::string> distinct(x_labels.begin(), x_labels.end());
  if (distinct.size() != x_labels.size()) {
    throw Error(ErrorKind::LabelClash, "new labels repeat");
  }
  for (const auto& x : x_labels) {
    if (!is_valid_label(x)) {
      throw Error(ErrorKind::LabelClash, "invalid label '" + x + "'");
    }
  }
  const int n = m.size();
  if (n + s > kMaxGroundSize) {
    throw Error(ErrorKind::GroundTooLarge,
                "E ∪ X would have " + std::to_string(n + s) + " elements");
  }
  const GroundSet big = m.ground().extended(x_labels);
  const SubsetMask x_all = SubsetMask::prefix(n + s) - SubsetMask::prefix(n);

  std::vector<SubsetMask> added;
  for_each_subset(m.ground().full(), [&](SubsetMask a) {
    if (a.empty() || !m.is_cyclic(a) || !l.is_independent(a)) return;
    const int c = m.nullity(a);
    const int z_size = s + 1 - c;
    if (z_size < 1) return;
    for_each_subset(x_all, [&](SubsetMask z) {
      if (z.size() == z_size) added.push_back(a | z);
    });
  });
  SetFamily x_family(std::move(added));
  SetFamily candidate = l.circuits();
  candidate.insert_all(x_family);

  auto failure = [&](const std::string& what) {
    return Error(ErrorKind::ConstructionFailure, what,
                 witness_dump({{"M", &m}, {"L", &l}},
                              {"new labels: " + join_labels(x_labels), what}) +
                     family_document("candidate", big, candidate));
  };

  if (!(minimal_members(candidate) == candidate)) {
    throw failure("C(L) together with the added sets is not a clutter");
  }
  const AxiomReport axioms = check_circuit_axioms(big, candidate, true, 1);
  if (!axioms.passed()) {
    throw failure("candidate circuits violate " +
                  axioms.violations.front().describe(big));
  }
  Matroid big_n = Matroid::from_circuits(big, candidate);

  const PairVerification pair = verify_pair(big_n, x_all, m, l);
  if (!pair.holds) throw failure(pair.discrepancy);

  return LiftWitness{m, l, std::move(big_n), x_labels, std::move(x_family),
                     true};
}

PairVerification verify_pair(const Matroid& n, SubsetMask x, const Matroid& m,
                             const Matroid& l) {
  if (x.empty() || !n.ground().contains_mask(x) || x == n.ground().full()) {
    throw Error(ErrorKind::PreconditionFailure,
                "X must be a non-empty proper subset of the ground set");
  }
  const GroundSet rest = n.ground().restrict(n.ground().full() - x);
  if (!(m.ground() == rest) || !(l.ground() == rest)) {
    throw Error(ErrorKind::GroundMismatch,
                "M and L must live on the ground set of N minus X");
  }
  PairVerification out;
  const Matroid contracted = contract(n, x);
  const Matroid deleted = delete_set(n, x);
  if (!(contracted == m)) {
    out.discrepancy = "N/X differs from M: N/X = " +
                      serialize_matroid_text(contracted);
  }
  if (!(deleted == l)) {
    out.discrepancy += (out.discrepancy.empty() ? "" : "; ") +
                       std::string("N\\X differs from L: N\\X = ") +
                       serialize_matroid_text(deleted);
  }
  out.holds = out.discrepancy.empty();
  return out;
}

ComposedWitness compose_witnesses(const LiftWitness& first,
                                  const LiftWitness& second) {
  if (!(first.l == second.m)) {
    throw Error(ErrorKind::PreconditionFailure,
                "the first witness's lift is not the second's quotient");
  }
  std::vector<std::string> labels = first.x_labels;
  for (const auto& y : second.x_labels) {
    for (const auto& x : first.x_labels) {
      if (x == y) {
        throw Error(ErrorKind::LabelClash,
                    "label '" + y + "' appears in both witnesses");
      }
    }
    labels.push_back(y);
  }
  const QuotientResult composed = certify_quotient(first.m, second.l);
  if (!composed.holds()) {
    throw Error(ErrorKind::LemmaCounterexample,
                "circuit-union coverings failed to compose",
                witness_dump({{"M", &first.m}, {"L", &first.l},
                              {"K", &second.l}},
                             {"(M,L) and (L,K) are quotient pairs, (M,K) "
                              "is not"}));
  }
  return ComposedWitness{lift_witness(first.m, second.l, labels),
                         composed.certificate()};
}

HomotopySequence factor_homotopy(const Matroid& m, const Matroid& l,
                                 const std::vector<std::string>& x_labels) {
  const LiftWitness witness = lift_witness(m, l, x_labels);
  const int n = m.size();
  const int k = static_cast<int>(x_labels.size());
  HomotopySequence out{{}, x_labels};
  for (int i = 0; i <= k; ++i) {
    // x_1..x_i deleted, x_{i+1}..x_k contracted
    const SubsetMask deleted = SubsetMask::prefix(n + i) - SubsetMask::prefix(n);
    const SubsetMask contracted =
        SubsetMask::prefix(n + k) - SubsetMask::prefix(n + i);
    out.steps.push_back(minor(witness.n, contracted, deleted));
  }

  auto failure = [&](int step, const std::string& what) {
    std::vector<std::pair<std::string, const Matroid*>> ms = {
        {"M", &m}, {"L", &l}, {"N", &witness.n}};
    std::vector<std::string> names;
    for (int i = 0; i <= k; ++i) names.push_back("L" + std::to_string(i));
    for (int i = 0; i <= k; ++i) ms.emplace_back(names[i], &out.steps[i]);
    return Error(ErrorKind::FactorizationFailure,
                 "step " + std::to_string(step) + ": " + what,
                 witness_dump(ms, {"order: " + join_labels(x_labels), what}));
  };

  if (!(out.steps.front() == m)) throw failure(0, "L_0 differs from M");
  if (!(out.steps.back() == l)) throw failure(k, "L_k differs from L");
  for (int i = 0; i <= k; ++i) {
    if (out.steps[i].rank() != m.rank() + i) {
      throw failure(i, "rank is " + std::to_string(out.steps[i].rank()) +
                           ", expected " + std::to_string(m.rank() + i));
    }
  }
  for (int i = 1; i <= k; ++i) {
    const QuotientResult r = certify_quotient(out.steps[i - 1], out.steps[i]);
    if (!r.holds() || r.certificate().step_s != 1) {
      throw failure(i, "consecutive pair is not an elementary quotient");
    }
  }
  return out;
}

RemarkResult remark_circuits(const Matroid& m, const Matroid& l, int j) {
  const QuotientResult check = certify_quotient(m, l);
  if (!check.holds()) {
    throw Error(ErrorKind::QuotientViolation,
                "nullity-filtered family needs a quotient pair");
  }
  const int s = check.certificate().step_s;
  if (j < 0 || j > s + 1) {
    throw Error(ErrorKind::PreconditionFailure,
                "j = " + std::to_string(j) + " outside 0.." +
                    std::to_string(s + 1));
  }
  std::vector<SubsetMask> out;
  for (SubsetMask c : l.circuits()) {
    if (m.nullity(c) <= j) out.push_back(c);
  }
  for_each_subset(m.ground().full(), [&](SubsetMask a) {
    // ∅ has nullity 0 and is independent everywhere, but is never a circuit
    if (a.empty()) return;
    if (m.is_cyclic(a) && l.is_independent(a) && m.nullity(a) == j) {
      out.push_back(a);
    }
  });
  SetFamily family(std::move(out));
  if (!(minimal_members(family) == family)) {
    throw Error(ErrorKind::LemmaCounterexample,
                "nullity-filtered family for j = " + std::to_string(j) +
                    " is not a clutter",
                witness_dump({{"M", &m}, {"L", &l}}, {}));
  }
  AxiomReport report = check_circuit_axioms(m.ground(), family, true);
  return RemarkResult{std::move(family), std::move(report)};
}

bool RemarkComparison::all_literal() const {
  for (bool b : literal_agrees) {
    if (!b) return false;
  }
  return true;
}

bool RemarkComparison::all_shifted() const {
  for (bool b : shifted_agrees) {
    if (!b) return false;
  }
  return true;
}

RemarkComparison compare_remark(const Matroid& m, const Matroid& l,
                                const std::vector<std::string>& x_labels) {
  RemarkComparison out{factor_homotopy(m, l, x_labels), {}, {}};
  const int k = static_cast<int>(x_labels.size());
  for (int i = 0; i <= k; ++i) {
    const SetFamily& actual = out.sequence.steps[i].circuits();
    out.literal_agrees.push_back(remark_circuits(m, l, i).family == actual);
    out.shifted_agrees.push_back(remark_circuits(m, l, i + 1).family == actual);
  }
  return out;
}

AxiomReport bigcyclo_check(const Matroid& m, const Matroid& l) {
  const QuotientResult check = certify_quotient(m, l);
  if (!check.holds()) {
    throw Error(ErrorKind::QuotientViolation,
                "high-nullity check needs a quotient pair");
  }
  const int s = check.certificate().step_s;
  AxiomReport report;
  for (SubsetMask a : m.cyclic_sets(s + 1)) {
    if (l.is_independent(a)) report.violations.push_back({"CYC", {a}, {}});
  }
  return report;
}

std::vector<std::string> fresh_labels(const GroundSet& ground, int count) {
  std::vector<std::string> out;
  std::string prefix = "x";
  while (true) {
    out.clear();
    bool clash = false;
    for (int i = 1; i <= count; ++i) {
      std::string label = prefix + std::to_string(i);
      if (ground.index_of(label)) {
        clash = true;
        break;
      }
      out.push_back(std::move(label));
    }
    if (!clash) return out;
    prefix += "_";
  }
}

}  // namespace qlift
