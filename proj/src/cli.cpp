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

#include "qlift/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "qlift/axioms.hpp"
#include "qlift/enumeration.hpp"
#include "qlift/error.hpp"
#include "qlift/minors.hpp"
#include "qlift/quotient.hpp"
#include "qlift/sweeps.hpp"
#include "qlift/text_format.hpp"

namespace qlift {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir);
}

// "a,b" -> {"a", "b"}; empty input gives no labels.
std::vector<std::string> split_labels(const std::string& list) {
  std::vector<std::string> out;
  if (list.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = list.find(',', start);
    out.push_back(list.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Matroid load(const std::string& path) {
  return parse_matroid_text(read_file(path));
}

// Errors that report a false property rather than bad input.
bool is_property_failure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::QuotientViolation:
    case ErrorKind::ConstructionFailure:
    case ErrorKind::FactorizationFailure:
    case ErrorKind::LemmaCounterexample:
      return true;
    default:
      return false;
  }
}

std::string family_text(const GroundSet& g, const SetFamily& family) {
  std::string out;
  for (SubsetMask c : family) out += g.format(c) + "\n";
  return out;
}

struct Options {
  std::string file, m_file, l_file, n_file;
  std::string set, del, con, labels, x;
  std::optional<int> nullity;
  std::string out_path, method = "basis", scratch;
  int j = 0, n = 0;
  bool strong = false, certificate = false, compare = false;
};

int cmd_check_axioms(const Options& o, std::ostream& out) {
  const auto [ground, family] =
      document_family(parse_document(read_file(o.file)));
  const AxiomReport report = check_circuit_axioms(ground, family, o.strong);
  out << report.describe(ground);
  return report.passed() ? kExitOk : kExitPropertyFails;
}

int cmd_rank(const Options& o, std::ostream& out) {
  const Matroid m = load(o.file);
  const SubsetMask a = o.set.empty()
                         ? m.ground().full()
                         : m.ground().mask_of(split_labels(o.set));
  out << "rank " << m.rank(a) << "\n";
  return kExitOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  out << serialize_matroid_text(load(o.file).dual());
  return kExitOk;
}

int cmd_minor(const Options& o, std::ostream& out) {
  const Matroid m = load(o.file);
  out << serialize_matroid_text(
      minor(m, m.ground().mask_of(split_labels(o.con)), m.ground().mask_of(split_labels(o.del))));
  return kExitOk;
}

int cmd_cyclic_sets(const Options& o, std::ostream& out) {
  const Matroid m = load(o.file);
  out << family_text(m.ground(), m.cyclic_sets(o.nullity));
  return kExitOk;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  const Matroid m = load(o.m_file);
  const Matroid l = load(o.l_file);
  const QuotientResult q = certify_quotient(m, l);
  if (!q.holds()) {
    const QuotientRefusal& r = q.refusal();
    out << "quotient: no\ncircuit " << l.ground().format(r.circuit)
        << " of L is not a union of circuits of M; uncovered "
        << l.ground().format(r.uncovered) << "\n";
    return kExitPropertyFails;
  }
  out << "quotient: yes " << q.certificate().describe();
  if (o.certificate) out << witness_dump({{"M", &m}, {"L", &l}}, {});
  return kExitOk;
}

int cmd_lift(const Options& o, std::ostream& out) {
  const LiftWitness w = lift_witness(load(o.m_file), load(o.l_file), split_labels(o.labels));
  const std::string text = serialize_matroid_text(w.n, "N");
  out << text;
  if (!o.out_path.empty()) {
    ensure_directory(o.out_path);
    write_file(std::filesystem::path(o.out_path) / "N.m", text);
  }
  return kExitOk;
}

int cmd_factor(const Options& o, std::ostream& out) {
  const Matroid m = load(o.m_file);
  const Matroid l = load(o.l_file);
  const HomotopySequence h = factor_homotopy(m, l, split_labels(o.labels));
  if (!o.out_path.empty()) {
    ensure_directory(o.out_path);
    const std::filesystem::path dir(o.out_path);
    write_file(dir / "N.m",
               serialize_matroid_text(lift_witness(m, l, split_labels(o.labels)).n, "N"));
    for (std::size_t i = 0; i < h.steps.size(); ++i) {
      const std::string name = "L" + std::to_string(i);
      write_file(dir / (name + ".m"), serialize_matroid_text(h.steps[i], name));
    }
  }
  for (std::size_t i = 0; i < h.steps.size(); ++i) {
    out << serialize_matroid_text(h.steps[i], "L" + std::to_string(i));
  }
  return kExitOk;
}

int cmd_verify_pair(const Options& o, std::ostream& out) {
  const Matroid n = load(o.n_file);
  const PairVerification v = verify_pair(n, n.ground().mask_of(split_labels(o.x)),
                                         load(o.m_file), load(o.l_file));
  if (v.holds) {
    out << "verified\n";
    return kExitOk;
  }
  out << "not verified: " << v.discrepancy << "\n";
  return kExitPropertyFails;
}

int cmd_remark(const Options& o, std::ostream& out) {
  const Matroid m = load(o.m_file);
  const Matroid l = load(o.l_file);
  const RemarkResult r = remark_circuits(m, l, o.j);
  out << family_text(m.ground(), r.family) << "axioms: "
      << r.report.describe(m.ground());
  if (o.compare) {
    const int s = l.rank() - m.rank();
    const RemarkComparison c =
        compare_remark(m, l, fresh_labels(m.ground(), s));
    for (std::size_t i = 0; i < c.literal_agrees.size(); ++i) {
      out << "L" << i << ": literal j=" << i << " "
          << (c.literal_agrees[i] ? "agrees" : "differs") << ", shifted j="
          << i + 1 << " " << (c.shifted_agrees[i] ? "agrees" : "differs")
          << "\n";
    }
  }
  return r.report.passed() ? kExitOk : kExitPropertyFails;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.method != "basis" && o.method != "circuit") {
    throw Error(ErrorKind::SyntaxError, "--method must be basis or circuit");
  }
  const MatroidCatalog c = enumerate_matroids(
      o.n, o.method == "basis" ? EnumerationMethod::BasisFilter
                               : EnumerationMethod::CircuitFilter);
  std::ostringstream text;
  write_catalog(text, c);
  if (o.out_path.empty()) {
    out << text.str();
  } else {
    write_file(o.out_path, text.str());
  }
  out << c.entries.size() << " matroids on " << o.n << " elements\n";
  return kExitOk;
}

int cmd_pairs(const Options& o, std::ostream& out) {
  const std::vector<PairRecord> records = pair_catalog(o.n);
  std::ostringstream text;
  write_pair_catalog(text, records);
  if (o.out_path.empty()) {
    out << text.str();
  } else {
    write_file(o.out_path, text.str());
  }
  long quotients = 0, failed = 0;
  for (const PairRecord& r : records) {
    quotients += r.quotient;
    failed += r.witness == WitnessStatus::Failed;
  }
  out << records.size() << " pairs, " << quotients << " quotient pairs, "
      << failed << " failed witnesses\n";
  if (failed == 0) return kExitOk;
  for (const PairRecord& r : records) {
    if (r.witness == WitnessStatus::Failed) out << r.line() << "\n";
  }
  return kExitPropertyFails;
}

int cmd_check_lemmas(const Options& o, std::ostream& out) {
  const LemmaTally t = check_lemmas_on(load(o.file));
  out << "span " << t.span << "\nextension " << t.extension
      << "\nelimination " << t.elimination << "\nbase-family "
      << t.base_family << "\nnested pairs without extension "
      << t.nested_extension_failures << "\nnested pairs without elimination "
      << t.nested_elimination_failures << "\n";
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const std::string scratch =
      o.scratch.empty()
          ? (std::filesystem::temp_directory_path() / "qlift-sweep").string()
          : o.scratch;
  bool all = true;
  run_all_sweeps(o.n, scratch, [&](const SweepResult& r) {
    out << format_result_line(r) << "\n";
    for (const auto& line : r.report) out << "  " << line << "\n";
    if (!r.passed) out << r.counterexample << "\n";
    all = all && r.passed && r.within_time();
    out.flush();
  });
  return all ? kExitOk : kExitPropertyFails;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app("Quotients, lifts and circuit axioms of small matroids",
               "qlift");
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check-axioms", "circuit axioms of a file");
  check->add_option("FILE", o.file)->required();
  check->add_flag("--strong", o.strong, "also check strong elimination");

  auto* rank = app.add_subcommand("rank", "rank of a set");
  rank->add_option("FILE", o.file)->required();
  rank->add_option("--set", o.set, "comma-separated labels");

  auto* dual = app.add_subcommand("dual", "dual matroid");
  dual->add_option("FILE", o.file)->required();

  auto* mnr = app.add_subcommand("minor", "contract, then delete");
  mnr->add_option("FILE", o.file)->required();
  mnr->add_option("--delete", o.del);
  mnr->add_option("--contract", o.con);

  auto* cyc = app.add_subcommand("cyclic-sets", "cyclic sets");
  cyc->add_option("FILE", o.file)->required();
  cyc->add_option("--nullity", o.nullity);

  auto* quo = app.add_subcommand("quotient", "quotient criterion");
  quo->add_option("MFILE", o.m_file)->required();
  quo->add_option("LFILE", o.l_file)->required();
  quo->add_flag("--certificate", o.certificate,
                "append both matroids as documents");

  auto* lift = app.add_subcommand("lift", "build N with N/X = M, N\\X = L");
  lift->add_option("MFILE", o.m_file)->required();
  lift->add_option("LFILE", o.l_file)->required();
  lift->add_option("--labels", o.labels)->required();
  lift->add_option("--out", o.out_path, "directory for N.m");

  auto* factor = app.add_subcommand("factor", "single-step factorization");
  factor->add_option("MFILE", o.m_file)->required();
  factor->add_option("LFILE", o.l_file)->required();
  factor->add_option("--labels", o.labels)->required();
  factor->add_option("--out", o.out_path, "directory for N.m and L<i>.m");

  auto* verify = app.add_subcommand("verify-pair", "check N/X = M, N\\X = L");
  verify->add_option("NFILE", o.n_file)->required();
  verify->add_option("--x", o.x)->required();
  verify->add_option("MFILE", o.m_file)->required();
  verify->add_option("LFILE", o.l_file)->required();

  auto* remark = app.add_subcommand("remark", "nullity-filtered family");
  remark->add_option("MFILE", o.m_file)->required();
  remark->add_option("LFILE", o.l_file)->required();
  remark->add_option("--j", o.j)->required();
  remark->add_flag("--compare", o.compare, "compare with a factorization");

  auto* enumerate = app.add_subcommand("enumerate", "matroid catalog");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--method", o.method)->check(
      CLI::IsMember({"basis", "circuit"}));
  enumerate->add_option("--out", o.out_path);

  auto* pairs = app.add_subcommand("pairs", "pair catalog");
  pairs->add_option("--n", o.n)->required();
  pairs->add_option("--out", o.out_path);

  auto* lemmas = app.add_subcommand("check-lemmas", "lemma checkers");
  lemmas->add_option("FILE", o.file)->required();

  auto* sweep = app.add_subcommand("sweep", "all property sweeps");
  sweep->add_option("--n", o.n)->required();
  sweep->add_option("--scratch", o.scratch, "scratch directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty()
                  ? app.help()
                  : app.get_subcommands().front()->help());
      return kExitOk;
    }
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const CLI::App* chosen = app.get_subcommands().front();
    if (chosen == check) return cmd_check_axioms(o, out);
    if (chosen == rank) return cmd_rank(o, out);
    if (chosen == dual) return cmd_dual(o, out);
    if (chosen == mnr) return cmd_minor(o, out);
    if (chosen == cyc) return cmd_cyclic_sets(o, out);
    if (chosen == quo) return cmd_quotient(o, out);
    if (chosen == lift) return cmd_lift(o, out);
    if (chosen == factor) return cmd_factor(o, out);
    if (chosen == verify) return cmd_verify_pair(o, out);
    if (chosen == remark) return cmd_remark(o, out);
    if (chosen == enumerate) return cmd_enumerate(o, out);
    if (chosen == pairs) return cmd_pairs(o, out);
    if (chosen == lemmas) return cmd_check_lemmas(o, out);
    return cmd_sweep(o, out);
  } catch (const Error& e) {
    if (is_property_failure(e.kind())) {
      out << e.what() << "\n" << e.dump();
      return kExitPropertyFails;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qlift
