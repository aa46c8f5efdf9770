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

#include "qlift/text_format.hpp"

#include <set>

#include "qlift/axioms.hpp"
#include "qlift/error.hpp"

namespace qlift {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) {
      out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
  }
  return out;
}

[[noreturn]] void fail(ErrorKind kind, int line, int column,
                       const std::string& what) {
  throw Error(kind, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + what);
}

std::string label_of(const Token& t, int line) {
  if (!is_valid_label(t.text)) {
    fail(ErrorKind::SyntaxError, line, t.column,
         "invalid label '" + std::string(t.text) + "'");
  }
  return std::string(t.text);
}

enum class State { Outside, Header, Body };

}  // namespace

std::vector<MatroidDocument> parse_documents(std::string_view text) {
  std::vector<MatroidDocument> docs;
  State state = State::Outside;
  MatroidDocument doc;
  std::set<std::string> ground_labels;
  std::set<std::vector<std::string>> seen_circuits;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();

    switch (state) {
      case State::Outside: {
        if (head.text != "matroid") {
          fail(ErrorKind::SyntaxError, line_no, head.column,
               "expected 'matroid'");
        }
        if (tokens.size() > 2) {
          fail(ErrorKind::SyntaxError, line_no, tokens[2].column,
               "unexpected token after matroid name");
        }
        doc = MatroidDocument{};
        ground_labels.clear();
        seen_circuits.clear();
        if (tokens.size() == 2) doc.name = label_of(tokens[1], line_no);
        state = State::Header;
        break;
      }
      case State::Header: {
        if (head.text != "ground") {
          fail(ErrorKind::SyntaxError, line_no, head.column,
               "expected 'ground'");
        }
        if (tokens.size() < 2) {
          fail(ErrorKind::SyntaxError, line_no, head.column,
               "ground needs at least one label");
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          std::string l = label_of(tokens[i], line_no);
          if (!ground_labels.insert(l).second) {
            fail(ErrorKind::DuplicateLabel, line_no, tokens[i].column,
                 "duplicate label '" + l + "'");
          }
          doc.ground.push_back(std::move(l));
        }
        if (static_cast<int>(doc.ground.size()) > kMaxGroundSize) {
          fail(ErrorKind::GroundTooLarge, line_no, head.column,
               "more than " + std::to_string(kMaxGroundSize) + " labels");
        }
        state = State::Body;
        break;
      }
      case State::Body: {
        if (head.text == "end") {
          if (tokens.size() > 1) {
            fail(ErrorKind::SyntaxError, line_no, tokens[1].column,
                 "unexpected token after 'end'");
          }
          docs.push_back(std::move(doc));
          doc = MatroidDocument{};
          state = State::Outside;
          break;
        }
        if (head.text != "circuit") {
          fail(ErrorKind::SyntaxError, line_no, head.column,
               "expected 'circuit' or 'end'");
        }
        if (tokens.size() < 2) {
          fail(ErrorKind::SyntaxError, line_no, head.column,
               "circuit needs at least one label");
        }
        std::vector<std::string> labels;
        std::set<std::string> in_line;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          std::string l = label_of(tokens[i], line_no);
          if (!ground_labels.count(l)) {
            fail(ErrorKind::UnknownLabel, line_no, tokens[i].column,
                 "unknown label '" + l + "'");
          }
          if (!in_line.insert(l).second) {
            fail(ErrorKind::DuplicateLabel, line_no, tokens[i].column,
                 "label '" + l + "' repeated in circuit");
          }
          labels.push_back(std::move(l));
        }
        std::vector<std::string> key(in_line.begin(), in_line.end());
        if (!seen_circuits.insert(key).second) {
          fail(ErrorKind::SyntaxError, line_no, head.column,
               "duplicate circuit");
        }
        doc.circuit_lines.push_back(std::move(labels));
        doc.circuit_source_lines.push_back(line_no);
        break;
      }
    }
  }
  if (state != State::Outside) {
    fail(ErrorKind::SyntaxError, line_no, 1, "missing 'end'");
  }
  return docs;
}

MatroidDocument parse_document(std::string_view text) {
  auto docs = parse_documents(text);
  if (docs.size() != 1) {
    throw Error(ErrorKind::SyntaxError,
                "expected exactly one matroid document, found " +
                    std::to_string(docs.size()));
  }
  return std::move(docs.front());
}

std::pair<GroundSet, SetFamily> document_family(const MatroidDocument& doc) {
  GroundSet ground(doc.ground);
  std::vector<SubsetMask> circuits;
  for (const auto& line : doc.circuit_lines) {
    circuits.push_back(ground.mask_of(line));
  }
  return {std::move(ground), SetFamily(std::move(circuits))};
}

Matroid to_matroid(const MatroidDocument& doc) {
  auto [ground, family] = document_family(doc);
  const AxiomReport report = check_circuit_axioms(ground, family, false, 1);
  if (!report.passed()) {
    const Violation& v = report.violations.front();
    std::string where;
    for (SubsetMask s : v.sets) {
      for (std::size_t i = 0; i < doc.circuit_lines.size(); ++i) {
        if (ground.mask_of(doc.circuit_lines[i]) == s &&
            i < doc.circuit_source_lines.size()) {
          where += (where.empty() ? "line " : ", line ") +
                   std::to_string(doc.circuit_source_lines[i]);
        }
      }
    }
    const ErrorKind kind = v.axiom == "AC0"   ? ErrorKind::EmptyCircuit
                           : v.axiom == "AC1" ? ErrorKind::NotClutter
                                              : ErrorKind::EliminationFailure;
    throw Error(kind, (where.empty() ? "" : where + ": ") + v.describe(ground));
  }
  return Matroid::from_circuits(std::move(ground), std::move(family));
}

Matroid parse_matroid_text(std::string_view text) {
  return to_matroid(parse_document(text));
}

MatroidDocument to_document(const Matroid& m, std::optional<std::string> name) {
  MatroidDocument doc;
  doc.name = std::move(name);
  doc.ground = m.ground().labels();
  for (SubsetMask c : m.circuits()) {
    std::vector<std::string> labels;
    for (int e : c.elements()) labels.push_back(m.ground().label(e));
    doc.circuit_lines.push_back(std::move(labels));
  }
  return doc;
}

std::string serialize_document(const MatroidDocument& doc) {
  std::string out = "matroid";
  if (doc.name) out += " " + *doc.name;
  out += "\nground";
  for (const auto& l : doc.ground) out += " " + l;
  out += "\n";
  for (const auto& line : doc.circuit_lines) {
    out += "circuit";
    for (const auto& l : line) out += " " + l;
    out += "\n";
  }
  out += "end\n";
  return out;
}

std::string serialize_matroid_text(const Matroid& m,
                                   std::optional<std::string> name) {
  return serialize_document(to_document(m, std::move(name)));
}

std::string catalog_line(const Matroid& m) {
  if (m.size() > 16) {
    throw Error(ErrorKind::GroundTooLarge,
                "catalog records hold at most 16 elements");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "n=" + std::to_string(m.size()) +
                    ";rank=" + std::to_string(m.rank()) + ";circuits=";
  if (m.circuits().empty()) return out + "-";
  bool first = true;
  for (SubsetMask c : m.circuits()) {
    if (!first) out += '|';
    first = false;
    for (int e : c.elements()) out += kHex[e];
  }
  return out;
}

Matroid parse_catalog_line(std::string_view line,
                           const std::optional<GroundSet>& ground) {
  auto bad = [&](const std::string& why) -> Error {
    return Error(ErrorKind::SyntaxError,
                 "catalog line '" + std::string(line) + "': " + why);
  };
  auto take_field = [&](std::string_view& rest,
                        std::string_view key) -> std::string_view {
    if (rest.substr(0, key.size()) != key) throw bad("expected " + std::string(key));
    rest.remove_prefix(key.size());
    const auto semi = rest.find(';');
    std::string_view value = rest.substr(0, semi);
    rest = semi == std::string_view::npos ? std::string_view{}
                                          : rest.substr(semi + 1);
    return value;
  };
  auto to_int = [&](std::string_view s) {
    if (s.empty()) throw bad("empty number");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw bad("bad number");
      v = v * 10 + (c - '0');
    }
    return v;
  };

  std::string_view rest = line;
  const int n = to_int(take_field(rest, "n="));
  const int rank = to_int(take_field(rest, "rank="));
  const std::string_view circuits_text = take_field(rest, "circuits=");
  if (!rest.empty()) throw bad("trailing data");
  if (n < 1 || n > 16) throw bad("n out of range");

  const GroundSet g = ground ? *ground : GroundSet::letters(n);
  if (g.size() != n) throw bad("ground size mismatch");

  std::vector<SubsetMask> circuits;
  if (circuits_text != "-") {
    std::size_t start = 0;
    while (start <= circuits_text.size()) {
      auto bar = circuits_text.find('|', start);
      if (bar == std::string_view::npos) bar = circuits_text.size();
      const std::string_view c = circuits_text.substr(start, bar - start);
      if (c.empty()) throw bad("empty circuit");
      SubsetMask mask;
      for (char ch : c) {
        int e = -1;
        if (ch >= '0' && ch <= '9') e = ch - '0';
        if (ch >= 'a' && ch <= 'f') e = 10 + (ch - 'a');
        if (e < 0 || e >= n || mask.contains(e)) throw bad("bad element");
        mask = mask.with(e);
      }
      circuits.push_back(mask);
      start = bar + 1;
    }
  }
  Matroid m = Matroid::from_circuits(g, SetFamily(std::move(circuits)));
  if (m.rank() != rank) throw bad("rank field disagrees with circuits");
  return m;
}

}  // namespace qlift
