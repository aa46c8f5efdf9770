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

// Plain-text matroid documents:
//
//   # comment
//   matroid U23
//   ground a b c
//   circuit a b c
//   end
//
// Labels match [A-Za-z0-9_]+ and the ground line fixes the element order.
// Catalog records are single lines: `n=3;rank=2;circuits=012`, with each
// circuit written as its element indices in hex and `-` for no circuits.

#ifndef QLIFT_TEXT_FORMAT_HPP_
#define QLIFT_TEXT_FORMAT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlift/matroid.hpp"

namespace qlift {

struct MatroidDocument {
  std::optional<std::string> name;
  std::vector<std::string> ground;
  std::vector<std::vector<std::string>> circuit_lines;
  /// 1-based source line of each circuit line (0 when built in memory).
  std::vector<int> circuit_source_lines;

  friend bool operator==(const MatroidDocument& a, const MatroidDocument& b) {
    return a.name == b.name && a.ground == b.ground &&
           a.circuit_lines == b.circuit_lines;
  }
};

/// Parses every document in `text`. Checks grammar and labels only; throws
/// SyntaxError (with line and column), UnknownLabel or DuplicateLabel.
std::vector<MatroidDocument> parse_documents(std::string_view text);
/// Exactly one document.
MatroidDocument parse_document(std::string_view text);

/// The raw ground set and circuit family of a document, not validated.
std::pair<GroundSet, SetFamily> document_family(const MatroidDocument& doc);

/// Document → validated Matroid. Axiom failures keep their ErrorKind and
/// name the offending circuit lines.
Matroid to_matroid(const MatroidDocument& doc);
Matroid parse_matroid_text(std::string_view text);

MatroidDocument to_document(const Matroid& m,
                            std::optional<std::string> name = std::nullopt);
std::string serialize_document(const MatroidDocument& doc);
/// Canonical text: circuits in family order, labels in ground order.
std::string serialize_matroid_text(
    const Matroid& m, std::optional<std::string> name = std::nullopt);

/// `n=<n>;rank=<r>;circuits=<c1>|<c2>|...`; ground at most 16 elements.
std::string catalog_line(const Matroid& m);
/// Reads a catalog line onto `ground` (letters a, b, ... by default).
Matroid parse_catalog_line(std::string_view line,
                           const std::optional<GroundSet>& ground = {});

}  // namespace qlift

#endif  // QLIFT_TEXT_FORMAT_HPP_
