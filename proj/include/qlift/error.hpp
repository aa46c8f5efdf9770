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

#ifndef QLIFT_ERROR_HPP_
#define QLIFT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlift {

enum class ErrorKind {
  // ground sets and subsets
  InvalidGround,
  UnknownLabel,
  DuplicateLabel,
  LabelClash,
  GroundMismatch,
  GroundTooLarge,
  // matroid construction
  EmptyCircuit,
  NotClutter,
  EliminationFailure,
  EmptyBasisFamily,
  UnequalBasisSizes,
  ExchangeFailure,
  NotIndependent,
  StillIndependent,
  NotDependent,
  DeletesEverything,
  // quotient-lift
  QuotientViolation,
  RankMismatch,
  EmptyExtension,
  PreconditionFailure,
  // counterexamples to claimed properties; never caught silently
  ConstructionFailure,
  FactorizationFailure,
  LemmaCounterexample,
  // text formats
  SyntaxError,
  Io,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported as an Error. `dump()` carries a
/// replayable witness (matroid documents and sets) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string dump = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        dump_(std::move(dump)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& dump() const { return dump_; }

  /// Counterexamples to claimed properties.
  bool is_counterexample() const {
    return kind_ == ErrorKind::ConstructionFailure ||
           kind_ == ErrorKind::FactorizationFailure ||
           kind_ == ErrorKind::LemmaCounterexample;
  }

 private:
  ErrorKind kind_;
  std::string dump_;
};

}  // namespace qlift

#endif  // QLIFT_ERROR_HPP_
