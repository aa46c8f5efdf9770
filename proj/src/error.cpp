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

#include "qlift/error.hpp"

namespace qlift {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGround: return "InvalidGround";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::LabelClash: return "LabelClash";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::GroundTooLarge: return "GroundTooLarge";
    case ErrorKind::EmptyCircuit: return "EmptyCircuit";
    case ErrorKind::NotClutter: return "NotClutter";
    case ErrorKind::EliminationFailure: return "EliminationFailure";
    case ErrorKind::EmptyBasisFamily: return "EmptyBasisFamily";
    case ErrorKind::UnequalBasisSizes: return "UnequalBasisSizes";
    case ErrorKind::ExchangeFailure: return "ExchangeFailure";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::StillIndependent: return "StillIndependent";
    case ErrorKind::NotDependent: return "NotDependent";
    case ErrorKind::DeletesEverything: return "DeletesEverything";
    case ErrorKind::QuotientViolation: return "QuotientViolation";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::EmptyExtension: return "EmptyExtension";
    case ErrorKind::PreconditionFailure: return "PreconditionFailure";
    case ErrorKind::ConstructionFailure: return "ConstructionFailure";
    case ErrorKind::FactorizationFailure: return "FactorizationFailure";
    case ErrorKind::LemmaCounterexample: return "LemmaCounterexample";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace qlift
