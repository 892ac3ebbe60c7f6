// Copyright 2026 The facloc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "facloc/error.h"

namespace facloc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kEmptyAgents: return "EmptyAgents";
    case ErrorCode::kEmptyCandidates: return "EmptyCandidates";
    case ErrorCode::kCandidateOutOfRange: return "CandidateOutOfRange";
    case ErrorCode::kDuplicateCandidate: return "DuplicateCandidate";
    case ErrorCode::kApprovalLengthMismatch: return "ApprovalLengthMismatch";
    case ErrorCode::kPositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInfeasibleSolution: return "InfeasibleSolution";
    case ErrorCode::kInvalidLottery: return "InvalidLottery";
    case ErrorCode::kNotACandidate: return "NotACandidate";
    case ErrorCode::kThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorCode::kKTooLargeForExhaustive: return "KTooLargeForExhaustive";
    case ErrorCode::kEpsOutOfRange: return "EpsOutOfRange";
    case ErrorCode::kStepOutOfRange: return "StepOutOfRange";
    case ErrorCode::kEmptyRange: return "EmptyRange";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kUnknownMechanism: return "UnknownMechanism";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace facloc
