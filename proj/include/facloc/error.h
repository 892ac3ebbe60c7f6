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

#ifndef FACLOC_ERROR_H_
#define FACLOC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace facloc {

enum class ErrorCode {
  // Instance invariants.
  kKTooSmall,
  kEmptyAgents,
  kEmptyCandidates,
  kCandidateOutOfRange,
  kDuplicateCandidate,
  kApprovalLengthMismatch,
  kPositionOutOfRange,
  // Operation preconditions.
  kIndexOutOfRange,
  kInfeasibleSolution,
  kInvalidLottery,
  kNotACandidate,
  kThetaOutOfRange,
  kKTooLargeForExhaustive,
  kEpsOutOfRange,
  kStepOutOfRange,
  kEmptyRange,
  kDivisionByZero,
  // Input handling.
  kSyntax,
  kUnknownMechanism,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace facloc

#endif  // FACLOC_ERROR_H_
