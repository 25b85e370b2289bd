// Copyright 2026 The Fairmeter Authors
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

#ifndef FAIRMETER_ERROR_HPP_
#define FAIRMETER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairmeter {

enum class ErrorCode {
  kParseError,
  kSimplexViolation,
  kDistributionViolation,
  kInvalidParameter,
  kZeroEvidence,
  kLengthMismatch,
  kNotOneHot,
  kEmptyInput,
  kInfeasibleClip,
  kDuplicateMember,
  kUnknownMember,
  kInvalidPoint,
  kPlaintextOutOfRange,
  kKeyMismatch,
  kOverflow,
  kAuthenticationFailure,
  kOutOfRange,
  kPhaseError,
  kArityMismatch,
  kGovernanceTooFewRows,
  kGovernanceRepeatedDataset,
  kDuplicateJoinKey,
  kEmptyJoin,
  kChannelBusy,
  kIoError,
  kTimeout,
  kDigestMismatch,
  kInvalidProbability,
  kCapExceeded,
  kInternalError,
};

std::string_view error_code_name(ErrorCode code);

// Stable process exit code for each error class (documented in the README).
int error_exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " +
                           message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code,
                    const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace fairmeter

#endif  // FAIRMETER_ERROR_HPP_
