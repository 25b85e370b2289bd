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

#include "fairmeter/error.hpp"

namespace fairmeter {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSimplexViolation: return "SimplexViolation";
    case ErrorCode::kDistributionViolation: return "DistributionViolation";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kZeroEvidence: return "ZeroEvidence";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotOneHot: return "NotOneHot";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInfeasibleClip: return "InfeasibleClip";
    case ErrorCode::kDuplicateMember: return "DuplicateMember";
    case ErrorCode::kUnknownMember: return "UnknownMember";
    case ErrorCode::kInvalidPoint: return "InvalidPoint";
    case ErrorCode::kPlaintextOutOfRange: return "PlaintextOutOfRange";
    case ErrorCode::kKeyMismatch: return "KeyMismatch";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kAuthenticationFailure: return "AuthenticationFailure";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kPhaseError: return "PhaseError";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kGovernanceTooFewRows: return "GovernanceTooFewRows";
    case ErrorCode::kGovernanceRepeatedDataset:
      return "GovernanceRepeatedDataset";
    case ErrorCode::kDuplicateJoinKey: return "DuplicateJoinKey";
    case ErrorCode::kEmptyJoin: return "EmptyJoin";
    case ErrorCode::kChannelBusy: return "ChannelBusy";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kDigestMismatch: return "DigestMismatch";
    case ErrorCode::kInvalidProbability: return "InvalidProbability";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInternalError: return "InternalError";
  }
  return "UnknownError";
}

int error_exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kSimplexViolation:
    case ErrorCode::kDistributionViolation:
      return 10;
    case ErrorCode::kInvalidParameter:
    case ErrorCode::kOutOfRange:
    case ErrorCode::kInvalidProbability:
    case ErrorCode::kCapExceeded:
      return 11;
    case ErrorCode::kZeroEvidence:
    case ErrorCode::kLengthMismatch:
    case ErrorCode::kNotOneHot:
    case ErrorCode::kEmptyInput:
    case ErrorCode::kInfeasibleClip:
      return 12;
    case ErrorCode::kDuplicateMember:
    case ErrorCode::kUnknownMember:
      return 13;
    case ErrorCode::kInvalidPoint:
    case ErrorCode::kPlaintextOutOfRange:
    case ErrorCode::kKeyMismatch:
    case ErrorCode::kOverflow:
    case ErrorCode::kAuthenticationFailure:
      return 14;
    case ErrorCode::kPhaseError:
    case ErrorCode::kArityMismatch:
    case ErrorCode::kDuplicateJoinKey:
      return 15;
    case ErrorCode::kEmptyJoin:
      return 16;
    case ErrorCode::kGovernanceTooFewRows:
      return 20;
    case ErrorCode::kGovernanceRepeatedDataset:
      return 21;
    case ErrorCode::kChannelBusy:
    case ErrorCode::kIoError:
      return 30;
    case ErrorCode::kTimeout:
      return 31;
    case ErrorCode::kDigestMismatch:
      return 32;
    case ErrorCode::kInternalError:
      return 70;
  }
  return 70;
}

}  // namespace fairmeter
