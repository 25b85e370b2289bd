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

#ifndef FAIRMETER_BISG_HPP_
#define FAIRMETER_BISG_HPP_

#include <span>

#include "fairmeter/census.hpp"
#include "fairmeter/member.hpp"
#include "fairmeter/race.hpp"

namespace fairmeter {

// Posterior Pr(r | surname, zcta): normalized product of Pr(r|s) and the
// geography likelihood Pr(g|r). Fallbacks keep the function total:
// unknown surname substitutes the national prior, unknown ZCTA a uniform
// likelihood, and an all-zero product falls back to Pr(r|s) alone.
RaceVector bisg_posterior(const MemberIdentity& identity,
                          const CensusTables& tables);

// Pr(r | first name, surname, zcta): adds the Pr(f|r) likelihood factor.
// A missing or out-of-table first name degrades to bisg_posterior.
RaceVector bifsg_posterior(const MemberIdentity& identity,
                           const CensusTables& tables);

// Exact conditional by enumeration over the full joint table; the oracle
// for the factorized posteriors above. Throws ZeroEvidence when the
// identity has no mass in the joint and CapExceeded above 10^6 cells.
RaceVector brute_force_posterior(const MemberIdentity& identity,
                                 const JointTable& joint);

// Mean of -log(posterior[label]); probabilities are floored at 1e-12
// inside the log so clipped or zero cells cannot produce infinities.
double cross_entropy(std::span<const RaceVector> posteriors,
                     std::span<const RaceCategory> labels);

}  // namespace fairmeter

#endif  // FAIRMETER_BISG_HPP_
