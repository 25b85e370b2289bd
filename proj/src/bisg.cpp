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

#include "fairmeter/bisg.hpp"

#include <cmath>

#include "fairmeter/error.hpp"

namespace fairmeter {

namespace {

constexpr double kLogFloor = 1e-12;
constexpr std::size_t kJointCellCap = 1000000;

RaceVector posterior_from_factors(const RaceVector& prob_given_surname,
                                  const RaceVector& likelihood) {
  const RaceVector product = prob_given_surname.cwiseProduct(likelihood);
  const double sum = product.sum();
  if (sum > 0.0) return product / sum;
  // Every product is zero: geography carries no information for any race
  // with surname mass, so fall back to the surname factor alone.
  return prob_given_surname;
}

}  // namespace

RaceVector bisg_posterior(const MemberIdentity& identity,
                          const CensusTables& tables) {
  const RaceVector* surname_row = tables.surnames.find(identity.surname);
  const RaceVector prob_given_surname =
      surname_row != nullptr ? *surname_row : tables.prior.marginal;
  const RaceVector* geo_row = tables.geo.find(identity.zcta);
  const RaceVector geo_likelihood =
      geo_row != nullptr ? *geo_row : RaceVector::Ones();
  return posterior_from_factors(prob_given_surname, geo_likelihood);
}

RaceVector bifsg_posterior(const MemberIdentity& identity,
                           const CensusTables& tables) {
  if (identity.first_name.empty()) return bisg_posterior(identity, tables);
  const RaceVector* firstname_row =
      tables.firstnames.find(identity.first_name);
  if (firstname_row == nullptr) return bisg_posterior(identity, tables);

  const RaceVector* surname_row = tables.surnames.find(identity.surname);
  const RaceVector prob_given_surname =
      surname_row != nullptr ? *surname_row : tables.prior.marginal;
  const RaceVector* geo_row = tables.geo.find(identity.zcta);
  const RaceVector geo_likelihood =
      geo_row != nullptr ? *geo_row : RaceVector::Ones();
  return posterior_from_factors(
      prob_given_surname, geo_likelihood.cwiseProduct(*firstname_row));
}

RaceVector brute_force_posterior(const MemberIdentity& identity,
                                 const JointTable& joint) {
  require(joint.cell_count() <= kJointCellCap, ErrorCode::kCapExceeded,
          "joint table too large to enumerate");
  const auto s = joint.surname_index(identity.surname);
  require(s.has_value(), ErrorCode::kZeroEvidence,
          "surname has no mass in the joint");
  const auto g = joint.zcta_index(identity.zcta);
  require(g.has_value(), ErrorCode::kZeroEvidence,
          "ZCTA has no mass in the joint");

  RaceVector evidence = RaceVector::Zero();
  if (joint.has_firstnames() && !identity.first_name.empty()) {
    const auto f = joint.firstname_index(identity.first_name);
    require(f.has_value(), ErrorCode::kZeroEvidence,
            "first name has no mass in the joint");
    for (int r = 0; r < kNumGroups; ++r) {
      evidence[r] = joint.cell(r, *s, *g, *f);
    }
  } else {
    // Marginalize over the first-name dimension when present.
    const std::size_t f_dim =
        joint.has_firstnames() ? joint.firstname_count() : 1;
    for (int r = 0; r < kNumGroups; ++r) {
      double total = 0.0;
      for (std::size_t f = 0; f < f_dim; ++f) {
        total += joint.cell(r, *s, *g, f);
      }
      evidence[r] = total;
    }
  }
  const double denom = evidence.sum();
  require(denom > 0.0, ErrorCode::kZeroEvidence,
          "identity has zero probability in the joint");
  return evidence / denom;
}

double cross_entropy(std::span<const RaceVector> posteriors,
                     std::span<const RaceCategory> labels) {
  require(posteriors.size() == labels.size(), ErrorCode::kLengthMismatch,
          "posteriors and labels differ in length");
  require(!posteriors.empty(), ErrorCode::kEmptyInput,
          "cross entropy of an empty batch");
  double total = 0.0;
  for (std::size_t i = 0; i < posteriors.size(); ++i) {
    const double p = posteriors[i][static_cast<int>(labels[i])];
    total += -std::log(std::max(p, kLogFloor));
  }
  return total / static_cast<double>(posteriors.size());
}

}  // namespace fairmeter
