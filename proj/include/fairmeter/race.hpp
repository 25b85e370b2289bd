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

#ifndef FAIRMETER_RACE_HPP_
#define FAIRMETER_RACE_HPP_

#include <Eigen/Dense>
#include <array>
#include <string_view>

#include "fairmeter/error.hpp"

namespace fairmeter {

// The six combined race/ethnicity categories used by the 2010 Census
// frequency tables. Index order is fixed; every table column, probability
// vector, and report slot uses it.
inline constexpr int kNumGroups = 6;

enum class RaceCategory : int {
  kWhite = 0,
  kBlack = 1,
  kHispanicLatino = 2,
  kAmericanIndianAlaskaNative = 3,
  kAsianPacificIslander = 4,
  kOtherMultiracial = 5,
};

// Short keys used in CSV columns and report files, in category order.
inline constexpr std::array<std::string_view, kNumGroups> kGroupKeys = {
    "white", "black", "hispanic", "aian", "api", "other"};

inline constexpr std::array<std::string_view, kNumGroups> kGroupLabels = {
    "White",
    "Black",
    "Hispanic/Latino",
    "AmericanIndian/AlaskaNative",
    "Asian/PacificIslander",
    "Other/Multiracial"};

RaceCategory race_from_key(std::string_view key);

inline std::string_view race_key(RaceCategory r) {
  return kGroupKeys[static_cast<int>(r)];
}

// Length-6 vector of per-category values. Rows of the demographic table are
// probability vectors on the simplex; census likelihood rows are
// non-negative but need not sum to one.
using RaceVector = Eigen::Matrix<double, kNumGroups, 1>;

inline constexpr double kSimplexTolerance = 1e-9;

inline bool on_simplex(const RaceVector& v, double tol = kSimplexTolerance) {
  if ((v.array() < 0.0).any()) return false;
  return std::abs(v.sum() - 1.0) <= tol;
}

// Normalizes a non-negative vector to the simplex. The all-zero vector has
// no normalization; callers decide the fallback.
inline RaceVector normalized(const RaceVector& v) {
  const double s = v.sum();
  require(s > 0.0, ErrorCode::kInvalidParameter,
          "cannot normalize a zero vector");
  return v / s;
}

inline RaceVector uniform_race_vector() {
  return RaceVector::Constant(1.0 / kNumGroups);
}

inline RaceVector one_hot(RaceCategory r) {
  RaceVector v = RaceVector::Zero();
  v[static_cast<int>(r)] = 1.0;
  return v;
}

}  // namespace fairmeter

#endif  // FAIRMETER_RACE_HPP_
