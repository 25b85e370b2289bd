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

#ifndef FAIRMETER_CRYPTO_FIXED_POINT_HPP_
#define FAIRMETER_CRYPTO_FIXED_POINT_HPP_

#include <cmath>
#include <cstdint>

#include "fairmeter/error.hpp"

namespace fairmeter::crypto {

// Probabilities and test values travel through the homomorphic pipeline as
// scaled integers. Six decimal digits exceed the precision of the census
// tables; with a 2048-bit modulus the headroom check rules out wraparound
// up to 10^7 rows.
inline constexpr std::int64_t kFixedPointScale = 1'000'000;

// Normalized weights inside the aggregate get a finer scale so their
// rounding error stays negligible after summing over many rows.
inline constexpr std::int64_t kWeightScale = 1'000'000'000'000;

inline constexpr double kFixedPointMaxAbs = 1e6;

inline std::int64_t fixed_encode(double x) {
  require(std::isfinite(x) && std::abs(x) <= kFixedPointMaxAbs,
          ErrorCode::kOutOfRange, "value outside fixed-point range");
  return std::llround(x * static_cast<double>(kFixedPointScale));
}

inline double fixed_decode(std::int64_t v) {
  return static_cast<double>(v) / static_cast<double>(kFixedPointScale);
}

}  // namespace fairmeter::crypto

#endif  // FAIRMETER_CRYPTO_FIXED_POINT_HPP_
