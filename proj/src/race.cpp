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

#include "fairmeter/race.hpp"

#include <string>

namespace fairmeter {

RaceCategory race_from_key(std::string_view key) {
  for (int i = 0; i < kNumGroups; ++i) {
    if (kGroupKeys[i] == key) return static_cast<RaceCategory>(i);
  }
  fail(ErrorCode::kParseError,
       "unknown race/ethnicity key '" + std::string(key) + "'");
}

}  // namespace fairmeter
