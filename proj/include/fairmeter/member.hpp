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

#ifndef FAIRMETER_MEMBER_HPP_
#define FAIRMETER_MEMBER_HPP_

#include <string>

namespace fairmeter {

// One member of the tester's roster. member_id is opaque and unique within
// a dataset; first_name may be empty.
struct MemberIdentity {
  std::string member_id;
  std::string first_name;
  std::string surname;
  std::string zcta;
};

}  // namespace fairmeter

#endif  // FAIRMETER_MEMBER_HPP_
