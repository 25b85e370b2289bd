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

#ifndef FAIRMETER_CRYPTO_GROUP_HPP_
#define FAIRMETER_CRYPTO_GROUP_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>

#include "fairmeter/rng.hpp"

namespace fairmeter::crypto {

// Element of the prime-order group (ristretto255 over Curve25519) used by
// the commutative cipher. Encodings are canonical 32-byte strings; equality
// of encodings is equality of group elements.
inline constexpr std::size_t kGroupElementBytes = 32;

struct GroupElement {
  std::array<std::uint8_t, kGroupElementBytes> bytes{};

  auto operator<=>(const GroupElement&) const = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& e) const {
    std::uint64_t h = 0;
    for (int i = 0; i < 8; ++i) h = (h << 8) | e.bytes[i];
    return static_cast<std::size_t>(h);
  }
};

bool is_valid_group_element(const GroupElement& e);
bool is_identity(const GroupElement& e);

// Secret scalar for the commutative (Pohlig-Hellman style) cipher. Nonzero
// modulo the group order, so the inverse scalar always exists.
class ComKey {
 public:
  static ComKey generate(RngStream& rng);

  const std::array<std::uint8_t, 32>& scalar() const { return scalar_; }

 private:
  std::array<std::uint8_t, 32> scalar_{};
};

using SessionSalt = std::array<std::uint8_t, 32>;

SessionSalt generate_session_salt(RngStream& rng);

// Maps arbitrary bytes into the group by rejection sampling: SHA-256 over
// (salt || counter || input) until the digest is a canonical group-element
// encoding other than the identity. The salt makes each protocol session an
// independent oracle instance.
GroupElement hash_to_group(std::span<const std::uint8_t> input,
                           const SessionSalt& salt);
GroupElement hash_to_group(std::string_view input, const SessionSalt& salt);

// Enc is scalar multiplication by the key; Dec multiplies by the inverse
// scalar. Double encryption under two keys commutes.
GroupElement com_enc(const ComKey& key, const GroupElement& m);
GroupElement com_dec(const ComKey& key, const GroupElement& ct);

}  // namespace fairmeter::crypto

#endif  // FAIRMETER_CRYPTO_GROUP_HPP_
