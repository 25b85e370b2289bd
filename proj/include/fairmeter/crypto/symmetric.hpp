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

#ifndef FAIRMETER_CRYPTO_SYMMETRIC_HPP_
#define FAIRMETER_CRYPTO_SYMMETRIC_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fairmeter/rng.hpp"

namespace fairmeter::crypto {

// Authenticated symmetric encryption: AES-256-GCM with a random 96-bit
// nonce per message.
inline constexpr std::size_t kSymKeyBytes = 32;
inline constexpr std::size_t kSymNonceBytes = 12;
inline constexpr std::size_t kSymTagBytes = 16;

struct SymKey {
  std::array<std::uint8_t, kSymKeyBytes> bytes{};

  static SymKey generate(RngStream& rng);
};

struct SymCiphertext {
  std::array<std::uint8_t, kSymNonceBytes> nonce{};
  std::array<std::uint8_t, kSymTagBytes> tag{};
  std::vector<std::uint8_t> body;

  // nonce || tag || body
  std::vector<std::uint8_t> serialize() const;
  static SymCiphertext deserialize(std::span<const std::uint8_t> bytes);
};

SymCiphertext sym_enc(const SymKey& key,
                      std::span<const std::uint8_t> plaintext,
                      RngStream& rng);

// Throws AuthenticationFailure on any tampering.
std::vector<std::uint8_t> sym_dec(const SymKey& key,
                                  const SymCiphertext& ct);

}  // namespace fairmeter::crypto

#endif  // FAIRMETER_CRYPTO_SYMMETRIC_HPP_
