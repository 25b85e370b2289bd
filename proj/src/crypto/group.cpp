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

#include "fairmeter/crypto/group.hpp"

#include <sodium.h>

#include <cstring>

#include "fairmeter/error.hpp"

namespace fairmeter::crypto {

namespace {

void ensure_sodium() {
  static const int rc = sodium_init();
  require(rc >= 0, ErrorCode::kInternalError, "sodium_init failed");
}

constexpr int kHashToGroupCap = 1000;

}  // namespace

bool is_identity(const GroupElement& e) {
  std::uint8_t acc = 0;
  for (std::uint8_t b : e.bytes) acc |= b;
  return acc == 0;
}

bool is_valid_group_element(const GroupElement& e) {
  ensure_sodium();
  return crypto_core_ristretto255_is_valid_point(e.bytes.data()) == 1;
}

ComKey ComKey::generate(RngStream& rng) {
  ensure_sodium();
  ComKey key;
  std::uint8_t wide[64];
  do {
    rng.fill(wide, sizeof(wide));
    crypto_core_ristretto255_scalar_reduce(key.scalar_.data(), wide);
  } while (sodium_is_zero(key.scalar_.data(), key.scalar_.size()) == 1);
  sodium_memzero(wide, sizeof(wide));
  return key;
}

SessionSalt generate_session_salt(RngStream& rng) {
  SessionSalt salt;
  rng.fill(salt.data(), salt.size());
  return salt;
}

GroupElement hash_to_group(std::span<const std::uint8_t> input,
                           const SessionSalt& salt) {
  ensure_sodium();
  require(!input.empty(), ErrorCode::kInvalidParameter,
          "hash_to_group input must be non-empty");
  GroupElement candidate;
  for (int counter = 0; counter < kHashToGroupCap; ++counter) {
    crypto_hash_sha256_state st;
    crypto_hash_sha256_init(&st);
    crypto_hash_sha256_update(&st, salt.data(), salt.size());
    const std::uint8_t ctr_be[4] = {
        static_cast<std::uint8_t>(counter >> 24),
        static_cast<std::uint8_t>(counter >> 16),
        static_cast<std::uint8_t>(counter >> 8),
        static_cast<std::uint8_t>(counter)};
    crypto_hash_sha256_update(&st, ctr_be, sizeof(ctr_be));
    crypto_hash_sha256_update(&st, input.data(), input.size());
    crypto_hash_sha256_final(&st, candidate.bytes.data());
    if (is_valid_group_element(candidate) && !is_identity(candidate)) {
      return candidate;
    }
  }
  // A valid encoding appears with constant probability per attempt, so
  // reaching the cap means something is broken, not unlucky.
  fail(ErrorCode::kInternalError, "hash_to_group exceeded rejection cap");
}

GroupElement hash_to_group(std::string_view input, const SessionSalt& salt) {
  return hash_to_group(
      std::span(reinterpret_cast<const std::uint8_t*>(input.data()),
                input.size()),
      salt);
}

GroupElement com_enc(const ComKey& key, const GroupElement& m) {
  ensure_sodium();
  require(is_valid_group_element(m) && !is_identity(m),
          ErrorCode::kInvalidPoint, "com_enc: not a usable group element");
  GroupElement out;
  const int rc = crypto_scalarmult_ristretto255(out.bytes.data(),
                                                key.scalar().data(),
                                                m.bytes.data());
  require(rc == 0, ErrorCode::kInvalidPoint, "com_enc: scalar mult failed");
  return out;
}

GroupElement com_dec(const ComKey& key, const GroupElement& ct) {
  ensure_sodium();
  require(is_valid_group_element(ct) && !is_identity(ct),
          ErrorCode::kInvalidPoint, "com_dec: not a usable group element");
  std::array<std::uint8_t, 32> inverse;
  const int inv_rc = crypto_core_ristretto255_scalar_invert(
      inverse.data(), key.scalar().data());
  require(inv_rc == 0, ErrorCode::kInvalidPoint, "com_dec: zero scalar");
  GroupElement out;
  const int rc = crypto_scalarmult_ristretto255(out.bytes.data(),
                                                inverse.data(),
                                                ct.bytes.data());
  sodium_memzero(inverse.data(), inverse.size());
  require(rc == 0, ErrorCode::kInvalidPoint, "com_dec: scalar mult failed");
  return out;
}

}  // namespace fairmeter::crypto
