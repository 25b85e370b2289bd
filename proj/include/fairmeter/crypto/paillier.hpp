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

#ifndef FAIRMETER_CRYPTO_PAILLIER_HPP_
#define FAIRMETER_CRYPTO_PAILLIER_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "fairmeter/rng.hpp"

namespace fairmeter::crypto {

// Additive homomorphic encryption (the Paillier construction): plaintexts
// in Z_n, ciphertexts in Z_{n^2}, addition of plaintexts = multiplication
// of ciphertexts.
struct HEPublicKey {
  mpz_class n;
  mpz_class n_squared;
  // Short digest of n; lets mixed-key operations fail loudly instead of
  // producing garbage.
  std::uint64_t fingerprint = 0;

  int modulus_bits() const;
};

struct HEPrivateKey {
  mpz_class lambda;  // lcm(p-1, q-1)
  mpz_class mu;      // (L(g^lambda mod n^2))^-1 mod n
  // CRT factors used to accelerate the holder's own encryptions.
  mpz_class p_squared;
  mpz_class q_squared;
  mpz_class q2_inv_mod_p2;
};

struct HEKeyPair {
  HEPublicKey pub;
  HEPrivateKey priv;
};

struct HECiphertext {
  mpz_class value;
  std::uint64_t key_fingerprint = 0;
};

// Generates fresh primes of modulus_bits/2 bits each from the stream.
HEKeyPair he_keygen(int modulus_bits, RngStream& rng);

// Fixed deterministic 1024-bit keypair for tests and CI. INSECURE: the key
// is reproducible by anyone; never use outside test mode.
const HEKeyPair& he_test_keypair_1024();

HECiphertext he_enc(const HEPublicKey& pk, const mpz_class& m,
                    RngStream& rng);

// Same ciphertext distribution as he_enc, but uses the secret CRT factors
// to cut the exponentiation cost. Only the key holder can call it.
HECiphertext he_enc_with_sk(const HEKeyPair& keys, const mpz_class& m,
                            RngStream& rng);

mpz_class he_dec(const HEKeyPair& keys, const HECiphertext& ct);

// Decrypts with the convention that values >= n/2 represent negatives.
mpz_class he_dec_signed(const HEKeyPair& keys, const HECiphertext& ct);

HECiphertext he_add(const HEPublicKey& pk, const HECiphertext& a,
                    const HECiphertext& b);

// Adds a plaintext constant (mod n) without fresh randomness.
HECiphertext he_add_plain(const HEPublicKey& pk, const HECiphertext& ct,
                          const mpz_class& m);

HECiphertext he_scalar_mul(const HEPublicKey& pk, const mpz_class& c,
                           const HECiphertext& ct);

// Adds a fresh encryption of zero so the result's randomness is independent
// of the inputs'.
HECiphertext he_refresh(const HEPublicKey& pk, const HECiphertext& ct,
                        RngStream& rng);

// Maps a signed value into Z_n (negatives become n - |m|). |m| must be
// below n/2.
mpz_class signed_to_field(const HEPublicKey& pk, const mpz_class& m);
mpz_class field_to_signed(const HEPublicKey& pk, const mpz_class& v);

// Rejects aggregations that could wrap mod n: requires
// max_abs_term * terms < n/2.
void he_ensure_headroom(const HEPublicKey& pk, const mpz_class& max_abs_term,
                        std::size_t terms);

// Canonical big-endian minimal-length encodings.
std::vector<std::uint8_t> he_serialize(const HECiphertext& ct);
HECiphertext he_deserialize(const HEPublicKey& pk,
                            std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> mpz_to_bytes(const mpz_class& v);
mpz_class mpz_from_bytes(std::span<const std::uint8_t> bytes);

// Uniform value in [0, bound) drawn from the stream.
mpz_class mpz_uniform_below(RngStream& rng, const mpz_class& bound);

}  // namespace fairmeter::crypto

#endif  // FAIRMETER_CRYPTO_PAILLIER_HPP_
