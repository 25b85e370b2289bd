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

#include "fairmeter/crypto/paillier.hpp"

#include <sodium.h>

#include <cstring>

#include "fairmeter/error.hpp"

namespace fairmeter::crypto {

namespace {

std::uint64_t fingerprint_of(const mpz_class& n) {
  const std::vector<std::uint8_t> bytes = mpz_to_bytes(n);
  unsigned char digest[crypto_hash_sha256_BYTES];
  crypto_hash_sha256(digest, bytes.data(), bytes.size());
  std::uint64_t fp = 0;
  for (int i = 0; i < 8; ++i) fp = (fp << 8) | digest[i];
  return fp;
}

mpz_class random_prime(int bits, RngStream& rng) {
  require(bits >= 16, ErrorCode::kInvalidParameter, "prime size too small");
  const std::size_t nbytes = static_cast<std::size_t>(bits) / 8;
  std::vector<std::uint8_t> buf(nbytes);
  rng.fill(buf.data(), buf.size());
  mpz_class candidate = mpz_from_bytes(buf);
  // Top two bits set so the product of two primes has full bit length.
  mpz_setbit(candidate.get_mpz_t(), bits - 1);
  mpz_setbit(candidate.get_mpz_t(), bits - 2);
  mpz_class prime;
  mpz_nextprime(prime.get_mpz_t(), candidate.get_mpz_t());
  return prime;
}

void check_key(const HEPublicKey& pk, const HECiphertext& ct) {
  require(ct.key_fingerprint == pk.fingerprint, ErrorCode::kKeyMismatch,
          "ciphertext was produced under a different key");
  require(ct.value >= 0 && ct.value < pk.n_squared,
          ErrorCode::kInvalidParameter, "ciphertext out of range");
}

// L(u) = (u - 1) / n, defined on u = 1 mod n.
mpz_class ell(const mpz_class& u, const mpz_class& n) {
  return (u - 1) / n;
}

mpz_class enc_with_randomizer_power(const HEPublicKey& pk, const mpz_class& m,
                                    const mpz_class& r_pow_n) {
  // c = (1 + m*n) * r^n mod n^2, using g = n + 1.
  mpz_class c = (1 + m * pk.n) % pk.n_squared;
  c = (c * r_pow_n) % pk.n_squared;
  return c;
}

mpz_class fresh_randomizer(const HEPublicKey& pk, RngStream& rng) {
  for (;;) {
    mpz_class r = mpz_uniform_below(rng, pk.n);
    if (r == 0) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), pk.n.get_mpz_t());
    if (g == 1) return r;
  }
}

void check_plaintext(const HEPublicKey& pk, const mpz_class& m) {
  require(m >= 0 && m < pk.n, ErrorCode::kPlaintextOutOfRange,
          "plaintext outside Z_n");
}

}  // namespace

int HEPublicKey::modulus_bits() const {
  return static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

HEKeyPair he_keygen(int modulus_bits, RngStream& rng) {
  require(modulus_bits >= 64 && modulus_bits % 2 == 0,
          ErrorCode::kInvalidParameter, "modulus_bits must be even and >= 64");
  for (;;) {
    const mpz_class p = random_prime(modulus_bits / 2, rng);
    const mpz_class q = random_prime(modulus_bits / 2, rng);
    if (p == q) continue;
    const mpz_class n = p * q;
    const mpz_class pm1 = p - 1;
    const mpz_class qm1 = q - 1;
    mpz_class gcd_check;
    mpz_gcd(gcd_check.get_mpz_t(), n.get_mpz_t(), (pm1 * qm1).get_mpz_t());
    if (gcd_check != 1) continue;

    HEKeyPair keys;
    keys.pub.n = n;
    keys.pub.n_squared = n * n;
    keys.pub.fingerprint = fingerprint_of(n);
    mpz_lcm(keys.priv.lambda.get_mpz_t(), pm1.get_mpz_t(), qm1.get_mpz_t());
    // mu = (L((n+1)^lambda mod n^2))^-1 mod n
    mpz_class g_lambda;
    const mpz_class g = n + 1;
    mpz_powm(g_lambda.get_mpz_t(), g.get_mpz_t(), keys.priv.lambda.get_mpz_t(),
             keys.pub.n_squared.get_mpz_t());
    const mpz_class l = ell(g_lambda, n);
    const int ok = mpz_invert(keys.priv.mu.get_mpz_t(), l.get_mpz_t(),
                              n.get_mpz_t());
    if (ok == 0) continue;
    keys.priv.p_squared = p * p;
    keys.priv.q_squared = q * q;
    const int inv_ok = mpz_invert(keys.priv.q2_inv_mod_p2.get_mpz_t(),
                                  keys.priv.q_squared.get_mpz_t(),
                                  keys.priv.p_squared.get_mpz_t());
    if (inv_ok == 0) continue;
    return keys;
  }
}

const HEKeyPair& he_test_keypair_1024() {
  static const HEKeyPair keys = [] {
    DeterministicRng rng =
        DeterministicRng::derive(0xfa12a17e5ull, "he.test-keypair.1024");
    return he_keygen(1024, rng);
  }();
  return keys;
}

HECiphertext he_enc(const HEPublicKey& pk, const mpz_class& m,
                    RngStream& rng) {
  check_plaintext(pk, m);
  const mpz_class r = fresh_randomizer(pk, rng);
  mpz_class r_pow_n;
  mpz_powm(r_pow_n.get_mpz_t(), r.get_mpz_t(), pk.n.get_mpz_t(),
           pk.n_squared.get_mpz_t());
  return HECiphertext{enc_with_randomizer_power(pk, m, r_pow_n),
                      pk.fingerprint};
}

HECiphertext he_enc_with_sk(const HEKeyPair& keys, const mpz_class& m,
                            RngStream& rng) {
  const HEPublicKey& pk = keys.pub;
  check_plaintext(pk, m);
  const mpz_class r = fresh_randomizer(pk, rng);
  // r^n mod n^2 via CRT over p^2 and q^2.
  mpz_class rp, rq;
  mpz_powm(rp.get_mpz_t(), r.get_mpz_t(), pk.n.get_mpz_t(),
           keys.priv.p_squared.get_mpz_t());
  mpz_powm(rq.get_mpz_t(), r.get_mpz_t(), pk.n.get_mpz_t(),
           keys.priv.q_squared.get_mpz_t());
  mpz_class u = ((rp - rq) * keys.priv.q2_inv_mod_p2) % keys.priv.p_squared;
  if (u < 0) u += keys.priv.p_squared;
  const mpz_class r_pow_n = rq + u * keys.priv.q_squared;
  return HECiphertext{enc_with_randomizer_power(pk, m, r_pow_n),
                      pk.fingerprint};
}

mpz_class he_dec(const HEKeyPair& keys, const HECiphertext& ct) {
  check_key(keys.pub, ct);
  mpz_class u;
  mpz_powm(u.get_mpz_t(), ct.value.get_mpz_t(), keys.priv.lambda.get_mpz_t(),
           keys.pub.n_squared.get_mpz_t());
  return (ell(u, keys.pub.n) * keys.priv.mu) % keys.pub.n;
}

mpz_class he_dec_signed(const HEKeyPair& keys, const HECiphertext& ct) {
  return field_to_signed(keys.pub, he_dec(keys, ct));
}

HECiphertext he_add(const HEPublicKey& pk, const HECiphertext& a,
                    const HECiphertext& b) {
  check_key(pk, a);
  check_key(pk, b);
  return HECiphertext{(a.value * b.value) % pk.n_squared, pk.fingerprint};
}

HECiphertext he_add_plain(const HEPublicKey& pk, const HECiphertext& ct,
                          const mpz_class& m) {
  check_key(pk, ct);
  check_plaintext(pk, m);
  const mpz_class factor = (1 + m * pk.n) % pk.n_squared;
  return HECiphertext{(ct.value * factor) % pk.n_squared, pk.fingerprint};
}

HECiphertext he_scalar_mul(const HEPublicKey& pk, const mpz_class& c,
                           const HECiphertext& ct) {
  check_key(pk, ct);
  require(c >= 0 && c < pk.n, ErrorCode::kPlaintextOutOfRange,
          "scalar outside Z_n");
  mpz_class out;
  mpz_powm(out.get_mpz_t(), ct.value.get_mpz_t(), c.get_mpz_t(),
           pk.n_squared.get_mpz_t());
  return HECiphertext{out, pk.fingerprint};
}

HECiphertext he_refresh(const HEPublicKey& pk, const HECiphertext& ct,
                        RngStream& rng) {
  return he_add(pk, ct, he_enc(pk, 0, rng));
}

mpz_class signed_to_field(const HEPublicKey& pk, const mpz_class& m) {
  mpz_class abs_m = abs(m);
  require(abs_m * 2 < pk.n, ErrorCode::kPlaintextOutOfRange,
          "|value| must be below n/2");
  if (m >= 0) return m;
  return pk.n + m;
}

mpz_class field_to_signed(const HEPublicKey& pk, const mpz_class& v) {
  require(v >= 0 && v < pk.n, ErrorCode::kInvalidParameter,
          "field value out of range");
  if (v * 2 >= pk.n) return v - pk.n;
  return v;
}

void he_ensure_headroom(const HEPublicKey& pk, const mpz_class& max_abs_term,
                        std::size_t terms) {
  const mpz_class bound = max_abs_term * static_cast<unsigned long>(terms);
  require(bound * 2 < pk.n, ErrorCode::kOverflow,
          "aggregate could wrap modulo n");
}

std::vector<std::uint8_t> mpz_to_bytes(const mpz_class& v) {
  require(v >= 0, ErrorCode::kInvalidParameter,
          "only non-negative values serialize");
  if (v == 0) return {0};
  const std::size_t nbytes = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  std::vector<std::uint8_t> out(nbytes);
  std::size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, v.get_mpz_t());
  out.resize(written);
  return out;
}

mpz_class mpz_from_bytes(std::span<const std::uint8_t> bytes) {
  mpz_class v;
  if (!bytes.empty()) {
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return v;
}

std::vector<std::uint8_t> he_serialize(const HECiphertext& ct) {
  return mpz_to_bytes(ct.value);
}

HECiphertext he_deserialize(const HEPublicKey& pk,
                            std::span<const std::uint8_t> bytes) {
  HECiphertext ct{mpz_from_bytes(bytes), pk.fingerprint};
  require(ct.value < pk.n_squared, ErrorCode::kParseError,
          "ciphertext exceeds modulus");
  return ct;
}

mpz_class mpz_uniform_below(RngStream& rng, const mpz_class& bound) {
  require(bound > 0, ErrorCode::kInvalidParameter, "bound must be positive");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t nbytes = (bits + 7) / 8;
  const unsigned top_mask =
      bits % 8 == 0 ? 0xff : ((1u << (bits % 8)) - 1);
  std::vector<std::uint8_t> buf(nbytes);
  for (;;) {
    rng.fill(buf.data(), buf.size());
    buf[0] &= static_cast<std::uint8_t>(top_mask);
    mpz_class v = mpz_from_bytes(buf);
    if (v < bound) return v;
  }
}

}  // namespace fairmeter::crypto
