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

#include "fairmeter/crypto/symmetric.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <memory>

#include "fairmeter/error.hpp"

namespace fairmeter::crypto {

namespace {

struct CipherCtxFree {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxFree>;

CipherCtx make_ctx() {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  require(ctx != nullptr, ErrorCode::kInternalError,
          "EVP_CIPHER_CTX_new failed");
  return ctx;
}

}  // namespace

SymKey SymKey::generate(RngStream& rng) {
  SymKey key;
  rng.fill(key.bytes.data(), key.bytes.size());
  return key;
}

std::vector<std::uint8_t> SymCiphertext::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(kSymNonceBytes + kSymTagBytes + body.size());
  out.insert(out.end(), nonce.begin(), nonce.end());
  out.insert(out.end(), tag.begin(), tag.end());
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

SymCiphertext SymCiphertext::deserialize(std::span<const std::uint8_t> bytes) {
  require(bytes.size() >= kSymNonceBytes + kSymTagBytes,
          ErrorCode::kParseError, "symmetric ciphertext truncated");
  SymCiphertext ct;
  std::memcpy(ct.nonce.data(), bytes.data(), kSymNonceBytes);
  std::memcpy(ct.tag.data(), bytes.data() + kSymNonceBytes, kSymTagBytes);
  ct.body.assign(bytes.begin() + kSymNonceBytes + kSymTagBytes, bytes.end());
  return ct;
}

SymCiphertext sym_enc(const SymKey& key,
                      std::span<const std::uint8_t> plaintext,
                      RngStream& rng) {
  SymCiphertext ct;
  rng.fill(ct.nonce.data(), ct.nonce.size());
  ct.body.resize(plaintext.size());

  CipherCtx ctx = make_ctx();
  int ok = EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr,
                              key.bytes.data(), ct.nonce.data());
  require(ok == 1, ErrorCode::kInternalError, "AES-GCM init failed");
  int len = 0;
  if (!plaintext.empty()) {
    ok = EVP_EncryptUpdate(ctx.get(), ct.body.data(), &len, plaintext.data(),
                           static_cast<int>(plaintext.size()));
    require(ok == 1, ErrorCode::kInternalError, "AES-GCM encrypt failed");
  }
  int final_len = 0;
  ok = EVP_EncryptFinal_ex(ctx.get(), ct.body.data() + len, &final_len);
  require(ok == 1, ErrorCode::kInternalError, "AES-GCM finalize failed");
  ok = EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kSymTagBytes,
                           ct.tag.data());
  require(ok == 1, ErrorCode::kInternalError, "AES-GCM tag failed");
  return ct;
}

std::vector<std::uint8_t> sym_dec(const SymKey& key,
                                  const SymCiphertext& ct) {
  std::vector<std::uint8_t> plaintext(ct.body.size());
  CipherCtx ctx = make_ctx();
  int ok = EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr,
                              key.bytes.data(), ct.nonce.data());
  require(ok == 1, ErrorCode::kInternalError, "AES-GCM init failed");
  int len = 0;
  if (!ct.body.empty()) {
    ok = EVP_DecryptUpdate(ctx.get(), plaintext.data(), &len, ct.body.data(),
                           static_cast<int>(ct.body.size()));
    require(ok == 1, ErrorCode::kAuthenticationFailure,
            "AES-GCM decrypt failed");
  }
  std::array<std::uint8_t, kSymTagBytes> tag = ct.tag;
  ok = EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kSymTagBytes,
                           tag.data());
  require(ok == 1, ErrorCode::kInternalError, "AES-GCM tag set failed");
  int final_len = 0;
  ok = EVP_DecryptFinal_ex(ctx.get(), plaintext.data() + len, &final_len);
  require(ok == 1, ErrorCode::kAuthenticationFailure,
          "ciphertext failed authentication");
  return plaintext;
}

}  // namespace fairmeter::crypto
