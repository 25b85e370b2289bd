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

#include "fairmeter/rng.hpp"

#include <sodium.h>

#include <cmath>
#include <cstring>

#include "fairmeter/error.hpp"

namespace fairmeter {

namespace {

void ensure_sodium() {
  static const int rc = sodium_init();
  require(rc >= 0, ErrorCode::kInternalError, "sodium_init failed");
}

}  // namespace

std::uint64_t RngStream::next_u64() {
  std::uint8_t buf[8];
  fill(buf, sizeof(buf));
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | buf[i];
  return v;
}

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::below(std::uint64_t n) {
  require(n > 0, ErrorCode::kInvalidParameter, "below(0)");
  if (n == 1) return 0;
  // Rejection sampling over the largest multiple of n that fits in 64 bits.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
  for (;;) {
    const std::uint64_t v = next_u64();
    if (v <= limit) return v % n;
  }
}

void SystemRng::fill(void* buf, std::size_t len) {
  ensure_sodium();
  randombytes_buf(buf, len);
}

DeterministicRng::DeterministicRng(const std::array<std::uint8_t, 32>& key)
    : key_(key), pos_(buffer_.size()) {
  ensure_sodium();
}

DeterministicRng DeterministicRng::derive(std::uint64_t seed,
                                          std::string_view label) {
  ensure_sodium();
  crypto_hash_sha256_state st;
  crypto_hash_sha256_init(&st);
  static constexpr char kDomain[] = "fairmeter.rng.v1";
  crypto_hash_sha256_update(
      &st, reinterpret_cast<const unsigned char*>(kDomain), sizeof(kDomain));
  std::uint8_t seed_le[8];
  for (int i = 0; i < 8; ++i) seed_le[i] = (seed >> (8 * i)) & 0xff;
  crypto_hash_sha256_update(&st, seed_le, sizeof(seed_le));
  crypto_hash_sha256_update(
      &st, reinterpret_cast<const unsigned char*>(label.data()), label.size());
  std::array<std::uint8_t, 32> key;
  crypto_hash_sha256_final(&st, key.data());
  return DeterministicRng(key);
}

void DeterministicRng::refill() {
  // Per-block seed = SHA-256(key || block index); the block itself is the
  // ChaCha20 expansion libsodium provides for deterministic buffers.
  crypto_hash_sha256_state st;
  crypto_hash_sha256_init(&st);
  crypto_hash_sha256_update(&st, key_.data(), key_.size());
  std::uint8_t block_le[8];
  for (int i = 0; i < 8; ++i) block_le[i] = (block_ >> (8 * i)) & 0xff;
  crypto_hash_sha256_update(&st, block_le, sizeof(block_le));
  std::array<std::uint8_t, 32> block_seed;
  crypto_hash_sha256_final(&st, block_seed.data());
  static_assert(randombytes_SEEDBYTES == 32);
  randombytes_buf_deterministic(buffer_.data(), buffer_.size(),
                                block_seed.data());
  ++block_;
  pos_ = 0;
}

void DeterministicRng::fill(void* buf, std::size_t len) {
  auto* out = static_cast<std::uint8_t*>(buf);
  while (len > 0) {
    if (pos_ == buffer_.size()) refill();
    const std::size_t take = std::min(len, buffer_.size() - pos_);
    std::memcpy(out, buffer_.data() + pos_, take);
    pos_ += take;
    out += take;
    len -= take;
  }
}

std::unique_ptr<RngStream> RngFactory::stream(std::string_view label) const {
  if (seed_.has_value()) {
    return std::make_unique<DeterministicRng>(
        DeterministicRng::derive(*seed_, label));
  }
  return std::make_unique<SystemRng>();
}

std::unique_ptr<RngStream> RngFactory::stream(std::string_view label,
                                              std::uint64_t index) const {
  std::string full(label);
  full += ':';
  full += std::to_string(index);
  return stream(full);
}

double sample_gamma(RngStream& rng, double alpha) {
  require(alpha > 0.0 && std::isfinite(alpha), ErrorCode::kInvalidParameter,
          "gamma shape must be positive and finite");
  // Marsaglia-Tsang squeeze; shapes below one go through the boost
  // Gamma(a) = Gamma(a+1) * U^(1/a).
  if (alpha < 1.0) {
    const double u = rng.next_double();
    return sample_gamma(rng, alpha + 1.0) * std::pow(u, 1.0 / alpha);
  }
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    // Standard normal via Box-Muller.
    double u1;
    do {
      u1 = rng.next_double();
    } while (u1 <= 0.0);
    const double u2 = rng.next_double();
    const double x =
        std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    const double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = rng.next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 &&
        std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

std::vector<double> sample_dirichlet(RngStream& rng,
                                     const std::vector<double>& alpha) {
  require(!alpha.empty(), ErrorCode::kInvalidParameter,
          "dirichlet needs at least one component");
  std::vector<double> draws(alpha.size());
  double total = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    draws[i] = sample_gamma(rng, alpha[i]);
    total += draws[i];
  }
  if (total <= 0.0) {
    // All gammas underflowed; fall back to uniform over the components.
    const double u = 1.0 / static_cast<double>(alpha.size());
    for (double& d : draws) d = u;
    return draws;
  }
  for (double& d : draws) d /= total;
  return draws;
}

RaceVector sample_dirichlet6(RngStream& rng, const RaceVector& alpha) {
  std::vector<double> a(alpha.data(), alpha.data() + kNumGroups);
  const std::vector<double> d = sample_dirichlet(rng, a);
  RaceVector out;
  for (int i = 0; i < kNumGroups; ++i) out[i] = d[i];
  return out;
}

std::size_t sample_categorical(RngStream& rng,
                               std::span<const double> weights) {
  require(!weights.empty(), ErrorCode::kInvalidParameter,
          "categorical draw needs weights");
  double total = 0.0;
  for (double w : weights) {
    require(w >= 0.0 && std::isfinite(w), ErrorCode::kInvalidParameter,
            "categorical weights must be non-negative");
    total += w;
  }
  require(total > 0.0, ErrorCode::kInvalidParameter,
          "categorical weights must not all be zero");
  const double u = rng.next_double() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

}  // namespace fairmeter
