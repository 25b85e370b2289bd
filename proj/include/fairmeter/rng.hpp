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

#ifndef FAIRMETER_RNG_HPP_
#define FAIRMETER_RNG_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairmeter/race.hpp"

namespace fairmeter {

// Byte-stream randomness source. Protocol code takes an RngStream so that
// production runs draw from the OS CSPRNG while seeded runs replay
// bit-identically.
class RngStream {
 public:
  virtual ~RngStream() = default;

  virtual void fill(void* buf, std::size_t len) = 0;

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 random bits.
  double next_double();

  // Uniform in [0, n), unbiased. n must be positive.
  std::uint64_t below(std::uint64_t n);
};

class SystemRng final : public RngStream {
 public:
  void fill(void* buf, std::size_t len) override;
};

// ChaCha20-based deterministic stream expanded from a 32-byte key.
class DeterministicRng final : public RngStream {
 public:
  explicit DeterministicRng(const std::array<std::uint8_t, 32>& key);

  // Derives an independent stream from (seed, label). Distinct labels give
  // computationally independent streams for the same seed.
  static DeterministicRng derive(std::uint64_t seed, std::string_view label);

  void fill(void* buf, std::size_t len) override;

 private:
  void refill();

  std::array<std::uint8_t, 32> key_;
  std::uint64_t block_ = 0;
  std::array<std::uint8_t, 4096> buffer_;
  std::size_t pos_;
};

// Hands out named randomness streams. With a seed every stream is a
// deterministic function of (seed, label); without one every stream is the
// OS CSPRNG.
class RngFactory {
 public:
  explicit RngFactory(std::optional<std::uint64_t> seed) : seed_(seed) {}

  std::unique_ptr<RngStream> stream(std::string_view label) const;
  std::unique_ptr<RngStream> stream(std::string_view label,
                                    std::uint64_t index) const;

  bool deterministic() const { return seed_.has_value(); }

 private:
  std::optional<std::uint64_t> seed_;
};

// Samplers used by the privatizer and the synthetic data generator. All are
// pure functions of the stream state.
double sample_gamma(RngStream& rng, double alpha);

std::vector<double> sample_dirichlet(RngStream& rng,
                                     const std::vector<double>& alpha);

RaceVector sample_dirichlet6(RngStream& rng, const RaceVector& alpha);

// Index draw proportional to the (non-negative) weights.
std::size_t sample_categorical(RngStream& rng, std::span<const double> weights);

// In-place Fisher-Yates driven by the stream.
template <typename T>
void shuffle_in_place(RngStream& rng, std::vector<T>& items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace fairmeter

#endif  // FAIRMETER_RNG_HPP_
