#pragma once

#include <sodium.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>

#include "contain/encoding.hpp"

namespace contain {

// Source of cryptographic randomness for keys, salts, nonces and tokens.
// Implementations throw std::runtime_error when they cannot produce the
// requested bytes; callers treat that as unrecoverable.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

// Process-wide CSPRNG (libsodium randombytes).
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override {
    ensure_sodium();
    randombytes_buf(out.data(), out.size());
  }
};

// Deterministic stream for tests: a ChaCha20-based expansion of a 64-bit
// seed. Identical seeds and fill-call sequences produce identical bytes on
// every platform.
class DeterministicRandom final : public RandomSource {
 public:
  explicit DeterministicRandom(std::uint64_t seed) {
    ensure_sodium();
    seed_.fill(0);
    for (int i = 0; i < 8; ++i) {
      seed_[i] = static_cast<std::uint8_t>(seed >> (8 * i));
    }
  }

  void fill(std::span<std::uint8_t> out) override {
    std::array<std::uint8_t, randombytes_SEEDBYTES> block_seed = seed_;
    for (int i = 0; i < 8; ++i) {
      block_seed[8 + i] = static_cast<std::uint8_t>(counter_ >> (8 * i));
    }
    ++counter_;
    randombytes_buf_deterministic(out.data(), out.size(), block_seed.data());
  }

 private:
  std::array<std::uint8_t, randombytes_SEEDBYTES> seed_{};
  std::uint64_t counter_ = 0;
};

}  // namespace contain
