/*
 * Copyright 2026 the restpail authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef RESTPAIL_RNG_HPP_
#define RESTPAIL_RNG_HPP_

#include <cstdint>
#include <cstdio>
#include <memory>

#include "restpail/bignat.hpp"
#include "restpail/errors.hpp"

namespace restpail {

// Injectable randomness source. Every randomized operation in the library
// takes one of these, so protocol tests can replay with fixed seeds.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  // Uniform value in [0, 2^n).
  virtual BigNat bits(std::size_t n) = 0;
};

namespace detail {

class GmpRandom : public RandomSource {
 public:
  explicit GmpRandom(const BigNat& seed) {
    gmp_randinit_mt(state_);
    gmp_randseed(state_, seed.get_mpz_t());
  }
  GmpRandom(const GmpRandom&) = delete;
  GmpRandom& operator=(const GmpRandom&) = delete;
  ~GmpRandom() override { gmp_randclear(state_); }

  BigNat bits(std::size_t n) override {
    BigNat x;
    if (n > 0) mpz_urandomb(x.get_mpz_t(), state_, n);
    return x;
  }

 private:
  gmp_randstate_t state_;
};

inline BigNat entropy_seed() {
  std::uint8_t buf[32];
  std::FILE* f = std::fopen("/dev/urandom", "rb");
  if (f == nullptr || std::fread(buf, 1, sizeof(buf), f) != sizeof(buf)) {
    if (f) std::fclose(f);
    throw IoError("cannot read /dev/urandom");
  }
  std::fclose(f);
  return from_be_bytes(buf, sizeof(buf));
}

}  // namespace detail

// Seeded from the OS entropy pool; one instance per logical task.
class SystemRandom : public detail::GmpRandom {
 public:
  SystemRandom() : GmpRandom(detail::entropy_seed()) {}
};

// Deterministic source for tests and transcript replay.
class SeededRandom : public detail::GmpRandom {
 public:
  explicit SeededRandom(std::uint64_t seed) : GmpRandom(BigNat(seed)) {}
  explicit SeededRandom(const BigNat& seed) : GmpRandom(seed) {}
};

}  // namespace restpail

#endif  // RESTPAIL_RNG_HPP_
