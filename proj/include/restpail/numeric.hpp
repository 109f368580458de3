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
#ifndef RESTPAIL_NUMERIC_HPP_
#define RESTPAIL_NUMERIC_HPP_

#include <openssl/evp.h>

#include <cstdint>

#include "restpail/bignat.hpp"
#include "restpail/errors.hpp"
#include "restpail/rng.hpp"

namespace restpail {

// Miller-Rabin rounds giving error <= 2^-80 (GMP runs BPSW first).
inline constexpr int kPrimalityRounds = 64;

// L(u) = (u - 1) / N on residues u == 1 (mod N); extracts the plaintext
// slot of (1 + mN).
inline BigNat l_function(const BigNat& u, const BigNat& N) {
  BigNat num = u - 1;
  if (num % N != 0) {
    throw NotUnitResidue("L: u - 1 not divisible by N");
  }
  return num / N;
}

inline BigNat mod_inverse(const BigNat& x, const BigNat& M) {
  BigNat y;
  if (mpz_invert(y.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t()) == 0) {
    throw NotInvertible("mod_inverse: gcd(x, M) != 1");
  }
  return y;
}

inline bool is_probable_prime(const BigNat& x) {
  return mpz_probab_prime_p(x.get_mpz_t(), kPrimalityRounds) != 0;
}

// p = 2*p_half + 1 with both factors prime. p_half is required to be odd,
// so 5 does not qualify.
struct SafePrime {
  BigNat p;
  BigNat p_half;
};

// Uniform value in [lo, hi], rejection-sampled so there is no modulo bias.
inline BigNat sample_range(const BigNat& lo, const BigNat& hi,
                           RandomSource& rng) {
  if (lo > hi) throw OutOfRange("sample_range: lo > hi");
  BigNat width = hi - lo + 1;
  if (width == 1) return lo;
  std::size_t n = bit_length(width);
  for (;;) {
    BigNat x = rng.bits(n);
    if (x < width) return lo + x;
  }
}

// Safe prime with exactly `bits` bits. Candidates are drawn uniformly;
// a cheap pre-test filters before the full-round check.
inline SafePrime gen_safe_prime(unsigned bits, RandomSource& rng,
                                std::uint64_t max_attempts = 1u << 26) {
  if (bits < 3) throw OutOfRange("gen_safe_prime: bits < 3");
  // p in [2^(bits-1), 2^bits) iff p_half in [2^(bits-2), 2^(bits-1)).
  BigNat lo = BigNat(1) << (bits - 2);
  BigNat hi = (BigNat(1) << (bits - 1)) - 1;
  for (std::uint64_t i = 0; i < max_attempts; ++i) {
    BigNat half = sample_range(lo, hi, rng);
    mpz_setbit(half.get_mpz_t(), 0);  // odd
    if (half > hi) continue;
    BigNat p = 2 * half + 1;
    if (mpz_probab_prime_p(half.get_mpz_t(), 2) == 0) continue;
    if (mpz_probab_prime_p(p.get_mpz_t(), 2) == 0) continue;
    if (!is_probable_prime(half) || !is_probable_prime(p)) continue;
    return SafePrime{p, half};
  }
  throw ExhaustedAttempts("gen_safe_prime: retry budget exceeded");
}

namespace detail {

inline void sha256(const std::uint8_t* data, std::size_t len,
                   std::uint8_t out[32]) {
  unsigned int n = 32;
  if (EVP_Digest(data, len, out, &n, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
}

}  // namespace detail

// Deterministic hash of `data` into [0, 2^out_bits), built from SHA-256
// with counter expansion when out_bits > 256.
inline BigNat hash_to_bits(const Bytes& data, std::size_t out_bits) {
  Bytes acc;
  std::uint32_t ctr = 0;
  while (acc.size() * 8 < out_bits) {
    Bytes block = data;
    if (out_bits > 256 || ctr > 0) {
      block.push_back(static_cast<std::uint8_t>(ctr >> 24));
      block.push_back(static_cast<std::uint8_t>(ctr >> 16));
      block.push_back(static_cast<std::uint8_t>(ctr >> 8));
      block.push_back(static_cast<std::uint8_t>(ctr));
    }
    std::uint8_t digest[32];
    detail::sha256(block.data(), block.size(), digest);
    acc.insert(acc.end(), digest, digest + 32);
    ++ctr;
  }
  BigNat x = from_be_bytes(acc);
  BigNat mask = (BigNat(1) << out_bits) - 1;
  return x & mask;
}

}  // namespace restpail

#endif  // RESTPAIL_NUMERIC_HPP_
