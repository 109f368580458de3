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
#ifndef RESTPAIL_KEYRING_HPP_
#define RESTPAIL_KEYRING_HPP_

#include <cstdint>
#include <utility>

#include "restpail/bignat.hpp"
#include "restpail/errors.hpp"
#include "restpail/modmul.hpp"
#include "restpail/numeric.hpp"
#include "restpail/rng.hpp"

namespace restpail {

inline constexpr std::uint64_t kKeygenAttempts = 1u << 20;

// The group every party shares: modulus N = p*q of two distinct safe
// primes and a base g of order exactly 2p'q' modulo N.
struct PublicParams {
  BigNat N;
  BigNat N_sq;
  BigNat g;
  unsigned bits = 0;  // |N|

  BigNat quarter_N() const { return N / 4; }
  BigNat eighth_N() const { return N / 8; }
  BigNat quarter_N_sq() const { return N_sq / 4; }
};

// lambda = lcm(p-1, q-1) = 2p'q'; decrypts any additive ciphertext.
struct StrongKey {
  BigNat lambda;
  SafePrime p;
  SafePrime q;
};

enum class ShareLabel : std::uint8_t { kFirst = 0, kSecond = 1 };

// One half of the CRT split of lambda: paired shares satisfy
// (share_i + share_j) == 0 (mod lambda) and == 1 (mod N).
struct PartialStrongKey {
  BigNat share;
  ShareLabel label = ShareLabel::kFirst;
};

// Weak key theta with public h = g^theta mod N.
struct UserKeyPair {
  BigNat theta;
  BigNat h;
};

// Diffie-Hellman combination g^(theta_i * theta_j) mod N.
struct JointKey {
  BigNat h_joint;
};

// Hash into [0, 2^floor(|N|/4)), the length convention the certificates use.
inline BigNat hash_to_int(const Bytes& data, const PublicParams& params) {
  return hash_to_bits(data, params.bits / 4);
}

inline BigNat hash_to_int(const BigNat& x, const PublicParams& params) {
  return hash_to_int(to_be_bytes(x), params);
}

namespace detail {

// Base search: g = -a^(2N) mod N for random a in Z*_{N^2} with
// a mod N != 1, accepted only when ord(g) is exactly 2p'q'.
inline BigNat find_base(const BigNat& N, const BigNat& N_sq,
                        const BigNat& lambda, const BigNat& p_half,
                        const BigNat& q_half, RandomSource& rng) {
  for (std::uint64_t i = 0; i < kKeygenAttempts; ++i) {
    BigNat a = sample_range(2, N_sq - 1, rng);
    BigNat g_a;
    mpz_gcd(g_a.get_mpz_t(), a.get_mpz_t(), N_sq.get_mpz_t());
    if (g_a != 1) continue;
    if (a % N == 1) continue;
    BigNat g = (N - pow_mod(a, 2 * N, N)) % N;
    if (g <= 1) continue;
    if (pow_mod(g, lambda, N) != 1) continue;
    if (pow_mod(g, lambda / 2, N) == 1) continue;
    if (pow_mod(g, lambda / p_half, N) == 1) continue;
    if (pow_mod(g, lambda / q_half, N) == 1) continue;
    return g;
  }
  throw ExhaustedAttempts("find_base: retry budget exceeded");
}

}  // namespace detail

// Assembles parameters from a given prime pair; used by gen_params and by
// tests that pin toy primes. Rejects pairs where gcd(lambda, N) != 1.
inline std::pair<PublicParams, StrongKey> params_from_primes(
    const SafePrime& p, const SafePrime& q, RandomSource& rng) {
  if (p.p == q.p) throw OutOfRange("params_from_primes: p == q");
  // p' == q or q' == p would put a safe-prime factor in both lambda and N.
  if (p.p_half == q.p || q.p_half == p.p) {
    throw OutOfRange("params_from_primes: gcd(lambda, N) != 1");
  }
  PublicParams params;
  params.N = p.p * q.p;
  params.N_sq = params.N * params.N;
  params.bits = static_cast<unsigned>(bit_length(params.N));
  BigNat lambda = 2 * p.p_half * q.p_half;
  BigNat g;
  mpz_gcd(g.get_mpz_t(), lambda.get_mpz_t(), params.N.get_mpz_t());
  if (g != 1) throw OutOfRange("params_from_primes: gcd(lambda, N) != 1");
  params.g = detail::find_base(params.N, params.N_sq, lambda, p.p_half,
                               q.p_half, rng);
  return {params, StrongKey{lambda, p, q}};
}

inline std::pair<PublicParams, StrongKey> gen_params(unsigned bits,
                                                     RandomSource& rng) {
  if (bits < 10) throw OutOfRange("gen_params: bits < 10");
  for (std::uint64_t i = 0; i < kKeygenAttempts; ++i) {
    SafePrime p = gen_safe_prime((bits + 1) / 2, rng);
    SafePrime q = gen_safe_prime(bits / 2, rng);
    if (p.p == q.p || p.p_half == q.p || q.p_half == p.p) continue;
    BigNat N = p.p * q.p;
    if (bit_length(N) != bits) continue;
    return params_from_primes(p, q, rng);
  }
  throw ExhaustedAttempts("gen_params: retry budget exceeded");
}

inline UserKeyPair user_key_with_theta(const PublicParams& params,
                                       const BigNat& theta) {
  if (theta < 1 || theta > params.quarter_N_sq()) {
    throw OutOfRange("user_key_with_theta: theta not in [1, N^2/4]");
  }
  BigNat h = pow_mod(params.g, theta, params.N);
  // g^lambda == 1, so multiples of the order give a useless public key.
  if (h <= 1) throw DegenerateKey("user_key_with_theta: h <= 1");
  return UserKeyPair{theta, h};
}

// theta uniform in [1, N^2/4]; h = g^theta mod N. Degenerate h is
// resampled.
inline UserKeyPair gen_user_key(const PublicParams& params,
                                RandomSource& rng) {
  for (std::uint64_t i = 0; i < kKeygenAttempts; ++i) {
    try {
      return user_key_with_theta(
          params, sample_range(1, params.quarter_N_sq(), rng));
    } catch (const DegenerateKey&) {
      continue;
    }
  }
  throw ExhaustedAttempts("gen_user_key: retry budget exceeded");
}

// CRT split of lambda: sigma == 0 (mod lambda), == 1 (mod N), masked by a
// uniform share in [1, lambda*N).
inline std::pair<PartialStrongKey, PartialStrongKey> split_strong_key(
    const StrongKey& sk, const PublicParams& params, RandomSource& rng) {
  const BigNat mod = sk.lambda * params.N;
  BigNat sigma =
      sk.lambda * mod_inverse(sk.lambda % params.N, params.N) % mod;
  for (;;) {
    BigNat share_i = sample_range(1, mod - 1, rng);
    BigNat share_j = (sigma - share_i) % mod;
    if (share_j < 0) share_j += mod;
    if (share_j == 0) continue;  // degenerate, redraw
    return {PartialStrongKey{share_i, ShareLabel::kFirst},
            PartialStrongKey{share_j, ShareLabel::kSecond}};
  }
}

inline JointKey derive_joint_key(const UserKeyPair& own, const BigNat& peer_h,
                                 const PublicParams& params) {
  if (peer_h <= 1 || peer_h >= params.N) {
    throw OutOfRange("derive_joint_key: peer key out of range");
  }
  BigNat h_joint = pow_mod(peer_h, own.theta, params.N);
  if (h_joint == 1) throw DegenerateKey("derive_joint_key: h_ij == 1");
  return JointKey{h_joint};
}

}  // namespace restpail

#endif  // RESTPAIL_KEYRING_HPP_
