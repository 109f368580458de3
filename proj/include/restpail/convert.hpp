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
#ifndef RESTPAIL_CONVERT_HPP_
#define RESTPAIL_CONVERT_HPP_

#include "restpail/cipher.hpp"

namespace restpail {

// U_j -> U_i: t1 = g^{(r_m+s)theta_j}, t2 = g^s, c1 passed through.
struct MixToAddMsg1 {
  BigNat c1;
  BigNat t1;
  BigNat t2;
};

// U_i -> U_j: c1' = c1^{(h_ij^{r_m+s})^{-1}}, T2 = t2^{theta_i}.
struct MixToAddMsg2 {
  BigNat c1_prime;
  BigNat t2_cap;
};

// Single-component additive ciphertext; decryptable by the strong or
// partial paths only (no second component exists to serve a weak key).
struct ConvertedAddCiphertext {
  BigNat c1;
};

inline MixedCiphertext mul_to_mix_with_r(const PublicParams& params,
                                         const JointKey& joint,
                                         const MulCiphertext& ct,
                                         const BigNat& r_prime) {
  BigNat hr = pow_mod(joint.h_joint, r_prime, params.N);
  BigNat c1 = pow_mod(hr, params.N, params.N_sq);
  c1 = mod_mul(c1, 1 + ct.mc1 * params.N % params.N_sq, params.N_sq);
  return MixedCiphertext{c1, ct.mc2};
}

// Additive encryption of MC1 under the joint key; MC2 rides along as the
// randomness trace.
inline MixedCiphertext mul_to_mix(const PublicParams& params,
                                  const JointKey& joint,
                                  const MulCiphertext& ct,
                                  RandomSource& rng) {
  BigNat r_prime = sample_range(1, params.quarter_N(), rng);
  return mul_to_mix_with_r(params, joint, ct, r_prime);
}

inline MixToAddMsg1 mix_to_add_step1_with_s(const PublicParams& params,
                                            const BigNat& theta_j,
                                            const MixedCiphertext& ct,
                                            const BigNat& s) {
  BigNat base = mod_mul(ct.c2, pow_mod(params.g, s, params.N), params.N);
  BigNat t1 = pow_mod(base, theta_j, params.N);
  BigNat t2 = pow_mod(params.g, s, params.N);
  return MixToAddMsg1{ct.c1, t1, t2};
}

// s comes from [1, N/4]: U_j does not know 2p'q', so that is the widest
// range the party can actually sample.
inline MixToAddMsg1 mix_to_add_step1(const PublicParams& params,
                                     const BigNat& theta_j,
                                     const MixedCiphertext& ct,
                                     RandomSource& rng) {
  BigNat s = sample_range(1, params.quarter_N(), rng);
  return mix_to_add_step1_with_s(params, theta_j, ct, s);
}

inline MixToAddMsg2 mix_to_add_step2(const PublicParams& params,
                                     const BigNat& theta_i,
                                     const MixToAddMsg1& msg) {
  BigNat u = pow_mod(msg.t1, theta_i, params.N);  // h_ij^{r_m+s}
  BigNat c1_prime = pow_mod(msg.c1, mod_inverse(u, params.N), params.N_sq);
  BigNat t2_cap = pow_mod(msg.t2, theta_i, params.N);
  return MixToAddMsg2{c1_prime, t2_cap};
}

inline ConvertedAddCiphertext mix_to_add_step3(const PublicParams& params,
                                               const BigNat& theta_j,
                                               const MixToAddMsg2& msg) {
  BigNat v = pow_mod(msg.t2_cap, theta_j, params.N);  // h_ij^s
  return ConvertedAddCiphertext{pow_mod(msg.c1_prime, v, params.N_sq)};
}

}  // namespace restpail

#endif  // RESTPAIL_CONVERT_HPP_
