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
#ifndef RESTPAIL_CIPHER_HPP_
#define RESTPAIL_CIPHER_HPP_

#include "restpail/bignat.hpp"
#include "restpail/errors.hpp"
#include "restpail/keyring.hpp"
#include "restpail/modmul.hpp"
#include "restpail/numeric.hpp"
#include "restpail/rng.hpp"

namespace restpail {

// AC1 = (h^r mod N)^N (1 + mN) mod N^2; AC2 = g^r mod N.
struct AddCiphertext {
  BigNat ac1;
  BigNat ac2;
};

// MC1 = m h^r mod N; MC2 = g^r mod N.
struct MulCiphertext {
  BigNat mc1;
  BigNat mc2;
};

// Additive encryption of a multiplicatively blinded payload
// m' = m h^{r_m} mod N. c2 keeps g^{r_m} so the blinding can be removed
// later; strong-key decryption of c1 yields only m'.
struct MixedCiphertext {
  BigNat c1;
  BigNat c2;
};

struct PartialDecryption {
  BigNat dc;  // ac1^{share} mod N^2
  ShareLabel label = ShareLabel::kFirst;
};

inline void check_message(const BigNat& m, const PublicParams& params) {
  if (m < 0 || m >= params.N) {
    throw MessageOutOfRange("message not in [0, N)");
  }
}

inline AddCiphertext add_enc_with_r(const PublicParams& params,
                                    const BigNat& h, const BigNat& m,
                                    const BigNat& r,
                                    ModMulCounter* counter = nullptr) {
  check_message(m, params);
  BigNat hr = pow_mod(h, r, params.N, counter);
  BigNat ac1 = pow_mod(hr, params.N, params.N_sq, counter);
  ac1 = mod_mul(ac1, 1 + mod_mul(m, params.N, params.N_sq, counter),
                params.N_sq, counter);
  BigNat ac2 = pow_mod(params.g, r, params.N, counter);
  return AddCiphertext{ac1, ac2};
}

// r = 0 is a valid (unblinded) encryption; the default sampler starts at 1
// so a forced r is the only way to hit it.
inline AddCiphertext add_enc(const PublicParams& params, const BigNat& h,
                             const BigNat& m, RandomSource& rng,
                             ModMulCounter* counter = nullptr) {
  BigNat r = sample_range(1, params.quarter_N(), rng);
  return add_enc_with_r(params, h, m, r, counter);
}

inline BigNat add_dec_weak(const PublicParams& params, const BigNat& theta,
                           const AddCiphertext& ct,
                           ModMulCounter* counter = nullptr) {
  BigNat t = pow_mod(ct.ac2, theta, params.N, counter);
  BigNat denom = pow_mod(t, params.N, params.N_sq, counter);
  BigNat u = mod_mul(ct.ac1, mod_inverse(denom, params.N_sq), params.N_sq,
                     counter);
  return l_function(u, params.N);
}

// Strong decryption of a bare first component; the second component is
// never consulted. Also serves mixed ciphertexts, converted ciphertexts
// and certificates, whose payload slot has the same shape.
inline BigNat strong_dec_component(const PublicParams& params,
                                   const BigNat& lambda, const BigNat& c1,
                                   ModMulCounter* counter = nullptr) {
  BigNat u = pow_mod(c1, lambda, params.N_sq, counter);
  BigNat l = l_function(u, params.N);
  return mod_mul(l, mod_inverse(lambda % params.N, params.N), params.N,
                 counter);
}

inline BigNat add_dec_strong(const PublicParams& params, const BigNat& lambda,
                             const AddCiphertext& ct,
                             ModMulCounter* counter = nullptr) {
  return strong_dec_component(params, lambda, ct.ac1, counter);
}

inline PartialDecryption partial_dec_component(const PublicParams& params,
                                               const PartialStrongKey& share,
                                               const BigNat& c1,
                                               ModMulCounter* counter =
                                                   nullptr) {
  return PartialDecryption{pow_mod(c1, share.share, params.N_sq, counter),
                           share.label};
}

inline BigNat finish_partial_dec(const PublicParams& params,
                                 const PartialStrongKey& share_j,
                                 const BigNat& c1,
                                 const PartialDecryption& dc1,
                                 ModMulCounter* counter = nullptr) {
  BigNat dc2 = pow_mod(c1, share_j.share, params.N_sq, counter);
  BigNat u = mod_mul(dc1.dc, dc2, params.N_sq, counter);
  return l_function(u, params.N);
}

inline PartialDecryption add_dec_partial_1(const PublicParams& params,
                                           const PartialStrongKey& share_i,
                                           const AddCiphertext& ct,
                                           ModMulCounter* counter = nullptr) {
  return partial_dec_component(params, share_i, ct.ac1, counter);
}

inline BigNat add_dec_partial_2(const PublicParams& params,
                                const PartialStrongKey& share_j,
                                const AddCiphertext& ct,
                                const PartialDecryption& dc1,
                                ModMulCounter* counter = nullptr) {
  return finish_partial_dec(params, share_j, ct.ac1, dc1, counter);
}

inline MulCiphertext mul_enc_with_r(const PublicParams& params,
                                    const BigNat& h, const BigNat& m,
                                    const BigNat& r,
                                    ModMulCounter* counter = nullptr) {
  check_message(m, params);
  BigNat mc1 = mod_mul(m, pow_mod(h, r, params.N, counter), params.N,
                       counter);
  BigNat mc2 = pow_mod(params.g, r, params.N, counter);
  return MulCiphertext{mc1, mc2};
}

inline MulCiphertext mul_enc(const PublicParams& params, const BigNat& h,
                             const BigNat& m, RandomSource& rng,
                             ModMulCounter* counter = nullptr) {
  BigNat r = sample_range(1, params.quarter_N(), rng);
  return mul_enc_with_r(params, h, m, r, counter);
}

inline BigNat mul_dec(const PublicParams& params, const BigNat& theta,
                      const MulCiphertext& ct,
                      ModMulCounter* counter = nullptr) {
  BigNat t = pow_mod(ct.mc2, theta, params.N, counter);
  return mod_mul(ct.mc1, mod_inverse(t, params.N), params.N, counter);
}

inline AddCiphertext add_ct_add(const PublicParams& params,
                                const AddCiphertext& ct1,
                                const AddCiphertext& ct2) {
  return AddCiphertext{mod_mul(ct1.ac1, ct2.ac1, params.N_sq),
                       mod_mul(ct1.ac2, ct2.ac2, params.N)};
}

inline AddCiphertext add_ct_scalar(const PublicParams& params,
                                   const AddCiphertext& ct, const BigNat& k) {
  if (k < 0 || k >= params.N) throw OutOfRange("scalar not in [0, N)");
  return AddCiphertext{pow_mod(ct.ac1, k, params.N_sq),
                       pow_mod(ct.ac2, k, params.N)};
}

inline MulCiphertext mul_ct_mul(const PublicParams& params,
                                const MulCiphertext& ct1,
                                const MulCiphertext& ct2) {
  return MulCiphertext{mod_mul(ct1.mc1, ct2.mc1, params.N),
                       mod_mul(ct1.mc2, ct2.mc2, params.N)};
}

// Payload multiplies by e mod N. c2 stays untouched: it tracks r_m, which
// later blinding removal still needs.
inline MixedCiphertext mixed_scalar_exp(const PublicParams& params,
                                        const MixedCiphertext& ct,
                                        const BigNat& e) {
  if (e <= 0 || e >= params.N) throw OutOfRange("exponent not in (0, N)");
  return MixedCiphertext{pow_mod(ct.c1, e, params.N_sq), ct.c2};
}

inline MixedCiphertext mixed_add_plain(const PublicParams& params,
                                       const MixedCiphertext& ct,
                                       const BigNat& x) {
  if (x < 0 || x >= params.N) throw OutOfRange("addend not in [0, N)");
  return MixedCiphertext{
      mod_mul(ct.c1, 1 + x * params.N % params.N_sq, params.N_sq), ct.c2};
}

}  // namespace restpail

#endif  // RESTPAIL_CIPHER_HPP_
