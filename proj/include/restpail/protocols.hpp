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
#ifndef RESTPAIL_PROTOCOLS_HPP_
#define RESTPAIL_PROTOCOLS_HPP_

#include <map>
#include <utility>

#include "restpail/cipher.hpp"
#include "restpail/convert.hpp"

namespace restpail {

// ---------------------------------------------------------------------------
// Access control of a common secret (ACCS). The requester U_j learns
// b*S + c where b is the requester's multiplier and c the helper's control
// factor; neither party alone can open S.
// ---------------------------------------------------------------------------

// Mixed encryption of S under the joint key; payload S * h_ij^{r_m} mod N.
struct CommonSecretCiphertext {
  MixedCiphertext mixed;
};

// Secrets U_j keeps between step 1 and step 3.
struct AccsRequesterState {
  BigNat a;
  BigNat d;
  BigNat b;
  BigNat cap_a;  // h_ij^a mod N
  PartialStrongKey lambda_j;
};

struct AccsMsgA {
  BigNat t1;               // g^{theta_j (r_m + a)} mod N
  BigNat d_times_a_inv;    // d * A^{-1} mod N
  MixedCiphertext ct_bds;  // payload b*d*S*h_ij^{r_m}
};

struct AccsMsgB {
  MixedCiphertext result;  // payload (bdS + cd) * A^{-1}
  BigNat result_partial;   // result.c1^{lambda_i} mod N^2
};

inline CommonSecretCiphertext accs_encrypt_secret(const PublicParams& params,
                                                  const JointKey& joint,
                                                  const BigNat& secret,
                                                  RandomSource& rng) {
  MulCiphertext mc = mul_enc(params, joint.h_joint, secret, rng);
  return CommonSecretCiphertext{mul_to_mix(params, joint, mc, rng)};
}

inline std::pair<AccsMsgA, AccsRequesterState> accs_step1(
    const PublicParams& params, const JointKey& joint, const BigNat& theta_j,
    const PartialStrongKey& lambda_j, const BigNat& b,
    const CommonSecretCiphertext& ct, RandomSource& rng) {
  if (b < 1 || b > params.eighth_N()) {
    throw OutOfRange("accs_step1: b not in [1, N/8]");
  }
  BigNat a, d, cap_a;
  for (;;) {
    a = sample_range(1, params.quarter_N(), rng);
    d = sample_range(1, params.quarter_N(), rng);
    BigNat gd;
    mpz_gcd(gd.get_mpz_t(), d.get_mpz_t(), params.N.get_mpz_t());
    if (gd != 1) continue;
    cap_a = pow_mod(joint.h_joint, a, params.N);
    mpz_gcd(gd.get_mpz_t(), cap_a.get_mpz_t(), params.N.get_mpz_t());
    if (gd != 1 || cap_a == 1) continue;
    break;
  }
  BigNat t1 = pow_mod(
      mod_mul(ct.mixed.c2, pow_mod(params.g, a, params.N), params.N), theta_j,
      params.N);
  BigNat d_times_a_inv =
      mod_mul(d, mod_inverse(cap_a, params.N), params.N);
  MixedCiphertext ct_bds =
      mixed_scalar_exp(params, ct.mixed, mod_mul(b, d, params.N));
  return {AccsMsgA{t1, d_times_a_inv, ct_bds},
          AccsRequesterState{a, d, b, cap_a, lambda_j}};
}

inline AccsMsgB accs_step2(const PublicParams& params, const BigNat& theta_i,
                           const PartialStrongKey& lambda_i, const BigNat& c,
                           const AccsMsgA& msg) {
  if (c < 1 || c > params.eighth_N()) {
    throw OutOfRange("accs_step2: c not in [1, N/8]");
  }
  BigNat t2 = pow_mod(msg.t1, theta_i, params.N);  // h_ij^{r_m + a}
  BigNat t3 = mod_inverse(t2, params.N);
  // c * dA^{-1} * t2 = c*d*h_ij^{r_m}: the control factor, pre-blinded so
  // it lands in the same slot as the payload.
  BigNat addend = mod_mul(mod_mul(c, msg.d_times_a_inv, params.N), t2,
                          params.N);
  MixedCiphertext ct = mixed_add_plain(params, msg.ct_bds, addend);
  MixedCiphertext result = mixed_scalar_exp(params, ct, t3);
  BigNat result_partial = pow_mod(result.c1, lambda_i.share, params.N_sq);
  return AccsMsgB{result, result_partial};
}

inline BigNat accs_step3(const PublicParams& params,
                         const AccsRequesterState& state,
                         const AccsMsgB& msg) {
  BigNat c1 = pow_mod(msg.result.c1, state.cap_a, params.N_sq);
  PartialDecryption dc1{pow_mod(msg.result_partial, state.cap_a, params.N_sq),
                        ShareLabel::kFirst};
  BigNat bds_cd = finish_partial_dec(params, state.lambda_j, c1, dc1);
  return mod_mul(bds_cd, mod_inverse(state.d, params.N), params.N);
}

// ---------------------------------------------------------------------------
// Identity distribution, authentication and key recovery against a
// semi-trusted KGC. The KGC signs with one split share (sigk) and the
// public verification share (verk) checks certificates.
// ---------------------------------------------------------------------------

// Reg = (g^{theta_r} mod N)^N (1 + rN) mod N^2 with theta_r = theta + H(r).
struct RegistrationRequest {
  BigNat reg;
};

// What the registering user retains. theta_r = theta + H(r) is a plain
// integer sum, so recovery subtracts exactly.
struct UserSecrets {
  BigNat theta;
  BigNat theta_r;
};

struct Certificate {
  BigNat id;
  BigNat cert1;  // (g^{theta_r + ID} mod N)^N (1 + rN) mod N^2
  BigNat cert2;  // cert1^{sigk} mod N^2
};

struct KgcRecord {
  BigNat id;
  Certificate cert;
  RegistrationRequest reg;
};

// Append-only record log keyed by ID; uniqueness enforced at insert.
class KgcStore {
 public:
  void insert(KgcRecord record) {
    auto [it, inserted] = records_.emplace(record.id, std::move(record));
    if (!inserted) throw DuplicateId("KgcStore: id already present");
  }
  bool contains(const BigNat& id) const { return records_.count(id) != 0; }
  const KgcRecord& find(const BigNat& id) const {
    auto it = records_.find(id);
    if (it == records_.end()) throw UnknownId("KgcStore: unknown id");
    return it->second;
  }
  const std::map<BigNat, KgcRecord>& records() const { return records_; }

 private:
  std::map<BigNat, KgcRecord> records_;
};

struct Registration {
  UserSecrets secrets;
  UserKeyPair key;
  RegistrationRequest request;
};

inline Registration register_begin_with(const PublicParams& params,
                                        const BigNat& theta,
                                        const BigNat& r) {
  BigNat h = pow_mod(params.g, theta, params.N);
  BigNat theta_r = theta + hash_to_int(r, params);
  BigNat hr = pow_mod(params.g, theta_r, params.N);
  BigNat reg = mod_mul(pow_mod(hr, params.N, params.N_sq),
                       1 + r * params.N % params.N_sq, params.N_sq);
  return Registration{UserSecrets{theta, theta_r}, UserKeyPair{theta, h},
                      RegistrationRequest{reg}};
}

inline Registration register_begin(const PublicParams& params,
                                   RandomSource& rng) {
  UserKeyPair key = gen_user_key(params, rng);
  BigNat r = sample_range(1, params.quarter_N(), rng);
  return register_begin_with(params, key.theta, r);
}

inline Certificate kgc_issue(const PublicParams& params,
                             const PartialStrongKey& sigk, KgcStore& store,
                             const RegistrationRequest& reg,
                             RandomSource& rng) {
  BigNat id;
  do {
    id = sample_range(1, params.quarter_N_sq(), rng);
  } while (store.contains(id));
  BigNat gid = pow_mod(params.g, id, params.N);
  BigNat cert1 = mod_mul(pow_mod(gid, params.N, params.N_sq), reg.reg,
                         params.N_sq);
  BigNat cert2 = pow_mod(cert1, sigk.share, params.N_sq);
  Certificate cert{id, cert1, cert2};
  store.insert(KgcRecord{id, cert, reg});
  return cert;
}

// verk recovers r from {cert1, cert2}; the certificate then has to match
// the claimed h and ID exactly.
inline bool auth_verify(const PublicParams& params,
                        const PartialStrongKey& verk, const BigNat& h,
                        const BigNat& id, const Certificate& cert) {
  try {
    BigNat u = mod_mul(pow_mod(cert.cert1, verk.share, params.N_sq),
                       cert.cert2, params.N_sq);
    BigNat r = l_function(u, params.N);
    BigNat exp = hash_to_int(r, params) + id;
    BigNat base = mod_mul(h, pow_mod(params.g, exp, params.N), params.N);
    BigNat expected = mod_mul(pow_mod(base, params.N, params.N_sq),
                              1 + r * params.N % params.N_sq, params.N_sq);
    BigNat check = mod_mul(cert.cert1, mod_inverse(expected, params.N_sq),
                           params.N_sq);
    return check == 1;
  } catch (const NotUnitResidue&) {
    return false;
  } catch (const NotInvertible&) {
    return false;
  }
}

inline BigNat kgc_recover(const PublicParams& params, const StrongKey& sk,
                          const KgcStore& store, const BigNat& id) {
  const KgcRecord& rec = store.find(id);
  return strong_dec_component(params, sk.lambda, rec.cert.cert1);
}

inline BigNat user_recover(const PublicParams& params, const BigNat& theta_r,
                           const BigNat& h, const BigNat& r) {
  BigNat lhs = pow_mod(params.g, theta_r, params.N);
  BigNat rhs = mod_mul(h, pow_mod(params.g, hash_to_int(r, params), params.N),
                       params.N);
  if (lhs != rhs) {
    throw VerificationFailed("user_recover: g^theta_r != h * g^H(r)");
  }
  return theta_r - hash_to_int(r, params);
}

}  // namespace restpail

#endif  // RESTPAIL_PROTOCOLS_HPP_
