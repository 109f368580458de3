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
#include <gtest/gtest.h>

#include "restpail/keyring.hpp"
#include "toy_fixture.hpp"

namespace restpail {
namespace {

using testing::Toy;
using testing::oracle_pow;

TEST(GenParams, ToyPrimesGiveExpectedGroup) {
  Toy toy;
  EXPECT_EQ(toy.params.N, 1357);
  EXPECT_EQ(toy.params.N_sq, BigNat(1357) * 1357);
  EXPECT_EQ(toy.strong.lambda, 638);
  BigNat g;
  mpz_gcd(g.get_mpz_t(), toy.strong.lambda.get_mpz_t(),
          toy.params.N.get_mpz_t());
  EXPECT_EQ(g, 1);
}

TEST(GenParams, RejectsSharedSafePrimeFactor) {
  // q' = 23 = p makes gcd(lambda, N) = 23.
  SeededRandom rng(2);
  EXPECT_THROW(
      params_from_primes(SafePrime{23, 11}, SafePrime{47, 23}, rng),
      OutOfRange);
}

TEST(GenParams, RejectsEqualPrimes) {
  SeededRandom rng(3);
  EXPECT_THROW(
      params_from_primes(SafePrime{23, 11}, SafePrime{23, 11}, rng),
      OutOfRange);
}

TEST(GenParams, BaseHasExactOrder) {
  Toy toy;
  const BigNat& g = toy.params.g;
  const BigNat& N = toy.params.N;
  const BigNat lambda = toy.strong.lambda;
  EXPECT_EQ(oracle_pow(g, lambda, N), 1);
  EXPECT_NE(oracle_pow(g, lambda / 2, N), 1);
  EXPECT_NE(oracle_pow(g, lambda / 11, N), 1);
  EXPECT_NE(oracle_pow(g, lambda / 29, N), 1);
}

TEST(GenParams, GeneratedSetsSatisfyGroupIdentities) {
  SeededRandom rng(4);
  for (int i = 0; i < 3; ++i) {
    auto [params, strong] = gen_params(32, rng);
    EXPECT_EQ(pow_mod(params.g, strong.lambda, params.N), 1);
    BigNat gcd;
    mpz_gcd(gcd.get_mpz_t(), strong.lambda.get_mpz_t(),
            params.N.get_mpz_t());
    EXPECT_EQ(gcd, 1);
    for (int j = 0; j < 100; ++j) {
      BigNat e = sample_range(1, params.N - 1, rng);
      BigNat mu = pow_mod(params.g, e, params.N);
      EXPECT_EQ(pow_mod(mu, strong.lambda * params.N, params.N_sq), 1);
    }
  }
}

TEST(UserKey, ForcedThetaOneGivesBase) {
  Toy toy;
  EXPECT_EQ(user_key_with_theta(toy.params, 1).h, toy.params.g);
}

TEST(UserKey, ThetaEqualToLambdaIsDegenerate) {
  Toy toy;
  EXPECT_THROW(user_key_with_theta(toy.params, toy.strong.lambda),
               DegenerateKey);
}

TEST(UserKey, ForcedThetaMatchesOracle) {
  Toy toy;
  EXPECT_EQ(user_key_with_theta(toy.params, 5).h,
            oracle_pow(toy.params.g, 5, toy.params.N));
}

TEST(UserKey, SampledKeysAreInRange) {
  Toy toy;
  SeededRandom rng(5);
  for (int i = 0; i < 20; ++i) {
    UserKeyPair k = gen_user_key(toy.params, rng);
    EXPECT_GE(k.theta, 1);
    EXPECT_LE(k.theta, toy.params.quarter_N_sq());
    EXPECT_GT(k.h, 1);
    EXPECT_LT(k.h, toy.params.N);
  }
}

TEST(SplitKey, SharesReconstruct) {
  Toy toy;
  SeededRandom rng(6);
  for (int i = 0; i < 100; ++i) {
    auto [si, sj] = split_strong_key(toy.strong, toy.params, rng);
    BigNat sum = si.share + sj.share;
    EXPECT_EQ(sum % 638, 0);
    EXPECT_EQ(sum % 1357, 1);
    EXPECT_NE(si.share, 0);
    EXPECT_NE(sj.share, 0);
    EXPECT_EQ(si.label, ShareLabel::kFirst);
    EXPECT_EQ(sj.label, ShareLabel::kSecond);
  }
}

TEST(SplitKey, SumIsInvariantAcrossSplits) {
  Toy toy;
  SeededRandom rng(7);
  const BigNat mod = toy.strong.lambda * toy.params.N;
  auto [a1, a2] = split_strong_key(toy.strong, toy.params, rng);
  auto [b1, b2] = split_strong_key(toy.strong, toy.params, rng);
  EXPECT_NE(a1.share, b1.share);  // overwhelming
  EXPECT_EQ((a1.share + a2.share) % mod, (b1.share + b2.share) % mod);
}

TEST(JointKey, SymmetricAndMatchesOracle) {
  Toy toy;
  UserKeyPair ki = user_key_with_theta(toy.params, 3);
  UserKeyPair kj = user_key_with_theta(toy.params, 5);
  JointKey from_i = derive_joint_key(ki, kj.h, toy.params);
  JointKey from_j = derive_joint_key(kj, ki.h, toy.params);
  EXPECT_EQ(from_i.h_joint, from_j.h_joint);
  EXPECT_EQ(from_i.h_joint, oracle_pow(toy.params.g, 15, toy.params.N));
}

TEST(JointKey, ThetaOneReturnsPeerKey) {
  Toy toy;
  UserKeyPair self = user_key_with_theta(toy.params, 1);
  UserKeyPair peer = user_key_with_theta(toy.params, 7);
  EXPECT_EQ(derive_joint_key(self, peer.h, toy.params).h_joint, peer.h);
}

TEST(JointKey, RejectsOutOfRangePeer) {
  Toy toy;
  UserKeyPair self = user_key_with_theta(toy.params, 3);
  EXPECT_THROW(derive_joint_key(self, 1, toy.params), OutOfRange);
  EXPECT_THROW(derive_joint_key(self, toy.params.N, toy.params), OutOfRange);
}

}  // namespace
}  // namespace restpail
