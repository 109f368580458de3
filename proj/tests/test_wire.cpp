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

#include <cstdio>
#include <string>

#include "restpail/store.hpp"
#include "restpail/wire.hpp"
#include "toy_fixture.hpp"

namespace restpail {
namespace {

using testing::Toy;

TEST(WireEncode, FieldLayoutForSmallInteger) {
  Bytes b = encode(Frame{tags::kJointKey, {5}});
  Bytes expected{0x52, 0x50, 0x01, 'J', 'K', 'E', 'Y',
                 0x00, 0x00, 0x00, 0x01, 0x05};
  EXPECT_EQ(b, expected);
}

TEST(WireEncode, ZeroIsEmptyField) {
  Bytes b = encode(Frame{tags::kJointKey, {0}});
  Bytes expected{0x52, 0x50, 0x01, 'J', 'K', 'E', 'Y',
                 0x00, 0x00, 0x00, 0x00};
  EXPECT_EQ(b, expected);
}

TEST(WireEncode, MultiByteFieldIsBigEndianMinimal) {
  // 0x01F4 = 500 takes exactly two bytes.
  Bytes b = encode(Frame{tags::kConvertedAdd, {500}});
  Bytes expected{0x52, 0x50, 0x01, 'C', 'A', 'D', 'D',
                 0x00, 0x00, 0x00, 0x02, 0x01, 0xF4};
  EXPECT_EQ(b, expected);
}

TEST(WireEncode, RejectsWrongArity) {
  EXPECT_THROW(encode(Frame{tags::kAddCt, {1}}), UnknownTag);
  EXPECT_THROW(encode(Frame{"ZZZZ", {1}}), UnknownTag);
}

TEST(WireDecode, WrongMagicThrows) {
  Bytes b = encode(Frame{tags::kJointKey, {5}});
  b[0] = 0x53;
  EXPECT_THROW(decode(b), BadMagic);
}

TEST(WireDecode, WrongVersionThrows) {
  Bytes b = encode(Frame{tags::kJointKey, {5}});
  b[2] = 0x02;
  EXPECT_THROW(decode(b), BadVersion);
}

TEST(WireDecode, UnknownTagThrows) {
  Bytes b = encode(Frame{tags::kJointKey, {5}});
  b[3] = 'Q';
  EXPECT_THROW(decode(b), UnknownTag);
}

TEST(WireDecode, TruncationsThrow) {
  Bytes b = encode(Frame{tags::kAddCt, {123456, 789}});
  for (std::size_t cut = 0; cut < b.size(); ++cut) {
    Bytes prefix(b.begin(), b.begin() + cut);
    EXPECT_THROW(decode(prefix), WireError) << "cut at " << cut;
  }
}

TEST(WireDecode, TrailingBytesRejected) {
  Bytes b = encode(Frame{tags::kJointKey, {5}});
  b.push_back(0x00);
  EXPECT_THROW(decode(b), Truncated);
}

TEST(WireDecode, NonMinimalFieldRejected) {
  // Same value padded with a leading zero byte.
  Bytes b{0x52, 0x50, 0x01, 'J', 'K', 'E', 'Y',
          0x00, 0x00, 0x00, 0x02, 0x00, 0x05};
  EXPECT_THROW(decode(b), Truncated);
}

TEST(WireRoundTrip, RandomFramesOfEveryTag) {
  SeededRandom rng(41);
  const char* all_tags[] = {
      tags::kParams,   tags::kStrongKey,  tags::kShare,
      tags::kUserKey,  tags::kUserSecrets, tags::kJointKey,
      tags::kAddCt,    tags::kMulCt,      tags::kMixCt,
      tags::kPartialDec, tags::kMix1,     tags::kMix2,
      tags::kConvertedAdd, tags::kAccsA,  tags::kAccsB,
      tags::kRegistration, tags::kCert,   tags::kAuthResp,
      tags::kRecoverReq, tags::kRecoverResp, tags::kKgcRecord,
  };
  for (const char* tag : all_tags) {
    for (int i = 0; i < 10; ++i) {
      Frame f;
      f.tag = tag;
      for (int k = 0; k < frame_arity(tag); ++k) {
        // mix of zero, small, and wide values
        int pick = i % 3;
        f.fields.push_back(pick == 0 ? BigNat(0)
                           : pick == 1 ? sample_range(1, 255, rng)
                                       : rng.bits(256));
      }
      Bytes b = encode(f);
      EXPECT_EQ(decode(b), f);
      EXPECT_EQ(encode(decode(b)), b);
    }
  }
}

TEST(WireRoundTrip, TypedDomainValues) {
  Toy toy;
  SeededRandom rng(42);
  EXPECT_EQ(params_from(to_frame(toy.params)).N, toy.params.N);
  EXPECT_EQ(params_from(to_frame(toy.params)).N_sq, toy.params.N_sq);
  EXPECT_EQ(params_from(to_frame(toy.params)).g, toy.params.g);
  EXPECT_EQ(strong_key_from(to_frame(toy.strong)).lambda,
            toy.strong.lambda);
  UserKeyPair k = gen_user_key(toy.params, rng);
  EXPECT_EQ(user_key_from(to_frame(k)).theta, k.theta);
  auto [si, sj] = split_strong_key(toy.strong, toy.params, rng);
  EXPECT_EQ(share_from(to_frame(si)).share, si.share);
  EXPECT_EQ(share_from(to_frame(sj)).label, ShareLabel::kSecond);
  AddCiphertext ac = add_enc(toy.params, k.h, 42, rng);
  AddCiphertext ac2 = add_ct_from(decode(encode(to_frame(ac))));
  EXPECT_EQ(ac2.ac1, ac.ac1);
  EXPECT_EQ(ac2.ac2, ac.ac2);
}

TEST(WireRoundTrip, ReaderRejectsForeignTag) {
  Frame f{tags::kJointKey, {5}};
  EXPECT_THROW(params_from(f), UnknownTag);
  EXPECT_THROW(add_ct_from(f), UnknownTag);
}

TEST(WireDecodeAll, ConcatenatedFrames) {
  Bytes a = encode(Frame{tags::kJointKey, {5}});
  Bytes b = encode(Frame{tags::kRecoverReq, {7}});
  Bytes both = a;
  both.insert(both.end(), b.begin(), b.end());
  auto frames = decode_all(both);
  ASSERT_EQ(frames.size(), 2u);
  EXPECT_EQ(frames[0].fields[0], 5);
  EXPECT_EQ(frames[1].fields[0], 7);
}

TEST(Store, SaveLoadRoundTrip) {
  Toy toy;
  SeededRandom rng(43);
  auto [sigk, verk] = split_strong_key(toy.strong, toy.params, rng);
  KgcStore store;
  std::map<BigNat, BigNat> expect_r;
  for (int i = 0; i < 5; ++i) {
    Registration reg = register_begin(toy.params, rng);
    Certificate cert = kgc_issue(toy.params, sigk, store, reg.request, rng);
    expect_r[cert.id] = 1;  // presence marker
  }
  std::string path = ::testing::TempDir() + "/kgc_store.bin";
  save_store(store, path);
  KgcStore loaded = load_store(path);
  ASSERT_EQ(loaded.records().size(), store.records().size());
  for (const auto& [id, rec] : store.records()) {
    const KgcRecord& got = loaded.find(id);
    EXPECT_EQ(got.cert.cert1, rec.cert.cert1);
    EXPECT_EQ(got.cert.cert2, rec.cert.cert2);
    EXPECT_EQ(got.reg.reg, rec.reg.reg);
  }
  std::remove(path.c_str());
}

TEST(Store, MissingFileThrowsIoError) {
  EXPECT_THROW(load_store("/nonexistent/kgc_store.bin"), IoError);
}

}  // namespace
}  // namespace restpail
