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
#ifndef RESTPAIL_WIRE_HPP_
#define RESTPAIL_WIRE_HPP_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "restpail/bignat.hpp"
#include "restpail/convert.hpp"
#include "restpail/errors.hpp"
#include "restpail/protocols.hpp"

namespace restpail {

// Canonical frame: magic 0x52 0x50, version 0x01, 4-byte ASCII tag, then a
// fixed-per-tag sequence of (4-byte big-endian length, big-endian magnitude)
// fields. Integers are minimal length; zero is the empty field.

inline constexpr std::uint8_t kMagic0 = 0x52;
inline constexpr std::uint8_t kMagic1 = 0x50;
inline constexpr std::uint8_t kVersion = 0x01;

namespace tags {
inline constexpr const char* kParams = "PPAR";
inline constexpr const char* kStrongKey = "SKEY";
inline constexpr const char* kShare = "PSHR";
inline constexpr const char* kUserKey = "UKEY";
inline constexpr const char* kUserSecrets = "USEC";
inline constexpr const char* kJointKey = "JKEY";
inline constexpr const char* kAddCt = "ADDC";
inline constexpr const char* kMulCt = "MULC";
inline constexpr const char* kMixCt = "MIXC";
inline constexpr const char* kPartialDec = "PDEC";
inline constexpr const char* kMix1 = "MIX1";
inline constexpr const char* kMix2 = "MIX2";
inline constexpr const char* kConvertedAdd = "CADD";
inline constexpr const char* kAccsA = "ACCA";
inline constexpr const char* kAccsB = "ACCB";
inline constexpr const char* kRegistration = "REG ";
inline constexpr const char* kCert = "CERT";
inline constexpr const char* kAuthResp = "AUTH";  // {h, ID, Cert}
inline constexpr const char* kRecoverReq = "RECQ";
inline constexpr const char* kRecoverResp = "RECR";
inline constexpr const char* kKgcRecord = "KREC";
}  // namespace tags

struct Frame {
  std::string tag;
  std::vector<BigNat> fields;

  bool operator==(const Frame&) const = default;
};

inline int frame_arity(const std::string& tag) {
  static const std::array<std::pair<const char*, int>, 21> kTable{{
      {tags::kAuthResp, 4},
      {tags::kParams, 3},       {tags::kStrongKey, 5},
      {tags::kShare, 2},        {tags::kUserKey, 2},
      {tags::kUserSecrets, 3},  {tags::kJointKey, 1},
      {tags::kAddCt, 2},        {tags::kMulCt, 2},
      {tags::kMixCt, 2},        {tags::kPartialDec, 2},
      {tags::kMix1, 3},         {tags::kMix2, 2},
      {tags::kConvertedAdd, 1}, {tags::kAccsA, 4},
      {tags::kAccsB, 3},        {tags::kRegistration, 1},
      {tags::kCert, 3},         {tags::kRecoverReq, 1},
      {tags::kRecoverResp, 1},  {tags::kKgcRecord, 4},
  }};
  for (const auto& [t, n] : kTable) {
    if (tag == t) return n;
  }
  return -1;
}

inline Bytes encode(const Frame& frame) {
  if (frame.tag.size() != 4 ||
      frame_arity(frame.tag) != static_cast<int>(frame.fields.size())) {
    throw UnknownTag("encode: bad tag or field count");
  }
  Bytes out{kMagic0, kMagic1, kVersion};
  out.insert(out.end(), frame.tag.begin(), frame.tag.end());
  for (const BigNat& f : frame.fields) {
    Bytes mag = to_be_bytes(f);
    std::uint32_t len = static_cast<std::uint32_t>(mag.size());
    out.push_back(static_cast<std::uint8_t>(len >> 24));
    out.push_back(static_cast<std::uint8_t>(len >> 16));
    out.push_back(static_cast<std::uint8_t>(len >> 8));
    out.push_back(static_cast<std::uint8_t>(len));
    out.insert(out.end(), mag.begin(), mag.end());
  }
  return out;
}

// Strict decode of one frame starting at `pos`; advances `pos`. Trailing
// bytes are the caller's concern (files may hold several frames).
inline Frame decode_at(const Bytes& data, std::size_t& pos) {
  if (data.size() - pos < 2) throw Truncated("decode: magic");
  if (data[pos] != kMagic0 || data[pos + 1] != kMagic1) {
    throw BadMagic("decode: magic");
  }
  pos += 2;
  if (data.size() - pos < 1) throw Truncated("decode: version");
  if (data[pos] != kVersion) throw BadVersion("decode: version");
  pos += 1;
  if (data.size() - pos < 4) throw Truncated("decode: tag");
  Frame frame;
  frame.tag.assign(data.begin() + pos, data.begin() + pos + 4);
  pos += 4;
  int arity = frame_arity(frame.tag);
  if (arity < 0) throw UnknownTag("decode: tag " + frame.tag);
  frame.fields.reserve(arity);
  for (int i = 0; i < arity; ++i) {
    if (data.size() - pos < 4) throw Truncated("decode: field length");
    std::uint32_t len = static_cast<std::uint32_t>(data[pos]) << 24 |
                        static_cast<std::uint32_t>(data[pos + 1]) << 16 |
                        static_cast<std::uint32_t>(data[pos + 2]) << 8 |
                        static_cast<std::uint32_t>(data[pos + 3]);
    pos += 4;
    if (data.size() - pos < len) throw Truncated("decode: field bytes");
    if (len > 0 && data[pos] == 0) {
      throw Truncated("decode: non-minimal field encoding");
    }
    frame.fields.push_back(from_be_bytes(data.data() + pos, len));
    pos += len;
  }
  return frame;
}

inline Frame decode(const Bytes& data) {
  std::size_t pos = 0;
  Frame frame = decode_at(data, pos);
  if (pos != data.size()) throw Truncated("decode: trailing bytes");
  return frame;
}

inline std::vector<Frame> decode_all(const Bytes& data) {
  std::vector<Frame> frames;
  std::size_t pos = 0;
  while (pos < data.size()) frames.push_back(decode_at(data, pos));
  return frames;
}

// --- typed frame builders -------------------------------------------------

inline Frame to_frame(const PublicParams& p) {
  return Frame{tags::kParams, {p.N, p.g, BigNat(p.bits)}};
}
inline Frame to_frame(const StrongKey& k) {
  return Frame{tags::kStrongKey,
               {k.lambda, k.p.p, k.p.p_half, k.q.p, k.q.p_half}};
}
inline Frame to_frame(const PartialStrongKey& k) {
  return Frame{tags::kShare,
               {k.share, BigNat(static_cast<int>(k.label))}};
}
inline Frame to_frame(const UserKeyPair& k) {
  return Frame{tags::kUserKey, {k.theta, k.h}};
}
inline Frame to_frame(const UserSecrets& s, const BigNat& h) {
  return Frame{tags::kUserSecrets, {s.theta, s.theta_r, h}};
}
inline Frame to_frame(const JointKey& k) {
  return Frame{tags::kJointKey, {k.h_joint}};
}
inline Frame to_frame(const AddCiphertext& c) {
  return Frame{tags::kAddCt, {c.ac1, c.ac2}};
}
inline Frame to_frame(const MulCiphertext& c) {
  return Frame{tags::kMulCt, {c.mc1, c.mc2}};
}
inline Frame to_frame(const MixedCiphertext& c) {
  return Frame{tags::kMixCt, {c.c1, c.c2}};
}
inline Frame to_frame(const PartialDecryption& d) {
  return Frame{tags::kPartialDec,
               {d.dc, BigNat(static_cast<int>(d.label))}};
}
inline Frame to_frame(const MixToAddMsg1& m) {
  return Frame{tags::kMix1, {m.c1, m.t1, m.t2}};
}
inline Frame to_frame(const MixToAddMsg2& m) {
  return Frame{tags::kMix2, {m.c1_prime, m.t2_cap}};
}
inline Frame to_frame(const ConvertedAddCiphertext& c) {
  return Frame{tags::kConvertedAdd, {c.c1}};
}
inline Frame to_frame(const AccsMsgA& m) {
  return Frame{tags::kAccsA,
               {m.t1, m.d_times_a_inv, m.ct_bds.c1, m.ct_bds.c2}};
}
inline Frame to_frame(const AccsMsgB& m) {
  return Frame{tags::kAccsB, {m.result.c1, m.result.c2, m.result_partial}};
}
inline Frame to_frame(const RegistrationRequest& r) {
  return Frame{tags::kRegistration, {r.reg}};
}
inline Frame to_frame(const Certificate& c) {
  return Frame{tags::kCert, {c.id, c.cert1, c.cert2}};
}
inline Frame to_frame(const KgcRecord& r) {
  return Frame{tags::kKgcRecord, {r.id, r.cert.cert1, r.cert.cert2,
                                  r.reg.reg}};
}

// --- typed frame readers --------------------------------------------------

namespace detail {
inline void expect_tag(const Frame& f, const char* tag) {
  if (f.tag != tag) throw UnknownTag("expected " + std::string(tag) +
                                     ", got " + f.tag);
}
inline ShareLabel label_of(const BigNat& v) {
  if (v != 0 && v != 1) throw UnknownTag("bad share label");
  return v == 0 ? ShareLabel::kFirst : ShareLabel::kSecond;
}
}  // namespace detail

inline PublicParams params_from(const Frame& f) {
  detail::expect_tag(f, tags::kParams);
  PublicParams p;
  p.N = f.fields[0];
  p.N_sq = p.N * p.N;
  p.g = f.fields[1];
  p.bits = static_cast<unsigned>(f.fields[2].get_ui());
  return p;
}
inline StrongKey strong_key_from(const Frame& f) {
  detail::expect_tag(f, tags::kStrongKey);
  return StrongKey{f.fields[0], SafePrime{f.fields[1], f.fields[2]},
                   SafePrime{f.fields[3], f.fields[4]}};
}
inline PartialStrongKey share_from(const Frame& f) {
  detail::expect_tag(f, tags::kShare);
  return PartialStrongKey{f.fields[0], detail::label_of(f.fields[1])};
}
inline UserKeyPair user_key_from(const Frame& f) {
  detail::expect_tag(f, tags::kUserKey);
  return UserKeyPair{f.fields[0], f.fields[1]};
}
inline AddCiphertext add_ct_from(const Frame& f) {
  detail::expect_tag(f, tags::kAddCt);
  return AddCiphertext{f.fields[0], f.fields[1]};
}
inline MulCiphertext mul_ct_from(const Frame& f) {
  detail::expect_tag(f, tags::kMulCt);
  return MulCiphertext{f.fields[0], f.fields[1]};
}
inline MixedCiphertext mix_ct_from(const Frame& f) {
  detail::expect_tag(f, tags::kMixCt);
  return MixedCiphertext{f.fields[0], f.fields[1]};
}
inline PartialDecryption partial_dec_from(const Frame& f) {
  detail::expect_tag(f, tags::kPartialDec);
  return PartialDecryption{f.fields[0], detail::label_of(f.fields[1])};
}
inline Certificate cert_from(const Frame& f) {
  detail::expect_tag(f, tags::kCert);
  return Certificate{f.fields[0], f.fields[1], f.fields[2]};
}
inline RegistrationRequest registration_from(const Frame& f) {
  detail::expect_tag(f, tags::kRegistration);
  return RegistrationRequest{f.fields[0]};
}
inline KgcRecord kgc_record_from(const Frame& f) {
  detail::expect_tag(f, tags::kKgcRecord);
  return KgcRecord{f.fields[0],
                   Certificate{f.fields[0], f.fields[1], f.fields[2]},
                   RegistrationRequest{f.fields[3]}};
}

}  // namespace restpail

#endif  // RESTPAIL_WIRE_HPP_
