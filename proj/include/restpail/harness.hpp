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
#ifndef RESTPAIL_HARNESS_HPP_
#define RESTPAIL_HARNESS_HPP_

#include <map>
#include <string>
#include <vector>

#include "restpail/protocols.hpp"
#include "restpail/wire.hpp"

namespace restpail {

// In-process protocol runner: executes role steps in order, recording every
// message both decoded and as raw wire bytes. Deterministic under a fixed
// seed, so two runs with the same seed give byte-identical transcripts.

struct TranscriptMessage {
  std::string step;  // e.g. "Uj->Ui"
  Frame frame;
  Bytes raw;
};

struct Transcript {
  std::string protocol;
  std::vector<TranscriptMessage> messages;
  std::map<std::string, BigNat> outputs;

  void record(const std::string& step, const Frame& frame) {
    messages.push_back({step, frame, encode(frame)});
  }
};

// Shared fixture for two users and a KGC over one parameter set.
struct Session {
  PublicParams params;
  StrongKey strong;
  UserKeyPair user_i;
  UserKeyPair user_j;
  JointKey joint;
  PartialStrongKey share_i;  // split used by ACCS / partial decryption
  PartialStrongKey share_j;
  PartialStrongKey sigk;  // KGC signing split
  PartialStrongKey verk;
};

inline Session make_session(const PublicParams& params,
                            const StrongKey& strong, std::uint64_t seed) {
  SeededRandom rng(seed);
  Session s;
  s.params = params;
  s.strong = strong;
  s.user_i = gen_user_key(params, rng);
  s.user_j = gen_user_key(params, rng);
  s.joint = derive_joint_key(s.user_i, s.user_j.h, params);
  auto [si, sj] = split_strong_key(strong, params, rng);
  s.share_i = si;
  s.share_j = sj;
  auto [sg, vk] = split_strong_key(strong, params, rng);
  s.sigk = sg;
  s.verk = vk;
  return s;
}

inline Session make_session(unsigned bits, std::uint64_t seed) {
  SeededRandom rng(seed);
  auto [params, strong] = gen_params(bits, rng);
  return make_session(params, strong, seed + 1);
}

namespace detail {

template <typename F>
auto at_step(const char* step, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(std::string(step) + ": " + e.what());
  }
}

}  // namespace detail

inline Transcript run_multomix(const Session& s, const BigNat& m,
                               std::uint64_t seed) {
  SeededRandom rng(seed);
  Transcript t;
  t.protocol = "multomix";
  MulCiphertext mc = detail::at_step("mul_enc", [&] {
    return mul_enc(s.params, s.joint.h_joint, m, rng);
  });
  t.record("Ui->Uj", to_frame(mc));
  MixedCiphertext mixed = detail::at_step("mul_to_mix", [&] {
    return mul_to_mix(s.params, s.joint, mc, rng);
  });
  t.record("Uj:out", to_frame(mixed));
  t.outputs["blinded_payload"] =
      strong_dec_component(s.params, s.strong.lambda, mixed.c1);
  return t;
}

inline Transcript run_mixtoadd(const Session& s, const BigNat& m,
                               std::uint64_t seed) {
  SeededRandom rng(seed);
  Transcript t;
  t.protocol = "mixtoadd";
  MulCiphertext mc = mul_enc(s.params, s.joint.h_joint, m, rng);
  MixedCiphertext mixed = mul_to_mix(s.params, s.joint, mc, rng);
  MixToAddMsg1 m1 = detail::at_step("step1", [&] {
    return mix_to_add_step1(s.params, s.user_j.theta, mixed, rng);
  });
  t.record("Uj->Ui", to_frame(m1));
  MixToAddMsg2 m2 = detail::at_step("step2", [&] {
    return mix_to_add_step2(s.params, s.user_i.theta, m1);
  });
  t.record("Ui->Uj", to_frame(m2));
  ConvertedAddCiphertext out = detail::at_step("step3", [&] {
    return mix_to_add_step3(s.params, s.user_j.theta, m2);
  });
  t.outputs["plaintext"] =
      strong_dec_component(s.params, s.strong.lambda, out.c1);
  return t;
}

inline Transcript run_accs(const Session& s, const BigNat& secret,
                           const BigNat& b, const BigNat& c,
                           std::uint64_t seed) {
  SeededRandom rng(seed);
  Transcript t;
  t.protocol = "accs";
  CommonSecretCiphertext ct = detail::at_step("encrypt_secret", [&] {
    return accs_encrypt_secret(s.params, s.joint, secret, rng);
  });
  t.record("setup", to_frame(ct.mixed));
  auto [msg_a, state] = detail::at_step("step1", [&] {
    return accs_step1(s.params, s.joint, s.user_j.theta, s.share_j, b, ct,
                      rng);
  });
  t.record("Uj->Ui", to_frame(msg_a));
  AccsMsgB msg_b = detail::at_step("step2", [&] {
    return accs_step2(s.params, s.user_i.theta, s.share_i, c, msg_a);
  });
  t.record("Ui->Uj", to_frame(msg_b));
  t.outputs["result"] = detail::at_step("step3", [&] {
    return accs_step3(s.params, state, msg_b);
  });
  return t;
}

inline Transcript run_register(const Session& s, KgcStore& store,
                               std::uint64_t seed) {
  SeededRandom rng(seed);
  Transcript t;
  t.protocol = "register";
  Registration reg = detail::at_step("register_begin", [&] {
    return register_begin(s.params, rng);
  });
  t.record("Ui->KGC", to_frame(reg.request));
  Certificate cert = detail::at_step("kgc_issue", [&] {
    return kgc_issue(s.params, s.sigk, store, reg.request, rng);
  });
  t.record("KGC->Ui", to_frame(cert));
  t.outputs["id"] = cert.id;
  t.outputs["theta"] = reg.secrets.theta;
  t.outputs["theta_r"] = reg.secrets.theta_r;
  t.outputs["h"] = reg.key.h;
  return t;
}

inline Transcript run_auth(const Session& s, KgcStore& store,
                           std::uint64_t seed) {
  Transcript reg = run_register(s, store, seed);
  Transcript t;
  t.protocol = "auth";
  t.messages = reg.messages;
  t.outputs = reg.outputs;
  const Certificate cert = store.find(reg.outputs.at("id")).cert;
  t.record("Ui->Uj", Frame{tags::kAuthResp,
                           {reg.outputs.at("h"), cert.id, cert.cert1,
                            cert.cert2}});
  bool ok = detail::at_step("auth_verify", [&] {
    return auth_verify(s.params, s.verk, reg.outputs.at("h"), cert.id, cert);
  });
  t.outputs["accept"] = BigNat(ok ? 1 : 0);
  return t;
}

inline Transcript run_recover(const Session& s, KgcStore& store,
                              std::uint64_t seed) {
  Transcript reg = run_register(s, store, seed);
  Transcript t;
  t.protocol = "recover";
  t.messages = reg.messages;
  BigNat id = reg.outputs.at("id");
  t.record("Ui->KGC", Frame{tags::kRecoverReq, {id}});
  BigNat r = detail::at_step("kgc_recover", [&] {
    return kgc_recover(s.params, s.strong, store, id);
  });
  t.record("KGC->Ui", Frame{tags::kRecoverResp, {r}});
  t.outputs["theta"] = detail::at_step("user_recover", [&] {
    return user_recover(s.params, reg.outputs.at("theta_r"),
                        reg.outputs.at("h"), r);
  });
  return t;
}

// Dispatcher used by the CLI: runs a named protocol with inputs drawn from
// the seed.
inline Transcript harness_run(const std::string& protocol, const Session& s,
                              std::uint64_t seed) {
  SeededRandom rng(seed ^ 0x5eed);
  if (protocol == "multomix") {
    return run_multomix(s, sample_range(0, s.params.N - 1, rng), seed);
  }
  if (protocol == "mixtoadd") {
    return run_mixtoadd(s, sample_range(0, s.params.N - 1, rng), seed);
  }
  if (protocol == "accs") {
    BigNat secret = sample_range(0, s.params.N - 1, rng);
    BigNat b = sample_range(1, s.params.eighth_N(), rng);
    BigNat c = sample_range(1, s.params.eighth_N(), rng);
    return run_accs(s, secret, b, c, seed);
  }
  KgcStore store;
  if (protocol == "register") return run_register(s, store, seed);
  if (protocol == "auth") return run_auth(s, store, seed);
  if (protocol == "recover") return run_recover(s, store, seed);
  throw OutOfRange("harness_run: unknown protocol " + protocol);
}

}  // namespace restpail

#endif  // RESTPAIL_HARNESS_HPP_
