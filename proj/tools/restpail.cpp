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
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "restpail/restpail.hpp"

namespace {

using namespace restpail;

// Exit codes: 0 ok, 1 usage, 2 cryptographic failure, 3 I/O error.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCryptoFailure = 2;
constexpr int kIoFailure = 3;

std::string g_format = "hex";

void emit_frame(const Frame& frame) {
  if (g_format == "hex") {
    std::cout << to_hex(encode(frame)) << "\n";
    return;
  }
  std::cout << frame.tag << ":";
  for (const BigNat& f : frame.fields) std::cout << " " << f.get_str();
  std::cout << "\n";
}

void append_frame(Bytes& out, const Frame& frame) {
  Bytes b = encode(frame);
  out.insert(out.end(), b.begin(), b.end());
}

std::vector<Frame> load_frames(const std::string& path) {
  return decode_all(read_file(path));
}

Frame find_frame(const std::vector<Frame>& frames, const char* tag) {
  for (const Frame& f : frames) {
    if (f.tag == tag) return f;
  }
  throw IoError(std::string("no ") + tag + " frame in input file");
}

PublicParams load_params(const std::string& path) {
  return params_from(find_frame(load_frames(path), tags::kParams));
}

StrongKey load_strong(const std::string& path) {
  return strong_key_from(find_frame(load_frames(path), tags::kStrongKey));
}

std::unique_ptr<RandomSource> make_rng(std::optional<std::uint64_t> seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

std::string store_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  const char* env = std::getenv("RESTPAIL_STORE");
  if (env != nullptr && *env != '\0') return env;
  throw IoError("no store path: use --store or RESTPAIL_STORE");
}

KgcStore load_store_or_empty(const std::string& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) return KgcStore{};
  probe.close();
  return load_store(path);
}

void print_transcript(const Transcript& t) {
  for (const TranscriptMessage& m : t.messages) {
    if (g_format == "hex") {
      std::cout << m.step << " " << to_hex(m.raw) << "\n";
    } else {
      std::cout << m.step << " ";
      emit_frame(m.frame);
    }
  }
  for (const auto& [name, value] : t.outputs) {
    std::cout << name << " = " << value.get_str() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restrained-Paillier cryptosystem tool"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed and --format may follow the subcommand
  app.add_option("--format", g_format, "Output format")
      ->check(CLI::IsMember({"hex", "table"}));
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "Deterministic RNG seed");

  // keygen
  unsigned bits = 512;
  std::string out_file, params_file, store_flag;
  auto* keygen = app.add_subcommand("keygen", "Generate system parameters");
  keygen->add_option("--bits", bits, "Modulus size |N|")->required();
  keygen->add_option("--out", out_file, "Output file (PPAR + SKEY frames)");

  // user-keygen
  auto* ukeygen = app.add_subcommand("user-keygen", "Generate a weak keypair");
  ukeygen->add_option("--params", params_file)->required();
  ukeygen->add_option("--out", out_file);

  // split-key
  std::string out1_file, out2_file;
  auto* split = app.add_subcommand("split-key", "CRT-split the strong key");
  split->add_option("--params", params_file, "File with PPAR + SKEY")
      ->required();
  split->add_option("--out1", out1_file);
  split->add_option("--out2", out2_file);

  // encrypt
  std::string mode = "add", m_str, pub_file, ct_file;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a message");
  encrypt->add_option("--mode", mode)->check(CLI::IsMember({"add", "mul"}));
  encrypt->add_option("--m", m_str, "Message (decimal)")->required();
  encrypt->add_option("--params", params_file)->required();
  encrypt->add_option("--pub", pub_file, "File with a UKEY frame")
      ->required();
  encrypt->add_option("--out", out_file);

  // decrypt
  std::string key_kind = "weak", key_file, key_file2;
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext");
  decrypt->add_option("--key", key_kind)
      ->check(CLI::IsMember({"weak", "strong", "partial"}));
  decrypt->add_option("--params", params_file)->required();
  decrypt->add_option("--keyfile", key_file)->required();
  decrypt->add_option("--keyfile2", key_file2,
                      "Second share for --key partial");
  decrypt->add_option("--ct", ct_file)->required();

  // convert
  std::string conv_kind;
  auto* convert = app.add_subcommand("convert", "Run a conversion protocol");
  convert->add_option("kind", conv_kind)
      ->check(CLI::IsMember({"multomix", "mixtoadd"}))
      ->required();
  convert->add_option("--params", params_file, "File with PPAR + SKEY")
      ->required();
  convert->add_option("--m", m_str, "Message (decimal)");

  // run
  std::string protocol, cert_file, verk_file, out_cert, out_verk;
  auto* run = app.add_subcommand("run", "Run a protocol end to end");
  run->add_option("protocol", protocol)
      ->check(CLI::IsMember({"accs", "register", "auth", "recover"}))
      ->required();
  run->add_option("--params", params_file, "File with PPAR + SKEY")
      ->required();
  run->add_option("--store", store_flag, "KGC store file");
  run->add_option("--cert", cert_file, "AUTH frame to verify (auth only)");
  run->add_option("--verk", verk_file, "PSHR frame (auth only)");
  run->add_option("--out-cert", out_cert, "Write issued AUTH frame here");
  run->add_option("--out-verk", out_verk, "Write verification share here");

  // bench
  std::vector<unsigned> sizes{512};
  std::uint64_t iters = 1000;
  std::string csv_file;
  auto* bench = app.add_subcommand("bench", "Cost-accounting harness");
  bench->add_option("--sizes", sizes, "|N| list")->delimiter(',');
  bench->add_option("--iters", iters);
  bench->add_option("--csv", csv_file, "Also write CSV here");

  // store
  std::string store_cmd, show_id;
  auto* store_sub = app.add_subcommand("store", "Inspect the KGC store");
  store_sub->add_option("cmd", store_cmd)
      ->check(CLI::IsMember({"list", "show"}))
      ->required();
  store_sub->add_option("id", show_id, "Record id (decimal) for show");
  store_sub->add_option("--store", store_flag, "KGC store file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*keygen) {
      auto rng = make_rng(seed);
      auto [params, strong] = gen_params(bits, *rng);
      Bytes out;
      append_frame(out, to_frame(params));
      append_frame(out, to_frame(strong));
      if (!out_file.empty()) write_file(out_file, out);
      emit_frame(to_frame(params));
      emit_frame(to_frame(strong));
    } else if (*ukeygen) {
      auto rng = make_rng(seed);
      PublicParams params = load_params(params_file);
      UserKeyPair key = gen_user_key(params, *rng);
      if (!out_file.empty()) write_file(out_file, encode(to_frame(key)));
      emit_frame(to_frame(key));
    } else if (*split) {
      auto rng = make_rng(seed);
      PublicParams params = load_params(params_file);
      StrongKey strong = load_strong(params_file);
      auto [si, sj] = split_strong_key(strong, params, *rng);
      if (!out1_file.empty()) write_file(out1_file, encode(to_frame(si)));
      if (!out2_file.empty()) write_file(out2_file, encode(to_frame(sj)));
      emit_frame(to_frame(si));
      emit_frame(to_frame(sj));
    } else if (*encrypt) {
      auto rng = make_rng(seed);
      PublicParams params = load_params(params_file);
      UserKeyPair pub =
          user_key_from(find_frame(load_frames(pub_file), tags::kUserKey));
      BigNat m(m_str);
      Frame frame = mode == "add"
                        ? to_frame(add_enc(params, pub.h, m, *rng))
                        : to_frame(mul_enc(params, pub.h, m, *rng));
      if (!out_file.empty()) write_file(out_file, encode(frame));
      emit_frame(frame);
    } else if (*decrypt) {
      PublicParams params = load_params(params_file);
      std::vector<Frame> ct_frames = load_frames(ct_file);
      BigNat m;
      if (key_kind == "weak" || key_kind == "strong") {
        Frame cf = ct_frames.at(0);
        if (key_kind == "weak") {
          UserKeyPair key = user_key_from(
              find_frame(load_frames(key_file), tags::kUserKey));
          if (cf.tag == tags::kMulCt) {
            m = mul_dec(params, key.theta, mul_ct_from(cf));
          } else {
            m = add_dec_weak(params, key.theta, add_ct_from(cf));
          }
        } else {
          StrongKey strong = load_strong(key_file);
          BigNat c1 = cf.tag == tags::kAddCt || cf.tag == tags::kMixCt ||
                              cf.tag == tags::kConvertedAdd
                          ? cf.fields[0]
                          : throw IoError("not a strong-decryptable frame");
          m = strong_dec_component(params, strong.lambda, c1);
        }
      } else {
        if (key_file2.empty()) {
          throw CLI::ValidationError("--keyfile2 required for partial");
        }
        PartialStrongKey si =
            share_from(find_frame(load_frames(key_file), tags::kShare));
        PartialStrongKey sj =
            share_from(find_frame(load_frames(key_file2), tags::kShare));
        AddCiphertext ct = add_ct_from(ct_frames.at(0));
        PartialDecryption dc1 = add_dec_partial_1(params, si, ct);
        m = add_dec_partial_2(params, sj, ct, dc1);
      }
      std::cout << m.get_str() << "\n";
    } else if (*convert) {
      PublicParams params = load_params(params_file);
      StrongKey strong = load_strong(params_file);
      Session session = make_session(params, strong, seed.value_or(0));
      BigNat m = m_str.empty() ? BigNat(42) % params.N : BigNat(m_str);
      Transcript t = conv_kind == "multomix"
                         ? run_multomix(session, m, seed.value_or(0) + 1)
                         : run_mixtoadd(session, m, seed.value_or(0) + 1);
      print_transcript(t);
    } else if (*run) {
      PublicParams params = load_params(params_file);
      if (!cert_file.empty()) {
        // Verify a stored certificate instead of running the full flow.
        Frame af = find_frame(load_frames(cert_file), tags::kAuthResp);
        PartialStrongKey verk =
            share_from(find_frame(load_frames(verk_file), tags::kShare));
        Certificate cert{af.fields[1], af.fields[2], af.fields[3]};
        bool ok = auth_verify(params, verk, af.fields[0], cert.id, cert);
        std::cout << (ok ? "accept" : "reject") << "\n";
        return ok ? kOk : kCryptoFailure;
      }
      StrongKey strong = load_strong(params_file);
      Session session = make_session(params, strong, seed.value_or(0));
      if (protocol == "accs") {
        print_transcript(harness_run("accs", session, seed.value_or(0) + 1));
      } else {
        std::string path = store_path(store_flag);
        KgcStore store = load_store_or_empty(path);
        Transcript t;
        if (protocol == "register") {
          t = run_register(session, store, seed.value_or(0) + 1);
        } else if (protocol == "auth") {
          t = run_auth(session, store, seed.value_or(0) + 1);
        } else {
          t = run_recover(session, store, seed.value_or(0) + 1);
        }
        save_store(store, path);
        if (!out_cert.empty() && t.outputs.count("id") != 0) {
          const Certificate& cert = store.find(t.outputs.at("id")).cert;
          write_file(out_cert,
                     encode(Frame{tags::kAuthResp,
                                  {t.outputs.at("h"), cert.id, cert.cert1,
                                   cert.cert2}}));
        }
        if (!out_verk.empty()) {
          write_file(out_verk, encode(to_frame(session.verk)));
        }
        print_transcript(t);
        if (protocol == "auth" && t.outputs.at("accept") != 1) {
          return kCryptoFailure;
        }
      }
    } else if (*bench) {
      auto rng = make_rng(seed);
      std::vector<BenchRow> rows = bench_run(sizes, iters, *rng);
      if (!csv_file.empty()) {
        std::ofstream out(csv_file);
        if (!out) throw IoError("cannot write " + csv_file);
        write_csv(rows, out);
      }
      write_csv(rows, std::cout);
    } else if (*store_sub) {
      KgcStore store = load_store(store_path(store_flag));
      if (store_cmd == "list") {
        for (const auto& [id, rec] : store.records()) {
          std::cout << id.get_str() << "\n";
        }
      } else {
        if (show_id.empty()) {
          throw CLI::ValidationError("store show needs an id");
        }
        emit_frame(to_frame(store.find(BigNat(show_id))));
      }
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const WireError& e) {
    std::cerr << "wire error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const Error& e) {
    std::cerr << "cryptographic failure: " << e.what() << "\n";
    return kCryptoFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
