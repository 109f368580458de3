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

// End-to-end acceptance checks. Each check prints one pass/fail line;
// the process exits nonzero if any check fails. Runs are seeded, so a
// failure here reproduces deterministically.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "restpail/restpail.hpp"

namespace restpail {
namespace {

struct Check {
  std::string name;
  std::function<void()> run;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// One 512-bit parameter set shared by the checks that need full-size keys.
struct Context {
  PublicParams params;
  StrongKey strong;
  Context() {
    SeededRandom rng(0x5e7);
    auto [p, s] = gen_params(512, rng);
    params = p;
    strong = s;
  }
};

Context& ctx() {
  static Context c;
  return c;
}

// Toy group for the worked instances: N = 23 * 59.
struct ToyContext {
  PublicParams params;
  StrongKey strong;
  ToyContext() {
    SeededRandom rng(1);
    auto [p, s] =
        params_from_primes(SafePrime{23, 11}, SafePrime{59, 29}, rng);
    params = p;
    strong = s;
  }
};

void check_decryption_paths() {
  auto start = std::chrono::steady_clock::now();
  SeededRandom rng(101);
  const PublicParams& params = ctx().params;
  UserKeyPair key = gen_user_key(params, rng);
  auto [si, sj] = split_strong_key(ctx().strong, params, rng);
  for (int i = 0; i < 200; ++i) {
    BigNat m = sample_range(0, params.N - 1, rng);
    AddCiphertext ct = add_enc(params, key.h, m, rng);
    require(add_dec_weak(params, key.theta, ct) == m, "weak path mismatch");
    require(add_dec_strong(params, ctx().strong.lambda, ct) == m,
            "strong path mismatch");
    PartialDecryption dc1 = add_dec_partial_1(params, si, ct);
    require(add_dec_partial_2(params, sj, ct, dc1) == m,
            "split path mismatch");
  }
  require(seconds_since(start) < 60.0, "exceeded 60 s budget");
}

void check_homomorphisms() {
  SeededRandom rng(102);
  const PublicParams& params = ctx().params;
  UserKeyPair key = gen_user_key(params, rng);
  for (int i = 0; i < 200; ++i) {
    BigNat m1 = sample_range(0, params.N - 1, rng);
    BigNat m2 = sample_range(0, params.N - 1, rng);
    AddCiphertext a1 = add_enc(params, key.h, m1, rng);
    AddCiphertext a2 = add_enc(params, key.h, m2, rng);
    AddCiphertext sum = add_ct_add(params, a1, a2);
    require(add_dec_weak(params, key.theta, sum) == (m1 + m2) % params.N,
            "additive sum mismatch");
    BigNat k = sample_range(0, params.N - 1, rng);
    AddCiphertext scaled = add_ct_scalar(params, a1, k);
    require(add_dec_weak(params, key.theta, scaled) == m1 * k % params.N,
            "additive scalar mismatch");
    MulCiphertext b1 = mul_enc(params, key.h, m1, rng);
    MulCiphertext b2 = mul_enc(params, key.h, m2, rng);
    MulCiphertext prod = mul_ct_mul(params, b1, b2);
    require(mul_dec(params, key.theta, prod) == m1 * m2 % params.N,
            "multiplicative product mismatch");
  }
}

void check_restraint() {
  SeededRandom rng(103);
  const PublicParams& params = ctx().params;
  UserKeyPair ki = gen_user_key(params, rng);
  UserKeyPair kj = gen_user_key(params, rng);
  JointKey joint = derive_joint_key(ki, kj.h, params);
  for (int i = 0; i < 100; ++i) {
    BigNat m = sample_range(1, params.N - 1, rng);
    BigNat r_m = sample_range(1, params.quarter_N(), rng);
    MulCiphertext mc = mul_enc_with_r(params, joint.h_joint, m, r_m);
    MixedCiphertext mixed = mul_to_mix(params, joint, mc, rng);
    BigNat opened = strong_dec_component(params, ctx().strong.lambda,
                                         mixed.c1);
    BigNat blind = pow_mod(joint.h_joint, r_m, params.N);
    require(opened == m * blind % params.N, "payload is not m * h^r");
    require(opened == mc.mc1, "payload differs from MulC component");
    if (blind != 1) {
      require(opened != m, "strong key opened a restrained ciphertext");
    }
  }
}

void mixtoadd_sweep(const PublicParams& params, const StrongKey& strong,
                    SeededRandom& rng) {
  UserKeyPair ki = gen_user_key(params, rng);
  UserKeyPair kj = gen_user_key(params, rng);
  JointKey joint = derive_joint_key(ki, kj.h, params);
  auto [si, sj] = split_strong_key(strong, params, rng);
  for (int i = 0; i < 100; ++i) {
    BigNat m = sample_range(0, params.N - 1, rng);
    MulCiphertext mc = mul_enc(params, joint.h_joint, m, rng);
    MixedCiphertext mixed = mul_to_mix(params, joint, mc, rng);
    MixToAddMsg1 m1 = mix_to_add_step1(params, kj.theta, mixed, rng);
    MixToAddMsg2 m2 = mix_to_add_step2(params, ki.theta, m1);
    ConvertedAddCiphertext out = mix_to_add_step3(params, kj.theta, m2);
    require(strong_dec_component(params, strong.lambda, out.c1) == m,
            "strong decryption after conversion mismatch");
    PartialDecryption dc1 = partial_dec_component(params, si, out.c1);
    require(finish_partial_dec(params, sj, out.c1, dc1) == m,
            "partial decryption after conversion mismatch");
  }
}

void check_mixtoadd() {
  SeededRandom rng(104);
  ToyContext toy;
  mixtoadd_sweep(toy.params, toy.strong, rng);
  mixtoadd_sweep(ctx().params, ctx().strong, rng);
}

void check_accs() {
  auto start = std::chrono::steady_clock::now();
  ToyContext toy;
  Session toy_session = make_session(toy.params, toy.strong, 105);
  Transcript worked = run_accs(toy_session, 7, 2, 3, 106);
  require(worked.outputs.at("result") == 17, "worked instance != 17");

  Session s = make_session(ctx().params, ctx().strong, 107);
  SeededRandom rng(108);
  for (int i = 0; i < 50; ++i) {
    BigNat secret = sample_range(0, s.params.N - 1, rng);
    BigNat b = sample_range(1, s.params.eighth_N(), rng);
    BigNat c = sample_range(1, s.params.eighth_N(), rng);
    Transcript t = run_accs(s, secret, b, c, 1000 + i);
    require(t.outputs.at("result") == (b * secret + c) % s.params.N,
            "accs result != bS + c");
  }
  require(seconds_since(start) < 120.0, "exceeded 120 s budget");
}

void check_identity() {
  SeededRandom rng(109);
  const PublicParams& params = ctx().params;
  auto [sigk, verk] = split_strong_key(ctx().strong, params, rng);
  KgcStore store;

  std::vector<Registration> regs;
  std::vector<Certificate> certs;
  for (int i = 0; i < 100; ++i) {
    Registration reg = register_begin(params, rng);
    Certificate cert = kgc_issue(params, sigk, store, reg.request, rng);
    require(auth_verify(params, verk, reg.key.h, cert.id, cert),
            "honest certificate rejected");
    regs.push_back(reg);
    certs.push_back(cert);
  }

  for (int i = 0; i < 100; ++i) {
    Certificate bad = certs[i];
    unsigned long bit =
        sample_range(0, bit_length(params.N_sq) - 1, rng).get_ui();
    mpz_combit(bad.cert1.get_mpz_t(), bit);
    require(!auth_verify(params, verk, regs[i].key.h, bad.id, bad),
            "bit-flipped certificate accepted");
  }

  for (int i = 0; i < 50; ++i) {
    const Registration& r1 = regs[2 * i];
    const Registration& r2 = regs[2 * i + 1];
    const Certificate& c1 = certs[2 * i];
    const Certificate& c2 = certs[2 * i + 1];
    Certificate forged{c1.id + c2.id,
                       mod_mul(c1.cert1, c2.cert1, params.N_sq),
                       mod_mul(c1.cert2, c2.cert2, params.N_sq)};
    BigNat h3 = mod_mul(r1.key.h, r2.key.h, params.N);
    require(!auth_verify(params, verk, h3, forged.id, forged),
            "combined forgery accepted");
  }
}

void check_recovery() {
  SeededRandom rng(110);
  const PublicParams& params = ctx().params;
  auto [sigk, verk] = split_strong_key(ctx().strong, params, rng);
  KgcStore store;
  for (int i = 0; i < 100; ++i) {
    Registration reg = register_begin(params, rng);
    Certificate cert = kgc_issue(params, sigk, store, reg.request, rng);
    BigNat r = kgc_recover(params, ctx().strong, store, cert.id);
    BigNat theta =
        user_recover(params, reg.secrets.theta_r, reg.key.h, r);
    require(theta == reg.secrets.theta, "recovered theta differs");
    require(to_be_bytes(theta) == to_be_bytes(reg.secrets.theta),
            "recovered theta bytes differ");
    bool threw = false;
    try {
      user_recover(params, reg.secrets.theta_r, reg.key.h, r + 1);
    } catch (const VerificationFailed&) {
      threw = true;
    }
    require(threw, "perturbed r did not fail verification");
  }
}

void check_group_identities() {
  SeededRandom rng(111);
  for (int set = 0; set < 10; ++set) {
    auto [params, strong] = gen_params(64, rng);
    require(pow_mod(params.g, strong.lambda, params.N) == 1,
            "g^lambda != 1 mod N");
    UserKeyPair key = gen_user_key(params, rng);
    auto [si, sj] = split_strong_key(strong, params, rng);
    for (int i = 0; i < 100; ++i) {
      BigNat e = sample_range(1, params.N - 1, rng);
      BigNat mu = pow_mod(params.g, e, params.N);
      require(pow_mod(mu, strong.lambda * params.N, params.N_sq) == 1,
              "(g^e)^(lambda N) != 1 mod N^2");
      BigNat m = sample_range(0, params.N - 1, rng);
      AddCiphertext ct = add_enc(params, key.h, m, rng);
      require(pow_mod(ct.ac1, si.share + sj.share, params.N_sq) ==
                  1 + m * params.N,
              "ac1^(share sum) != 1 + mN mod N^2");
    }
  }
}

std::vector<BenchRow>& bench_rows() {
  static std::vector<BenchRow> rows = [] {
    SeededRandom rng(112);
    return bench_run({512, 768, 1024}, 30, rng);
  }();
  return rows;
}

double mean_of(const std::vector<BenchRow>& rows, const std::string& alg,
               unsigned bits) {
  for (const BenchRow& r : rows) {
    if (r.algorithm == alg && r.n_bits == bits) return r.mean_ms;
  }
  throw Failure("missing bench row " + alg);
}

std::uint64_t count_of(const std::vector<BenchRow>& rows,
                       const std::string& alg, unsigned bits) {
  for (const BenchRow& r : rows) {
    if (r.algorithm == alg && r.n_bits == bits) return r.modmul_count;
  }
  throw Failure("missing bench row " + alg);
}

void check_cost_trends() {
  const auto& rows = bench_rows();
  const char* algs[] = {"AddEnc",       "AddDecSkey",   "AddDecWkey",
                        "AddDecPSkey1", "AddDecPSkey2", "MulEnc",
                        "MulDec"};
  for (unsigned bits : {512u, 768u, 1024u}) {
    require(mean_of(rows, "MulEnc", bits) <
                0.5 * mean_of(rows, "AddEnc", bits),
            "MulEnc not cheaper than half of AddEnc at " +
                std::to_string(bits));
    double ratio = mean_of(rows, "AddDecPSkey1", bits) /
                   mean_of(rows, "AddDecSkey", bits);
    require(ratio >= 1.5 && ratio <= 3.0,
            "PSkey1/Skey ratio " + std::to_string(ratio) + " at " +
                std::to_string(bits));
  }
  for (const char* alg : algs) {
    require(mean_of(rows, alg, 512) < mean_of(rows, alg, 768) &&
                mean_of(rows, alg, 768) < mean_of(rows, alg, 1024),
            std::string(alg) + " mean not increasing with |N|");
  }
}

void check_multiplication_counts() {
  const auto& rows = bench_rows();
  for (unsigned bits : {512u, 768u, 1024u}) {
    double enc = static_cast<double>(count_of(rows, "AddEnc", bits));
    double enc_model = 2.25 * bits;
    require(enc > 0.65 * enc_model && enc < 1.35 * enc_model,
            "AddEnc count " + std::to_string(enc) + " off model at " +
                std::to_string(bits));
    double dec = static_cast<double>(count_of(rows, "AddDecSkey", bits));
    double dec_model = 1.5 * bits;
    require(dec > 0.65 * dec_model && dec < 1.35 * dec_model,
            "AddDecSkey count " + std::to_string(dec) + " off model at " +
                std::to_string(bits));
  }
}

int run_all() {
  const std::vector<Check> checks = {
      {"decryption-path-agreement", check_decryption_paths},
      {"homomorphism-suite", check_homomorphisms},
      {"restraint-property", check_restraint},
      {"mixtoadd-round-trip", check_mixtoadd},
      {"accs-end-to-end", check_accs},
      {"identity-suite", check_identity},
      {"key-recovery", check_recovery},
      {"group-identities", check_group_identities},
      {"cost-trends", check_cost_trends},
      {"multiplication-counts", check_multiplication_counts},
  };
  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    try {
      checks[i].run();
      std::printf("PASS %2zu %s\n", i + 1, checks[i].name.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL %2zu %s: %s\n", i + 1, checks[i].name.c_str(),
                  e.what());
    }
    std::fflush(stdout);
  }
  return failures;
}

}  // namespace
}  // namespace restpail

int main() { return restpail::run_all() == 0 ? 0 : 1; }
