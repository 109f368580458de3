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
#ifndef RESTPAIL_BENCH_HPP_
#define RESTPAIL_BENCH_HPP_

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "restpail/cipher.hpp"
#include "restpail/keyring.hpp"

namespace restpail {

struct BenchRow {
  std::string algorithm;
  unsigned n_bits = 0;
  std::uint64_t iterations = 0;
  double mean_ms = 0.0;
  std::uint64_t modmul_count = 0;
};

namespace detail {

inline double time_mean_ms(const std::function<void()>& op,
                           std::uint64_t iters) {
  for (int i = 0; i < 10; ++i) op();  // warm-up, discarded
  auto start = std::chrono::steady_clock::now();
  for (std::uint64_t i = 0; i < iters; ++i) op();
  auto stop = std::chrono::steady_clock::now();
  std::chrono::duration<double, std::milli> total = stop - start;
  return total.count() / static_cast<double>(iters);
}

}  // namespace detail

// Timing plus modular-multiplication counts for the seven core algorithms
// at each |N|. The count run forces |r| = |N|/4 bits so the numbers line up
// with the usual 1.5-multiplications-per-exponent-bit cost model.
inline std::vector<BenchRow> bench_run(const std::vector<unsigned>& sizes,
                                       std::uint64_t iters,
                                       RandomSource& rng) {
  if (iters < 1) throw OutOfRange("bench_run: iters < 1");
  std::vector<BenchRow> rows;
  for (unsigned bits : sizes) {
    auto [params, strong] = gen_params(bits, rng);
    UserKeyPair key = gen_user_key(params, rng);
    auto [share_i, share_j] = split_strong_key(strong, params, rng);

    // Fixed-length randomness for the count run.
    unsigned rbits = bits / 4;
    BigNat r_count =
        sample_range(BigNat(1) << (rbits - 1), (BigNat(1) << rbits) - 1, rng);
    BigNat m = sample_range(0, params.N - 1, rng);
    AddCiphertext act = add_enc_with_r(params, key.h, m, r_count);
    PartialDecryption dc1 = add_dec_partial_1(params, share_i, act);
    MulCiphertext mct = mul_enc_with_r(params, key.h, m, r_count);

    auto add_row = [&](const std::string& name,
                       const std::function<void(ModMulCounter*)>& op) {
      ModMulCounter counter;
      op(&counter);
      BenchRow row;
      row.algorithm = name;
      row.n_bits = bits;
      row.iterations = iters;
      row.mean_ms = detail::time_mean_ms([&] { op(nullptr); }, iters);
      row.modmul_count = counter.count;
      rows.push_back(row);
    };

    add_row("AddEnc", [&](ModMulCounter* c) {
      add_enc_with_r(params, key.h, m, r_count, c);
    });
    add_row("AddDecSkey", [&](ModMulCounter* c) {
      add_dec_strong(params, strong.lambda, act, c);
    });
    add_row("AddDecWkey", [&](ModMulCounter* c) {
      add_dec_weak(params, key.theta, act, c);
    });
    add_row("AddDecPSkey1", [&](ModMulCounter* c) {
      add_dec_partial_1(params, share_i, act, c);
    });
    add_row("AddDecPSkey2", [&](ModMulCounter* c) {
      add_dec_partial_2(params, share_j, act, dc1, c);
    });
    add_row("MulEnc", [&](ModMulCounter* c) {
      mul_enc_with_r(params, key.h, m, r_count, c);
    });
    add_row("MulDec", [&](ModMulCounter* c) {
      mul_dec(params, key.theta, mct, c);
    });
  }
  return rows;
}

inline void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "algorithm,n_bits,iterations,mean_ms,modmul_count\n";
  for (const BenchRow& r : rows) {
    out << r.algorithm << ',' << r.n_bits << ',' << r.iterations << ','
        << r.mean_ms << ',' << r.modmul_count << '\n';
  }
}

inline std::vector<BenchRow> parse_csv(std::istream& in) {
  std::vector<BenchRow> rows;
  std::string line;
  if (!std::getline(in, line) ||
      line != "algorithm,n_bits,iterations,mean_ms,modmul_count") {
    throw IoError("parse_csv: bad header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    BenchRow r;
    std::string field;
    std::getline(ls, r.algorithm, ',');
    std::getline(ls, field, ',');
    r.n_bits = static_cast<unsigned>(std::stoul(field));
    std::getline(ls, field, ',');
    r.iterations = std::stoull(field);
    std::getline(ls, field, ',');
    r.mean_ms = std::stod(field);
    std::getline(ls, field, ',');
    r.modmul_count = std::stoull(field);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace restpail

#endif  // RESTPAIL_BENCH_HPP_
