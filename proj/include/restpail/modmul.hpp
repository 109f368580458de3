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
#ifndef RESTPAIL_MODMUL_HPP_
#define RESTPAIL_MODMUL_HPP_

#include <cstdint>

#include "restpail/bignat.hpp"

namespace restpail {

// Counts modular multiplications (squarings included) inside a measured
// scope. Confine one counter to one logical task.
struct ModMulCounter {
  std::uint64_t count = 0;
};

inline BigNat mod_mul(const BigNat& a, const BigNat& b, const BigNat& m,
                      ModMulCounter* counter = nullptr) {
  if (counter != nullptr) ++counter->count;
  BigNat r = a * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Modular exponentiation. Without a counter this is plain mpz_powm; with a
// counter it runs left-to-right square-and-multiply so the count reflects
// the textbook cost model (~1.5 multiplications per exponent bit).
inline BigNat pow_mod(const BigNat& base, const BigNat& exp, const BigNat& m,
                      ModMulCounter* counter = nullptr) {
  if (counter == nullptr) {
    BigNat r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  if (exp == 0) return BigNat(1) % m;
  BigNat b = base % m;
  BigNat acc = b;
  for (std::size_t i = bit_length(exp) - 1; i-- > 0;) {
    acc = mod_mul(acc, acc, m, counter);
    if (mpz_tstbit(exp.get_mpz_t(), static_cast<mp_bitcnt_t>(i)) != 0) {
      acc = mod_mul(acc, b, m, counter);
    }
  }
  return acc;
}

}  // namespace restpail

#endif  // RESTPAIL_MODMUL_HPP_
