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
#ifndef RESTPAIL_BIGNAT_HPP_
#define RESTPAIL_BIGNAT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace restpail {

// Arbitrary-precision non-negative integer. All values in this library are
// canonical residues or plain magnitudes; nothing carries an implicit modulus.
using BigNat = mpz_class;

using Bytes = std::vector<std::uint8_t>;

inline std::size_t bit_length(const BigNat& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Minimal big-endian magnitude bytes; zero encodes as the empty string.
inline Bytes to_be_bytes(const BigNat& x) {
  if (x == 0) return {};
  std::size_t count = 0;
  Bytes out((bit_length(x) + 7) / 8);
  mpz_export(out.data(), &count, 1, 1, 1, 0, x.get_mpz_t());
  out.resize(count);
  return out;
}

inline BigNat from_be_bytes(const std::uint8_t* data, std::size_t len) {
  BigNat x;
  if (len > 0) mpz_import(x.get_mpz_t(), len, 1, 1, 1, 0, data);
  return x;
}

inline BigNat from_be_bytes(const Bytes& b) {
  return from_be_bytes(b.data(), b.size());
}

inline std::string to_hex(const Bytes& b) {
  static const char* kDigits = "0123456789abcdef";
  std::string s;
  s.reserve(b.size() * 2);
  for (std::uint8_t c : b) {
    s.push_back(kDigits[c >> 4]);
    s.push_back(kDigits[c & 0xf]);
  }
  return s;
}

inline Bytes from_hex(const std::string& s) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (s.size() % 2 != 0) throw std::invalid_argument("odd hex length");
  Bytes out;
  out.reserve(s.size() / 2);
  for (std::size_t i = 0; i < s.size(); i += 2) {
    int hi = nibble(s[i]), lo = nibble(s[i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("bad hex digit");
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

}  // namespace restpail

#endif  // RESTPAIL_BIGNAT_HPP_
