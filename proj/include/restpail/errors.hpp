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
#ifndef RESTPAIL_ERRORS_HPP_
#define RESTPAIL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace restpail {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// u - 1 is not divisible by N: wrong key or corrupt ciphertext.
struct NotUnitResidue : Error {
  using Error::Error;
};

// gcd(x, M) != 1. For M = N this reveals a factor of N; callers must
// abort the session.
struct NotInvertible : Error {
  using Error::Error;
};

struct MessageOutOfRange : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct ExhaustedAttempts : Error {
  using Error::Error;
};

struct DegenerateKey : Error {
  using Error::Error;
};

struct VerificationFailed : Error {
  using Error::Error;
};

struct UnknownId : Error {
  using Error::Error;
};

struct DuplicateId : Error {
  using Error::Error;
};

struct WireError : Error {
  using Error::Error;
};

struct BadMagic : WireError {
  using WireError::WireError;
};

struct BadVersion : WireError {
  using WireError::WireError;
};

struct UnknownTag : WireError {
  using WireError::WireError;
};

struct Truncated : WireError {
  using WireError::WireError;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace restpail

#endif  // RESTPAIL_ERRORS_HPP_
