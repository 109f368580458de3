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
#ifndef RESTPAIL_RESTPAIL_HPP_
#define RESTPAIL_RESTPAIL_HPP_

#include "restpail/bench.hpp"
#include "restpail/bignat.hpp"
#include "restpail/cipher.hpp"
#include "restpail/convert.hpp"
#include "restpail/errors.hpp"
#include "restpail/harness.hpp"
#include "restpail/keyring.hpp"
#include "restpail/modmul.hpp"
#include "restpail/numeric.hpp"
#include "restpail/protocols.hpp"
#include "restpail/rng.hpp"
#include "restpail/store.hpp"
#include "restpail/wire.hpp"

#endif  // RESTPAIL_RESTPAIL_HPP_
