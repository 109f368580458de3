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
#ifndef RESTPAIL_STORE_HPP_
#define RESTPAIL_STORE_HPP_

#include <fstream>
#include <string>

#include "restpail/wire.hpp"

namespace restpail {

inline Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in),
               std::istreambuf_iterator<char>());
}

inline void write_file(const std::string& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write failed: " + path);
}

// The KGC store persists as a plain sequence of KREC frames.
inline void save_store(const KgcStore& store, const std::string& path) {
  Bytes out;
  for (const auto& [id, rec] : store.records()) {
    Bytes frame = encode(to_frame(rec));
    out.insert(out.end(), frame.begin(), frame.end());
  }
  write_file(path, out);
}

inline KgcStore load_store(const std::string& path) {
  KgcStore store;
  for (const Frame& f : decode_all(read_file(path))) {
    store.insert(kgc_record_from(f));
  }
  return store;
}

}  // namespace restpail

#endif  // RESTPAIL_STORE_HPP_
